// Copyright 2026 The qharmonic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHARMONIC_GRID_IO_HPP_
#define QHARMONIC_GRID_IO_HPP_

#include <charconv>
#include <complex>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qharmonic/errors.hpp"
#include "qharmonic/grid.hpp"
#include "qharmonic/params.hpp"

namespace qharmonic {

/// Shortest decimal string that reads back to the same double. Integral
/// values get a ".0" suffix so they stay recognizably floating point.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
  return s;
}

inline double parse_real(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw FormatError("not a number: '" + s + "'");
  }
  return v;
}

inline int parse_int(const std::string& s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw FormatError("not an integer: '" + s + "'");
  }
  return v;
}

namespace detail {

using SampleMap = std::map<std::pair<int, int>, std::complex<double>>;

inline void insert_sample(SampleMap& m, const std::string& sign, int n,
                          std::complex<double> v) {
  int s = 0;
  if (sign == "+") {
    s = 1;
  } else if (sign == "-") {
    s = -1;
  } else {
    throw FormatError("sign must be '+' or '-', got '" + sign + "'");
  }
  if (!m.emplace(std::make_pair(s, n), v).second) {
    throw FormatError("duplicate grid row (" + sign + ", " +
                      std::to_string(n) + ")");
  }
}

// Missing rows inside the window are zero.
inline GridFunction from_samples(const QParams& p, const GridWindow& w,
                                 const SampleMap& m) {
  std::vector<std::complex<double>> pos(w.size()), neg(w.size());
  for (const auto& [key, v] : m) {
    if (!w.contains(key.second)) {
      throw FormatError("row n=" + std::to_string(key.second) +
                        " lies outside the declared window");
    }
    (key.first > 0 ? pos : neg)[key.second - w.n_min] = v;
  }
  return GridFunction(p, w, std::move(pos), std::move(neg));
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace detail

/// CSV with header "sign,n,re,im"; all '+' rows by ascending n, then all '-'
/// rows.
inline std::string to_csv(const GridFunction& f) {
  std::string out = "sign,n,re,im\n";
  for (int sign : {1, -1}) {
    for (int n = f.window().n_min; n <= f.window().n_max; ++n) {
      const auto v = f.at(sign, n);
      out += sign > 0 ? "+," : "-,";
      out += std::to_string(n) + "," + format_real(v.real()) + "," +
             format_real(v.imag()) + "\n";
    }
  }
  return out;
}

/// Parses the CSV format. The window spans the smallest to the largest n
/// present; absent rows are zero. Rows may appear in any order.
inline GridFunction from_csv(const std::string& text, const QParams& p) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty grid file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "sign,n,re,im") {
    throw FormatError("expected header 'sign,n,re,im', got '" + line + "'");
  }
  detail::SampleMap m;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    if (fields.size() != 4) {
      throw FormatError("line " + std::to_string(lineno) +
                        ": expected 4 fields");
    }
    detail::insert_sample(m, fields[0], parse_int(fields[1]),
                          {parse_real(fields[2]), parse_real(fields[3])});
  }
  if (m.empty()) throw FormatError("grid file has no rows");
  GridWindow w{m.begin()->first.second, m.begin()->first.second};
  for (const auto& [key, v] : m) {
    w.n_min = std::min(w.n_min, key.second);
    w.n_max = std::max(w.n_max, key.second);
  }
  return detail::from_samples(p, w, m);
}

/// JSON form: {"q", "alpha", "n_min", "n_max", "values": [{sign, n, re, im}]}.
inline std::string to_json_text(const GridFunction& f) {
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (int sign : {1, -1}) {
    for (int n = f.window().n_min; n <= f.window().n_max; ++n) {
      const auto v = f.at(sign, n);
      values.push_back({{"sign", sign > 0 ? "+" : "-"},
                        {"n", n},
                        {"re", v.real()},
                        {"im", v.imag()}});
    }
  }
  nlohmann::ordered_json j;
  j["q"] = f.params().q();
  j["alpha"] = f.params().alpha();
  j["n_min"] = f.window().n_min;
  j["n_max"] = f.window().n_max;
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

inline GridFunction from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const QParams p(j.at("q").get<double>(), j.at("alpha").get<double>());
    const GridWindow w{j.at("n_min").get<int>(), j.at("n_max").get<int>()};
    w.validate();
    detail::SampleMap m;
    for (const auto& row : j.at("values")) {
      detail::insert_sample(m, row.at("sign").get<std::string>(),
                            row.at("n").get<int>(),
                            {row.at("re").get<double>(),
                             row.at("im").get<double>()});
    }
    return detail::from_samples(p, w, m);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad grid JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

inline bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace qharmonic

#endif  // QHARMONIC_GRID_IO_HPP_
