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

#ifndef QHARMONIC_REPORT_HPP_
#define QHARMONIC_REPORT_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace qharmonic {

struct VerifyCase {
  std::string label;
  double expected = 0.0;
  double actual = 0.0;
  double abs_error = 0.0;
  /// The quantity compared against the tolerance (absolute or relative,
  /// per the suite's metric).
  double error = 0.0;
};

/// Outcome of a verification suite. passed holds exactly when
/// max_error <= tolerance.
struct VerifyReport {
  std::string suite;
  std::string metric = "relative";
  double tolerance = 0.0;
  double max_error = 0.0;
  bool passed = true;
  std::vector<VerifyCase> cases;
  std::vector<std::string> diagnostics;

  VerifyReport() = default;
  VerifyReport(std::string name, double tol, std::string metric_name = "relative")
      : suite(std::move(name)), metric(std::move(metric_name)), tolerance(tol) {}

  /// Records a case whose error is |actual - expected|, divided by
  /// max(|expected|, scale) for the relative metric.
  void add(std::string label, double expected, double actual,
           double scale = 0.0) {
    VerifyCase c{std::move(label), expected, actual,
                 std::fabs(actual - expected), 0.0};
    c.error = c.abs_error;
    if (metric == "relative") {
      const double den = std::max(std::fabs(expected), scale);
      if (den > 0.0) c.error = c.abs_error / den;
    }
    add_case(std::move(c));
  }

  void add_case(VerifyCase c) {
    if (std::isnan(c.error)) {
      max_error = std::numeric_limits<double>::infinity();
    } else if (c.error > max_error) {
      max_error = c.error;
    }
    passed = max_error <= tolerance;
    cases.push_back(std::move(c));
  }

  void merge(const VerifyReport& other) {
    for (const auto& c : other.cases) add_case(c);
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                       other.diagnostics.end());
  }
};

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"label", c.label},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"abs_error", c.abs_error},
                     {"error", c.error}});
  }
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["metric"] = r.metric;
  j["tolerance"] = r.tolerance;
  j["max_error"] = r.max_error;
  j["passed"] = r.passed;
  j["cases"] = std::move(cases);
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace qharmonic

#endif  // QHARMONIC_REPORT_HPP_
