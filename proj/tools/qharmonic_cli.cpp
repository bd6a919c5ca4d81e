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

// Command-line front end for the qharmonic library.
//
// Exit codes: 0 success, 1 invalid usage or input, 2 numerical failure,
// 3 verification suite failed.

#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qharmonic/qharmonic.hpp"

namespace {

using namespace qharmonic;

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerify = 3;

std::complex<double> parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s), 0.0};
  return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

GridWindow parse_window(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw FormatError("window must be nmin:nmax, got '" + s + "'");
  }
  GridWindow w{parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
  w.validate();
  return w;
}

std::string format_value(std::complex<double> v) {
  if (v.imag() == 0.0) return format_real(v.real());
  return format_real(v.real()) + "," + format_real(v.imag());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

GridFunction load_grid(const std::string& path, const QParams& p) {
  const std::string text = read_text_file(path);
  if (!is_json_path(path)) return from_csv(text, p);
  GridFunction g = from_json_text(text);
  if (!(g.params() == p)) {
    throw FormatError(path + ": embedded q/alpha differ from --q/--alpha");
  }
  return g;
}

std::string serialize_grid(const GridFunction& g, const std::string& path) {
  return is_json_path(path) ? to_json_text(g) : to_csv(g);
}

void warn_if_truncated(const GridFunction& g) {
  const double frac = boundary_energy_fraction(g);
  if (frac > 1e-8) {
    std::cerr << "warning: " << frac
              << " of the output energy sits at the window edges; the "
                 "window is probably too small\n";
  }
}

struct Options {
  // shared
  double q = 0.5;
  double alpha = 0.0;
  int terms = 0;
  double tol = 0.0;
  unsigned bits = 0;
  std::string out;
  // eval
  std::string fn;
  double nu = 0.0;
  std::string x;
  std::vector<std::string> num, den;
  std::optional<double> base;
  // grids
  std::string input;
  std::string out_window;
  bool strict_grid = false;
  std::string convention = "dunkl";
  // verify
  std::string suite;
  std::vector<double> qs, alphas;
  std::uint64_t seed = 42;
  int cases = 0;
  std::string support, k_range, window;
  double suite_tol = 0.0;
  // solve-q
  int m = 1;

  SeriesControl control(unsigned default_bits = 53) const {
    SeriesControl c;
    if (terms > 0) c.max_terms = terms;
    if (tol > 0.0) c.rel_tol = tol;
    c.precision_bits = bits > 0 ? bits : default_bits;
    c.validate();
    return c;
  }
};

int run_eval(const Options& o) {
  const SeriesControl ctrl = o.control();
  const std::complex<double> x = parse_complex(o.x);
  std::complex<double> v;
  if (o.fn == "cos" || o.fn == "sin" || o.fn == "exp") {
    const QParams p(o.q, o.alpha);
    v = o.fn == "cos"   ? cos_alpha(x, p, ctrl)
        : o.fn == "sin" ? sin_alpha(x, p, ctrl)
                        : exp_alpha(x, p, ctrl);
  } else if (o.fn == "bessel") {
    if (q_bessel_on_branch_cut(o.nu, x)) {
      std::cerr << "warning: x on the negative real axis with non-integer nu; "
                   "principal branch used\n";
    }
    v = q_bessel(o.nu, x, o.q, ctrl);
  } else if (o.fn == "qgamma") {
    if (x.imag() != 0.0) throw DomainError("qgamma takes a real argument");
    v = q_gamma(x.real(), o.q, ctrl);
  } else if (o.fn == "phi") {
    PhiSpec spec;
    for (const auto& a : o.num) spec.numerator.push_back(parse_complex(a));
    for (const auto& b : o.den) spec.denominator.push_back(parse_complex(b));
    spec.base = o.base.value_or(o.q);
    spec.argument = x;
    v = phi_rs(spec, ctrl);
  } else {
    throw DomainError("unknown --fn " + o.fn);
  }
  std::cout << format_value(v) << "\n";
  return 0;
}

int run_transform(const Options& o, bool inverse) {
  const QParams p(o.q, o.alpha);
  const SeriesControl ctrl = o.control(512);
  const GridFunction in = load_grid(o.input, p);
  const GridWindow target = parse_window(o.out_window);
  GridFunction result = inverse
      ? inverse_transform(in, make_plan(p, target, in.window(), ctrl,
                                        o.strict_grid))
      : forward_transform(in, make_plan(p, in.window(), target, ctrl,
                                        o.strict_grid));
  warn_if_truncated(result);
  emit(serialize_grid(result, o.out), o.out);
  std::cerr << (inverse ? "inverse" : "forward") << " transform: "
            << in.window().size() << " -> " << target.size()
            << " exponents per branch\n";
  return 0;
}

int run_derivative(const Options& o) {
  const QParams p(o.q, o.alpha);
  Convention conv;
  if (o.convention == "dunkl") {
    conv = Convention::dunkl;
  } else if (o.convention == "literal") {
    conv = Convention::literal;
  } else {
    throw DomainError("unknown --convention " + o.convention);
  }
  const GridFunction f = load_grid(o.input, p);
  emit(serialize_grid(q_derivative_alpha(f, conv), o.out), o.out);
  return 0;
}

int run_verify(const Options& o) {
  SuiteOptions s;
  s.qs = o.qs;
  s.alphas = o.alphas;
  s.seed = o.seed;
  if (o.cases > 0) s.cases = o.cases;
  s.bits = o.bits;
  s.tolerance = o.suite_tol;
  if (!o.support.empty()) s.support = parse_window(o.support);
  if (!o.out_window.empty()) s.out_window = parse_window(o.out_window);
  if (!o.k_range.empty()) s.k_range = parse_window(o.k_range);
  if (!o.window.empty()) s.eigen_window = parse_window(o.window);
  const VerifyReport r = run_suite(o.suite, s);
  emit(to_json(r).dump(2) + "\n", o.out);
  std::cerr << r.suite << ": " << (r.passed ? "passed" : "FAILED")
            << " (max error " << r.max_error << ", tolerance " << r.tolerance
            << ", " << r.cases.size() << " cases)\n";
  return r.passed ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q^2-trigonometric functions, q-calculus and q^2-Fourier "
               "transforms"};
  app.require_subcommand(1);
  Options o;

  auto add_series_flags = [&](CLI::App* c) {
    c->add_option("--terms", o.terms, "maximum number of series terms");
    c->add_option("--tol", o.tol, "relative stopping tolerance");
    c->add_option("--bits", o.bits, "high-precision working bits");
  };
  auto add_params = [&](CLI::App* c, bool required) {
    auto* q = c->add_option("--q", o.q, "base q in (0,1)");
    auto* a = c->add_option("--alpha", o.alpha, "order alpha > -1");
    if (required) {
      q->required();
      a->required();
    }
  };

  auto* eval = app.add_subcommand("eval", "evaluate a special function");
  eval->add_option("--fn", o.fn, "cos|sin|exp|bessel|qgamma|phi")
      ->required()
      ->check(CLI::IsMember({"cos", "sin", "exp", "bessel", "qgamma", "phi"}));
  add_params(eval, false);
  eval->get_option("--q")->required();
  eval->add_option("--nu", o.nu, "Bessel order");
  eval->add_option("--x", o.x, "argument as re[,im]")->required();
  eval->add_option("--num", o.num, "phi numerator parameters (re[,im])");
  eval->add_option("--den", o.den, "phi denominator parameters (re[,im])");
  eval->add_option("--base", o.base, "phi base (defaults to --q)");
  add_series_flags(eval);

  CLI::App* grid_cmds[2];
  const char* names[2] = {"transform", "invert"};
  for (int i = 0; i < 2; ++i) {
    auto* c = app.add_subcommand(names[i], i == 0 ? "forward q^2-Fourier transform"
                                                  : "inverse q^2-Fourier transform");
    c->add_option("--input", o.input, "grid file (.csv or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    add_params(c, true);
    c->add_option("--out-window", o.out_window, "nmin:nmax")->required();
    c->add_flag("--strict-grid", o.strict_grid,
                "require ln(1-q)/ln(q) to be an even integer");
    c->add_option("--out", o.out, "output path (.csv or .json); stdout if absent");
    add_series_flags(c);
    grid_cmds[i] = c;
  }

  auto* deriv = app.add_subcommand("derivative", "generalized q-difference operator");
  deriv->add_option("--input", o.input, "grid file")->required()->check(
      CLI::ExistingFile);
  add_params(deriv, true);
  deriv->add_option("--convention", o.convention, "dunkl|literal");
  deriv->add_option("--out", o.out, "output path; stdout if absent");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--q", o.qs, "base(s); suite default if absent");
  verify->add_option("--alpha", o.alphas, "order(s); suite default if absent");
  verify->add_option("--seed", o.seed, "seed for randomized cases");
  verify->add_option("--cases", o.cases, "random cases per parameter pair");
  verify->add_option("--bits", o.bits, "high-precision working bits");
  verify->add_option("--support", o.support, "support window nmin:nmax");
  verify->add_option("--out-window", o.out_window, "transform output window");
  verify->add_option("--k-range", o.k_range, "orthogonality k range");
  verify->add_option("--window", o.window, "eigen-relation window");
  verify->add_option("--tolerance", o.suite_tol, "override the suite tolerance");
  verify->add_option("--out", o.out, "report path; stdout if absent");

  auto* solve = app.add_subcommand("solve-q", "root of q^{2m} + q - 1");
  solve->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return run_eval(o);
    if (*grid_cmds[0]) return run_transform(o, false);
    if (*grid_cmds[1]) return run_transform(o, true);
    if (*deriv) return run_derivative(o);
    if (*verify) return run_verify(o);
    if (*solve) {
      std::cout << format_real(solve_q(o.m)) << "\n";
      return 0;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const CancellationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
