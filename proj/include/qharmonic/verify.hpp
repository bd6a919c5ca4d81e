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

#ifndef QHARMONIC_VERIFY_HPP_
#define QHARMONIC_VERIFY_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qharmonic/grid.hpp"
#include "qharmonic/hyperseries.hpp"
#include "qharmonic/qcalculus.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/qfourier.hpp"
#include "qharmonic/qtrig.hpp"
#include "qharmonic/report.hpp"

namespace qharmonic {

/// Knobs shared by the verification suites. Empty lists and zero values
/// select the per-suite defaults.
struct SuiteOptions {
  std::vector<double> qs;
  std::vector<double> alphas;
  std::uint64_t seed = 42;
  int cases = 100;
  unsigned bits = 0;
  GridWindow support{0, 6};
  /// Output window for transform suites; n_min > n_max selects the rule in
  /// verification_window().
  GridWindow out_window{1, 0};
  GridWindow k_range{-6, 40};
  GridWindow eigen_window{-4, 12};
  int index_lo = -2;
  int index_hi = 2;
  double tolerance = 0.0;
};

/// Output window wide enough that transform tails stay below ~1e-12:
/// n_max = ceil(ln 1e-12 / ln q) - support.n_min and
/// n_min = -support.n_max - ceil(6 ln 2 / ln(1/q)).
inline GridWindow verification_window(double q, const GridWindow& support) {
  const double lq = std::log(q);
  const int hi = static_cast<int>(std::ceil(std::log(1e-12) / lq));
  const int pad = static_cast<int>(std::ceil(6.0 * std::log(2.0) / -lq));
  return {-support.n_max - pad, hi - support.n_min};
}

namespace detail {

inline std::string fmt_label(const std::string& head, double q, double a) {
  std::ostringstream os;
  os.precision(6);
  os << head << " q=" << q << " a=" << a;
  return os.str();
}

inline std::vector<double> or_default(const std::vector<double>& v,
                                      std::vector<double> fallback) {
  return v.empty() ? fallback : v;
}

inline double pick(double v, double fallback) { return v > 0.0 ? v : fallback; }

inline unsigned pick_bits(unsigned v, unsigned fallback) {
  return v > 0 ? v : fallback;
}

/// Random complex values in [-1,1]^2 on both branches of the support.
inline GridFunction random_grid_function(const QParams& p,
                                         const GridWindow& support,
                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> pos, neg;
  for (int n = support.n_min; n <= support.n_max; ++n) {
    pos.emplace_back(u(rng), u(rng));
    neg.emplace_back(u(rng), u(rng));
  }
  return GridFunction(p, support, std::move(pos), std::move(neg));
}

inline double sup_distance(const GridFunction& a, const GridFunction& b,
                           const GridWindow& w, bool both_branches = true) {
  double d = 0.0;
  for (int n = w.n_min; n <= w.n_max; ++n) {
    d = std::max(d, std::abs(a.pos(n) - b.pos(n)));
    if (both_branches) d = std::max(d, std::abs(a.neg(n) - b.neg(n)));
  }
  return d;
}

inline double sup_norm(const GridFunction& a, bool both_branches = true) {
  double d = 0.0;
  for (int n = a.window().n_min; n <= a.window().n_max; ++n) {
    d = std::max(d, std::abs(a.pos(n)));
    if (both_branches) d = std::max(d, std::abs(a.neg(n)));
  }
  return d;
}

/// Classical 0F1(;b;z) by direct summation.
inline double hyp0f1(double b, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= z / ((b + k) * (k + 1.0));
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

inline SeriesControl control_with_bits(unsigned bits) {
  SeriesControl c;
  c.precision_bits = bits;
  return c;
}

}  // namespace detail

/// Eigen-relations of the q-difference operator on the grid, evaluated with
/// the high-precision backend:
///   d cos_a((1-q)tx) = -t sin_a((1-q)tx),  d sin_a((1-q)tx) = t cos_a((1-q)tx),
///   d e_a((1-q)tx) = t e_a((1-q)tx).
/// The window is widened by one exponent on each side before differencing,
/// so the relations are checked on eigen_window itself.
inline VerifyReport verify_eigen(const SuiteOptions& o = {}) {
  VerifyReport r("eigen", detail::pick(o.tolerance, 1e-10));
  const Field<BigFloat> field{detail::pick_bits(o.bits, 192)};
  const SeriesControl ctrl = detail::control_with_bits(field.bits);
  const GridWindow wide{o.eigen_window.n_min - 1, o.eigen_window.n_max + 1};
  using BC = BasicComplex<BigFloat>;
  using BG = BasicGridFunction<BigFloat>;
  double literal_worst = 0.0;
  for (double q : detail::or_default(o.qs, {0.5, 0.8})) {
    for (double a : detail::or_default(o.alphas, {-0.5, 0.0, 1.0})) {
      const QParams p(q, a);
      for (double t : {1.0, q, 1.0 / q}) {
        const BigFloat scale = (field(1.0) - field(q)) * field(t);
        auto arg = [&](const BigFloat& x) { return BC{scale * x, field(0.0)}; };
        const BG c = BG::sample(
            p, wide,
            [&](const BigFloat& x) {
              return cos_alpha_series(field, arg(x), p, ctrl).value;
            },
            field);
        const BG s = BG::sample(
            p, wide,
            [&](const BigFloat& x) {
              return sin_alpha_series(field, arg(x), p, ctrl).value;
            },
            field);
        const BG e = BG::sample(
            p, wide,
            [&](const BigFloat& x) {
              return exp_alpha_value(field, arg(x), p, ctrl);
            },
            field);
        const BC tc = field.complex(t);
        struct Relation {
          const char* name;
          const BG& f;
          const BG& rhs;
          BC factor;
        };
        const Relation rel[] = {{"cos", c, s, -tc}, {"sin", s, c, tc},
                                {"exp", e, e, tc}};
        for (const auto& rl : rel) {
          const BG d = q_derivative_alpha(rl.f);
          double worst = 0.0;
          for (int n = o.eigen_window.n_min; n <= o.eigen_window.n_max; ++n) {
            for (int sign : {1, -1}) {
              const BC want = rl.factor * rl.rhs.at(sign, n);
              const BigFloat err = abs(d.at(sign, n) - want) / abs(want);
              worst = std::max(worst, err.to_double());
            }
          }
          std::ostringstream label;
          label << rl.name << " q=" << q << " a=" << a << " t=" << t;
          VerifyCase vc{label.str(), 0.0, worst, worst, worst};
          r.add_case(vc);
          if (a != -0.5) {
            const BG dl = q_derivative_alpha(rl.f, Convention::literal);
            for (int n = o.eigen_window.n_min; n <= o.eigen_window.n_max;
                 ++n) {
              const BC want = rl.factor * rl.rhs.pos(n);
              literal_worst = std::max(
                  literal_worst, (abs(dl.pos(n) - want) / abs(want)).to_double());
            }
          }
        }
      }
    }
  }
  std::ostringstream note;
  note << "literal-convention operator (q^{2a+1} on the even part) worst "
          "relative error for a != -1/2: "
       << literal_worst;
  r.diagnostics.push_back(note.str());
  return r;
}

/// Discrete orthogonality sum_k a(k+n) a(k+m) = delta_{nm} for n, m in
/// [index_lo, index_hi].
inline VerifyReport verify_orthogonality(const SuiteOptions& o = {}) {
  VerifyReport r("orthogonality", detail::pick(o.tolerance, 1e-6), "absolute");
  const SeriesControl ctrl = detail::control_with_bits(
      detail::pick_bits(o.bits, SeriesControl::kEscalationBits));
  for (double q : detail::or_default(o.qs, {0.5})) {
    for (double a : detail::or_default(o.alphas, {-0.5, 0.0})) {
      const QParams p(q, a);
      for (int n = o.index_lo; n <= o.index_hi; ++n) {
        for (int m = o.index_lo; m <= o.index_hi; ++m) {
          const double v = orthogonality_delta(n, m, p, o.k_range, ctrl);
          std::ostringstream label;
          label << "q=" << q << " a=" << a << " n=" << n << " m=" << m;
          r.add(label.str(), n == m ? 1.0 : 0.0, v);
        }
      }
    }
  }
  std::ostringstream note;
  note << "k_range [" << o.k_range.n_min << ", " << o.k_range.n_max
       << "], summed in full at " << ctrl.escalation_bits() << " bits";
  r.diagnostics.push_back(note.str());
  return r;
}

namespace detail {

template <class Body>
VerifyReport transform_suite(const std::string& name, const SuiteOptions& o,
                             Body body) {
  VerifyReport r(name, pick(o.tolerance, 1e-6));
  const SeriesControl ctrl = control_with_bits(pick_bits(o.bits, 512));
  std::mt19937_64 rng(o.seed);
  for (double q : or_default(o.qs, {0.5, solve_q(1)})) {
    for (double a : or_default(o.alphas, {-0.5, 0.0})) {
      const QParams p(q, a);
      const GridWindow out = o.out_window.n_min <= o.out_window.n_max
                                 ? o.out_window
                                 : verification_window(q, o.support);
      const TransformPlan plan = make_plan(p, o.support, out, ctrl);
      std::ostringstream note;
      note << "q=" << q << " a=" << a << " support [" << o.support.n_min
           << ", " << o.support.n_max << "] output window [" << out.n_min
           << ", " << out.n_max << "]";
      r.diagnostics.push_back(note.str());
      for (int i = 0; i < o.cases; ++i) {
        const GridFunction f = random_grid_function(p, o.support, rng);
        body(r, plan, f, fmt_label("case " + std::to_string(i), q, a));
      }
    }
  }
  return r;
}

}  // namespace detail

/// inverse(forward(f)) = f on the support, relative in sup norm.
inline VerifyReport verify_inversion(const SuiteOptions& o = {}) {
  return detail::transform_suite(
      "inversion", o,
      [](VerifyReport& r, const TransformPlan& plan, const GridFunction& f,
         const std::string& label) {
        const GridFunction back = inverse_transform(forward_transform(f, plan), plan);
        r.add(label, 0.0,
              detail::sup_distance(back, f, f.window()) / detail::sup_norm(f));
      });
}

/// ||f||_2 = ||forward(f)||_2 in the weighted norm.
inline VerifyReport verify_plancherel(const SuiteOptions& o = {}) {
  return detail::transform_suite(
      "plancherel", o,
      [](VerifyReport& r, const TransformPlan& plan, const GridFunction& f,
         const std::string& label) {
        const VerifyReport one = plancherel_check(f, plan, r.tolerance);
        VerifyCase c = one.cases.front();
        c.label = label;
        r.add_case(c);
      });
}

/// Grid energy identity for the cosine and sine pairs, plus the involution
/// property of each pair on the positive branch.
inline VerifyReport verify_isometry(const SuiteOptions& o = {}) {
  return detail::transform_suite(
      "isometry", o,
      [](VerifyReport& r, const TransformPlan& plan, const GridFunction& f,
         const std::string& label) {
        const TransformPlan back = plan.reversed();
        const double ef = grid_energy(f);
        const GridFunction gc = cosine_transform_grid(f, plan);
        const GridFunction gs = sine_transform_grid(f, plan);
        r.add(label + " cos energy", ef, grid_energy(gc));
        r.add(label + " sin energy", ef, grid_energy(gs));
        const double scale = detail::sup_norm(f, false);
        r.add(label + " cos involution", 0.0,
              detail::sup_distance(cosine_transform_grid(gc, back), f,
                                   f.window(), false) / scale);
        r.add(label + " sin involution", 0.0,
              detail::sup_distance(sine_transform_grid(gs, back), f,
                                   f.window(), false) / scale);
      });
}

/// Classical limits as q -> 1: Gamma_q, the generalized factorials, and the
/// cos_a / sin_a / e_a families against 0F1, cos, sin and exp. Errors are
/// |approx - limit| / max(|limit|, 1).
inline VerifyReport verify_limits(const SuiteOptions& o = {}) {
  VerifyReport r("limits", detail::pick(o.tolerance, 1e-2));
  SeriesControl big;
  big.max_terms = 1000000;
  for (double q : {0.999, 0.9999}) {
    for (double z : {0.5, 1.5, 2.5, 3.7}) {
      std::ostringstream label;
      label << "gamma_q z=" << z << " q=" << q;
      r.add(label.str(), std::tgamma(z), q_gamma(z, q, big), 1.0);
    }
  }
  const double qf = 0.9999;
  for (double a : detail::or_default(o.alphas, {-0.5, 0.0, 1.0})) {
    const QParams p(qf, a);
    for (int n = 0; n <= 8; ++n) {
      const int m = n / 2;
      const double limit =
          (n % 2 == 0) ? std::pow(2.0, n) * std::tgamma(m + 1.0) *
                             pochhammer(a + 1.0, m)
                       : std::pow(2.0, n) * std::tgamma(m + 1.0) *
                             pochhammer(a + 1.0, m + 1);
      std::ostringstream label;
      label << "gen factorial n=" << n << " a=" << a << " q=" << qf;
      r.add(label.str(), limit, gen_q_factorial(n, p), 1.0);
    }
  }
  const double qt = 0.999;
  for (double a : detail::or_default(o.alphas, {-0.5, 0.0, 1.0})) {
    const QParams p(qt, a);
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
      const double y = (1.0 - qt) * x;
      std::ostringstream lc, ls;
      lc << "cos_a x=" << x << " a=" << a;
      ls << "sin_a x=" << x << " a=" << a;
      r.add(lc.str(), detail::hyp0f1(a + 1.0, -x * x / 4.0),
            cos_alpha(y, p).real(), 1.0);
      r.add(ls.str(),
            x / (2.0 * (a + 1.0)) * detail::hyp0f1(a + 2.0, -x * x / 4.0),
            sin_alpha(y, p).real(), 1.0);
    }
  }
  const QParams half(qt, -0.5);
  for (double x : {0.5, 1.0, 2.0, 4.0}) {
    const double y = (1.0 - qt) * x;
    std::ostringstream l;
    l << " x=" << x << " a=-0.5";
    r.add("cos" + l.str(), std::cos(x), cos_alpha(y, half).real(), 1.0);
    r.add("sin" + l.str(), std::sin(x), sin_alpha(y, half).real(), 1.0);
    r.add("exp" + l.str(), std::exp(x), exp_alpha(y, half).real(), 1.0);
  }
  return r;
}

/// Probe of the q^2-Bessel representation of the q^2-cosine,
///   cos(x;q^2) = (q^2;q^2)_inf / (q;q^2)_inf x^{1/2} J_{-1/2}(x;q^2).
/// Asserted: the library's cos_{-1/2} equals the direct q^2-cosine series and
/// 1phi1(0; q; q^2; q^2 x^2). Reported only: the right-hand side with the
/// Bessel function taken literally in base q^2 (1phi1 argument q^4 x^2),
/// which equals cos(qx;q^2) instead.
inline VerifyReport verify_bessel_relation(const SuiteOptions& o = {}) {
  VerifyReport r("bessel-relation", detail::pick(o.tolerance, 1e-13));
  const Field<BigFloat> wide{256};
  for (double q : detail::or_default(o.qs, {0.5})) {
    const QParams half(q, -0.5);
    const double q2 = q * q;
    const double pre = q_pochhammer_inf(q2, q2) / q_pochhammer_inf(q, q2);
    for (double x : {0.1, 0.3, 0.7, 1.0, 1.5, 2.0}) {
      // Direct q^2-cosine series sum_k (-1)^k q^{k(k+1)} x^{2k} / (q;q)_{2k}.
      BigFloat direct = wide(0.0), term = wide(1.0);
      const BigFloat bq = wide(q), bx = wide(x);
      for (int k = 0; k < 200; ++k) {
        direct += term;
        term = -term * pow(bq, 2 * k + 2) * bx * bx /
               ((wide(1.0) - pow(bq, 2 * k + 1)) *
                (wide(1.0) - pow(bq, 2 * k + 2)));
      }
      const double lhs = direct.to_double();
      const double lib = cos_alpha(x, half).real();
      const double phi =
          phi_rs(PhiSpec{{0.0}, {q}, q2, q2 * x * x}).real();
      std::ostringstream l;
      l << " q=" << q << " x=" << x;
      r.add("cos_{-1/2} vs series" + l.str(), lhs, lib);
      r.add("1phi1(q^2 x^2) vs series" + l.str(), lhs, phi);
      const double literal =
          (pre * std::sqrt(x) * q_bessel(-0.5, x, q2)).real();
      const double shifted = cos_alpha(q * x, half).real();
      std::ostringstream d;
      d.precision(17);
      d << "literal base-q^2 reading" << l.str() << ": rhs=" << literal
        << " lhs=" << lhs << " ratio lhs/rhs=" << lhs / literal
        << " cos(qx;q^2)=" << shifted;
      r.diagnostics.push_back(d.str());
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orthogonality", "plancherel", "inversion",      "eigen",
      "limits",        "isometry",   "bessel-relation"};
  return names;
}

/// Runs a suite by name; throws DomainError for unknown names.
inline VerifyReport run_suite(const std::string& name,
                              const SuiteOptions& o = {}) {
  if (name == "orthogonality") return verify_orthogonality(o);
  if (name == "plancherel") return verify_plancherel(o);
  if (name == "inversion") return verify_inversion(o);
  if (name == "eigen") return verify_eigen(o);
  if (name == "limits") return verify_limits(o);
  if (name == "isometry") return verify_isometry(o);
  if (name == "bessel-relation") return verify_bessel_relation(o);
  throw DomainError("unknown verify suite: " + name);
}

}  // namespace qharmonic

#endif  // QHARMONIC_VERIFY_HPP_
