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

#ifndef QHARMONIC_QFOURIER_HPP_
#define QHARMONIC_QFOURIER_HPP_

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "qharmonic/errors.hpp"
#include "qharmonic/grid.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/qcalculus.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/qtrig.hpp"
#include "qharmonic/report.hpp"
#include "qharmonic/scalar.hpp"
#include "qharmonic/series.hpp"

namespace qharmonic {

/// C_{a,q} = (1-q)^a (q^{2a+2};q^2)_inf / (2 (q^2;q^2)_inf) at the precision
/// of field.
template <class Real>
Real norm_constant(const Field<Real>& field, const QParams& p,
                   const SeriesControl& ctrl) {
  using std::exp;
  using std::log;
  const Real q = field(p.q());
  const Real q2 = q * q;
  const Real lq = log(q);
  const Real num = q_pochhammer_inf_real(
      field, exp(field(2.0 * p.alpha() + 2.0) * lq), q2, ctrl);
  const Real den = q_pochhammer_inf_real(field, q2, q2, ctrl);
  const Real scale = exp(field(p.alpha()) * log(field(1.0) - q));
  return scale * num / (field(2.0) * den);
}

inline double norm_constant(const QParams& p, const SeriesControl& ctrl = {}) {
  return norm_constant(Field<double>{}, p, ctrl);
}

/// The integer s with 1 - q = q^s when that holds to 1e-12 relative in
/// the exponent, else 0.
inline int grid_shift(double q) {
  const double r = std::log1p(-q) / std::log(q);
  const double s = std::round(r);
  if (s >= 1.0 && std::fabs(r - s) <= 1e-12 * s) return static_cast<int>(s);
  return 0;
}

/// True when ln(1-q)/ln q is an even integer (to 1e-12).
inline bool satisfies_grid_condition(double q) {
  const int s = grid_shift(q);
  return s > 0 && s % 2 == 0;
}

/// cos_a and sin_a at (1-q) q^j for j in [j_min, j_max], stored as doubles.
/// When 1 - q = q^s holds to rounding the argument is taken as q^{j+s}
/// exactly: the kernel at deep-negative j is so sensitive that the one-ulp
/// gap between 1 - q and q^s would otherwise dominate the result. Entries whose double evaluation cancels are recomputed at
/// ctrl.escalation_bits(); a CancellationError is thrown if even that is
/// not enough.
struct KernelTable {
  int j_min = 0;
  std::vector<double> cos_values;
  std::vector<double> sin_values;

  double cos_at(int j) const { return cos_values[j - j_min]; }
  double sin_at(int j) const { return sin_values[j - j_min]; }

  static KernelTable build(const QParams& p, int j_min, int j_max,
                           const SeriesControl& ctrl) {
    KernelTable t;
    t.j_min = j_min;
    const int shift = grid_shift(p.q());
    for (int j = j_min; j <= j_max; ++j) {
      auto arg = [&](const auto& field) {
        using std::pow;
        const auto y = shift > 0
                           ? pow(field(p.q()), j + shift)
                           : (field(1.0) - field(p.q())) * pow(field(p.q()), j);
        return decltype(field.complex(0.0)){y, field(0.0)};
      };
      t.cos_values.push_back(
          evaluate_guarded(
              [&](const auto& field) {
                return cos_alpha_series(field, arg(field), p, ctrl);
              },
              ctrl, "transform kernel cos_alpha")
              .real());
      t.sin_values.push_back(
          evaluate_guarded(
              [&](const auto& field) {
                return sin_alpha_series(field, arg(field), p, ctrl);
              },
              ctrl, "transform kernel sin_alpha")
              .real());
    }
    return t;
  }
};

/// Everything needed to transform between two grid windows: parameters,
/// the validated normalization constant and the shared kernel table.
class TransformPlan {
 public:
  const QParams& params() const { return params_; }
  double norm_constant() const { return c_; }
  const GridWindow& input_window() const { return in_; }
  const GridWindow& output_window() const { return out_; }
  const SeriesControl& ctrl() const { return ctrl_; }
  bool strict_grid() const { return strict_; }
  const KernelTable& kernel() const { return *kernel_; }

  /// The same plan with input and output windows exchanged (for applying
  /// the inverse direction or a second pass of a self-inverse pair).
  TransformPlan reversed() const {
    TransformPlan r = *this;
    std::swap(r.in_, r.out_);
    return r;
  }

 private:
  friend TransformPlan make_plan(const QParams&, const GridWindow&,
                                 const GridWindow&, const SeriesControl&,
                                 bool);
  TransformPlan(const QParams& p) : params_(p) {}

  QParams params_;
  double c_ = 0.0;
  GridWindow in_, out_;
  SeriesControl ctrl_;
  bool strict_ = false;
  std::shared_ptr<const KernelTable> kernel_;
};

/// Builds a plan. With strict_grid the base must satisfy
/// ln(1-q)/ln q in 2Z.
inline TransformPlan make_plan(const QParams& params, const GridWindow& in,
                               const GridWindow& out,
                               const SeriesControl& ctrl = {},
                               bool strict_grid = false) {
  ctrl.validate();
  in.validate();
  out.validate();
  if (strict_grid && !satisfies_grid_condition(params.q())) {
    throw DomainError("strict grid: ln(1-q)/ln(q) is not an even integer for q=" +
                      std::to_string(params.q()));
  }
  TransformPlan plan(params);
  plan.in_ = in;
  plan.out_ = out;
  plan.ctrl_ = ctrl;
  plan.strict_ = strict_grid;
  plan.c_ = norm_constant(params, ctrl);
  const Field<BigFloat> wide{ctrl.escalation_bits()};
  const double check = norm_constant(wide, params, ctrl).to_double();
  if (!(plan.c_ > 0.0) || std::fabs(plan.c_ - check) > 1e-13 * check) {
    throw ConvergenceError("norm constant check failed: " +
                           std::to_string(plan.c_) + " vs " +
                           std::to_string(check));
  }
  plan.kernel_ = std::make_shared<const KernelTable>(KernelTable::build(
      params, in.n_min + out.n_min, in.n_max + out.n_max, ctrl));
  return plan;
}

namespace detail {

inline void require_on_plan(const GridFunction& f, const QParams& p,
                            const GridWindow& w, const char* what) {
  if (!(f.params() == p)) {
    throw DomainError(std::string(what) + ": parameters differ from the plan");
  }
  if (!w.contains(f.window())) {
    throw WindowError(std::string(what) +
                      ": input window lies outside the plan's window");
  }
}

// C (1-q) sum_k q^{k(2a+2)} sum_tau f(tau q^k) (cos - i s sigma tau sin),
// evaluated at every sigma q^n of out.
inline GridFunction exp_kernel_sum(const GridFunction& f,
                                   const TransformPlan& plan,
                                   const GridWindow& out, double s) {
  const QParams& p = plan.params();
  const KernelTable& kt = plan.kernel();
  const double scale = plan.norm_constant() * (1.0 - p.q());
  const double lq = std::log(p.q());
  const double wexp = 2.0 * p.alpha() + 2.0;
  const GridWindow& in = f.window();
  std::vector<double> weight;
  for (int k = in.n_min; k <= in.n_max; ++k) {
    weight.push_back(scale * std::exp(k * wexp * lq));
  }
  const std::complex<double> i(0.0, 1.0);
  std::vector<std::complex<double>> pos, neg;
  pos.reserve(out.size());
  neg.reserve(out.size());
  for (int n = out.n_min; n <= out.n_max; ++n) {
    // Even and odd parts of f pair with cos and sin respectively.
    Accumulator<double> even(Field<double>{}), odd(Field<double>{});
    for (int k = in.n_min; k <= in.n_max; ++k) {
      const double w = weight[k - in.n_min];
      even.add(w * kt.cos_at(n + k) * (f.pos(k) + f.neg(k)));
      odd.add(w * kt.sin_at(n + k) * (f.pos(k) - f.neg(k)));
    }
    const std::complex<double> e = even.value();
    const std::complex<double> o = -s * i * odd.value();
    pos.push_back(e + o);
    neg.push_back(e - o);
  }
  return GridFunction(p, out, std::move(pos), std::move(neg));
}

// factor * sum_k q^{k(2a+2)} K(n+k) f(q^k) on the positive branch, then
// extended with the given parity.
inline GridFunction half_line_sum(const GridFunction& f,
                                  const TransformPlan& plan, bool use_sin) {
  const QParams& p = plan.params();
  const KernelTable& kt = plan.kernel();
  const double scale = 2.0 * plan.norm_constant() * (1.0 - p.q());
  const double lq = std::log(p.q());
  const double wexp = 2.0 * p.alpha() + 2.0;
  const GridWindow& in = f.window();
  const GridWindow& out = plan.output_window();
  std::vector<std::complex<double>> pos, neg;
  for (int n = out.n_min; n <= out.n_max; ++n) {
    Accumulator<double> acc(Field<double>{});
    for (int k = in.n_min; k <= in.n_max; ++k) {
      const double kern = use_sin ? kt.sin_at(n + k) : kt.cos_at(n + k);
      acc.add(scale * std::exp(k * wexp * lq) * kern * f.pos(k));
    }
    pos.push_back(acc.value());
    neg.push_back(use_sin ? -acc.value() : acc.value());
  }
  return GridFunction(p, out, std::move(pos), std::move(neg));
}

}  // namespace detail

/// f-hat(x) = C int f(t) e_a(-i(1-q)tx; q^2) |t|^{2a+1} d_qt on the output
/// window. f must live inside the plan's input window.
inline GridFunction forward_transform(const GridFunction& f,
                                      const TransformPlan& plan) {
  detail::require_on_plan(f, plan.params(), plan.input_window(),
                          "forward_transform");
  return detail::exp_kernel_sum(f, plan, plan.output_window(), 1.0);
}

/// f(x) = C int g(t) e_a(i(1-q)tx; q^2) |t|^{2a+1} d_qt on the input window.
/// g must live inside the plan's output window.
inline GridFunction inverse_transform(const GridFunction& g,
                                      const TransformPlan& plan) {
  detail::require_on_plan(g, plan.params(), plan.output_window(),
                          "inverse_transform");
  return detail::exp_kernel_sum(g, plan, plan.input_window(), -1.0);
}

/// g(q^n) = 2C int_0^inf cos_a((1-q)x q^n; q^2) f(x) x^{2a+1} d_qx, from the
/// positive branch of f; the result is extended as an even function.
inline GridFunction cosine_transform_grid(const GridFunction& f,
                                          const TransformPlan& plan) {
  detail::require_on_plan(f, plan.params(), plan.input_window(),
                          "cosine_transform_grid");
  return detail::half_line_sum(f, plan, false);
}

/// As cosine_transform_grid with the sin_a kernel; extended as odd.
inline GridFunction sine_transform_grid(const GridFunction& f,
                                        const TransformPlan& plan) {
  detail::require_on_plan(f, plan.params(), plan.input_window(),
                          "sine_transform_grid");
  return detail::half_line_sum(f, plan, true);
}

/// Grid energy sum_n q^{n(2a+2)} |f(q^n)|^2 over the positive branch.
inline double grid_energy(const GridFunction& f) {
  const double lq = std::log(f.params().q());
  const double wexp = 2.0 * f.params().alpha() + 2.0;
  double sum = 0.0;
  for (int n = f.window().n_min; n <= f.window().n_max; ++n) {
    sum += std::exp(n * wexp * lq) * std::norm(f.pos(n));
  }
  return sum;
}

/// Fraction of the weighted L^2 energy of f carried by the two outermost
/// exponents on each side; large values mean the window is too small.
inline double boundary_energy_fraction(const GridFunction& f) {
  const QParams& p = f.params();
  const double lq = std::log(p.q());
  const double wexp = 2.0 * p.alpha() + 2.0;
  const GridWindow& w = f.window();
  double total = 0.0, edge = 0.0;
  for (int n = w.n_min; n <= w.n_max; ++n) {
    const double e =
        std::exp(n * wexp * lq) * (std::norm(f.pos(n)) + std::norm(f.neg(n)));
    total += e;
    if (n - w.n_min < 2 || w.n_max - n < 2) edge += e;
  }
  return total > 0.0 ? edge / total : 0.0;
}

/// q^{(a+1)j} (q^{2a+2};q^2)_inf / (q^2;q^2)_inf cos_a(q^j; q^2) at the
/// precision of field.
template <class Real>
Real orthogonality_kernel(const Field<Real>& field, int j, const QParams& p,
                          const Real& prefactor, const SeriesControl& ctrl) {
  using std::exp;
  using std::log;
  using std::pow;
  using std::real;
  const Real q = field(p.q());
  const Real x = pow(q, j);
  const SeriesSum<Real> c =
      cos_alpha_series(field, Complex<Real>(x, field(0.0)), p, ctrl);
  if constexpr (!std::is_same_v<Real, double>) {
    require_resolved(c, field.bits, "orthogonality_delta");
  }
  return exp(field(p.alpha() + 1.0) * field(j) * log(q)) * prefactor *
         real(c.value);
}

/// Truncated sum over k in k_range of a(k+n) a(k+m), which approximates
/// delta_{nm}. Evaluated at max(ctrl.precision_bits, 256) bits.
inline double orthogonality_delta(int n, int m, const QParams& p,
                                  const GridWindow& k_range,
                                  const SeriesControl& ctrl = {}) {
  ctrl.validate();
  k_range.validate();
  const Field<BigFloat> field{ctrl.escalation_bits()};
  const BigFloat q2 = field(p.q()) * field(p.q());
  const BigFloat q2a2 =
      exp(field(2.0 * p.alpha() + 2.0) * log(field(p.q())));
  const BigFloat prefactor = q_pochhammer_inf_real(field, q2a2, q2, ctrl) /
                             q_pochhammer_inf_real(field, q2, q2, ctrl);
  BigFloat sum = field(0.0);
  for (int k = k_range.n_min; k <= k_range.n_max; ++k) {
    // Multiply in a fixed order so that (n, m) and (m, n) agree exactly.
    const BigFloat a = orthogonality_kernel(field, k + std::min(n, m), p,
                                            prefactor, ctrl);
    const BigFloat b = orthogonality_kernel(field, k + std::max(n, m), p,
                                            prefactor, ctrl);
    sum += a * b;
  }
  return sum.to_double();
}

/// Compares ||f||_{q,a,2} with ||forward(f)||_{q,a,2}.
inline VerifyReport plancherel_check(const GridFunction& f,
                                     const TransformPlan& plan,
                                     double tolerance = 1e-6) {
  VerifyReport report("plancherel", tolerance);
  const double lhs = lp_norm(f, 2.0);
  const double rhs = lp_norm(forward_transform(f, plan), 2.0);
  report.add("norm", lhs, rhs);
  return report;
}

/// The root in (0,1) of q^{2m} + q - 1, i.e. 1 - q = q^{2m}.
inline double solve_q(int m) {
  if (m < 1) throw DomainError("solve_q: m must be >= 1");
  const double e = 2.0 * m;
  auto h = [&](double q) { return std::pow(q, e) + q - 1.0; };
  double lo = 0.0, hi = 1.0, q = 0.5;
  for (int it = 0; it < 200; ++it) {
    const double hq = h(q);
    if (hq == 0.0) return q;
    if (hq < 0.0) {
      lo = q;
    } else {
      hi = q;
    }
    const double dh = e * std::pow(q, e - 1.0) + 1.0;
    double next = q - hq / dh;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - q) <= 1e-17 || hi - lo <= 1e-16) return next;
    q = next;
  }
  return q;
}

}  // namespace qharmonic

#endif  // QHARMONIC_QFOURIER_HPP_
