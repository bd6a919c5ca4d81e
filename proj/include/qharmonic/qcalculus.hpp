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

#ifndef QHARMONIC_QCALCULUS_HPP_
#define QHARMONIC_QCALCULUS_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "qharmonic/errors.hpp"
#include "qharmonic/grid.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/scalar.hpp"

namespace qharmonic {

/// f_e(x) = (f(x) + f(-x)) / 2 and f_o(x) = (f(x) - f(-x)) / 2 per grid point.
template <class Real>
BasicEvenOddParts<Real> even_odd_parts(const BasicGridFunction<Real>& f) {
  using V = Complex<Real>;
  const Field<Real> field = field_of(f);
  const Real half = field(0.5);
  const auto n = f.pos_values().size();
  std::vector<V> ep, en, op, on;
  ep.reserve(n);
  en.reserve(n);
  op.reserve(n);
  on.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const V& a = f.pos_values()[i];
    const V& b = f.neg_values()[i];
    V e = (a + b) * half;
    V o = (a - b) * half;
    en.push_back(e);
    ep.push_back(std::move(e));
    on.push_back(-o);
    op.push_back(std::move(o));
  }
  return {BasicGridFunction<Real>(f.params(), f.window(), std::move(ep),
                                  std::move(en)),
          BasicGridFunction<Real>(f.params(), f.window(), std::move(op),
                                  std::move(on))};
}

/// Generalized q-difference operator on a grid function:
///   d f(x) = [f_e(x/q) - c f_e(x)] / ((1-q)x) + [f_o(x) - q^{2a+1} f_o(qx)] / ((1-q)x)
/// with c = 1 (Convention::dunkl) or c = q^{2a+1} (Convention::literal).
/// Needs samples at x/q and qx, so the result lives on [n_min+1, n_max-1].
template <class Real>
BasicGridFunction<Real> q_derivative_alpha(
    const BasicGridFunction<Real>& f, Convention conv = Convention::dunkl) {
  using std::exp;
  using std::log;
  using V = Complex<Real>;
  const GridWindow& w = f.window();
  if (w.size() < 3) {
    throw WindowError("q_derivative_alpha: window needs at least 3 exponents");
  }
  const Field<Real> field = field_of(f);
  const QParams& p = f.params();
  const Real one = field(1.0);
  const Real half = field(0.5);
  const Real lq = log(field(p.q()));
  const Real odd_shift = exp(field(2.0 * p.alpha() + 1.0) * lq);
  const Real even_shift = conv == Convention::dunkl ? one : odd_shift;
  const Real one_minus_q = one - field(p.q());

  auto even_at = [&](int n) { return (f.pos(n) + f.neg(n)) * half; };
  auto odd_at = [&](int n) { return (f.pos(n) - f.neg(n)) * half; };

  const GridWindow out{w.n_min + 1, w.n_max - 1};
  std::vector<V> pos, neg;
  pos.reserve(out.size());
  neg.reserve(out.size());
  for (int n = out.n_min; n <= out.n_max; ++n) {
    const Real x = grid_point(field, p.q(), n);
    const Real denom = one_minus_q * x;
    const V even_diff = even_at(n - 1) - even_at(n) * even_shift;
    const V odd_diff = odd_at(n) - odd_at(n + 1) * odd_shift;
    // At -x: the even difference is unchanged and the odd one flips sign,
    // as does the denominator.
    pos.push_back((even_diff + odd_diff) / denom);
    neg.push_back((odd_diff - even_diff) / denom);
  }
  return BasicGridFunction<Real>(p, out, std::move(pos), std::move(neg));
}

/// Generalized q-difference operator applied to a callable at a point.
/// For x = 0 it returns [2a+2]_q f'(0), which requires fprime_at_zero.
inline std::complex<double> q_derivative_alpha_fn(
    const std::function<std::complex<double>(double)>& f, double x,
    const QParams& p, Convention conv = Convention::dunkl,
    std::optional<std::complex<double>> fprime_at_zero = std::nullopt) {
  const double q = p.q();
  const double a = p.alpha();
  if (x == 0.0) {
    if (!fprime_at_zero) {
      throw DomainError("q_derivative_alpha_fn: x = 0 needs f'(0)");
    }
    return q_number(2.0 * a + 2.0, q) * *fprime_at_zero;
  }
  const double odd_shift = std::pow(q, 2.0 * a + 1.0);
  const double even_shift = conv == Convention::dunkl ? 1.0 : odd_shift;
  const double den = 2.0 * (1.0 - q) * x;
  const auto even_part =
      f(x / q) + f(-x / q) - even_shift * (f(x) + f(-x));
  const auto odd_part = f(x) - f(-x) - odd_shift * (f(q * x) - f(-q * x));
  return (even_part + odd_part) / den;
}

/// Truncated Jackson integral with a tail indicator.
template <class Real>
struct JacksonSum {
  Complex<Real> value;
  /// Magnitude of the contributions at the two window boundaries.
  Real tail_estimate;
  /// Set when the boundary contributions are not negligible relative to
  /// the sum, i.e. the window is probably too small.
  bool window_warning = false;
};

namespace detail {

template <class Real>
JacksonSum<Real> jackson_sum(const BasicGridFunction<Real>& f,
                             const SeriesControl& ctrl, bool both_branches) {
  using std::abs;
  using std::exp;
  using std::log;
  const Field<Real> field = field_of(f);
  const GridWindow& w = f.window();
  const Real scale = field(1.0) - field(f.params().q());
  Accumulator<Real> acc(field);
  Real lo = field(0.0), hi = field(0.0);
  for (int n = w.n_min; n <= w.n_max; ++n) {
    Complex<Real> v = f.pos(n);
    if (both_branches) v += f.neg(n);
    const Complex<Real> term = v * (scale * grid_point(field, f.params().q(), n));
    acc.add(term);
    if (n == w.n_min) lo = abs(term);
    if (n == w.n_max) hi = abs(term);
  }
  JacksonSum<Real> out{acc.value(), lo + hi, false};
  out.window_warning = out.tail_estimate > field(ctrl.rel_tol) * abs(out.value);
  return out;
}

}  // namespace detail

/// (1-q) sum_n q^n f(q^n) over the window.
template <class Real>
JacksonSum<Real> jackson_integral_0_inf(const BasicGridFunction<Real>& f,
                                        const SeriesControl& ctrl = {}) {
  return detail::jackson_sum(f, ctrl, false);
}

/// (1-q) sum_n q^n [f(q^n) + f(-q^n)] over the window.
template <class Real>
JacksonSum<Real> jackson_integral_R(const BasicGridFunction<Real>& f,
                                    const SeriesControl& ctrl = {}) {
  return detail::jackson_sum(f, ctrl, true);
}

/// |x|^{2a+1} at x = +-q^n, computed as exp(n (2a+1) ln q).
template <class Real>
Real weight_at(const Field<Real>& field, const QParams& p, int n) {
  using std::exp;
  using std::log;
  return exp(field(n) * field(2.0 * p.alpha() + 1.0) * log(field(p.q())));
}

/// Weighted norm (int |f|^p |x|^{2a+1} d_qx)^{1/p} over both branches; for
/// p = infinity, sup |f(x)| |x|^{2a+1}.
template <class Real>
Real lp_norm(const BasicGridFunction<Real>& f, double p) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  const Field<Real> field = field_of(f);
  const QParams& qp = f.params();
  const GridWindow& w = f.window();
  if (std::isinf(p)) {
    Real best = field(0.0);
    for (int n = w.n_min; n <= w.n_max; ++n) {
      const Real wt = weight_at(field, qp, n);
      const Real a = abs(f.pos(n)) * wt;
      const Real b = abs(f.neg(n)) * wt;
      if (a > best) best = a;
      if (b > best) best = b;
    }
    return best;
  }
  const Real scale = field(1.0) - field(qp.q());
  const Real pw = field(p);
  Real sum = field(0.0);
  for (int n = w.n_min; n <= w.n_max; ++n) {
    const Real jack = scale * grid_point(field, qp.q(), n) * weight_at(field, qp, n);
    Real a = abs(f.pos(n));
    Real b = abs(f.neg(n));
    if (p == 2.0) {
      sum += jack * (a * a + b * b);
    } else {
      sum += jack * (pow(a, pw) + pow(b, pw));
    }
  }
  if (p == 2.0) return sqrt(sum);
  return pow(sum, field(1.0) / pw);
}

}  // namespace qharmonic

#endif  // QHARMONIC_QCALCULUS_HPP_
