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

#ifndef QHARMONIC_QCORE_HPP_
#define QHARMONIC_QCORE_HPP_

#include <cmath>
#include <complex>
#include <string>

#include "qharmonic/errors.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/scalar.hpp"

namespace qharmonic {

/// Which definition of the generalized q-integers (and of the matching
/// difference operator) to use.
///
/// dunkl:   [2n]_{q,a} = [2n]_q,       [2n+1]_{q,a} = [2n+2a+2]_q.
///          Consistent with (q;q)_{2n,a} = (q^2;q^2)_n (q^{2a+2};q^2)_n, the
///          q-Gamma forms, the q->1 limits and the eigen-relations of the
///          generalized cosine/sine/exponential.
/// literal: [n]_{q,a} = [n+2a+1]_q for both parities, with q^{2a+1} applied
///          to the even part of the operator as well.
enum class Convention { dunkl, literal };

inline const char* to_string(Convention c) {
  return c == Convention::dunkl ? "dunkl" : "literal";
}

namespace detail {

// Terms allowed for a product/series evaluated at the given precision. The
// cap scales with precision because the number of terms needed to reach a
// relative tolerance of 2^-bits grows linearly in bits.
inline int term_cap(const SeriesControl& ctrl, unsigned bits) {
  if (bits <= 53) return ctrl.max_terms;
  return static_cast<int>(static_cast<long>(ctrl.max_terms) * bits / 53);
}

template <class Real>
Real stop_tolerance(const Field<Real>& field, const SeriesControl& ctrl) {
  if constexpr (std::is_same_v<Real, double>) {
    return ctrl.rel_tol;
  } else {
    // rel_tol is a double-precision policy; tighten it to the working
    // precision so the extra bits are not wasted on truncation.
    Real tol = pow(field(2.0), -static_cast<long>(field.bits));
    return tol < ctrl.rel_tol ? tol : field(ctrl.rel_tol);
  }
}

// 1 - q^x for double without cancellation when q^x is close to 1.
inline double one_minus_qx(double q, double x) {
  const double t = x * std::log(q);
  if (t > -0.5) return -std::expm1(t);
  return 1.0 - std::pow(q, x);
}

// log(1 - q^x) given lq = log q and qx = q^x, accurate in both regimes:
// q^x near 1 (through 1 - q^x directly) and q^x small (through log1p).
template <class Real>
Real log_one_minus(const Real& lq, const Real& x, const Real& qx) {
  using std::log;
  using std::log1p;
  if (qx > 0.5) return log(one_minus_qpow(lq, x));
  return log1p(-qx);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// q-numbers and q-factorials

/// [x]_q = (1 - q^x) / (1 - q). Note [0]_q = 0.
inline double q_number(double x, double q) {
  require_base(q);
  return detail::one_minus_qx(q, x) / (1.0 - q);
}

template <class Real>
Real q_number(const Field<Real>& field, const Real& x, const Real& q) {
  using std::log;
  return one_minus_qpow(log(q), x) / (field(1.0) - q);
}

/// [n]_q! = prod_{k=1}^{n} [k]_q; [0]_q! = 1.
inline double q_factorial(int n, double q) {
  require_base(q);
  if (n < 0) throw DomainError("q_factorial: n must be >= 0");
  double p = 1.0;
  for (int k = 1; k <= n; ++k) p *= q_number(k, q);
  return p;
}

/// Finite q-shifted factorial (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k).
template <class Real>
Complex<Real> q_pochhammer(const Field<Real>& field, const Complex<Real>& a,
                           const Real& q, int n) {
  if (n < 0) throw DomainError("q_pochhammer: n must be >= 0");
  Complex<Real> p = field.complex(1.0);
  Real qk = field(1.0);
  const Complex<Real> one = field.complex(1.0);
  for (int k = 0; k < n; ++k) {
    p *= one - a * qk;
    qk *= q;
  }
  return p;
}

inline std::complex<double> q_pochhammer(std::complex<double> a, double q,
                                         int n) {
  require_base(q);
  return q_pochhammer(Field<double>{}, a, q, n);
}

inline double q_pochhammer(double a, double q, int n) {
  return q_pochhammer(std::complex<double>(a, 0.0), q, n).real();
}

/// Infinite q-shifted factorial (a;q)_inf. Factors are multiplied in until
/// the update |a q^k| drops below the stopping tolerance.
template <class Real>
Complex<Real> q_pochhammer_inf(const Field<Real>& field, const Complex<Real>& a,
                               const Real& q, const SeriesControl& ctrl) {
  using std::abs;
  const Real tol = detail::stop_tolerance(field, ctrl);
  const int cap = detail::term_cap(ctrl, field.bits);
  const Complex<Real> one = field.complex(1.0);
  Complex<Real> p = one;
  Complex<Real> update = a;
  for (int k = 0;; ++k) {
    if (abs(update) < tol) return p;
    if (k >= cap) {
      throw ConvergenceError("q_pochhammer_inf: no convergence within " +
                             std::to_string(cap) + " factors");
    }
    p *= one - update;
    update *= q;
  }
}

inline std::complex<double> q_pochhammer_inf(std::complex<double> a, double q,
                                             const SeriesControl& ctrl = {}) {
  require_base(q);
  ctrl.validate();
  return q_pochhammer_inf(Field<double>{}, a, q, ctrl);
}

inline double q_pochhammer_inf(double a, double q,
                               const SeriesControl& ctrl = {}) {
  return q_pochhammer_inf(std::complex<double>(a, 0.0), q, ctrl).real();
}

template <class Real>
Real q_pochhammer_inf_real(const Field<Real>& field, const Real& a,
                           const Real& q, const SeriesControl& ctrl) {
  using std::real;
  return real(q_pochhammer_inf(field, Complex<Real>(a, field(0.0)), q, ctrl));
}

// ---------------------------------------------------------------------------
// Generalized q-integers and factorials

/// [n]_{q,alpha}. Both conventions reduce to [n]_q at alpha = -1/2.
inline double gen_q_integer(int n, const QParams& p,
                            Convention conv = Convention::dunkl) {
  if (n < 0) throw DomainError("gen_q_integer: n must be >= 0");
  const double shift = 2.0 * p.alpha() + 1.0;
  if (conv == Convention::literal || n % 2 == 1) {
    return q_number(n + shift, p.q());
  }
  return q_number(n, p.q());
}

/// [n]_{q,alpha}! = prod_{k=1}^{n} [k]_{q,alpha}.
inline double gen_q_factorial(int n, const QParams& p,
                              Convention conv = Convention::dunkl) {
  if (n < 0) throw DomainError("gen_q_factorial: n must be >= 0");
  double f = 1.0;
  for (int k = 1; k <= n; ++k) f *= gen_q_integer(k, p, conv);
  return f;
}

/// (q;q)_{n,alpha} = (1-q)^n [n]_{q,alpha}!.
inline double gen_q_shifted_factorial(int n, const QParams& p,
                                      Convention conv = Convention::dunkl) {
  if (n < 0) throw DomainError("gen_q_shifted_factorial: n must be >= 0");
  double f = 1.0;
  for (int k = 1; k <= n; ++k) f *= (1.0 - p.q()) * gen_q_integer(k, p, conv);
  return f;
}

/// (q;q)_{n,alpha} through the even/odd product forms
///   (q;q)_{2m,a}   = (q^2;q^2)_m (q^{2a+2};q^2)_m
///   (q;q)_{2m+1,a} = (q^2;q^2)_m (q^{2a+2};q^2)_{m+1}.
inline double gen_q_shifted_factorial_products(int n, const QParams& p) {
  if (n < 0) throw DomainError("gen_q_shifted_factorial: n must be >= 0");
  const double q = p.q();
  const double q2 = q * q;
  const int m = n / 2;
  const double shifted = std::pow(q, 2.0 * p.alpha() + 2.0);
  return q_pochhammer(q2, q2, m) * q_pochhammer(shifted, q2, n - m);
}

// ---------------------------------------------------------------------------
// q-Gamma

/// Gamma_q(z) = (q;q)_inf / (q^z;q)_inf * (1-q)^{1-z}, for z > 0.
/// The two products are combined factor by factor as
/// log(1-q^{k+1}) - log(1-q^{k+z}) and summed: near q = 1 each product on
/// its own underflows long before the ratio does, and summing logarithms
/// keeps the rounding error proportional to the size of the terms rather
/// than to their number.
template <class Real>
Real q_gamma(const Field<Real>& field, const Real& z, const Real& q,
             const SeriesControl& ctrl) {
  using std::abs;
  using std::exp;
  using std::log;
  if (!(z > 0.0)) {
    throw DomainError("q_gamma: z must be > 0 (no analytic continuation)");
  }
  const Real lq = log(q);
  const Real tol = detail::stop_tolerance(field, ctrl);
  const int cap = detail::term_cap(ctrl, field.bits);
  Accumulator<Real> log_ratio(field);
  for (int k = 0;; ++k) {
    const Real top = exp(field(k + 1.0) * lq);
    const Real bottom = exp((field(k) + z) * lq);
    if (abs(top) < tol && abs(bottom) < tol) break;
    if (k >= cap) {
      throw ConvergenceError("q_gamma: no convergence within " +
                             std::to_string(cap) + " factors");
    }
    log_ratio.add(Complex<Real>(detail::log_one_minus(lq, field(k + 1.0), top) -
                                    detail::log_one_minus(lq, field(k) + z, bottom),
                                field(0.0)));
  }
  using std::real;
  return exp(real(log_ratio.value()) + (field(1.0) - z) * log(field(1.0) - q));
}

inline double q_gamma(double z, double q, const SeriesControl& ctrl = {}) {
  require_base(q);
  ctrl.validate();
  return q_gamma(Field<double>{}, z, q, ctrl);
}

/// Generalized factorial through q^2-Gamma values:
///   [2m]_{q,a}!   = (1+q)^{2m}   G(a+m+1) G(m+1) / G(a+1)
///   [2m+1]_{q,a}! = (1+q)^{2m+1} G(a+m+2) G(m+1) / G(a+1)
/// with G = Gamma_{q^2}. Matches Convention::dunkl.
inline double gen_q_factorial_gamma(int n, const QParams& p,
                                    const SeriesControl& ctrl = {}) {
  if (n < 0) throw DomainError("gen_q_factorial_gamma: n must be >= 0");
  const double q = p.q();
  const double q2 = q * q;
  const double a = p.alpha();
  const int m = n / 2;
  const double top = (n % 2 == 0) ? a + m + 1.0 : a + m + 2.0;
  return std::pow(1.0 + q, n) * q_gamma(top, q2, ctrl) *
         q_gamma(m + 1.0, q2, ctrl) / q_gamma(a + 1.0, q2, ctrl);
}

// ---------------------------------------------------------------------------

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
inline double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be >= 0");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

}  // namespace qharmonic

#endif  // QHARMONIC_QCORE_HPP_
