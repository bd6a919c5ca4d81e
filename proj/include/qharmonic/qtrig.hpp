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

#ifndef QHARMONIC_QTRIG_HPP_
#define QHARMONIC_QTRIG_HPP_

#include <cmath>
#include <complex>
#include <vector>

#include "qharmonic/errors.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/scalar.hpp"
#include "qharmonic/series.hpp"

namespace qharmonic {

/// Weights of the k-th cosine and sine terms:
///   c_k = q^{k(k+1)} / ((q^{2a+2};q^2)_k (q^2;q^2)_k)
///   s_k = q^{k(k+1)} / ((q^{2a+2};q^2)_{k+1} (q^2;q^2)_k)
/// so that cos_a(x) = sum (-1)^k c_k x^{2k}, sin_a(x) = sum (-1)^k s_k x^{2k+1}.
struct TrigCoefficients {
  int k;
  double c_k;
  double s_k;
};

/// First count coefficient pairs, built by the ratio recurrences
///   c_{k+1} = c_k q^{2k+2} / ((1 - q^{2a+2k+2}) (1 - q^{2k+2}))
///   s_{k+1} = s_k q^{2k+2} / ((1 - q^{2a+2k+4}) (1 - q^{2k+2})).
inline std::vector<TrigCoefficients> trig_coefficients(int count,
                                                       const QParams& p) {
  std::vector<TrigCoefficients> out;
  out.reserve(count > 0 ? count : 0);
  const double lq = std::log(p.q());
  const double a = p.alpha();
  double c = 1.0;
  double s = 1.0 / one_minus_qpow(lq, 2.0 * a + 2.0);
  for (int k = 0; k < count; ++k) {
    out.push_back({k, c, s});
    const double q2k2 = std::exp((2.0 * k + 2.0) * lq);
    const double common = q2k2 / one_minus_qpow(lq, 2.0 * k + 2.0);
    c *= common / one_minus_qpow(lq, 2.0 * a + 2.0 * k + 2.0);
    s *= common / one_minus_qpow(lq, 2.0 * a + 2.0 * k + 4.0);
  }
  return out;
}

namespace detail {

// sum_k (-1)^k w_k z^k with w_0 = lead and
// w_{k+1} = w_k q^{2k+2} / ((1 - q^{shift+2k}) (1 - q^{2k+2})).
template <class Real>
SeriesSum<Real> alternating_trig_sum(const Field<Real>& field,
                                     const Complex<Real>& z,
                                     const Complex<Real>& lead,
                                     const QParams& p, double shift,
                                     const SeriesControl& ctrl,
                                     const char* what) {
  using std::exp;
  using std::log;
  const Real lq = log(field(p.q()));
  SeriesSummer<Real> sum(field, ctrl, what);
  Complex<Real> term = lead;
  for (int k = 0;; ++k) {
    if (sum.add(term)) break;
    const Real q2k2 = exp(field(2.0 * k + 2.0) * lq);
    const Real ratio = q2k2 / (one_minus_qpow(lq, field(shift + 2.0 * k)) *
                               one_minus_qpow(lq, field(2.0 * k + 2.0)));
    term = -(term * z) * ratio;
  }
  return sum.result();
}

}  // namespace detail

/// Coefficient-series cos_a(x;q^2) at the precision of field.
template <class Real>
SeriesSum<Real> cos_alpha_series(const Field<Real>& field,
                                 const Complex<Real>& x, const QParams& p,
                                 const SeriesControl& ctrl) {
  return detail::alternating_trig_sum(field, x * x, field.complex(1.0), p,
                                      2.0 * p.alpha() + 2.0, ctrl, "cos_alpha");
}

/// Coefficient-series sin_a(x;q^2) at the precision of field.
template <class Real>
SeriesSum<Real> sin_alpha_series(const Field<Real>& field,
                                 const Complex<Real>& x, const QParams& p,
                                 const SeriesControl& ctrl) {
  using std::log;
  const Real lq = log(field(p.q()));
  const Real s0 = field(1.0) / one_minus_qpow(lq, field(2.0 * p.alpha() + 2.0));
  return detail::alternating_trig_sum(field, x * x, x * s0, p,
                                      2.0 * p.alpha() + 4.0, ctrl, "sin_alpha");
}

/// Generalized q^2-cosine.
inline std::complex<double> cos_alpha(std::complex<double> x, const QParams& p,
                                      const SeriesControl& ctrl = {}) {
  return evaluate_guarded(
      [&](const auto& field) {
        return cos_alpha_series(field, field.complex(x), p, ctrl);
      },
      ctrl, "cos_alpha");
}

/// Generalized q^2-sine.
inline std::complex<double> sin_alpha(std::complex<double> x, const QParams& p,
                                      const SeriesControl& ctrl = {}) {
  return evaluate_guarded(
      [&](const auto& field) {
        return sin_alpha_series(field, field.complex(x), p, ctrl);
      },
      ctrl, "sin_alpha");
}

/// Generalized q^2-exponential e_a(x) = cos_a(-ix) + i sin_a(-ix).
///
/// For real x both parts are positive-term real series, and the result is
/// returned with its imaginary part set to zero once it is confirmed to be
/// below 1e-14 relative.
inline std::complex<double> exp_alpha(std::complex<double> x, const QParams& p,
                                      const SeriesControl& ctrl = {}) {
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> mix = -i * x;
  const std::complex<double> value =
      cos_alpha(mix, p, ctrl) + i * sin_alpha(mix, p, ctrl);
  if (x.imag() == 0.0) {
    if (std::fabs(value.imag()) > 1e-14 * std::abs(value)) {
      throw CancellationError("exp_alpha: imaginary residue for real argument");
    }
    return {value.real(), 0.0};
  }
  return value;
}

/// e_a at the precision of field (no guard; callers check resolution of the
/// constituent sums when they need it).
template <class Real>
Complex<Real> exp_alpha_value(const Field<Real>& field, const Complex<Real>& x,
                              const QParams& p, const SeriesControl& ctrl) {
  const Complex<Real> i = field.complex(0.0, 1.0);
  const Complex<Real> mix = -(i * x);
  const Complex<Real> c = cos_alpha_series(field, mix, p, ctrl).value;
  const Complex<Real> s = sin_alpha_series(field, mix, p, ctrl).value;
  return c + i * s;
}

}  // namespace qharmonic

#endif  // QHARMONIC_QTRIG_HPP_
