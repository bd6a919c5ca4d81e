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

#ifndef QHARMONIC_SCALAR_HPP_
#define QHARMONIC_SCALAR_HPP_

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

#include "qharmonic/bigfloat.hpp"

namespace qharmonic {

// Minimal complex type for real types that std::complex does not support.
template <class Real>
struct BasicComplex {
  Real re;
  Real im;

  BasicComplex() = default;
  BasicComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  BasicComplex& operator+=(const BasicComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BasicComplex& operator-=(const BasicComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BasicComplex& operator*=(const BasicComplex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  BasicComplex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  BasicComplex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend BasicComplex operator+(BasicComplex a, const BasicComplex& b) {
    return a += b;
  }
  friend BasicComplex operator-(BasicComplex a, const BasicComplex& b) {
    return a -= b;
  }
  friend BasicComplex operator*(BasicComplex a, const BasicComplex& b) {
    return a *= b;
  }
  friend BasicComplex operator*(BasicComplex a, const Real& s) { return a *= s; }
  friend BasicComplex operator*(const Real& s, BasicComplex a) { return a *= s; }
  friend BasicComplex operator/(BasicComplex a, const Real& s) { return a /= s; }
  friend BasicComplex operator/(const BasicComplex& a, const BasicComplex& b) {
    Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  friend BasicComplex operator-(const BasicComplex& a) { return {-a.re, -a.im}; }

  friend const Real& real(const BasicComplex& z) { return z.re; }
  friend const Real& imag(const BasicComplex& z) { return z.im; }
  friend Real norm(const BasicComplex& z) { return z.re * z.re + z.im * z.im; }
  friend Real abs(const BasicComplex& z) { return sqrt(norm(z)); }
  friend BasicComplex conj(const BasicComplex& z) { return {z.re, -z.im}; }
};

namespace detail {
template <class Real>
struct complex_of {
  using type = BasicComplex<Real>;
};
template <>
struct complex_of<double> {
  using type = std::complex<double>;
};
}  // namespace detail

/// Complex type paired with a real type: std::complex<double> for double,
/// BasicComplex<R> otherwise.
template <class Real>
using Complex = typename detail::complex_of<Real>::type;

/// Arithmetic context for a real type. Builds constants at the working
/// precision; for double the precision is fixed at 53 bits.
template <class Real>
struct Field;

template <>
struct Field<double> {
  static constexpr unsigned bits = 53;
  double operator()(double v) const { return v; }
  std::complex<double> complex(double re, double im = 0.0) const {
    return {re, im};
  }
  std::complex<double> complex(std::complex<double> z) const { return z; }
};

template <>
struct Field<BigFloat> {
  unsigned bits = 256;
  BigFloat operator()(double v) const { return BigFloat(v, bits); }
  BasicComplex<BigFloat> complex(double re, double im = 0.0) const {
    return {BigFloat(re, bits), BigFloat(im, bits)};
  }
  BasicComplex<BigFloat> complex(std::complex<double> z) const {
    return complex(z.real(), z.imag());
  }
};

inline double to_double(double x) { return x; }
inline double to_double(const BigFloat& x) { return x.to_double(); }
inline std::complex<double> to_double(const std::complex<double>& z) {
  return z;
}
inline std::complex<double> to_double(const BasicComplex<BigFloat>& z) {
  return {z.re.to_double(), z.im.to_double()};
}

inline unsigned precision_of(double) { return 53; }
inline unsigned precision_of(const BigFloat& x) { return x.precision(); }
inline unsigned precision_of(const std::complex<double>&) { return 53; }
inline unsigned precision_of(const BasicComplex<BigFloat>& z) {
  return z.re.precision();
}

/// Approximate log2(|x|); very negative for zero.
inline double log2_abs(double x) {
  if (x == 0.0) return -1e9;
  return std::log2(std::fabs(x));
}
inline double log2_abs(const BigFloat& x) { return x.log2_abs(); }

/// Compensated (Neumaier) complex accumulator for double; plain sum for
/// extended types whose precision already dominates rounding.
template <class Real>
class Accumulator {
 public:
  explicit Accumulator(const Field<Real>& f) : sum_(f.complex(0.0)) {}
  void add(const Complex<Real>& t) { sum_ += t; }
  Complex<Real> value() const { return sum_; }

 private:
  Complex<Real> sum_;
};

template <>
class Accumulator<double> {
 public:
  explicit Accumulator(const Field<double>&) {}

  void add(const std::complex<double>& t) {
    add_part(re_, cre_, t.real());
    add_part(im_, cim_, t.imag());
  }
  std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }

  double re_ = 0.0, cre_ = 0.0;
  double im_ = 0.0, cim_ = 0.0;
};

/// 1 - q^e computed without cancellation for q^e near 1, given ln q.
template <class Real>
Real one_minus_qpow(const Real& log_q, const Real& e) {
  using std::expm1;
  return -expm1(e * log_q);
}

}  // namespace qharmonic

#endif  // QHARMONIC_SCALAR_HPP_
