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

#ifndef QHARMONIC_BIGFLOAT_HPP_
#define QHARMONIC_BIGFLOAT_HPP_

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace qharmonic {

/// Arbitrary-precision binary float backed by MPFR.
///
/// Every value carries its own precision (in bits). Binary operations round
/// to the larger precision of the two operands; compound assignment keeps the
/// precision of the left-hand side. There is no global default precision, so
/// values of different precisions can be used concurrently from any thread.
class BigFloat {
 public:
  BigFloat() : BigFloat(0.0, 53) {}

  explicit BigFloat(unsigned bits) {
    mpfr_init2(v_, clamp_bits(bits));
    mpfr_set_zero(v_, 1);
  }

  BigFloat(double x, unsigned bits) {
    mpfr_init2(v_, clamp_bits(bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }

  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }

  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  unsigned precision() const {
    return static_cast<unsigned>(mpfr_get_prec(v_));
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const {
    if (!mpfr_regular_p(v_)) return std::numeric_limits<int>::min() / 2;
    return static_cast<long>(mpfr_get_exp(v_));
  }

  /// log2(|x|) to double accuracy, without overflow; very negative for zero.
  double log2_abs() const {
    if (!mpfr_regular_p(v_)) return is_zero() ? -1e9 : 1e9;
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
  }

  std::string to_string(int digits = 30) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
    return buf;
  }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator+=(double o) {
    mpfr_add_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(double o) {
    mpfr_sub_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(double o) {
    mpfr_mul_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(double o) {
    mpfr_div_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define QHARMONIC_BIGFLOAT_BINOP(op, fn, fn_d, fn_d_rev)                     \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
    BigFloat r(std::max(a.precision(), b.precision()));                      \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }                                                                          \
  friend BigFloat operator op(const BigFloat& a, double b) {                 \
    BigFloat r(a.precision());                                               \
    fn_d(r.v_, a.v_, b, MPFR_RNDN);                                          \
    return r;                                                                \
  }                                                                          \
  friend BigFloat operator op(double a, const BigFloat& b) {                 \
    BigFloat r(b.precision());                                               \
    fn_d_rev(r.v_, a, b.v_, MPFR_RNDN);                                      \
    return r;                                                                \
  }

  QHARMONIC_BIGFLOAT_BINOP(+, mpfr_add, mpfr_add_d, mpfr_d_add_)
  QHARMONIC_BIGFLOAT_BINOP(-, mpfr_sub, mpfr_sub_d, mpfr_d_sub)
  QHARMONIC_BIGFLOAT_BINOP(*, mpfr_mul, mpfr_mul_d, mpfr_d_mul_)
  QHARMONIC_BIGFLOAT_BINOP(/, mpfr_div, mpfr_div_d, mpfr_d_div)
#undef QHARMONIC_BIGFLOAT_BINOP

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) {
    return b <= a;
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) < 0;
  }
  friend bool operator>(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) > 0;
  }
  friend bool operator<=(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) <= 0;
  }
  friend bool operator>=(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) >= 0;
  }
  friend bool operator==(const BigFloat& a, double b) {
    return mpfr_cmp_d(a.v_, b) == 0;
  }

  friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }
  friend BigFloat fabs(const BigFloat& a) { return unary(a, mpfr_abs); }
  friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
  friend BigFloat exp(const BigFloat& a) { return unary(a, mpfr_exp); }
  friend BigFloat expm1(const BigFloat& a) { return unary(a, mpfr_expm1); }
  friend BigFloat log(const BigFloat& a) { return unary(a, mpfr_log); }
  friend BigFloat log1p(const BigFloat& a) { return unary(a, mpfr_log1p); }
  friend BigFloat cos(const BigFloat& a) { return unary(a, mpfr_cos); }
  friend BigFloat sin(const BigFloat& a) { return unary(a, mpfr_sin); }

  friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, long n) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, int n) {
    return pow(a, static_cast<long>(n));
  }
  friend bool isfinite(const BigFloat& a) { return a.is_finite(); }

 private:
  static mpfr_prec_t clamp_bits(unsigned bits) {
    return std::max<mpfr_prec_t>(MPFR_PREC_MIN, static_cast<mpfr_prec_t>(bits));
  }

  template <class Fn>
  static BigFloat unary(const BigFloat& a, Fn fn) {
    BigFloat r(a.precision());
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  // mpfr has no d_add / d_mul; addition and multiplication commute.
  static int mpfr_d_add_(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    return mpfr_add_d(r, b, a, rnd);
  }
  static int mpfr_d_mul_(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    return mpfr_mul_d(r, b, a, rnd);
  }

  mpfr_t v_;
};

}  // namespace qharmonic

#endif  // QHARMONIC_BIGFLOAT_HPP_
