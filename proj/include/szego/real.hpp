#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "szego/error.hpp"

namespace szego {

/// Working precision (bits) used for values created without an explicit
/// precision. Thread-local; see PrecisionScope.
int working_bits() noexcept;

/// RAII override of the thread's working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// Multiple-precision real number backed by an mpfr_t. The result of a binary
/// operation carries the larger of the operand precisions.
class Real {
 public:
  Real();
  Real(double v);  // NOLINT(google-explicit-constructor): literals in formulas
  Real(int v);     // NOLINT(google-explicit-constructor)
  Real(long v);    // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  Real(double v, int bits);
  /// Parses a decimal string ("0.125", "-3e-7") or a rational "p/q".
  static Real parse(std::string_view text, int bits);
  /// Zero with the given precision.
  static Real zero(int bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int bits() const noexcept { return static_cast<int>(mpfr_get_prec(v_)); }
  /// Rounds (or widens) to a new precision in place.
  void set_bits(int bits);
  Real with_bits(int bits) const;

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 30) const;

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
  long exponent2() const noexcept;

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

 private:
  mpfr_t v_;
  void widen_to(const Real& o);
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real asinh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// log|Gamma(x)| for real x that is not a nonpositive integer.
Real lgamma_abs(const Real& x);
/// log(k!) exactly rounded at `bits`.
Real log_factorial(long k, int bits);
Real factorial(long k, int bits);
Real zeta(unsigned long s, int bits);
Real pi(int bits);
Real ln2(int bits);
/// 2^e at the given precision.
Real pow2(long e, int bits);

}  // namespace szego
