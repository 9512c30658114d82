#pragma once

#include <complex>
#include <string>

#include "szego/real.hpp"

namespace szego {

/// Complex number with a single precision shared by both parts. Every
/// operation checks that the result is finite and throws OverflowError
/// otherwise, so a stored value never holds NaN or Inf.
class APComplex {
 public:
  APComplex();
  APComplex(const Real& re);  // NOLINT(google-explicit-constructor)
  APComplex(const Real& re, const Real& im);
  APComplex(double re, double im, int bits);
  APComplex(std::complex<double> z, int bits);
  /// Parses "x", "x+yi", or a pair of strings for the parts.
  static APComplex parse(const std::string& re, const std::string& im, int bits);

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  int bits() const noexcept { return re_.bits(); }
  void set_bits(int bits);
  APComplex with_bits(int bits) const;

  std::complex<double> to_cdouble() const noexcept { return {re_.to_double(), im_.to_double()}; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  APComplex& operator+=(const APComplex& o);
  APComplex& operator-=(const APComplex& o);
  APComplex& operator*=(const APComplex& o);
  APComplex& operator/=(const APComplex& o);
  APComplex& operator*=(const Real& o);
  APComplex& operator/=(const Real& o);
  APComplex operator-() const;

 private:
  Real re_;
  Real im_;
  void align();
  void check() const;
};

APComplex operator+(APComplex a, const APComplex& b);
APComplex operator-(APComplex a, const APComplex& b);
APComplex operator*(APComplex a, const APComplex& b);
APComplex operator/(APComplex a, const APComplex& b);
APComplex operator*(APComplex a, const Real& b);
APComplex operator*(const Real& a, APComplex b);
APComplex operator/(APComplex a, const Real& b);

bool operator==(const APComplex& a, const APComplex& b);

APComplex conj(const APComplex& z);
/// |z|^2
Real norm(const APComplex& z);
Real abs(const APComplex& z);
/// Principal argument in (-pi, pi].
Real arg(const APComplex& z);
APComplex exp(const APComplex& z);
/// Principal logarithm; PoleError at zero.
APComplex log(const APComplex& z);
/// Principal power exp(w log z); 0^w is 0 for Re w > 0.
APComplex pow(const APComplex& z, const APComplex& w);
APComplex pow(const APComplex& z, long n);
APComplex sqrt(const APComplex& z);
/// e^{i theta}
APComplex polar(const Real& r, const Real& theta);

std::string to_string(const APComplex& z, int digits = 30);

/// Precision escalation policy for iterative solvers.
struct PrecisionPolicy {
  int start_bits = 128;
  int max_bits = 2048;
  double agreement_tol = 1e-12;

  /// Throws DomainError when the invariants 53 <= start <= max, tol > 0 fail.
  void validate() const;
  /// start = max(128, 4n), max = 16 start, tol = 1e-12.
  static PrecisionPolicy for_degree(int n);
};

}  // namespace szego
