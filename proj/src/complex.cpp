#include "szego/complex.hpp"

#include <algorithm>

namespace szego {

APComplex::APComplex() : re_(), im_() {}

APComplex::APComplex(const Real& re) : re_(re), im_(Real::zero(re.bits())) { check(); }

APComplex::APComplex(const Real& re, const Real& im) : re_(re), im_(im) {
  align();
  check();
}

APComplex::APComplex(double re, double im, int bits) : re_(re, bits), im_(im, bits) { check(); }

APComplex::APComplex(std::complex<double> z, int bits)
    : re_(z.real(), bits), im_(z.imag(), bits) {
  check();
}

APComplex APComplex::parse(const std::string& re, const std::string& im, int bits) {
  return APComplex(Real::parse(re, bits), Real::parse(im, bits));
}

void APComplex::align() {
  const int b = std::max(re_.bits(), im_.bits());
  if (re_.bits() != b) re_.set_bits(b);
  if (im_.bits() != b) im_.set_bits(b);
}

void APComplex::check() const {
  if (!re_.is_finite() || !im_.is_finite()) {
    throw OverflowError("complex value left the representable range");
  }
}

void APComplex::set_bits(int bits) {
  re_.set_bits(bits);
  im_.set_bits(bits);
}

APComplex APComplex::with_bits(int bits) const {
  APComplex r(*this);
  r.set_bits(bits);
  return r;
}

APComplex& APComplex::operator+=(const APComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  align();
  check();
  return *this;
}

APComplex& APComplex::operator-=(const APComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  align();
  check();
  return *this;
}

APComplex& APComplex::operator*=(const APComplex& o) {
  if (o.im_.is_zero()) return *this *= o.re_;
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  align();
  check();
  return *this;
}

APComplex& APComplex::operator/=(const APComplex& o) {
  if (o.is_zero()) throw PoleError("complex division by zero");
  if (o.im_.is_zero()) return *this /= o.re_;
  const Real den = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  align();
  check();
  return *this;
}

APComplex& APComplex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  align();
  check();
  return *this;
}

APComplex& APComplex::operator/=(const Real& o) {
  if (o.is_zero()) throw PoleError("complex division by zero");
  re_ /= o;
  im_ /= o;
  align();
  check();
  return *this;
}

APComplex APComplex::operator-() const { return APComplex(-re_, -im_); }

APComplex operator+(APComplex a, const APComplex& b) { return a += b; }
APComplex operator-(APComplex a, const APComplex& b) { return a -= b; }
APComplex operator*(APComplex a, const APComplex& b) { return a *= b; }
APComplex operator/(APComplex a, const APComplex& b) { return a /= b; }
APComplex operator*(APComplex a, const Real& b) { return a *= b; }
APComplex operator*(const Real& a, APComplex b) { return b *= a; }
APComplex operator/(APComplex a, const Real& b) { return a /= b; }

bool operator==(const APComplex& a, const APComplex& b) {
  return a.re() == b.re() && a.im() == b.im();
}

APComplex conj(const APComplex& z) { return APComplex(z.re(), -z.im()); }

Real norm(const APComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const APComplex& z) { return hypot(z.re(), z.im()); }

Real arg(const APComplex& z) { return atan2(z.im(), z.re()); }

APComplex exp(const APComplex& z) {
  const Real m = exp(z.re());
  if (z.im().is_zero()) return APComplex(m);
  return APComplex(m * cos(z.im()), m * sin(z.im()));
}

APComplex log(const APComplex& z) {
  if (z.is_zero()) throw PoleError("log of zero");
  return APComplex(log(abs(z)), arg(z));
}

APComplex pow(const APComplex& z, const APComplex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return APComplex(Real::zero(std::max(z.bits(), w.bits())));
    throw PoleError("zero raised to a power with nonpositive real part");
  }
  return exp(w * log(z));
}

APComplex pow(const APComplex& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw PoleError("zero raised to a negative power");
    return APComplex(Real(1.0, z.bits())) / pow(z, -n);
  }
  APComplex result(Real(1.0, z.bits()));
  APComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

APComplex sqrt(const APComplex& z) {
  if (z.is_zero()) return z;
  // sqrt(z) = s + i t with s = sqrt((|z| + x)/2) >= 0.
  const Real r = abs(z);
  if (z.re().sign() >= 0) {
    Real s = sqrt((r + z.re()) / Real(2.0, z.bits()));
    return APComplex(s, z.im() / (s + s));
  }
  Real t = sqrt((r - z.re()) / Real(2.0, z.bits()));
  if (z.im().sign() < 0) t = -t;
  return APComplex(z.im() / (t + t), t);
}

APComplex polar(const Real& r, const Real& theta) {
  return APComplex(r * cos(theta), r * sin(theta));
}

std::string to_string(const APComplex& z, int digits) {
  return z.re().to_string(digits) + "," + z.im().to_string(digits);
}

void PrecisionPolicy::validate() const {
  if (start_bits < 53 || start_bits > max_bits) {
    throw DomainError("precision policy needs 53 <= start_bits <= max_bits");
  }
  if (!(agreement_tol > 0.0)) throw DomainError("agreement tolerance must be positive");
}

PrecisionPolicy PrecisionPolicy::for_degree(int n) {
  PrecisionPolicy p;
  p.start_bits = std::max(128, 4 * n);
  p.max_bits = 16 * p.start_bits;
  p.agreement_tol = 1e-12;
  return p;
}

}  // namespace szego
