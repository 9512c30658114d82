#include "szego/real.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

namespace szego {

namespace {

thread_local int t_working_bits = 128;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

int clamp_bits(int bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 24) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  return bits;
}

Real unary(const Real& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real r = Real::zero(x.bits());
  fn(r.raw(), x.raw(), kRnd);
  return r;
}

}  // namespace

int working_bits() noexcept { return t_working_bits; }

PrecisionScope::PrecisionScope(int bits) : saved_(t_working_bits) {
  t_working_bits = clamp_bits(bits);
}

PrecisionScope::~PrecisionScope() { t_working_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_d(v_, v, kRnd);
}

Real::Real(int v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(long v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(unsigned long v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_ui(v_, v, kRnd);
}

Real::Real(double v, int bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_d(v_, v, kRnd);
}

Real Real::zero(int bits) {
  Real r(0.0, bits);
  return r;
}

Real Real::parse(std::string_view text, int bits) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw DomainError("empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Real num = parse(s.substr(0, slash), bits + 16);
    Real den = parse(s.substr(slash + 1), bits + 16);
    if (den.is_zero()) throw DomainError("zero denominator in '" + s + "'");
    Real q = num / den;
    q.set_bits(bits);
    return q;
  }
  Real r = zero(bits);
  char* end = nullptr;
  if (mpfr_strtofr(r.raw(), s.c_str(), &end, 10, kRnd) , end == nullptr || *end != '\0') {
    throw DomainError("malformed number '" + s + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  std::memcpy(v_, other.v_, sizeof(mpfr_t));
  other.v_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (v_->_mpfr_d == nullptr) {
      mpfr_init2(v_, mpfr_get_prec(other.v_));
    } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
    std::memcpy(v_, other.v_, sizeof(mpfr_t));
    other.v_->_mpfr_d = nullptr;
  }
  return *this;
}

Real::~Real() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::set_bits(int bits) { mpfr_prec_round(v_, clamp_bits(bits), kRnd); }

Real Real::with_bits(int bits) const {
  Real r(*this);
  r.set_bits(bits);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) {
    Real one(1.0, 53);
    std::string s = one.to_string(digits);
    s[0] = '0';
    return s;
  }
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

long Real::exponent2() const noexcept {
  if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? -(1L << 40) : (1L << 40);
  return mpfr_get_exp(v_);
}

void Real::widen_to(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), kRnd);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, kRnd);
  return r;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real asinh(const Real& x) { return unary(x, mpfr_asinh); }
Real floor(const Real& x) {
  Real r = Real::zero(x.bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::zero(std::max(y.bits(), x.bits()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::zero(std::max(y.bits(), x.bits()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::zero(std::max(y.bits(), x.bits()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real lgamma_abs(const Real& x) {
  if (x <= Real(0) && x.is_integer()) throw PoleError("lgamma at nonpositive integer");
  Real r = Real::zero(x.bits());
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, x.raw(), kRnd);
  return r;
}

Real log_factorial(long k, int bits) {
  if (k < 0) throw DomainError("negative factorial argument");
  Real x(static_cast<double>(k + 1), bits);
  Real r = Real::zero(bits);
  mpfr_lngamma(r.raw(), x.raw(), kRnd);
  return r;
}

Real factorial(long k, int bits) {
  if (k < 0) throw DomainError("negative factorial argument");
  Real r = Real::zero(bits);
  mpfr_fac_ui(r.raw(), static_cast<unsigned long>(k), kRnd);
  return r;
}

Real zeta(unsigned long s, int bits) {
  Real r = Real::zero(bits);
  mpfr_zeta_ui(r.raw(), s, kRnd);
  return r;
}

Real pi(int bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}

Real ln2(int bits) {
  Real r = Real::zero(bits);
  mpfr_const_log2(r.raw(), kRnd);
  return r;
}

Real pow2(long e, int bits) {
  Real r(1.0, bits);
  mpfr_mul_2si(r.raw(), r.raw(), e, kRnd);
  return r;
}

}  // namespace szego
