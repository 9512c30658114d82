#include "szego/special.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

bool is_nonpositive_integer(const APComplex& z) {
  return z.im().is_zero() && z.re().sign() <= 0 && z.re().is_integer();
}

// B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
Real bernoulli_even(long j, int bits) {
  Real two_pi = pi(bits) * Real(2.0, bits);
  Real b = factorial(2 * j, bits) * zeta(static_cast<unsigned long>(2 * j), bits) * Real(2.0, bits) /
           pow(two_pi, 2 * j);
  return (j % 2 == 1) ? b : -b;
}

APComplex stirling(const APComplex& z, int wp) {
  const Real half(0.5, wp);
  APComplex s = (z - APComplex(half)) * log(z) - z +
                APComplex(log(pi(wp) * Real(2.0, wp)) * half);
  const APComplex inv = APComplex(Real(1.0, wp)) / z;
  const APComplex inv2 = inv * inv;
  APComplex zpow = inv;
  const Real eps = pow2(-wp, wp);
  Real prev_mag = Real(0.0, wp);
  for (long j = 1; j < 4 * wp; ++j) {
    const Real coef = bernoulli_even(j, wp) / Real(static_cast<double>((2 * j) * (2 * j - 1)), wp);
    APComplex term = zpow * coef;
    const Real mag = abs(term);
    if (j > 1 && mag > prev_mag) break;  // asymptotic series turned around
    s += term;
    if (mag <= eps * abs(s)) break;
    prev_mag = mag;
    zpow *= inv2;
  }
  return s;
}

APComplex erfc_series(const APComplex& z, int bits) {
  const double mag = std::abs(z.to_cdouble());
  const int guard = static_cast<int>(std::ceil(2.9 * mag * mag)) + 48;
  if (guard > (1 << 22)) throw OverflowError("erfc argument too large for the series");
  const int wp = bits + guard;
  const APComplex x = z.with_bits(wp);
  const APComplex x2 = x * x;
  // erf(z) = 2/sqrt(pi) sum_k (-1)^k z^{2k+1} / (k! (2k+1))
  APComplex power = x;
  APComplex sum = x;
  const Real eps = pow2(-wp, wp);
  for (long k = 1;; ++k) {
    power *= x2;
    power /= Real(-static_cast<double>(k), wp);
    APComplex term = power / Real(static_cast<double>(2 * k + 1), wp);
    sum += term;
    if (abs(term) <= eps * abs(sum) && static_cast<double>(k) > mag * mag) break;
    if (k > 100000000L) throw ConvergenceError("erfc series did not converge");
  }
  const Real scale = Real(2.0, wp) / sqrt(pi(wp));
  APComplex r = APComplex(Real(1.0, wp)) - sum * scale;
  r.set_bits(bits);
  return r;
}

// Continued fraction sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// evaluated with the modified Lentz scheme. Returns false if it stalls.
bool erfc_fraction(const APComplex& z, int bits, APComplex& out) {
  const int wp = bits + 32;
  const APComplex x = z.with_bits(wp);
  const Real tiny = pow2(-4 * wp, wp);
  const Real eps = pow2(-wp, wp);
  APComplex f = x;
  APComplex c = f;
  APComplex d(Real(0.0, wp));
  for (long j = 1; j < 20000; ++j) {
    const Real a(0.5 * static_cast<double>(j), wp);
    d = x + d * a;
    if (abs(d) < tiny) d = APComplex(tiny);
    d = APComplex(Real(1.0, wp)) / d;
    c = x + APComplex(a) / c;
    if (abs(c) < tiny) c = APComplex(tiny);
    const APComplex delta = c * d;
    f *= delta;
    if (abs(delta - APComplex(Real(1.0, wp))) < eps) {
      out = exp(-(x * x)) / (f * sqrt(pi(wp)));
      out.set_bits(bits);
      return true;
    }
  }
  return false;
}

}  // namespace

APComplex log_gamma(const APComplex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma at a nonpositive integer");
  const int bits = z.bits();
  const int wp = bits + 24;
  const double threshold = std::max(16.0, std::ceil(0.11 * wp) + 1.0);
  APComplex x = z.with_bits(wp);
  const double re = x.re().to_double();
  APComplex shift_sum(Real(0.0, wp));
  long m = 0;
  if (re < threshold) m = static_cast<long>(std::ceil(threshold - re));
  for (long k = 0; k < m; ++k) {
    shift_sum += log(x + APComplex(Real(static_cast<double>(k), wp)));
  }
  APComplex r = stirling(x + APComplex(Real(static_cast<double>(m), wp)), wp) - shift_sum;
  r.set_bits(bits);
  return r;
}

APComplex gamma(const APComplex& z) {
  const int bits = z.bits();
  APComplex r = exp(log_gamma(z.with_bits(bits + 16)));
  r.set_bits(bits);
  return r;
}

APComplex erfc(const APComplex& z) {
  const int bits = z.bits();
  if (z.is_zero()) return APComplex(Real(1.0, bits));
  const Real r2 = norm(z);
  if (r2.to_double() > 0.25 * static_cast<double>(mpfr_get_emax())) {
    throw OverflowError("erfc argument exceeds the exponent range");
  }
  if (r2 <= Real(16.0, 53)) return erfc_series(z, bits);
  if (z.re().sign() < 0) {
    APComplex two(Real(2.0, bits));
    return two - erfc(-z);
  }
  APComplex out;
  if (z.re() >= Real(1.0, 53) && erfc_fraction(z, bits, out)) return out;
  return erfc_series(z, bits);
}

}  // namespace szego
