#include "szego/quadrature.hpp"

#include <cmath>

namespace szego {

namespace {

constexpr int kMinLevel = 3;
constexpr int kMaxLevel = 14;

struct Weighted {
  TsNode node;
  Real weight;
};

// Node and weight for x = c + d tanh(pi/2 sinh t).
Weighted make_node(const Real& t, const Real& lo, const Real& hi, const Real& half_width,
                   const Real& half_pi, int wp) {
  const Real u = half_pi * sinh(t);
  const bool right = t.sign() >= 0;
  // e = exp(-2|u|) keeps both complements 1/(1+e) and e/(1+e) exact in relative terms.
  const Real e = exp(Real(right ? -2.0 : 2.0, wp) * u);
  const Real one(1.0, wp);
  const Real near = Real(2.0, wp) * half_width * e / (one + e);
  const Real far = Real(2.0, wp) * half_width / (one + e);
  Weighted w{TsNode{Real::zero(wp), Real::zero(wp), Real::zero(wp)}, Real::zero(wp)};
  if (right) {
    w.node.from_hi = near;
    w.node.from_lo = far;
    w.node.x = hi - near;
  } else {
    w.node.from_lo = near;
    w.node.from_hi = far;
    w.node.x = lo + near;
  }
  w.weight = half_width * half_pi * cosh(t) * Real(4.0, wp) * e / ((one + e) * (one + e));
  return w;
}

}  // namespace

TsVectorResult integrate_ts_vector(const TsVectorIntegrand& f, std::size_t count, const Real& lo,
                                   const Real& hi, int bits) {
  if (!(lo < hi)) throw DomainError("integrate_ts needs lo < hi");
  if (!lo.is_finite() || !hi.is_finite()) throw DomainError("integrate_ts needs finite limits");
  const int wp = bits + 32;
  const Real lo_w = lo.with_bits(wp);
  const Real hi_w = hi.with_bits(wp);
  const Real half_width = (hi_w - lo_w) / Real(2.0, wp);
  const Real half_pi = pi(wp) / Real(2.0, wp);
  const double t_max = std::asinh(8.0 * bits * std::log(2.0) / M_PI);
  const Real tol = pow2(-(bits / 2), wp);

  std::vector<APComplex> raw(count, APComplex(Real::zero(wp)));
  std::vector<Real> raw_l1(count, Real::zero(wp));
  std::vector<APComplex> vals(count, APComplex(Real::zero(wp)));
  std::vector<APComplex> prev;

  auto add_node = [&](const Real& t) {
    const Weighted w = make_node(t, lo_w, hi_w, half_width, half_pi, wp);
    if (w.node.from_lo.is_zero() || w.node.from_hi.is_zero()) return;
    f(w.node, vals);
    for (std::size_t j = 0; j < count; ++j) {
      raw[j] += vals[j] * w.weight;
      raw_l1[j] += abs(vals[j]) * w.weight;
    }
  };

  TsVectorResult result;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const Real h = pow2(-level, wp);
    const long steps = static_cast<long>(std::floor(t_max * std::ldexp(1.0, level)));
    const long stride = level == 0 ? 1 : 2;
    const long first = level == 0 ? 0 : 1;
    for (long k = first; k <= steps; k += stride) {
      const Real t = h * Real(static_cast<double>(k), wp);
      add_node(t);
      if (k != 0) add_node(-t);
    }
    std::vector<APComplex> cur(count, APComplex(Real::zero(wp)));
    for (std::size_t j = 0; j < count; ++j) cur[j] = raw[j] * h;
    if (level >= kMinLevel) {
      bool done = true;
      for (std::size_t j = 0; j < count && done; ++j) {
        const Real scale = max(abs(cur[j]), raw_l1[j] * h);
        if (abs(cur[j] - prev[j]) > tol * scale) done = false;
      }
      if (done) {
        result.values = std::move(cur);
        result.l1.reserve(count);
        for (std::size_t j = 0; j < count; ++j) {
          result.values[j].set_bits(bits);
          result.l1.push_back((raw_l1[j] * h).with_bits(bits));
        }
        result.levels = level;
        return result;
      }
    }
    prev = std::move(cur);
  }
  throw ConvergenceError("tanh-sinh quadrature hit the level cap");
}

APComplex integrate_ts(const TsIntegrand& f, const Real& lo, const Real& hi, int bits) {
  TsVectorResult r = integrate_ts_vector(
      [&f](const TsNode& node, std::vector<APComplex>& out) { out[0] = f(node); }, 1, lo, hi,
      bits);
  return r.values[0];
}

}  // namespace szego
