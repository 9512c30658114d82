#pragma once

#include <functional>
#include <vector>

#include "szego/complex.hpp"

namespace szego {

/// One quadrature node. The endpoint distances are computed directly from the
/// substitution so integrands singular at an endpoint keep full accuracy there.
struct TsNode {
  Real x;
  Real from_lo;  // x - lo
  Real from_hi;  // hi - x
};

using TsIntegrand = std::function<APComplex(const TsNode&)>;
/// Vector integrand: fill `out` (already sized) with the component values.
using TsVectorIntegrand = std::function<void(const TsNode&, std::vector<APComplex>& out)>;

struct TsVectorResult {
  std::vector<APComplex> values;
  /// Integral of |f_j|, used as the scale when a component nearly cancels.
  std::vector<Real> l1;
  int levels = 0;
};

/// Tanh-sinh quadrature over [lo, hi]. Levels are refined until the relative
/// change drops below 2^(-bits/2); ConvergenceError if the level cap is hit first.
APComplex integrate_ts(const TsIntegrand& f, const Real& lo, const Real& hi, int bits);

/// Same rule for several integrands sharing the nodes. A component converges when
/// its change is below 2^(-bits/2) times max(|value|, l1).
TsVectorResult integrate_ts_vector(const TsVectorIntegrand& f, std::size_t count, const Real& lo,
                                   const Real& hi, int bits);

}  // namespace szego
