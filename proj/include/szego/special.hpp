#pragma once

#include "szego/complex.hpp"

namespace szego {

/// Principal branch of log Gamma(z), computed at z's precision. Continuous
/// off the nonpositive real axis; PoleError at 0, -1, -2, ...
APComplex log_gamma(const APComplex& z);

/// Gamma(z) = exp(log_gamma(z)).
APComplex gamma(const APComplex& z);

/// Complementary error function on the whole plane.
/// OverflowError when |z|^2 is too large for the exponent range.
APComplex erfc(const APComplex& z);

}  // namespace szego
