#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <vector>

#include "szego/complex.hpp"
#include "szego/series.hpp"

namespace szego {

/// Roots of one polynomial, sorted by (angle in [0, 2pi), modulus).
struct ZeroSet {
  std::optional<SeriesSpec> spec;
  int n = 0;
  std::vector<APComplex> zeros;
  /// Relative backward error |p(z)| / sum |a_k| |z|^k per root.
  std::vector<Real> residuals;
  /// Roots at the origin stripped before iterating (parity gaps).
  int origin_multiplicity = 0;
  int bits_used = 0;
  int sweeps = 0;
};

struct EKBounds {
  Real alpha;
  Real beta;
};

/// Aberth-Ehrlich simultaneous iteration, rerun at doubled precision until two
/// successive levels agree within policy.agreement_tol. Coefficients are in
/// ascending order; each level rounds them to its own precision.
ZeroSet find_zeros(const std::vector<APComplex>& coeffs, const PrecisionPolicy& policy);

/// Zeros of a normalized section, tagged with its family and degree.
ZeroSet find_section_zeros(const SectionPoly& section, const PrecisionPolicy& policy);

/// Eigenvalues of the companion matrix in long double (low-degree cross-check).
std::vector<std::complex<long double>> companion_roots(const std::vector<APComplex>& coeffs);

/// Min and max of a_k/a_{k+1}; DomainError unless every coefficient is real and positive.
EKBounds ek_bounds(const std::vector<APComplex>& coeffs);
/// beta a_1 - a_0 > 0, which makes the outer bound strict.
bool ek_strict(const std::vector<APComplex>& coeffs);

/// Rows "family,n,k,re,im,residual" with 30 significant digits.
void write_zeros_csv(std::ostream& out, const ZeroSet& zs, bool header);

}  // namespace szego
