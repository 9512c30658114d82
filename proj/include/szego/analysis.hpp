#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szego/complex.hpp"
#include "szego/curves.hpp"
#include "szego/roots.hpp"
#include "szego/series.hpp"

namespace szego {

/// Worker count: SZEGO_LAB_THREADS if set, else hardware concurrency.
unsigned thread_cap();
/// Runs fn(i) for i in [0, count) on up to thread_cap() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Default solver precision: 4n-bit start for entire families, whose scaled
/// coefficients span about e^n, and 128 bits for the rational families.
PrecisionPolicy default_policy(const SeriesSpec& spec, int n);

/// g_n(z) = 1 - e^{-nz} s_n(exp; nz).
APComplex g_n_exact(int n, const APComplex& z, int bits = 128);
/// (z e^{1-z})^n / sqrt(2 pi n) * z/(1-z); DomainError for Re z >= 1.
APComplex g_n_szego(int n, const APComplex& z, int bits = 128);

struct NrReport {
  std::vector<int> n;
  /// sup over the grid of |s_n(exp; n + w sqrt n)/e^{n + w sqrt n} - erfc(w/sqrt 2)/2|.
  std::vector<double> sup;
  bool decreasing = false;
  std::size_t grid_points = 0;
};
/// Grid: w = x + iy with x, y multiples of `step`, |w| <= radius, y >= 0.
NrReport nr_limit_check(const std::vector<int>& n_list, double step = 0.25, double radius = 2.0,
                        int bits = 128);

struct ErfcZero {
  APComplex t;
  /// w = sqrt(2) t = u + iv; the parabola is x = (y/v)^2 + u (y/v).
  double u = 0.0;
  double v = 0.0;
};
/// k-th zero of erfc in the upper half-plane, ordered by modulus.
ErfcZero erfc_parabola(int k, int bits = 128);

/// (xi - Re mu + 1/2, xi - Re nu + 1/2)
std::pair<double, double> rate_constants(const PhiSpec& phi);

enum class Side { Left, Right, Circle };
std::string side_name(Side s);

struct RateSample {
  int n = 0;
  double statistic = 0.0;
  std::size_t kept = 0;
};

struct RateFit {
  SeriesSpec family;
  Side side = Side::Left;
  std::vector<RateSample> samples;
  double fitted_c = 0.0;
  double fitted_d = 0.0;
  double expected_c = 0.0;
  /// |fitted - expected| / |expected|, or the absolute error when expected is 0.
  double rel_error = 0.0;
};

struct RateOptions {
  double corner_radius = 0.25;
  double axis_margin = 0.1;
  /// Optional override of the solver precision per degree.
  std::function<PrecisionPolicy(int)> policy;
};

/// Normalized section zeros for each degree, computed in parallel. Exponential
/// integrals share one moment table; Bessel returns the zeros of P_n in y.
std::vector<ZeroSet> section_zero_sets(const SeriesSpec& spec, const std::vector<int>& n_list,
                                       const RateOptions& options = {});

/// Median modulus statistic per degree, fitted to c log N/N + d/N.
/// ExpIntegral and Bessel use the D_{a,b} frame (Bessel zeros mapped by w = -+sqrt(y));
/// RationalSquare and LFT use the circle statistic |z| - 1.
RateFit fit_rate(const SeriesSpec& spec, const std::vector<int>& n_list, Side side,
                 const RateOptions& options = {});
/// The same fit over zero sets from section_zero_sets (shared between sides).
RateFit fit_rate_from_zeros(const SeriesSpec& spec, const std::vector<ZeroSet>& zero_sets, Side side,
                            const RateOptions& options = {});

struct BesselRootCheck {
  int n = 0;
  double max_root = 0.0;
  double bound = 0.0;
  bool inside = false;
};
/// Roots of P_n against the printed radius (2n+4)/n^2 |Gamma(n/2+alpha+2)/Gamma(n/2+alpha+1)|.
BesselRootCheck bessel_root_check(std::complex<double> alpha, int n);
/// Same check over zeros already computed by section_zero_sets.
BesselRootCheck bessel_root_check(std::complex<double> alpha, const ZeroSet& zeros);

/// Least squares y = c x1 + d x2; returns (c, d).
std::pair<double, double> least_squares2(const std::vector<double>& x1, const std::vector<double>& x2,
                                         const std::vector<double>& y);
/// Slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct BuckholtzResult {
  int n = 0;
  bool all_outside = false;
  double maxdist = 0.0;
  double bound = 0.0;
};
/// Pass `szego_curve` to reuse one sampled curve across calls.
BuckholtzResult buckholtz_check(int n, const Polyline* szego_curve = nullptr);

struct CvwResult {
  std::vector<int> n;
  std::vector<double> maxdist_d;
  std::vector<double> maxdist_dn;
  double slope_vs_D = 0.0;
  double slope_vs_Dn = 0.0;
  bool dn_closer_everywhere = false;
};
CvwResult cvw_order_check(const std::vector<int>& n_list, double exclusion_delta);

struct AnnulusResult {
  int n = 0;
  bool all_in_annulus = false;
  double min_mod = 0.0;
  double max_mod = 0.0;
  double inner = 0.0;
};
/// Zeros of p_n(e z/n) against 1 - 3/sqrt(n) < |z| < 1; needs n > 97.
AnnulusResult dilcher_rubel_check(int n);

struct LftResult {
  int n = 0;
  /// max |z^{n+1} a_1/(A a_0 + B z) - 1| over filtered zeros.
  double relation_max = 0.0;
  /// max ||z| - 1| over filtered zeros.
  double modulus_dev = 0.0;
  bool all_inside = false;
  std::size_t kept = 0;
};
LftResult lft_relation_check(int n, double a0, double A, double B, double delta = 0.3);

enum class WatsonMode { Origin, Endpoint };
/// Relative error |lead - integral| / |integral| of the leading Watson term, per lambda.
/// Origin: int_0^T t^s h(t) e^{-lt} dt; endpoint: int_0^T (T-t)^s h(T-t) e^{lt} dt.
std::vector<double> watson_check(std::complex<double> sigma, const std::vector<std::complex<double>>& h,
                                 double T, const std::vector<double>& lam_list, WatsonMode mode);
/// The same errors as multiprecision values (for errors below double range checks).
std::vector<Real> watson_check_exact(std::complex<double> sigma,
                                     const std::vector<std::complex<double>>& h, double T,
                                     const std::vector<double>& lam_list, WatsonMode mode);

struct CountReport {
  int n = 0;
  std::string region;
  std::size_t count = 0;
  double fraction = 0.0;
};
/// Closed sector theta1 <= arg z <= theta2 (angles taken mod 2pi); origin roots count.
CountReport count_sector(const ZeroSet& zeros, double theta1, double theta2);
/// Closed disk |z| <= R.
CountReport count_disk(const ZeroSet& zeros, double R);

/// Largest |z| among zeros within `margin` of the imaginary axis (0 if none).
double imaginary_axis_reach(const ZeroSet& zeros, double margin);

}  // namespace szego
