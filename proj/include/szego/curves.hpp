#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "szego/complex.hpp"
#include "szego/roots.hpp"

namespace szego {

namespace curve {
/// |z e^{1-z}| = 1, |z| <= 1.
struct ExpSzego {};
/// Left arc |c z e^{1+az}| = 1 (Re z <= 0), right arc |c z e^{1-bz}| = 1 (Re z >= 0),
/// |z| <= 1/c with c = max(a, b), plus the imaginary segment |z| <= 1/(ec).
struct Dab {
  double a = 1.0;
  double b = 1.0;
};
/// r^lambda cos(lambda theta) - 1 - lambda log r = 0 for |theta| <= pi/(2 lambda),
/// circle r = e^{-1/lambda} elsewhere.
struct MLCurve {
  double lambda = 1.0;
};
/// |z e^{1-z}|^n = n!/(n/e)^n |(1-z)/z| with |z| <= 1 and |arg z| >= acos((n-2)/n).
struct IntermediateExp {
  int n = 2;
};
/// |z e^{1+iz}| = 1 (Im z >= 0), |z e^{1-iz}| = 1 (Im z <= 0), plus [-1/e, 1/e].
struct TrigBessel {};
struct UnitCircle {};
}  // namespace curve

using CurveSpec = std::variant<curve::ExpSzego, curve::Dab, curve::MLCurve, curve::IntermediateExp,
                               curve::TrigBessel, curve::UnitCircle>;

std::string curve_name(const CurveSpec& spec);
/// Checks positivity of the parameters; DomainError otherwise.
void validate(const CurveSpec& spec);

struct Polyline {
  CurveSpec spec;
  /// Radial part: angles in [0, 2pi), strictly increasing.
  std::vector<double> theta;
  std::vector<APComplex> points;
  /// |modulus - 1| of the defining equation at each point.
  std::vector<Real> residuals;
  /// Straight pieces (imaginary or real segments), each a list of vertices.
  std::vector<std::vector<APComplex>> pieces;
  /// True when the radial part closes on itself.
  bool closed = true;
};

/// Radius on the curve at angle theta (bisection then Newton), and its residual.
/// DomainError for angles outside the curve's region, ConvergenceError on a bad bracket.
struct RadialSolution {
  Real r;
  Real residual;
};
RadialSolution radial_solve(const CurveSpec& spec, double theta, int bits = 128);

/// Samples m base angles, refined 16x within 0.05 rad of corner angles.
Polyline sample_curve(const CurveSpec& spec, int m = 2048, int bits = 128);

/// Distance to the nearest segment, refined by one radial solve at the nearest angle.
double dist_to_polyline(std::complex<double> z, const Polyline& curve);

/// Region removed before taking a maximum distance.
struct Exclusion {
  enum class Kind { Disk, NegativeRealAxis, ImaginaryAxis };
  Kind kind = Kind::Disk;
  std::complex<double> center{0.0, 0.0};
  /// Disk radius, or half-width of the strip around the axis.
  double radius = 0.0;

  bool contains(std::complex<double> z) const;
  static Exclusion disk(std::complex<double> c, double r) { return {Kind::Disk, c, r}; }
  static Exclusion negative_real(double delta) { return {Kind::NegativeRealAxis, {}, delta}; }
  static Exclusion imaginary_axis(double delta) { return {Kind::ImaginaryAxis, {}, delta}; }
};

struct MaxDist {
  double value = 0.0;
  bool empty = true;
  std::size_t kept = 0;
};

MaxDist maxdist(const ZeroSet& zeros, const Polyline& curve, const std::vector<Exclusion>& exclusions);

/// Rows "theta,re,im,residual"; straight pieces follow the radial part.
void write_polyline_csv(std::ostream& out, const Polyline& curve);

}  // namespace szego
