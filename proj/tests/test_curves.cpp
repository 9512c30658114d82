#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <sstream>

#include "szego/curves.hpp"

using namespace szego;
using C = std::complex<double>;

namespace {

// |z e^{1-z}| at a point.
double szego_modulus(C z) { return std::abs(z * std::exp(1.0 - z)); }

}  // namespace

TEST_CASE("Szego curve radii") {
  const CurveSpec d = curve::ExpSzego{};
  CHECK(std::abs(radial_solve(d, 0.0).r.to_double() - 1.0) < 1e-30);
  CHECK(std::abs(radial_solve(d, M_PI / 2).r.to_double() - std::exp(-1.0)) < 1e-16);
  const Real r = radial_solve(d, M_PI, 128).r;
  const Real want = Real::parse("0.2784645427610737951093587390", 128);
  CHECK(abs(r - want).to_double() < 1e-27);
}

TEST_CASE("curve parameters are validated") {
  CHECK_THROWS_AS(validate(CurveSpec(curve::Dab{0.0, 1.0})), DomainError);
  CHECK_THROWS_AS(validate(CurveSpec(curve::MLCurve{-1.0})), DomainError);
  CHECK_THROWS_AS(validate(CurveSpec(curve::IntermediateExp{0})), DomainError);
}

TEST_CASE("every sampled point satisfies its defining equation") {
  const CurveSpec specs[] = {curve::ExpSzego{}, curve::Dab{2.0, 1.5}, curve::Dab{1.0, 1.0},
                             curve::MLCurve{2.0}, curve::MLCurve{0.5}, curve::IntermediateExp{17},
                             curve::TrigBessel{}, curve::UnitCircle{}};
  for (const auto& spec : specs) {
    const Polyline p = sample_curve(spec, 512);
    INFO(curve_name(spec));
    REQUIRE(!p.points.empty());
    CHECK(p.points.size() == p.theta.size());
    CHECK(p.points.size() == p.residuals.size());
    for (std::size_t i = 0; i < p.residuals.size(); ++i) {
      CHECK(p.residuals[i].to_double() < 1e-20);
      if (i > 0) CHECK(p.theta[i] > p.theta[i - 1]);
      CHECK(p.theta[i] >= 0.0);
      CHECK(p.theta[i] < 2 * M_PI);
    }
  }
}

TEST_CASE("sampled Szego points lie on the curve in double arithmetic") {
  const Polyline p = sample_curve(curve::ExpSzego{}, 256);
  for (const auto& z : p.points) CHECK(std::abs(szego_modulus(z.to_cdouble()) - 1.0) < 1e-13);
}

TEST_CASE("closed Szego loop") {
  const Polyline p = sample_curve(curve::ExpSzego{}, 2048);
  CHECK(p.closed);
  CHECK(std::abs(p.points.front().to_cdouble() - p.points.back().to_cdouble()) < 1e-3);
}

TEST_CASE("Dab arcs and the imaginary segment meet at one corner") {
  for (auto [a, b] : {std::pair{2.0, 1.5}, std::pair{1.0, 1.0}, std::pair{0.5, 3.0}}) {
    const double c = std::max(a, b);
    const double corner = 1.0 / (std::exp(1.0) * c);
    const Polyline p = sample_curve(curve::Dab{a, b}, 1024);
    REQUIRE(p.pieces.size() == 1);
    const auto& seg = p.pieces[0];
    CHECK(std::abs(std::abs(seg.front().to_cdouble()) - corner) < 1e-15);
    CHECK(std::abs(std::abs(seg.back().to_cdouble()) - corner) < 1e-15);
    CHECK(std::abs(seg.front().re().to_double()) < 1e-30);
    // Re z = 0 in either arc equation gives |c z| e = 1
    const double up = radial_solve(curve::Dab{a, b}, M_PI / 2).r.to_double();
    CHECK(std::abs(up - corner) < 1e-15);
  }
  const Polyline p = sample_curve(curve::Dab{2.0, 1.5}, 256);
  CHECK(std::abs(std::abs(p.pieces[0].front().to_cdouble()) - 1.0 / (2.0 * std::exp(1.0))) < 1e-15);
}

TEST_CASE("Mittag-Leffler radii stay between the circle and the unit circle") {
  for (double lambda : {0.5, 2.0, 3.0}) {
    const double half = M_PI / (2 * lambda);
    for (double t = -0.999 * std::min(half, M_PI); t <= 0.999 * std::min(half, M_PI); t += 0.05) {
      const double r = radial_solve(curve::MLCurve{lambda}, t).r.to_double();
      INFO("lambda " << lambda << " theta " << t);
      CHECK(r >= std::exp(-1.0 / lambda) - 1e-15);
      CHECK(r <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("trigonometric curve is the Szego curve rotated by a quarter turn") {
  for (double t = 0.05; t < M_PI - 0.05; t += 0.1) {
    const double trig = radial_solve(curve::TrigBessel{}, t).r.to_double();
    // upper half-plane: z = i u with u on the Szego curve, arg u = t - pi/2
    double base = t - M_PI / 2;
    if (base < 0) base += 2 * M_PI;
    const double szego = radial_solve(curve::ExpSzego{}, base).r.to_double();
    CHECK(std::abs(trig - szego) < 1e-15);
    const double lower = radial_solve(curve::TrigBessel{}, -t + 2 * M_PI).r.to_double();
    CHECK(std::abs(lower - trig) < 1e-15);
  }
}

TEST_CASE("intermediate curve respects its argument cutoff") {
  const int n = 17;
  const double cutoff = std::acos((n - 2.0) / n);
  const Polyline p = sample_curve(curve::IntermediateExp{n}, 1024);
  CHECK_FALSE(p.closed);
  for (const auto& z : p.points) {
    CHECK(std::abs(std::arg(z.to_cdouble())) >= cutoff - 1e-12);
    CHECK(std::abs(z.to_cdouble()) <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(radial_solve(curve::IntermediateExp{n}, cutoff / 2), DomainError);
}

TEST_CASE("distance to a polyline") {
  const Polyline circle = sample_curve(curve::UnitCircle{}, 512);
  CHECK(std::abs(dist_to_polyline(C(0, 0), circle) - 1.0) < 1e-12);
  CHECK(std::abs(dist_to_polyline(C(2, 0), circle) - 1.0) < 1e-12);
  const Polyline d = sample_curve(curve::ExpSzego{}, 512);
  for (std::size_t i = 0; i < d.points.size(); i += 37) {
    CHECK(dist_to_polyline(d.points[i].to_cdouble(), d) < 1e-15);
  }
}

TEST_CASE("maximum distance with exclusions") {
  ZeroSet on_curve;
  const Polyline circle = sample_curve(curve::UnitCircle{}, 256);
  for (double t : {0.3, 1.7, 4.0}) on_curve.zeros.emplace_back(std::polar(1.0, t), 128);
  CHECK(maxdist(on_curve, circle, {}).value < 1e-12);

  on_curve.zeros.emplace_back(C(0.9, 0.0), 128);
  CHECK(std::abs(maxdist(on_curve, circle, {}).value - 0.1) < 1e-12);
  const MaxDist cut = maxdist(on_curve, circle, {Exclusion::disk(C(1, 0), 0.2)});
  CHECK(cut.kept == 3);
  CHECK(cut.value < 1e-12);
  CHECK(Exclusion::negative_real(0.3).contains(C(-2.0, 0.2)));
  CHECK_FALSE(Exclusion::negative_real(0.3).contains(C(0.5, 0.0)));
  CHECK(Exclusion::imaginary_axis(0.1).contains(C(0.05, 3.0)));
  ZeroSet empty;
  CHECK(maxdist(empty, circle, {}).empty);
}

TEST_CASE("intermediate curve is much closer than the Szego curve at n = 17") {
  const int n = 17;
  const ZeroSet zs = find_section_zeros(section(SeriesSpec::preset("exp"), n, 128), PrecisionPolicy::for_degree(n));
  const std::vector<Exclusion> corner{Exclusion::disk(C(1, 0), 0.5)};
  const double to_dn = maxdist(zs, sample_curve(curve::IntermediateExp{n}), corner).value;
  const double to_d = maxdist(zs, sample_curve(curve::ExpSzego{}), corner).value;
  INFO("D_n " << to_dn << " D " << to_d);
  CHECK(to_dn < 1e-2);
  CHECK(to_d > to_dn);
}

TEST_CASE("polyline CSV") {
  std::ostringstream out;
  write_polyline_csv(out, sample_curve(curve::Dab{2.0, 1.5}, 64));
  const std::string text = out.str();
  CHECK(text.rfind("theta,re,im,residual\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') > 64);
}
