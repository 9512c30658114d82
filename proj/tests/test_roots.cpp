#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "szego/roots.hpp"
#include "oracle_util.hpp"

using namespace szego;
using C = std::complex<double>;

namespace {

std::vector<APComplex> real_coeffs(std::initializer_list<double> v) {
  std::vector<APComplex> out;
  for (double x : v) out.emplace_back(x, 0.0, 128);
  return out;
}

const char* kCatalog[] = {"exp", "cos", "sin", "ml2", "ml_half", "confluent", "bessel0", "divergent",
                          "lft", "rational_square", "phi1", "F1", "F2", "F3"};

}  // namespace

TEST_CASE("quadratic examples") {
  const ZeroSet a = find_zeros(real_coeffs({1, 0, 1}), PrecisionPolicy{});
  REQUIRE(a.zeros.size() == 2);
  // sorted by angle: i before -i
  CHECK(abs(a.zeros[0] - APComplex(0.0, 1.0, 128)).to_double() < 1e-30);
  CHECK(abs(a.zeros[1] - APComplex(0.0, -1.0, 128)).to_double() < 1e-30);
  const ZeroSet b = find_zeros(real_coeffs({1, 1, 0.5}), PrecisionPolicy{});
  REQUIRE(b.zeros.size() == 2);
  CHECK(abs(b.zeros[0] - APComplex(-1.0, 1.0, 128)).to_double() < 1e-30);
  CHECK(abs(b.zeros[1] - APComplex(-1.0, -1.0, 128)).to_double() < 1e-30);
}

TEST_CASE("origin roots from parity gaps are counted separately") {
  const SectionPoly s = section(SeriesSpec::preset("sin"), 9, 128);
  const ZeroSet zs = find_section_zeros(s, PrecisionPolicy{});
  CHECK(zs.origin_multiplicity == 1);
  CHECK(zs.zeros.size() == 8);
  CHECK(zs.spec.has_value());
  CHECK(zs.n == 9);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(find_zeros(real_coeffs({1}), PrecisionPolicy{}), DomainError);
  CHECK_THROWS_AS(find_zeros(real_coeffs({1, 1}), PrecisionPolicy{40, 80, 1e-12}), DomainError);
}

TEST_CASE("roots are sorted by angle then modulus") {
  const ZeroSet zs = find_section_zeros(section(SeriesSpec::preset("exp"), 30, 128), PrecisionPolicy::for_degree(30));
  double prev = -1.0;
  for (const auto& z : zs.zeros) {
    double a = std::atan2(z.im().to_double(), z.re().to_double());
    if (a < 0) a += 2 * M_PI;
    CHECK(a >= prev);
    prev = a;
  }
}

TEST_CASE("residuals respect the working precision") {
  for (const char* name : {"exp", "F2", "divergent"}) {
    const int n = 40;
    const SeriesSpec spec = SeriesSpec::preset(name);
    const ZeroSet zs = find_section_zeros(section(spec, n, 256), PrecisionPolicy::for_degree(n));
    REQUIRE(zs.residuals.size() == zs.zeros.size());
    for (const auto& r : zs.residuals) {
      CHECK(r.to_double() <= std::ldexp(1.0, -zs.bits_used / 2));
    }
  }
}

TEST_CASE("Aberth roots match companion eigenvalues across the catalog") {
  for (const char* name : kCatalog) {
    const SeriesSpec spec = SeriesSpec::preset(name);
    for (int n = 1; n <= 12; ++n) {
      if (spec.is<family::Bessel>() && n % 2 != 0) continue;
      const SectionPoly s = section(spec, n, 128);
      const auto coeffs = s.normalized();
      const auto ref = companion_roots(coeffs);
      INFO(std::string(name) << " n=" << n);
      if (ref.empty()) {
        // parity gaps can leave a constant (s_1(cos) = 1) or a pure origin root (s_1(sin) = z)
        bool nothing_to_iterate = false;
        try {
          nothing_to_iterate = find_section_zeros(s, PrecisionPolicy{}).zeros.empty();
        } catch (const DomainError&) {
          nothing_to_iterate = true;
        }
        CHECK(nothing_to_iterate);
        continue;
      }
      const ZeroSet zs = find_section_zeros(s, PrecisionPolicy{});
      CHECK(zs.zeros.size() == ref.size());
      CHECK(testing::companion_match(zs.zeros, ref) < 1e-10);
    }
  }
}

TEST_CASE("a double root is matched by cluster centroid") {
  // (2z^2 - 1)^2 has double roots at +-1/sqrt(2)
  const auto coeffs = real_coeffs({1, 0, -4, 0, 4});
  const ZeroSet zs = find_zeros(coeffs, PrecisionPolicy{});
  REQUIRE(zs.zeros.size() == 4);
  for (const auto& z : zs.zeros) {
    CHECK(std::abs(std::abs(z.re().to_double()) - std::sqrt(0.5)) < 1e-15);
  }
  CHECK(testing::companion_match(zs.zeros, companion_roots(coeffs)) < 1e-10);
}

TEST_CASE("polynomial reconstruction from roots") {
  for (const char* name : {"exp", "phi1", "F2", "lft", "rational_square"}) {
    const int n = 50;
    const SectionPoly s = section(SeriesSpec::preset(name), n, 256);
    const auto coeffs = s.normalized();
    const ZeroSet zs = find_section_zeros(s, PrecisionPolicy::for_degree(n));
    const int bits = zs.bits_used;
    // leading * prod (z - r_i), expanded in ascending order
    std::vector<APComplex> poly{coeffs.back().with_bits(bits)};
    for (const auto& r : zs.zeros) {
      std::vector<APComplex> next(poly.size() + 1, APComplex(Real::zero(bits)));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= poly[k] * r.with_bits(bits);
      }
      poly = std::move(next);
    }
    REQUIRE(poly.size() == coeffs.size());
    Real scale = Real::zero(bits);
    for (const auto& c : coeffs) scale = max(scale, abs(c.with_bits(bits)));
    double worst = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      worst = std::max(worst, (abs(poly[k] - coeffs[k].with_bits(bits)) / scale).to_double());
    }
    INFO(name << " bits " << bits << " worst " << worst);
    CHECK(worst < std::ldexp(1.0, -bits / 4));
  }
}

TEST_CASE("Enestrom-Kakeya bounds") {
  const EKBounds b = ek_bounds(real_coeffs({1, 1, 0.5, 1.0 / 6.0}));
  CHECK(std::abs(b.alpha.to_double() - 1.0) < 1e-30);
  CHECK(std::abs(b.beta.to_double() - 3.0) < 1e-30);
  CHECK_THROWS_AS(ek_bounds(real_coeffs({1, -1})), DomainError);
  CHECK(ek_strict(coefficients(SeriesSpec::preset("exp"), 5, 128)));
  CHECK_FALSE(ek_strict(real_coeffs({1, 1})));
  const auto p40 = bessel_even_poly(C(0.0, 0.0), 40, 128).coeffs;
  CHECK(ek_strict(p40));
  const ZeroSet zs = find_zeros(p40, PrecisionPolicy{});
  for (const auto& z : zs.zeros) CHECK(abs(z).to_double() < 1.1025);
}

TEST_CASE("every root of a positive polynomial lies in the ratio annulus") {
  for (const char* name : {"exp", "divergent", "ml2", "confluent", "phi1"}) {
    const SeriesSpec spec = SeriesSpec::preset(name);
    for (int n : {7, 20, 33}) {
      auto coeffs = coefficients(spec, n, 256);
      std::vector<APComplex> positive;
      for (const auto& c : coeffs) {
        if (!c.is_zero()) positive.push_back(c);
      }
      if (positive.size() != coeffs.size()) continue;  // phi1 has zero odd moments
      const EKBounds b = ek_bounds(coeffs);
      const ZeroSet zs = find_zeros(coeffs, PrecisionPolicy::for_degree(n));
      for (const auto& z : zs.zeros) {
        const double m = abs(z).to_double();
        CHECK(m >= b.alpha.to_double() * (1 - 1e-12));
        CHECK(m <= b.beta.to_double() * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("zero CSV rows") {
  const ZeroSet zs = find_section_zeros(section(SeriesSpec::preset("exp"), 2, 128), PrecisionPolicy{});
  std::ostringstream out;
  write_zeros_csv(out, zs, true);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,n,k,re,im,residual");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("exp,2,", 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == 2);
}
