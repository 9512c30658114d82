#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "szego/complex.hpp"

namespace szego {

/// Weight phi(t) = (t + a)^mu (b - t)^nu w(t) on [-a, b] of an exponential
/// integral F(z) = int phi(t) e^{zt} dt.
struct PhiSpec {
  double a = 1.0;
  double b = 1.0;
  std::complex<double> mu{0.0, 0.0};
  std::complex<double> nu{0.0, 0.0};
  /// Polynomial factor, ascending coefficients.
  std::vector<std::complex<double>> w{{1.0, 0.0}};

  void validate() const;
  /// w evaluated at t.
  APComplex w_at(const APComplex& t) const;
  /// Value of phi(t)/(t+a)^mu as t -> -a, i.e. w(-a) (a+b)^nu.
  APComplex f1_zero(int bits) const;
  /// Value of phi(t)/(b-t)^nu as t -> b, i.e. w(b) (a+b)^mu.
  APComplex f2_zero(int bits) const;
  double c() const { return a > b ? a : b; }
  /// Dominant endpoint exponent: Re mu if a > b, Re nu if a < b, the smaller if a = b.
  double xi() const;
};

namespace family {
struct Exp {};
struct Cos {};
struct Sin {};
struct MittagLeffler {
  double lambda = 1.0;
};
struct Confluent1F1 {
  std::complex<double> b{2.0, 0.0};
};
struct Bessel {
  std::complex<double> alpha{0.0, 0.0};
};
struct Divergent {};
struct LFT {
  double a0 = 1.0;
  double A = 1.0;
  double B = 1.0;
};
struct RationalSquare {};
struct ExpIntegral {
  PhiSpec phi;
};
}  // namespace family

using SeriesVariant =
    std::variant<family::Exp, family::Cos, family::Sin, family::MittagLeffler,
                 family::Confluent1F1, family::Bessel, family::Divergent, family::LFT,
                 family::RationalSquare, family::ExpIntegral>;

/// One function family with validated parameters.
class SeriesSpec {
 public:
  SeriesSpec() : v_(family::Exp{}) {}
  SeriesSpec(SeriesVariant v);  // NOLINT(google-explicit-constructor)

  const SeriesVariant& variant() const noexcept { return v_; }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }
  /// Family tag used in files: "exp", "cos", ..., "exp_integral".
  std::string family_name() const;
  /// Entire families have a finite order; Divergent, LFT and RationalSquare do not.
  bool is_entire() const noexcept;
  /// Cos, Sin and Bessel have every other coefficient zero.
  bool has_parity_gaps() const noexcept;

  /// Named presets: exp, cos, sin, divergent, rational_square, lft, bessel0,
  /// phi1 (phi = 1 on [-1,1]), F1, F2, F3.
  static SeriesSpec preset(const std::string& name);

 private:
  SeriesVariant v_;
};

struct SectionPoly {
  SeriesSpec spec;
  int n = 0;
  /// a_0 ... a_n of s_n(f; z).
  std::vector<APComplex> coeffs;
  /// R_n: studied zeros are those of s_n(f; R_n z).
  APComplex scale;

  /// Coefficients a_k R_n^k of the normalized section.
  std::vector<APComplex> normalized() const;
};

enum class MomentMethod { Quadrature, Asymptotic };

struct MomentTable {
  PhiSpec phi;
  std::vector<APComplex> values;
  /// Integral of |phi(t) t^k|; entries far below it are cancellations.
  std::vector<Real> l1;
  std::vector<MomentMethod> method;
  /// Non-fatal quadrature/asymptotic mismatches.
  std::vector<std::string> warnings;
  int bits = 0;
};

std::vector<APComplex> coefficients(const SeriesSpec& spec, int n, int bits);
/// Section coefficients of an exponential integral from a precomputed table (kmax >= n).
std::vector<APComplex> coefficients_from_moments(const MomentTable& table, int n, int bits);

MomentTable moments(const PhiSpec& phi, int kmax, int bits);
/// Leading endpoint contributions to int phi(t) t^k dt; zero when they cancel.
APComplex moment_asymptotic(const PhiSpec& phi, int k, int bits = 128);

APComplex value(const SeriesSpec& spec, const APComplex& z, int bits);
APComplex scale_factor(const SeriesSpec& spec, int n, int bits = 128);
SectionPoly section(const SeriesSpec& spec, int n, int bits);
/// Section built from a moment table shared across degrees.
SectionPoly section_from_moments(const SeriesSpec& spec, const MomentTable& table, int n,
                                 int bits);

/// |a_n|^(-1/n); DomainError when a_n = 0.
Real rho_n(const SeriesSpec& spec, int n, int bits = 128);

/// Order of an entire family from its coefficient decay over k in [K/2, K].
double order_estimate(const SeriesSpec& spec, int K);

/// N in [n_lo, n_hi] along which the two endpoint terms do not cancel.
std::vector<int> subsequence_select(const PhiSpec& phi, int n_lo, int n_hi, double tol);

struct BesselPoly {
  /// P_n(y) = sum_k n^{2k} / (4^k k! Gamma(k+alpha+1)) y^k, k = 0..n/2.
  std::vector<APComplex> coeffs;
  /// (2n+4)/n^2 |Gamma(n/2+alpha+2)/Gamma(n/2+alpha+1)|.
  Real printed_bound;
  bool positive = false;
};

BesselPoly bessel_even_poly(std::complex<double> alpha, int n, int bits);

}  // namespace szego
