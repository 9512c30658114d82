#include "szego/series.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

#include "szego/quadrature.hpp"
#include "szego/special.hpp"

namespace szego {

namespace {

APComplex cplx(std::complex<double> z, int bits) { return APComplex(z, bits); }

APComplex one(int bits) { return APComplex(Real(1.0, bits)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_degree(int n) {
  if (n < 1) throw DomainError("section degree must be at least 1");
}

// Value of phi at a node of one half of [-a, b]. `left_piece` selects [-a, 0].
APComplex phi_at_node(const PhiSpec& phi, const TsNode& node, bool left_piece, int bits) {
  const Real a(phi.a, bits);
  const Real b(phi.b, bits);
  Real t_plus_a = left_piece ? node.from_lo : a + node.from_lo;
  Real b_minus_t = left_piece ? b + node.from_hi : node.from_hi;
  const APComplex mu = cplx(phi.mu, bits);
  const APComplex nu = cplx(phi.nu, bits);
  APComplex v = phi.w_at(APComplex(node.x));
  if (phi.mu != std::complex<double>(0.0, 0.0)) v *= pow(APComplex(t_plus_a), mu);
  if (phi.nu != std::complex<double>(0.0, 0.0)) v *= pow(APComplex(b_minus_t), nu);
  return v;
}

// Runs `body(lo, hi, left_piece)` for each nonempty half of [-a, b].
template <class Body>
void for_each_piece(const PhiSpec& phi, int bits, Body&& body) {
  if (phi.a > 0.0) body(Real(-phi.a, bits), Real(0.0, bits), true);
  if (phi.b > 0.0) body(Real(0.0, bits), Real(phi.b, bits), false);
}

// Power series sum_k c_k x^k with c_k from `next` (c_{k} -> c_{k+1}), summed
// until the terms fall below 2^-wp of the running sum and have passed their peak.
template <class Next>
APComplex power_series(APComplex c, const APComplex& x, int wp, Next&& next) {
  APComplex sum = c;
  APComplex xp = one(wp);
  const Real eps = pow2(-wp, wp);
  const double peak = std::abs(x.to_cdouble());
  for (long k = 0; k < 10000000L; ++k) {
    c = next(c, k);
    xp *= x;
    const APComplex term = c * xp;
    sum += term;
    if (static_cast<double>(k) > peak && abs(term) <= eps * abs(sum)) return sum;
    if (c.is_zero() && static_cast<double>(k) > peak) return sum;
  }
  throw ConvergenceError("power series did not converge");
}

int series_guard(const APComplex& z, double growth_order) {
  const double r = std::abs(z.to_cdouble());
  return 32 + static_cast<int>(std::ceil(1.45 * std::pow(r, growth_order)));
}

Real log_abs(const APComplex& z) { return log(abs(z)); }

}  // namespace

// ---------------------------------------------------------------------------
// PhiSpec

void PhiSpec::validate() const {
  if (!(a >= 0.0) || !(b >= 0.0) || !(a + b > 0.0)) {
    throw DomainError("phi needs a >= 0, b >= 0 and a + b > 0");
  }
  if (!(mu.real() > -1.0) || !(nu.real() > -1.0)) {
    throw DomainError("phi needs Re(mu) > -1 and Re(nu) > -1");
  }
  if (w.empty()) throw DomainError("phi polynomial factor is empty");
  if (f1_zero(64).is_zero() || f2_zero(64).is_zero()) {
    throw DomainError("phi polynomial factor vanishes at an endpoint");
  }
}

APComplex PhiSpec::w_at(const APComplex& t) const {
  const int bits = t.bits();
  APComplex acc(Real::zero(bits));
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * t + cplx(*it, bits);
  return acc;
}

APComplex PhiSpec::f1_zero(int bits) const {
  APComplex v = w_at(APComplex(Real(-a, bits)));
  if (nu != std::complex<double>(0.0, 0.0)) v *= pow(APComplex(Real(a + b, bits)), cplx(nu, bits));
  return v;
}

APComplex PhiSpec::f2_zero(int bits) const {
  APComplex v = w_at(APComplex(Real(b, bits)));
  if (mu != std::complex<double>(0.0, 0.0)) v *= pow(APComplex(Real(a + b, bits)), cplx(mu, bits));
  return v;
}

double PhiSpec::xi() const {
  if (a > b) return mu.real();
  if (a < b) return nu.real();
  return std::min(mu.real(), nu.real());
}

// ---------------------------------------------------------------------------
// SeriesSpec

SeriesSpec::SeriesSpec(SeriesVariant v) : v_(std::move(v)) {
  std::visit(Overloaded{
                 [](const family::MittagLeffler& f) {
                   if (!(f.lambda > 0.0)) throw DomainError("Mittag-Leffler order must be positive");
                 },
                 [](const family::Confluent1F1& f) {
                   if (!(f.b.real() > 1.0)) throw DomainError("1F1 parameter needs Re(b) > 1");
                 },
                 [](const family::Bessel& f) {
                   if (!(f.alpha.real() > -0.5)) throw DomainError("Bessel order needs Re(alpha) > -1/2");
                 },
                 [](const family::LFT& f) {
                   if (!(f.a0 > 0.0) || !(f.A > 0.0) || !(f.B > 0.0)) {
                     throw DomainError("LFT parameters must be positive");
                   }
                 },
                 [](const family::ExpIntegral& f) { f.phi.validate(); },
                 [](const auto&) {},
             },
             v_);
}

std::string SeriesSpec::family_name() const {
  return std::visit(Overloaded{
                        [](const family::Exp&) { return std::string("exp"); },
                        [](const family::Cos&) { return std::string("cos"); },
                        [](const family::Sin&) { return std::string("sin"); },
                        [](const family::MittagLeffler&) { return std::string("mittag_leffler"); },
                        [](const family::Confluent1F1&) { return std::string("confluent_1f1"); },
                        [](const family::Bessel&) { return std::string("bessel"); },
                        [](const family::Divergent&) { return std::string("divergent"); },
                        [](const family::LFT&) { return std::string("lft"); },
                        [](const family::RationalSquare&) { return std::string("rational_square"); },
                        [](const family::ExpIntegral&) { return std::string("exp_integral"); },
                    },
                    v_);
}

bool SeriesSpec::is_entire() const noexcept {
  return !(is<family::Divergent>() || is<family::LFT>() || is<family::RationalSquare>());
}

bool SeriesSpec::has_parity_gaps() const noexcept {
  return is<family::Cos>() || is<family::Sin>() || is<family::Bessel>();
}

SeriesSpec SeriesSpec::preset(const std::string& name) {
  using C = std::complex<double>;
  if (name == "exp") return SeriesSpec(family::Exp{});
  if (name == "cos") return SeriesSpec(family::Cos{});
  if (name == "sin") return SeriesSpec(family::Sin{});
  if (name == "divergent") return SeriesSpec(family::Divergent{});
  if (name == "rational_square") return SeriesSpec(family::RationalSquare{});
  if (name == "lft") return SeriesSpec(family::LFT{1.0, 1.0, 1.0});
  if (name == "bessel0") return SeriesSpec(family::Bessel{C(0.0, 0.0)});
  if (name == "ml2") return SeriesSpec(family::MittagLeffler{2.0});
  if (name == "ml_half") return SeriesSpec(family::MittagLeffler{0.5});
  if (name == "confluent") return SeriesSpec(family::Confluent1F1{C(2.0, 0.0)});
  if (name == "phi1") {
    return SeriesSpec(family::ExpIntegral{PhiSpec{1.0, 1.0, C(0, 0), C(0, 0), {C(1, 0)}}});
  }
  if (name == "F1") {
    return SeriesSpec(family::ExpIntegral{PhiSpec{2.0, 1.5, C(0, 0), C(0.5, 1.0), {C(1, 0)}}});
  }
  if (name == "F2") {
    return SeriesSpec(family::ExpIntegral{PhiSpec{1.0, 1.0, C(-0.5, -2.0), C(4, 0), {C(1, 0)}}});
  }
  if (name == "F3") {
    return SeriesSpec(family::ExpIntegral{
        PhiSpec{17.0 / 36.0, 19.0 / 36.0, C(0, 0), C(0, 0), {C(0.25, 0), C(-1, 0), C(1, 0)}}});
  }
  throw DomainError("unknown family preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Coefficients

std::vector<APComplex> coefficients(const SeriesSpec& spec, int n, int bits) {
  require_degree(n);
  const std::size_t count = static_cast<std::size_t>(n) + 1;
  std::vector<APComplex> a;
  a.reserve(count);
  const int wp = bits + 16;
  auto finish = [&]() {
    for (auto& c : a) c.set_bits(bits);
    return a;
  };
  auto inv_factorials = [&]() {
    std::vector<Real> f;
    f.reserve(count);
    f.emplace_back(1.0, wp);
    for (int k = 1; k <= n; ++k) f.push_back(f.back() / Real(static_cast<double>(k), wp));
    return f;
  };

  return std::visit(
      Overloaded{
          [&](const family::Exp&) {
            for (auto& f : inv_factorials()) a.emplace_back(f);
            return finish();
          },
          [&](const family::Cos&) {
            const auto f = inv_factorials();
            for (int k = 0; k <= n; ++k) {
              if (k % 2 == 1) {
                a.emplace_back(Real::zero(wp));
              } else {
                a.emplace_back((k / 2) % 2 == 0 ? f[k] : -f[k]);
              }
            }
            return finish();
          },
          [&](const family::Sin&) {
            const auto f = inv_factorials();
            for (int k = 0; k <= n; ++k) {
              if (k % 2 == 0) {
                a.emplace_back(Real::zero(wp));
              } else {
                a.emplace_back((k / 2) % 2 == 0 ? f[k] : -f[k]);
              }
            }
            return finish();
          },
          [&](const family::MittagLeffler& f) {
            const Real lambda(f.lambda, wp);
            for (int k = 0; k <= n; ++k) {
              const Real x = Real(static_cast<double>(k), wp) / lambda + Real(1.0, wp);
              a.emplace_back(exp(-lgamma_abs(x)));
            }
            return finish();
          },
          [&](const family::Confluent1F1& f) {
            // Gamma(b)/Gamma(k+b) = 1/((b)(b+1)...(b+k-1))
            const APComplex b = cplx(f.b, wp);
            a.push_back(one(wp));
            for (int k = 1; k <= n; ++k) {
              a.push_back(a.back() / (b + APComplex(Real(static_cast<double>(k - 1), wp))));
            }
            return finish();
          },
          [&](const family::Bessel& f) {
            if (n % 2 != 0) throw ParityError("Bessel sections need an even degree");
            const APComplex alpha = cplx(f.alpha, wp);
            APComplex c = one(wp) / gamma(alpha + one(wp));
            for (int k = 0; k <= n; ++k) {
              if (k % 2 == 1) {
                a.emplace_back(Real::zero(wp));
                continue;
              }
              a.push_back(c);
              const long j = k / 2 + 1;
              c /= (alpha + APComplex(Real(static_cast<double>(j), wp))) *
                   Real(-4.0 * static_cast<double>(j), wp);
            }
            return finish();
          },
          [&](const family::Divergent&) {
            Real f(1.0, wp);
            for (int k = 0; k <= n; ++k) {
              if (k > 0) f *= static_cast<long>(k);
              a.emplace_back(f);
            }
            return finish();
          },
          [&](const family::LFT& f) {
            const Real a1 = Real(f.A, wp) * Real(f.a0, wp) + Real(f.B, wp);
            a.emplace_back(Real(f.a0, wp));
            Real ak = a1;
            for (int k = 1; k <= n; ++k) {
              a.emplace_back(ak);
              ak *= Real(f.A, wp);
            }
            return finish();
          },
          [&](const family::RationalSquare&) {
            for (int k = 0; k <= n; ++k) a.emplace_back(Real(static_cast<double>(k + 1), wp));
            return finish();
          },
          [&](const family::ExpIntegral& f) {
            return coefficients_from_moments(moments(f.phi, n, bits), n, bits);
          },
      },
      spec.variant());
}

std::vector<APComplex> coefficients_from_moments(const MomentTable& table, int n, int bits) {
  require_degree(n);
  if (static_cast<int>(table.values.size()) <= n) {
    throw DomainError("moment table is shorter than the requested degree");
  }
  std::vector<APComplex> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  Real inv_fact(1.0, bits + 16);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) inv_fact /= static_cast<long>(k);
    APComplex c = table.values[k] * inv_fact;
    c.set_bits(bits);
    a.push_back(std::move(c));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Moments

MomentTable moments(const PhiSpec& phi, int kmax, int bits) {
  phi.validate();
  if (kmax < 0) throw DomainError("kmax must be nonnegative");
  const std::size_t count = static_cast<std::size_t>(kmax) + 1;
  MomentTable table;
  table.phi = phi;
  table.bits = bits;
  table.values.assign(count, APComplex(Real::zero(bits)));
  table.l1.assign(count, Real::zero(bits));
  table.method.assign(count, MomentMethod::Quadrature);

  for_each_piece(phi, bits, [&](const Real& lo, const Real& hi, bool left_piece) {
    auto integrand = [&](const TsNode& node, std::vector<APComplex>& out) {
      const int wp = node.x.bits();
      APComplex v = phi_at_node(phi, node, left_piece, wp);
      const APComplex x(node.x);
      for (std::size_t k = 0; k < count; ++k) {
        out[k] = v;
        if (k + 1 < count) v *= x;
      }
    };
    TsVectorResult r = integrate_ts_vector(integrand, count, lo, hi, bits);
    for (std::size_t k = 0; k < count; ++k) {
      table.values[k] += r.values[k];
      table.l1[k] += r.l1[k];
    }
  });

  const Real cancel = pow2(-(bits / 2), bits);
  for (std::size_t k = 0; k < count; ++k) {
    if (abs(table.values[k]) < cancel * table.l1[k]) table.values[k] = APComplex(Real::zero(bits));
  }

  for (int k = 50; k <= kmax; ++k) {
    const APComplex asym = moment_asymptotic(phi, k, bits);
    if (asym.is_zero() || table.values[k].is_zero()) continue;
    const double rel = abs(table.values[k] / asym - one(bits)).to_double();
    if (rel > 25.0 / k) {
      std::ostringstream msg;
      msg << "moment " << k << " differs from its endpoint asymptotic by " << rel;
      table.warnings.push_back(msg.str());
    }
  }
  return table;
}

APComplex moment_asymptotic(const PhiSpec& phi, int k, int bits) {
  if (k < 1) throw DomainError("moment asymptotic needs k >= 1");
  const int wp = bits + 16;
  const APComplex kk(Real(static_cast<double>(k), wp));
  const APComplex unit = one(wp);
  auto endpoint = [&](double length, std::complex<double> exponent, const APComplex& f0) {
    // f0 Gamma(e+1) k^{-e-1} length^{k+e+1}
    const APComplex e1 = cplx(exponent, wp) + unit;
    return f0 * gamma(e1) * exp(-(e1 * log(kk))) *
           exp((kk + e1) * APComplex(log(Real(length, wp))));
  };
  APComplex total(Real::zero(wp));
  if (phi.a >= phi.b && phi.a > 0.0) {
    APComplex left = endpoint(phi.a, phi.mu, phi.f1_zero(wp));
    total += (k % 2 == 0) ? left : -left;
  }
  if (phi.b >= phi.a && phi.b > 0.0) total += endpoint(phi.b, phi.nu, phi.f2_zero(wp));
  total.set_bits(bits);
  return total;
}

// ---------------------------------------------------------------------------
// Values

APComplex value(const SeriesSpec& spec, const APComplex& z, int bits) {
  const APComplex unit = one(bits);
  return std::visit(
      Overloaded{
          [&](const family::Exp&) { return exp(z.with_bits(bits)); },
          [&](const family::Cos&) {
            const APComplex iz = APComplex(-z.im(), z.re()).with_bits(bits);
            return (exp(iz) + exp(-iz)) / Real(2.0, bits);
          },
          [&](const family::Sin&) {
            const APComplex iz = APComplex(-z.im(), z.re()).with_bits(bits);
            return (exp(iz) - exp(-iz)) / APComplex(Real(0.0, bits), Real(2.0, bits));
          },
          [&](const family::MittagLeffler& f) {
            const int wp = bits + series_guard(z, f.lambda);
            const Real lambda(f.lambda, wp);
            auto coef = [&](long k) {
              return APComplex(exp(-lgamma_abs(Real(static_cast<double>(k), wp) / lambda + Real(1.0, wp))));
            };
            APComplex r = power_series(coef(0), z.with_bits(wp), wp,
                                       [&](const APComplex&, long k) { return coef(k + 1); });
            r.set_bits(bits);
            return r;
          },
          [&](const family::Confluent1F1& f) {
            const int wp = bits + series_guard(z, 1.0);
            const APComplex b = cplx(f.b, wp);
            APComplex r = power_series(one(wp), z.with_bits(wp), wp, [&](const APComplex& c, long k) {
              return c / (b + APComplex(Real(static_cast<double>(k), wp)));
            });
            r.set_bits(bits);
            return r;
          },
          [&](const family::Bessel& f) {
            const int wp = bits + series_guard(z, 1.0);
            const APComplex alpha = cplx(f.alpha, wp);
            const APComplex half = z.with_bits(wp) / Real(2.0, wp);
            const APComplex x = -(half * half);
            APComplex c0 = one(wp) / gamma(alpha + one(wp));
            APComplex r = power_series(c0, x, wp, [&](const APComplex& c, long k) {
              const double j = static_cast<double>(k + 1);
              return c / ((alpha + APComplex(Real(j, wp))) * Real(j, wp));
            });
            if (f.alpha != std::complex<double>(0.0, 0.0)) r *= pow(half, alpha);
            r.set_bits(bits);
            return r;
          },
          [&](const family::Divergent&) -> APComplex {
            if (!z.is_zero()) throw DomainError("the divergent series has no value off the origin");
            return unit;
          },
          [&](const family::LFT& f) {
            const Real A(f.A, bits);
            const APComplex den = unit - z.with_bits(bits) * A;
            if (den.is_zero()) throw PoleError("LFT series evaluated at its pole 1/A");
            if (abs(z) * A >= Real(1.0, bits)) throw DomainError("outside the disk of convergence");
            const Real a1 = A * Real(f.a0, bits) + Real(f.B, bits);
            return APComplex(Real(f.a0, bits)) + z.with_bits(bits) * a1 / den;
          },
          [&](const family::RationalSquare&) {
            const APComplex den = unit - z.with_bits(bits);
            if (den.is_zero()) throw PoleError("1/(1-z)^2 evaluated at z = 1");
            if (abs(z) >= Real(1.0, bits)) throw DomainError("outside the disk of convergence");
            return unit / (den * den);
          },
          [&](const family::ExpIntegral& f) {
            const PhiSpec& phi = f.phi;
            phi.validate();
            APComplex total(Real::zero(bits));
            for_each_piece(phi, bits, [&](const Real& lo, const Real& hi, bool left_piece) {
              total += integrate_ts(
                  [&](const TsNode& node) {
                    const int wp = node.x.bits();
                    return phi_at_node(phi, node, left_piece, wp) *
                           exp(z.with_bits(wp) * APComplex(node.x));
                  },
                  lo, hi, bits);
            });
            return total;
          },
      },
      spec.variant());
}

APComplex scale_factor(const SeriesSpec& spec, int n, int bits) {
  require_degree(n);
  const Real nn(static_cast<double>(n), bits);
  return std::visit(
      Overloaded{
          [&](const family::MittagLeffler& f) {
            const Real lambda(f.lambda, bits);
            return APComplex(exp(log(nn / lambda) / lambda + Real(0.5, bits) / nn));
          },
          [&](const family::Divergent&) { return APComplex(exp(Real(1.0, bits)) / nn); },
          [&](const family::LFT& f) { return APComplex(Real(1.0, bits) / Real(f.A, bits)); },
          [&](const family::RationalSquare&) { return APComplex(Real(1.0, bits)); },
          [&](const auto&) { return APComplex(nn); },
      },
      spec.variant());
}

std::vector<APComplex> SectionPoly::normalized() const {
  std::vector<APComplex> out;
  out.reserve(coeffs.size());
  APComplex p = one(scale.bits());
  for (const auto& c : coeffs) {
    out.push_back(c * p);
    p *= scale;
  }
  return out;
}

SectionPoly section(const SeriesSpec& spec, int n, int bits) {
  return SectionPoly{spec, n, coefficients(spec, n, bits), scale_factor(spec, n, bits)};
}

SectionPoly section_from_moments(const SeriesSpec& spec, const MomentTable& table, int n,
                                 int bits) {
  if (!spec.is<family::ExpIntegral>()) throw DomainError("moment tables only apply to exponential integrals");
  return SectionPoly{spec, n, coefficients_from_moments(table, n, bits), scale_factor(spec, n, bits)};
}

Real rho_n(const SeriesSpec& spec, int n, int bits) {
  const auto a = coefficients(spec, n, bits);
  if (a[n].is_zero()) throw DomainError("rho_n undefined: a_n is zero");
  return exp(-log_abs(a[n]) / Real(static_cast<double>(n), bits));
}

double order_estimate(const SeriesSpec& spec, int K) {
  if (!spec.is_entire()) throw DomainError("order is only defined here for entire families");
  if (K < 50) throw DomainError("order estimate needs K >= 50");
  const int bits = 128;
  const auto a = coefficients(spec, K, bits);
  std::vector<int> ks;
  for (int k = K / 2; k <= K; ++k) {
    if (!a[k].is_zero()) ks.push_back(k);
  }
  if (ks.size() < 8) throw DomainError("too few nonzero coefficients for an order estimate");
  // log(1/|a_k|)/k = s log k + c0 + c1 log k / k + c2 / k, order = 1/s
  Eigen::MatrixXd X(static_cast<Eigen::Index>(ks.size()), 4);
  Eigen::VectorXd y(static_cast<Eigen::Index>(ks.size()));
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    const double lk = std::log(k);
    const auto row = static_cast<Eigen::Index>(i);
    X(row, 0) = lk;
    X(row, 1) = 1.0;
    X(row, 2) = lk / k;
    X(row, 3) = 1.0 / k;
    y(row) = -log_abs(a[ks[i]]).to_double() / k;
  }
  const Eigen::Vector4d coef = X.colPivHouseholderQr().solve(y);
  if (!(coef(0) > 0.0)) throw DomainError("coefficients do not decay like an entire function");
  return 1.0 / coef(0);
}

std::vector<int> subsequence_select(const PhiSpec& phi, int n_lo, int n_hi, double tol) {
  phi.validate();
  if (n_lo > n_hi) throw DomainError("empty degree range");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  std::vector<int> out;
  const bool balanced = phi.a == phi.b && phi.mu.real() == phi.nu.real();
  if (!balanced) {
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(n);
    return out;
  }
  const int bits = 128;
  const APComplex unit = one(bits);
  const APComplex mu = cplx(phi.mu, bits);
  const APComplex nu = cplx(phi.nu, bits);
  const APComplex left = phi.f1_zero(bits) * gamma(mu + unit);
  const APComplex right = phi.f2_zero(bits) * gamma(nu + unit) *
                          pow(APComplex(Real(phi.a, bits)), nu - mu);
  for (int n = n_lo; n <= n_hi; ++n) {
    const APComplex nn(Real(static_cast<double>(n), bits));
    const APComplex g = (n % 2 == 0 ? left : -left) + right * pow(nn, mu - nu);
    if (abs(g).to_double() >= tol) out.push_back(n);
  }
  if (out.empty()) throw DomainError("no degree in range satisfies the selection condition");
  return out;
}

BesselPoly bessel_even_poly(std::complex<double> alpha, int n, int bits) {
  if (n < 2 || n % 2 != 0) throw ParityError("Bessel polynomial needs an even degree");
  if (!(alpha.real() > -0.5)) throw DomainError("Bessel order needs Re(alpha) > -1/2");
  const int wp = bits + 16;
  const APComplex al = cplx(alpha, wp);
  const APComplex unit = one(wp);
  const Real n2 = Real(static_cast<double>(n), wp) * Real(static_cast<double>(n), wp);
  BesselPoly p;
  APComplex c = unit / gamma(al + unit);
  for (int k = 0; k <= n / 2; ++k) {
    APComplex out = c;
    out.set_bits(bits);
    p.coeffs.push_back(std::move(out));
    const double j = static_cast<double>(k + 1);
    c = c * n2 / ((al + APComplex(Real(j, wp))) * Real(4.0 * j, wp));
  }
  p.positive = true;
  for (const auto& q : p.coeffs) {
    if (!q.is_real() || q.re().sign() <= 0) p.positive = false;
  }
  // Gamma(n/2+alpha+2)/Gamma(n/2+alpha+1) = n/2+alpha+1
  const APComplex ratio = al + APComplex(Real(n / 2 + 1.0, wp));
  p.printed_bound = (Real(2.0 * n + 4.0, wp) / n2 * abs(ratio)).with_bits(bits);
  return p;
}

}  // namespace szego
