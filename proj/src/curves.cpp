#include "szego/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace szego {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kCornerWindow = 0.05;
constexpr int kCornerRefine = 16;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double angular_gap(double x, double y) {
  const double d = std::fabs(wrap_angle(x) - wrap_angle(y));
  return std::min(d, kTwoPi - d);
}

// Radial equation G(r) = 0 at one angle. G is the log of the defining modulus
// ratio (or the defining function itself when `log_form` is false).
struct RadialEq {
  double lo = 0.0;
  double hi = 1.0;
  bool fixed = false;  // r is known in closed form (circular parts)
  std::function<Real(const Real&)> g;
  std::function<Real(const Real&)> dg;
  bool log_form = true;
};

int lgamma_bits(int bits) { return bits + 16; }

RadialEq make_equation(const CurveSpec& spec, double theta, int bits) {
  const Real th(theta, bits);
  const Real c = cos(th);
  const Real one(1.0, bits);
  RadialEq eq;
  std::visit(
      Overloaded{
          [&](const curve::ExpSzego&) {
            eq.g = [c, one](const Real& r) { return log(r) + one - r * c; };
            eq.dg = [c, one](const Real& r) { return one / r - c; };
            eq.lo = 1e-6;
            eq.hi = 1.0;
          },
          [&](const curve::Dab& d) {
            const double cc = std::max(d.a, d.b);
            const Real C(cc, bits);
            // left arc uses +a r cos(theta), right arc -b r cos(theta)
            const Real k = c.sign() <= 0 ? Real(d.a, bits) : Real(-d.b, bits);
            eq.g = [C, k, c, one](const Real& r) { return log(C * r) + one + k * r * c; };
            eq.dg = [k, c, one](const Real& r) { return one / r + k * c; };
            eq.lo = 1e-6 / cc;
            eq.hi = 1.0 / cc;
          },
          [&](const curve::MLCurve& m) {
            const double lam = m.lambda;
            double t = wrap_angle(theta);
            if (t > M_PI) t -= kTwoPi;
            const Real L(lam, bits);
            if (std::fabs(t) <= M_PI / (2.0 * lam)) {
              const Real cl = cos(L * Real(t, bits));
              eq.g = [L, cl, one](const Real& r) { return pow(r, L) * cl - one - L * log(r); };
              eq.dg = [L, cl, one](const Real& r) { return L * pow(r, L - one) * cl - L / r; };
              // the root reaches e^{-1/lambda} exactly at the edge angle
              eq.lo = std::exp(-1.0 / lam) * (1.0 - 1e-9);
              eq.hi = 1.0;
              eq.log_form = false;
            } else {
              const Real r0 = exp(-one / L);
              eq.fixed = true;
              eq.lo = eq.hi = r0.to_double();
              eq.g = [L, one](const Real& r) { return L * log(r) + one; };
              eq.dg = [L](const Real& r) { return L / r; };
              eq.log_form = false;
            }
          },
          [&](const curve::IntermediateExp& ie) {
            const int n = ie.n;
            if (c.to_double() > (n - 2.0) / n) {
              std::ostringstream msg;
              msg << "angle " << theta << " is outside the region |arg z| >= acos((n-2)/n) for n = " << n;
              throw DomainError(msg.str());
            }
            const int wp = lgamma_bits(bits);
            const Real nn(static_cast<double>(n), wp);
            // log(n!/(n/e)^n)
            const Real K = (log_factorial(n, wp) - nn * log(nn) + nn).with_bits(bits);
            const Real N(static_cast<double>(n), bits);
            eq.g = [N, K, c, one](const Real& r) {
              const Real q = one - Real(2.0, r.bits()) * r * c + r * r;
              return N * (log(r) + one - r * c) + log(r) - K - log(q) / Real(2.0, r.bits());
            };
            eq.dg = [N, c, one](const Real& r) {
              const Real q = one - Real(2.0, r.bits()) * r * c + r * r;
              return N * (one / r - c) + one / r - (r - c) / q;
            };
            eq.lo = 1e-6;
            eq.hi = 1.0;
          },
          [&](const curve::TrigBessel&) {
            const Real s = abs(sin(th));
            eq.g = [s, one](const Real& r) { return log(r) + one - r * s; };
            eq.dg = [s, one](const Real& r) { return one / r - s; };
            eq.lo = 1e-6;
            eq.hi = 1.0;
          },
          [&](const curve::UnitCircle&) {
            eq.fixed = true;
            eq.lo = eq.hi = 1.0;
            eq.g = [](const Real& r) { return log(r); };
            eq.dg = [](const Real& r) { return Real(1.0, r.bits()) / r; };
          },
      },
      spec);
  return eq;
}

Real eq_residual(const RadialEq& eq, const Real& r) {
  const Real g = eq.g(r);
  if (!eq.log_form) return abs(g);
  return abs(expm1(g));
}

std::vector<double> corner_angles(const CurveSpec& spec) {
  return std::visit(
      Overloaded{
          [](const curve::ExpSzego&) { return std::vector<double>{0.0}; },
          [](const curve::Dab&) { return std::vector<double>{M_PI / 2, 3 * M_PI / 2}; },
          [](const curve::MLCurve& m) {
            std::vector<double> v{0.0};
            const double edge = M_PI / (2.0 * m.lambda);
            if (edge < M_PI) {
              v.push_back(edge);
              v.push_back(kTwoPi - edge);
            }
            return v;
          },
          [](const curve::IntermediateExp& ie) {
            const double t = std::acos((ie.n - 2.0) / ie.n);
            return std::vector<double>{t, kTwoPi - t};
          },
          [](const curve::TrigBessel&) {
            return std::vector<double>{0.0, M_PI / 2, M_PI, 3 * M_PI / 2};
          },
          [](const curve::UnitCircle&) { return std::vector<double>{}; },
      },
      spec);
}

double point_segment(std::complex<double> z, std::complex<double> a, std::complex<double> b,
                     std::complex<double>* foot) {
  const std::complex<double> ab = b - a;
  const double len2 = std::norm(ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  const std::complex<double> p = a + t * ab;
  if (foot != nullptr) *foot = p;
  return std::abs(z - p);
}

}  // namespace

std::string curve_name(const CurveSpec& spec) {
  return std::visit(Overloaded{
                        [](const curve::ExpSzego&) { return std::string("exp_szego"); },
                        [](const curve::Dab&) { return std::string("dab"); },
                        [](const curve::MLCurve&) { return std::string("mittag_leffler"); },
                        [](const curve::IntermediateExp&) { return std::string("intermediate_exp"); },
                        [](const curve::TrigBessel&) { return std::string("trig_bessel"); },
                        [](const curve::UnitCircle&) { return std::string("unit_circle"); },
                    },
                    spec);
}

void validate(const CurveSpec& spec) {
  std::visit(Overloaded{
                 [](const curve::Dab& d) {
                   if (!(d.a > 0.0) || !(d.b > 0.0)) throw DomainError("D_{a,b} needs a, b > 0");
                 },
                 [](const curve::MLCurve& m) {
                   if (!(m.lambda > 0.0)) throw DomainError("Mittag-Leffler curve needs lambda > 0");
                 },
                 [](const curve::IntermediateExp& ie) {
                   if (ie.n < 2) throw DomainError("intermediate curve needs n >= 2");
                 },
                 [](const auto&) {},
             },
             spec);
}

RadialSolution radial_solve(const CurveSpec& spec, double theta, int bits) {
  const RadialEq eq = make_equation(spec, theta, bits);
  if (eq.fixed) {
    Real r = std::holds_alternative<curve::UnitCircle>(spec)
                 ? Real(1.0, bits)
                 : exp(-Real(1.0, bits) / Real(std::get<curve::MLCurve>(spec).lambda, bits));
    return {r, eq_residual(eq, r)};
  }
  Real lo(eq.lo, bits);
  Real hi(eq.hi, bits);
  Real glo = eq.g(lo);
  const Real ghi = eq.g(hi);
  if (ghi.is_zero()) return {hi, Real::zero(bits)};
  if (glo.is_zero()) return {lo, Real::zero(bits)};
  const Real flat = pow2(-(bits / 2), bits);
  if (abs(ghi) < flat) return {hi, eq_residual(eq, hi)};
  if (abs(glo) < flat) return {lo, eq_residual(eq, lo)};
  if (glo.sign() == ghi.sign()) {
    std::ostringstream msg;
    msg << "no sign change of the radial equation on the bracket at theta = " << theta;
    throw ConvergenceError(msg.str());
  }
  const int lo_sign = glo.sign();
  // Bisection to about double resolution, then Newton at full precision.
  for (int it = 0; it < 60; ++it) {
    Real mid = (lo + hi) / Real(2.0, bits);
    const Real gm = eq.g(mid);
    if (gm.is_zero()) return {mid, Real::zero(bits)};
    if (gm.sign() == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real r = (lo + hi) / Real(2.0, bits);
  const Real stop = pow2(-(bits - 8), bits);
  for (int it = 0; it < 40; ++it) {
    const Real d = eq.dg(r);
    if (d.is_zero()) break;
    const Real step = eq.g(r) / d;
    Real next = r - step;
    if (next < lo || next > hi) {
      // Newton left the bracket; fall back to another round of bisection.
      for (int b = 0; b < 20; ++b) {
        Real mid = (lo + hi) / Real(2.0, bits);
        if (eq.g(mid).sign() == lo_sign) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      next = (lo + hi) / Real(2.0, bits);
    }
    const bool small = abs(next - r) <= stop * abs(r);
    r = next;
    if (small) break;
  }
  return {r, eq_residual(eq, r)};
}

Polyline sample_curve(const CurveSpec& spec, int m, int bits) {
  validate(spec);
  if (m < 16) throw DomainError("curve sampling needs m >= 16");
  const std::vector<double> corners = corner_angles(spec);
  auto near_corner = [&](double t0, double t1) {
    for (double c : corners) {
      if (angular_gap(t0, c) < kCornerWindow || angular_gap(t1, c) < kCornerWindow) return true;
      // corner strictly inside the interval
      if (wrap_angle(c) > t0 && wrap_angle(c) < t1) return true;
    }
    return false;
  };
  std::vector<double> angles;
  for (int j = 0; j < m; ++j) {
    const double t0 = kTwoPi * j / m;
    const double t1 = kTwoPi * (j + 1) / m;
    angles.push_back(t0);
    if (near_corner(t0, t1)) {
      for (int s = 1; s < kCornerRefine; ++s) angles.push_back(t0 + (t1 - t0) * s / kCornerRefine);
    }
  }

  Polyline pl;
  pl.spec = spec;
  if (const auto* ie = std::get_if<curve::IntermediateExp>(&spec)) {
    const double cut = (ie->n - 2.0) / ie->n;
    std::vector<double> kept{std::acos(cut)};
    for (double t : angles) {
      if (std::cos(t) <= cut && t > kept.front() && t < kTwoPi - kept.front()) kept.push_back(t);
    }
    kept.push_back(kTwoPi - kept.front());
    angles = std::move(kept);
    pl.closed = false;
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  for (double t : angles) {
    const RadialSolution s = radial_solve(spec, t, bits);
    pl.theta.push_back(t);
    pl.points.push_back(polar(s.r, Real(t, bits)));
    pl.residuals.push_back(s.residual);
  }

  auto segment = [&](std::complex<double> a, std::complex<double> b) {
    std::vector<APComplex> piece;
    const int k = 64;
    for (int i = 0; i <= k; ++i) {
      const double s = static_cast<double>(i) / k;
      piece.emplace_back(a + s * (b - a), bits);
    }
    pl.pieces.push_back(std::move(piece));
  };
  if (const auto* d = std::get_if<curve::Dab>(&spec)) {
    const double h = 1.0 / (M_E * std::max(d->a, d->b));
    segment({0.0, -h}, {0.0, h});
  } else if (std::holds_alternative<curve::TrigBessel>(spec)) {
    segment({-1.0 / M_E, 0.0}, {1.0 / M_E, 0.0});
  }
  return pl;
}

double dist_to_polyline(std::complex<double> z, const Polyline& curve) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_seg = 0;
  bool on_loop = false;
  const std::size_t np = curve.points.size();
  std::vector<std::complex<double>> pts(np);
  for (std::size_t i = 0; i < np; ++i) pts[i] = curve.points[i].to_cdouble();
  const std::size_t nseg = curve.closed ? np : (np > 0 ? np - 1 : 0);
  for (std::size_t i = 0; i < nseg; ++i) {
    const double d = point_segment(z, pts[i], pts[(i + 1) % np], nullptr);
    if (d < best) {
      best = d;
      best_seg = i;
      on_loop = true;
    }
  }
  if (np == 1) best = std::min(best, std::abs(z - pts[0]));
  for (const auto& piece : curve.pieces) {
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      const double d = point_segment(z, piece[i].to_cdouble(), piece[i + 1].to_cdouble(), nullptr);
      if (d < best) {
        best = d;
        on_loop = false;
      }
    }
  }
  if (!on_loop || np < 4) return best;

  // Golden-section search of |z - r(t) e^{it}| over the chord and its neighbours.
  auto angle_at = [&](long i) {
    const long n = static_cast<long>(np);
    long j = i;
    double shift = 0.0;
    if (curve.closed) {
      while (j < 0) {
        j += n;
        shift -= kTwoPi;
      }
      while (j >= n) {
        j -= n;
        shift += kTwoPi;
      }
    } else {
      j = std::clamp(j, 0L, n - 1);
    }
    return curve.theta[static_cast<std::size_t>(j)] + shift;
  };
  const long i0 = static_cast<long>(best_seg);
  double lo = angle_at(i0 - 1);
  double hi = angle_at(i0 + 2);
  auto f = [&](double t) {
    const RadialSolution s = radial_solve(curve.spec, wrap_angle(t), 64);
    return std::abs(z - std::polar(s.r.to_double(), t));
  };
  try {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = f(x2);
      }
    }
    const double refined = std::min(f1, f2);
    // The chord can sit closer than the arc only by its sagitta.
    if (refined < best + 1e-2) return refined;
  } catch (const Error&) {
    // outside the curve's angular region; keep the chord distance
  }
  return best;
}

bool Exclusion::contains(std::complex<double> z) const {
  switch (kind) {
    case Kind::Disk:
      return std::abs(z - center) < radius;
    case Kind::NegativeRealAxis:
      return (z.real() <= 0.0 ? std::fabs(z.imag()) : std::abs(z)) < radius;
    case Kind::ImaginaryAxis:
      return std::fabs(z.real()) < radius;
  }
  return false;
}

MaxDist maxdist(const ZeroSet& zeros, const Polyline& curve, const std::vector<Exclusion>& exclusions) {
  MaxDist out;
  for (const auto& zz : zeros.zeros) {
    const auto z = zz.to_cdouble();
    bool skip = false;
    for (const auto& e : exclusions) {
      if (e.contains(z)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    ++out.kept;
    out.value = std::max(out.value, dist_to_polyline(z, curve));
  }
  out.empty = out.kept == 0;
  return out;
}

void write_polyline_csv(std::ostream& out, const Polyline& curve) {
  out << "theta,re,im,residual\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    out << Real(curve.theta[i], 53).to_string(17) << ',' << curve.points[i].re().to_string(30) << ','
        << curve.points[i].im().to_string(30) << ',' << curve.residuals[i].to_string(30) << '\n';
  }
  for (const auto& piece : curve.pieces) {
    for (const auto& p : piece) {
      const double t = wrap_angle(std::arg(p.to_cdouble()));
      out << Real(t, 53).to_string(17) << ',' << p.re().to_string(30) << ',' << p.im().to_string(30)
          << ',' << Real::zero(53).to_string(30) << '\n';
    }
  }
}

}  // namespace szego
