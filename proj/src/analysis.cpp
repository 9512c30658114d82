#include "szego/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "szego/quadrature.hpp"
#include "szego/special.hpp"

namespace szego {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

APComplex one(int bits) { return APComplex(Real(1.0, bits)); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

// s_n(exp; x) by summing x^k/k! upward.
APComplex exp_section(int n, const APComplex& x) {
  APComplex term = one(x.bits());
  APComplex sum = term;
  for (int k = 1; k <= n; ++k) {
    term *= x;
    term /= Real(static_cast<double>(k), x.bits());
    sum += term;
  }
  return sum;
}

std::vector<std::complex<double>> to_double(const ZeroSet& zs) {
  std::vector<std::complex<double>> out;
  out.reserve(zs.zeros.size());
  for (const auto& z : zs.zeros) out.push_back(z.to_cdouble());
  return out;
}

ZeroSet exp_zeros(int n) {
  const auto sec = section(SeriesSpec(family::Exp{}), n, PrecisionPolicy::for_degree(n).start_bits);
  return find_section_zeros(sec, PrecisionPolicy::for_degree(n));
}

}  // namespace

unsigned thread_cap() {
  if (const char* env = std::getenv("SZEGO_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

PrecisionPolicy default_policy(const SeriesSpec& spec, int n) {
  if (spec.is_entire()) return PrecisionPolicy::for_degree(n);
  PrecisionPolicy p;
  p.start_bits = 128;
  p.max_bits = 4096;
  return p;
}

APComplex g_n_exact(int n, const APComplex& z, int bits) {
  if (n < 1) throw DomainError("g_n needs n >= 1");
  if (z.is_zero()) return APComplex(Real::zero(bits));
  // Terms reach e^{n|z|} against a result near |z e^{1-z}|^n e^{n Re z}.
  const auto zd = z.to_cdouble();
  const double mod = std::abs(zd);
  const double shrink = std::abs(std::log(mod) + 1.0 - zd.real());
  const int guard = static_cast<int>(std::ceil(n * (mod + std::abs(zd.real()) + shrink) / std::log(2.0))) + 64;
  const int wp = bits + guard;
  const APComplex zw = z.with_bits(wp);
  const APComplex nz = zw * Real(static_cast<double>(n), wp);
  APComplex g = one(wp) - exp(-nz) * exp_section(n, nz);
  g.set_bits(bits);
  return g;
}

APComplex g_n_szego(int n, const APComplex& z, int bits) {
  if (n < 1) throw DomainError("g_n needs n >= 1");
  if (!(z.re() < Real(1.0))) throw DomainError("Szego approximation needs Re z < 1");
  if (z.is_zero()) return APComplex(Real::zero(bits));
  const int wp = bits + 16;
  const APComplex zw = z.with_bits(wp);
  const APComplex u = one(wp);
  const APComplex base = zw * exp(u - zw);
  const Real nn(static_cast<double>(n), wp);
  APComplex g = pow(base, static_cast<long>(n)) / sqrt(Real(2.0, wp) * pi(wp) * nn) * zw / (u - zw);
  g.set_bits(bits);
  return g;
}

NrReport nr_limit_check(const std::vector<int>& n_list, double step, double radius, int bits) {
  if (!(step > 0.0) || !(radius > 0.0)) throw DomainError("grid step and radius must be positive");
  if (radius > 2.0 + 1e-12) throw DomainError("grid must lie in |w| <= 2");
  NrReport rep;
  rep.n = n_list;
  std::vector<std::complex<double>> grid;
  const int span = static_cast<int>(std::floor(radius / step + 1e-9));
  for (int j = 0; j <= span; ++j) {
    for (int i = -span; i <= span; ++i) {
      const std::complex<double> w(i * step, j * step);
      if (std::abs(w) <= radius + 1e-12) grid.push_back(w);
    }
  }
  rep.grid_points = grid.size();
  const int wp = bits + 64;
  const Real root2 = sqrt(Real(2.0, wp));
  std::vector<APComplex> limits;
  for (const auto& w : grid) limits.push_back(erfc(APComplex(w, wp) / root2) / Real(2.0, wp));
  rep.sup.assign(n_list.size(), 0.0);
  parallel_for(n_list.size(), [&](std::size_t idx) {
    const int n = n_list[idx];
    if (n < 1) throw DomainError("Newman-Rivlin check needs n >= 1");
    const Real nn(static_cast<double>(n), wp);
    const Real rn = sqrt(nn);
    double sup = 0.0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const APComplex x = APComplex(nn) + APComplex(grid[g], wp) * rn;
      const APComplex ratio = exp_section(n, x) * exp(-x);
      sup = std::max(sup, abs(ratio - limits[g]).to_double());
    }
    rep.sup[idx] = sup;
  });
  rep.decreasing = rep.sup.size() >= 2;
  for (std::size_t i = 1; i < rep.sup.size(); ++i) {
    if (!(rep.sup[i] < rep.sup[i - 1])) rep.decreasing = false;
  }
  return rep;
}

namespace {

// Damped Newton on erfc at `bits`; nullopt if the iterate leaves the search disk.
std::optional<APComplex> erfc_newton(APComplex t, int bits, double r_limit) {
  t.set_bits(bits);
  const Real two_over_rootpi = Real(2.0, bits) / sqrt(pi(bits));
  const Real tol = pow2(-(bits - 12), bits);
  try {
    for (int it = 0; it < 200; ++it) {
      APComplex delta = erfc(t) / (-exp(-(t * t)) * two_over_rootpi);
      // damped steps keep a seed next to its own zero
      const double step = abs(delta).to_double();
      if (step > 0.25) delta *= Real(0.25 / step, bits);
      t -= delta;
      if (abs(t).to_double() > r_limit) return std::nullopt;
      if (abs(delta) <= tol * abs(t)) return t;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

ErfcZero erfc_parabola(int k, int bits) {
  if (k < 1) throw DomainError("erfc zero index starts at 1");
  // Zeros in the upper half-plane sit near arguments between 2.17 and 3pi/4.
  const double r_max = std::sqrt(kTwoPi * (k + 2.0)) + 1.0;
  const double dr = 0.02;
  std::vector<APComplex> coarse;
  for (const double ray : {2.17, 2.23, 2.29, 2.35}) {
    const std::complex<double> dir = std::polar(1.0, ray);
    std::vector<double> mags;
    for (double r = 0.3; r <= r_max; r += dr) {
      mags.push_back(abs(erfc(APComplex(r * dir, 64))).to_double());
    }
    for (std::size_t i = 1; i + 1 < mags.size(); ++i) {
      if (!(mags[i] < mags[i - 1] && mags[i] <= mags[i + 1])) continue;
      const auto t = erfc_newton(APComplex((0.3 + i * dr) * dir, 64), 64, 2.0 * r_max);
      if (!t || !(t->im().sign() > 0)) continue;
      const bool dup = std::any_of(coarse.begin(), coarse.end(), [&](const APComplex& f) {
        return abs(f - *t).to_double() < 1e-6;
      });
      if (!dup) coarse.push_back(*t);
    }
  }
  std::sort(coarse.begin(), coarse.end(),
            [](const APComplex& x, const APComplex& y) { return abs(x) < abs(y); });
  if (static_cast<int>(coarse.size()) < k) throw ConvergenceError("erfc zero search found too few roots");
  const auto polished = erfc_newton(coarse[static_cast<std::size_t>(k - 1)], bits + 32, 2.0 * r_max);
  if (!polished) throw ConvergenceError("Newton polish of an erfc zero failed");
  ErfcZero out;
  out.t = polished->with_bits(bits);
  const std::complex<double> w = std::sqrt(2.0) * out.t.to_cdouble();
  out.u = w.real();
  out.v = w.imag();
  return out;
}

std::pair<double, double> rate_constants(const PhiSpec& phi) {
  phi.validate();
  const double xi = phi.xi();
  return {xi - phi.mu.real() + 0.5, xi - phi.nu.real() + 0.5};
}

std::string side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Circle: return "circle";
  }
  return "unknown";
}

std::pair<double, double> least_squares2(const std::vector<double>& x1, const std::vector<double>& x2,
                                         const std::vector<double>& y) {
  if (x1.size() != y.size() || x2.size() != y.size() || y.size() < 2) {
    throw DomainError("least squares needs matching samples, at least two");
  }
  Eigen::MatrixXd X(static_cast<Eigen::Index>(y.size()), 2);
  Eigen::VectorXd Y(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    X(row, 0) = x1[i];
    X(row, 1) = x2[i];
    Y(row) = y[i];
  }
  const Eigen::Vector2d coef = X.colPivHouseholderQr().solve(Y);
  return {coef(0), coef(1)};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope needs matching samples");
  std::vector<double> lx, ones, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log slope needs positive samples");
    lx.push_back(std::log(x[i]));
    ones.push_back(1.0);
    ly.push_back(std::log(y[i]));
  }
  return least_squares2(lx, ones, ly).first;
}

std::vector<ZeroSet> section_zero_sets(const SeriesSpec& spec, const std::vector<int>& n_list,
                                       const RateOptions& options) {
  if (n_list.empty()) throw DomainError("empty degree list");
  const auto policy_for = [&](int n) {
    return options.policy ? options.policy(n) : default_policy(spec, n);
  };
  std::vector<ZeroSet> out(n_list.size());
  if (spec.is<family::Bessel>()) {
    const auto alpha = spec.as<family::Bessel>().alpha;
    parallel_for(n_list.size(), [&](std::size_t i) {
      const int n = n_list[i];
      const auto pol = policy_for(n);
      const auto poly = bessel_even_poly(alpha, n, pol.start_bits);
      out[i] = find_zeros(poly.coeffs, pol);
      out[i].spec = spec;
      out[i].n = n;
    });
    return out;
  }
  std::optional<MomentTable> table;
  if (spec.is<family::ExpIntegral>()) {
    const int n_max = *std::max_element(n_list.begin(), n_list.end());
    int bits = 0;
    for (int n : n_list) bits = std::max(bits, policy_for(n).start_bits);
    table = moments(spec.as<family::ExpIntegral>().phi, n_max, bits + 64);
  }
  parallel_for(n_list.size(), [&](std::size_t i) {
    const int n = n_list[i];
    const auto pol = policy_for(n);
    const SectionPoly sec = table ? section_from_moments(spec, *table, n, pol.start_bits)
                                  : section(spec, n, pol.start_bits);
    out[i] = find_section_zeros(sec, pol);
  });
  return out;
}

RateFit fit_rate_from_zeros(const SeriesSpec& spec, const std::vector<ZeroSet>& zero_sets, Side side,
                            const RateOptions& options) {
  if (zero_sets.size() < 5) throw DomainError("rate fit needs at least five degrees");
  RateFit fit;
  fit.family = spec;
  fit.side = side;
  const bool bessel = spec.is<family::Bessel>();
  const bool circle = spec.is<family::RationalSquare>() || spec.is<family::LFT>();
  double a = 1.0, b = 1.0;
  if (circle) {
    if (side != Side::Circle) throw DomainError("rational families use the circle statistic");
    fit.expected_c = spec.is<family::RationalSquare>() ? -1.0 : 0.0;
  } else if (spec.is<family::ExpIntegral>() || bessel) {
    if (side == Side::Circle) throw DomainError("exponential integrals use the left or right statistic");
    if (bessel) {
      fit.expected_c = 0.5;
    } else {
      const PhiSpec& phi = spec.as<family::ExpIntegral>().phi;
      a = phi.a;
      b = phi.b;
      const auto [left, right] = rate_constants(phi);
      fit.expected_c = side == Side::Left ? left : right;
    }
  } else {
    throw DomainError("no rate law for family " + spec.family_name());
  }
  const double c = std::max(a, b);

  for (const auto& zs : zero_sets) {
    std::vector<double> stats;
    for (const auto& zap : zs.zeros) {
      if (circle) {
        const auto z = zap.to_cdouble();
        if (spec.is<family::RationalSquare>() && std::abs(z - 1.0) <= options.corner_radius) continue;
        if (spec.is<family::LFT>() && Exclusion::negative_real(0.3).contains(z)) continue;
        stats.push_back((abs(zap) - Real(1.0)).to_double());
        continue;
      }
      // Bessel zeros y of P_n give section zeros w = -+sqrt(y) in the F frame.
      APComplex w = zap;
      if (bessel) {
        w = sqrt(zap);
        if (side == Side::Left) w = -w;
      }
      const auto z = w.to_cdouble();
      if (side == Side::Left) {
        if (!(z.real() < -options.axis_margin)) continue;
        if (std::abs(z + 1.0 / a) <= options.corner_radius) continue;
      } else {
        if (!(z.real() > options.axis_margin)) continue;
        if (std::abs(z - 1.0 / b) <= options.corner_radius) continue;
      }
      const int wp = w.bits();
      const APComplex lin = side == Side::Left ? w * Real(a, wp) : -(w * Real(b, wp));
      const Real modulus = abs(w * Real(c, wp) * exp(one(wp) + lin));
      stats.push_back((modulus - Real(1.0)).to_double());
    }
    if (stats.size() < 3) {
      throw ConvergenceError("degree " + std::to_string(zs.n) + " keeps fewer than 3 zeros on the " +
                             side_name(side) + " side");
    }
    fit.samples.push_back({zs.n, median(stats), stats.size()});
  }
  std::vector<double> x1, x2, y;
  for (const auto& s : fit.samples) {
    const double n = s.n;
    x1.push_back(std::log(n) / n);
    x2.push_back(1.0 / n);
    y.push_back(s.statistic);
  }
  std::tie(fit.fitted_c, fit.fitted_d) = least_squares2(x1, x2, y);
  const double err = std::abs(fit.fitted_c - fit.expected_c);
  fit.rel_error = fit.expected_c == 0.0 ? err : err / std::abs(fit.expected_c);
  return fit;
}

RateFit fit_rate(const SeriesSpec& spec, const std::vector<int>& n_list, Side side,
                 const RateOptions& options) {
  if (n_list.size() < 5) throw DomainError("rate fit needs at least five degrees");
  return fit_rate_from_zeros(spec, section_zero_sets(spec, n_list, options), side, options);
}

BesselRootCheck bessel_root_check(std::complex<double> alpha, const ZeroSet& zeros) {
  BesselRootCheck out;
  out.n = zeros.n;
  const auto poly = bessel_even_poly(alpha, zeros.n, 128);
  out.bound = poly.printed_bound.to_double();
  Real worst = Real::zero(128);
  for (const auto& y : zeros.zeros) worst = max(worst, abs(y));
  out.max_root = worst.to_double();
  out.inside = worst <= poly.printed_bound;
  return out;
}

BesselRootCheck bessel_root_check(std::complex<double> alpha, int n) {
  const auto zs = section_zero_sets(SeriesSpec(family::Bessel{alpha}), {n});
  return bessel_root_check(alpha, zs.front());
}

BuckholtzResult buckholtz_check(int n, const Polyline* szego_curve) {
  if (n < 1) throw DomainError("Buckholtz check needs n >= 1");
  std::optional<Polyline> own;
  if (!szego_curve) {
    own = sample_curve(curve::ExpSzego{});
    szego_curve = &*own;
  }
  const ZeroSet zs = exp_zeros(n);
  BuckholtzResult out;
  out.n = n;
  out.all_outside = true;
  for (const auto& z : zs.zeros) {
    const int wp = z.bits();
    const Real mod = abs(z);
    const bool outside_disk = mod > Real(1.0, wp);
    const bool off_curve = abs(z * exp(one(wp) - z)) > Real(1.0, wp);
    if (!(outside_disk || off_curve)) out.all_outside = false;
  }
  out.maxdist = maxdist(zs, *szego_curve, {}).value;
  out.bound = 2.0 * M_E / std::sqrt(static_cast<double>(n));
  return out;
}

CvwResult cvw_order_check(const std::vector<int>& n_list, double exclusion_delta) {
  if (n_list.size() < 5) throw DomainError("order check needs at least five degrees");
  if (!(exclusion_delta > 0.0 && exclusion_delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
  CvwResult out;
  out.n = n_list;
  out.maxdist_d.assign(n_list.size(), 0.0);
  out.maxdist_dn.assign(n_list.size(), 0.0);
  const Polyline szego = sample_curve(curve::ExpSzego{});
  const std::vector<Exclusion> excl{Exclusion::disk({1.0, 0.0}, exclusion_delta)};
  parallel_for(n_list.size(), [&](std::size_t i) {
    const int n = n_list[i];
    if (n < 2) throw DomainError("order check needs n >= 2");
    const ZeroSet zs = exp_zeros(n);
    const Polyline dn = sample_curve(curve::IntermediateExp{n});
    const MaxDist to_d = maxdist(zs, szego, excl);
    const MaxDist to_dn = maxdist(zs, dn, excl);
    if (to_d.empty || to_dn.empty) throw ConvergenceError("no zeros left outside the exclusion disk");
    out.maxdist_d[i] = to_d.value;
    out.maxdist_dn[i] = to_dn.value;
  });
  std::vector<double> ns(n_list.begin(), n_list.end());
  out.slope_vs_D = loglog_slope(ns, out.maxdist_d);
  out.slope_vs_Dn = loglog_slope(ns, out.maxdist_dn);
  out.dn_closer_everywhere = true;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (!(out.maxdist_dn[i] < out.maxdist_d[i])) out.dn_closer_everywhere = false;
  }
  return out;
}

AnnulusResult dilcher_rubel_check(int n) {
  if (n <= 97) throw DomainError("the annulus bound needs n > 97");
  const auto pol = PrecisionPolicy::for_degree(n);
  const SectionPoly sec = section(SeriesSpec(family::Divergent{}), n, pol.start_bits);
  const ZeroSet zs = find_section_zeros(sec, pol);
  AnnulusResult out;
  out.n = n;
  out.inner = 1.0 - 3.0 / std::sqrt(static_cast<double>(n));
  const int wp = zs.bits_used;
  const Real inner = Real(1.0, wp) - Real(3.0, wp) / sqrt(Real(static_cast<double>(n), wp));
  Real lo(1e300, wp), hi = Real::zero(wp);
  out.all_in_annulus = zs.origin_multiplicity == 0;
  for (const auto& z : zs.zeros) {
    const Real m = abs(z);
    lo = min(lo, m);
    hi = max(hi, m);
    if (!(m > inner && m < Real(1.0, wp))) out.all_in_annulus = false;
  }
  out.min_mod = lo.to_double();
  out.max_mod = hi.to_double();
  return out;
}

LftResult lft_relation_check(int n, double a0, double A, double B, double delta) {
  const SeriesSpec spec(family::LFT{a0, A, B});
  const auto pol = default_policy(spec, n);
  const ZeroSet zs = find_section_zeros(section(spec, n, pol.start_bits), pol);
  LftResult out;
  out.n = n;
  out.all_inside = zs.origin_multiplicity == 0;
  const Exclusion strip = Exclusion::negative_real(delta);
  Real rel = Real::zero(zs.bits_used), dev = Real::zero(zs.bits_used);
  for (const auto& z : zs.zeros) {
    const int wp = z.bits();
    const Real m = abs(z);
    if (!(m < Real(1.0, wp))) out.all_inside = false;
    if (strip.contains(z.to_cdouble())) continue;
    ++out.kept;
    const Real a1 = Real(A, wp) * Real(a0, wp) + Real(B, wp);
    const APComplex rhs = APComplex(Real(A, wp) * Real(a0, wp)) + z * Real(B, wp);
    const APComplex lhs = pow(z, static_cast<long>(n + 1)) * a1;
    rel = max(rel, abs(lhs / rhs - one(wp)));
    dev = max(dev, abs(m - Real(1.0, wp)));
  }
  out.relation_max = rel.to_double();
  out.modulus_dev = dev.to_double();
  return out;
}

std::vector<Real> watson_check_exact(std::complex<double> sigma,
                                     const std::vector<std::complex<double>>& h, double T,
                                     const std::vector<double>& lam_list, WatsonMode mode) {
  if (!(sigma.real() > -1.0)) throw DomainError("Watson's lemma needs Re sigma > -1");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("interval length must be positive and finite");
  if (h.empty() || h.front() == std::complex<double>(0.0, 0.0)) throw DomainError("h(0) must be nonzero");
  std::vector<Real> out(lam_list.size());
  parallel_for(lam_list.size(), [&](std::size_t i) {
    const double lam = lam_list[i];
    if (!(lam > 0.0)) throw DomainError("lambda must be positive");
    // Enough bits to resolve relative errors of size e^{-T lambda}.
    const int bits = std::min(8192, 128 + static_cast<int>(std::ceil(2.0 * T * lam / std::log(2.0))));
    const APComplex s(sigma, bits);
    const Real L(lam, bits);
    const auto h_at = [&](const Real& t) {
      APComplex acc(Real::zero(bits));
      for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * APComplex(t) + APComplex(*it, bits);
      return acc;
    };
    const auto power = [&](const Real& t) {
      return t.is_zero() ? APComplex(Real::zero(bits)) : exp(s * APComplex(log(t)));
    };
    const TsIntegrand f = [&](const TsNode& node) {
      if (mode == WatsonMode::Origin) {
        return power(node.from_lo) * h_at(node.from_lo) * APComplex(exp(-(L * node.from_lo)));
      }
      return power(node.from_hi) * h_at(node.from_hi) * APComplex(exp(L * node.x));
    };
    const APComplex integral = integrate_ts(f, Real::zero(bits), Real(T, bits), bits);
    APComplex lead = APComplex(h.front(), bits) * gamma(s + one(bits)) /
                     exp((s + one(bits)) * APComplex(log(L)));
    if (mode == WatsonMode::Endpoint) lead *= exp(L * Real(T, bits));
    out[i] = abs(lead / integral - one(bits));
  });
  return out;
}

std::vector<double> watson_check(std::complex<double> sigma, const std::vector<std::complex<double>>& h,
                                 double T, const std::vector<double>& lam_list, WatsonMode mode) {
  std::vector<double> out;
  for (const auto& r : watson_check_exact(sigma, h, T, lam_list, mode)) out.push_back(r.to_double());
  return out;
}

CountReport count_sector(const ZeroSet& zeros, double theta1, double theta2) {
  if (!(theta1 < theta2)) throw DomainError("sector needs theta1 < theta2");
  CountReport rep;
  rep.n = zeros.n;
  rep.region = "sector";
  const bool full = theta2 - theta1 >= kTwoPi;
  const double lo = wrap_angle(theta1);
  const double hi = lo + (theta2 - theta1);
  std::size_t count = static_cast<std::size_t>(zeros.origin_multiplicity);
  for (const auto& z : zeros.zeros) {
    const double t = wrap_angle(std::arg(z.to_cdouble()));
    if (full || (t >= lo && t <= hi) || (t + kTwoPi >= lo && t + kTwoPi <= hi)) ++count;
  }
  const std::size_t total = zeros.zeros.size() + static_cast<std::size_t>(zeros.origin_multiplicity);
  rep.count = count;
  rep.fraction = total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
  return rep;
}

CountReport count_disk(const ZeroSet& zeros, double R) {
  if (!(R >= 0.0)) throw DomainError("disk radius must be nonnegative");
  CountReport rep;
  rep.n = zeros.n;
  rep.region = "disk";
  std::size_t count = static_cast<std::size_t>(zeros.origin_multiplicity);
  for (const auto& z : zeros.zeros) {
    if (abs(z) <= Real(R, z.bits())) ++count;
  }
  const std::size_t total = zeros.zeros.size() + static_cast<std::size_t>(zeros.origin_multiplicity);
  rep.count = count;
  rep.fraction = total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
  return rep;
}

double imaginary_axis_reach(const ZeroSet& zeros, double margin) {
  double reach = 0.0;
  for (const auto& z : to_double(zeros)) {
    if (std::abs(z.real()) < margin) reach = std::max(reach, std::abs(z));
  }
  return reach;
}

}  // namespace szego
