#include "szego/roots.hpp"

#include <mpfr.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace szego {

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kGoldenAngle = 2.39996322972865332;

// Fixed-size array of mpfr values sharing one precision; raw access for the hot loop.
class MpArray {
 public:
  MpArray(std::size_t n, int bits) : v_(n) {
    for (auto& x : v_) mpfr_init2(&x, bits);
  }
  ~MpArray() {
    for (auto& x : v_) mpfr_clear(&x);
  }
  MpArray(const MpArray&) = delete;
  MpArray& operator=(const MpArray&) = delete;
  mpfr_ptr operator[](std::size_t i) { return &v_[i]; }
  mpfr_srcptr operator[](std::size_t i) const { return &v_[i]; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<__mpfr_struct> v_;
};

constexpr mpfr_rnd_t R = MPFR_RNDN;

struct LevelResult {
  std::vector<APComplex> roots;
  std::vector<Real> residuals;
  int sweeps = 0;
  bool stalled = false;
};

// One Aberth run at fixed precision. Coefficients c[0..d] with c[0], c[d] nonzero.
class Aberth {
 public:
  Aberth(const std::vector<APComplex>& coeffs, int bits)
      : d_(coeffs.size() - 1),
        bits_(bits),
        cre_(coeffs.size(), bits),
        cim_(coeffs.size(), bits),
        cabs_(coeffs.size(), bits),
        zre_(d_, bits),
        zim_(d_, bits),
        s_(24, bits) {
    for (std::size_t k = 0; k <= d_; ++k) {
      mpfr_set(cre_[k], coeffs[k].re().raw(), R);
      mpfr_set(cim_[k], coeffs[k].im().raw(), R);
      mpfr_hypot(cabs_[k], cre_[k], cim_[k], R);
    }
  }

  void seed_circle() {
    // radius |a_0/a_d|^{1/d}, golden-angle positions
    const double lr =
        (std::log(std::abs(mpfr_get_d(cabs_[0], R))) - std::log(std::abs(mpfr_get_d(cabs_[d_], R))));
    double log_radius = lr / static_cast<double>(d_);
    if (!std::isfinite(log_radius)) {
      long e0 = 0;
      long ed = 0;
      const double m0 = mpfr_get_d_2exp(&e0, cabs_[0], R);
      const double md = mpfr_get_d_2exp(&ed, cabs_[d_], R);
      log_radius = (std::log(m0 / md) + static_cast<double>(e0 - ed) * std::log(2.0)) /
                   static_cast<double>(d_);
    }
    Real radius = exp(Real(log_radius, bits_));
    for (std::size_t k = 0; k < d_; ++k) {
      const double angle = std::fmod(kGoldenAngle * static_cast<double>(k) + 0.3, 2.0 * M_PI);
      Real a(angle, bits_);
      mpfr_mul(zre_[k], radius.raw(), cos(a).raw(), R);
      mpfr_mul(zim_[k], radius.raw(), sin(a).raw(), R);
    }
  }

  void seed(const std::vector<APComplex>& roots) {
    for (std::size_t k = 0; k < d_; ++k) {
      mpfr_set(zre_[k], roots[k].re().raw(), R);
      mpfr_set(zim_[k], roots[k].im().raw(), R);
    }
  }

  LevelResult run() {
    std::vector<char> done(d_, 0);
    LevelResult out;
    std::size_t remaining = d_;
    int sweeps = 0;
    while (remaining > 0) {
      if (sweeps >= kMaxSweeps) {
        out.stalled = true;
        break;
      }
      ++sweeps;
      for (std::size_t k = 0; k < d_; ++k) {
        if (done[k]) continue;
        if (step(k)) {
          done[k] = 1;
          --remaining;
        }
      }
      if (remaining == 0) {
        // Accept only roots whose backward error also passes.
        for (std::size_t k = 0; k < d_; ++k) {
          if (!residual_ok(k)) {
            done[k] = 0;
            ++remaining;
          }
        }
      }
    }
    out.sweeps = sweeps;
    for (std::size_t k = 0; k < d_; ++k) {
      Real re = Real::zero(bits_);
      Real im = Real::zero(bits_);
      mpfr_set(re.raw(), zre_[k], R);
      mpfr_set(im.raw(), zim_[k], R);
      out.roots.emplace_back(re, im);
      out.residuals.push_back(residual(k));
    }
    return out;
  }

 private:
  std::size_t d_;
  int bits_;
  MpArray cre_, cim_, cabs_, zre_, zim_;
  MpArray s_;

  // Scratch registers.
  enum {
    PR, PI, DR, DI, T1, T2, T3, T4, SR, SI, XR, XI, N2, WR, WI, QR, QI, ZN, ZA, BE, PA, U1, U2, U3
  };

  // (ar + i ai) *= (br + i bi), using T1..T4.
  void cmul(mpfr_ptr ar, mpfr_ptr ai, mpfr_srcptr br, mpfr_srcptr bi) {
    mpfr_mul(s_[T1], ar, br, R);
    mpfr_mul(s_[T2], ai, bi, R);
    mpfr_mul(s_[T3], ar, bi, R);
    mpfr_mul(s_[T4], ai, br, R);
    mpfr_sub(ar, s_[T1], s_[T2], R);
    mpfr_add(ai, s_[T3], s_[T4], R);
  }

  // (ar + i ai) /= (br + i bi), using T1..T4 and N2.
  void cdiv(mpfr_ptr ar, mpfr_ptr ai, mpfr_srcptr br, mpfr_srcptr bi) {
    mpfr_sqr(s_[T1], br, R);
    mpfr_sqr(s_[T2], bi, R);
    mpfr_add(s_[N2], s_[T1], s_[T2], R);
    mpfr_mul(s_[T1], ar, br, R);
    mpfr_mul(s_[T2], ai, bi, R);
    mpfr_mul(s_[T3], ai, br, R);
    mpfr_mul(s_[T4], ar, bi, R);
    mpfr_add(ar, s_[T1], s_[T2], R);
    mpfr_sub(ai, s_[T3], s_[T4], R);
    mpfr_div(ar, ar, s_[N2], R);
    mpfr_div(ai, ai, s_[N2], R);
  }

  // p(z_k) into PR/PI and p'(z_k) into DR/DI.
  void horner(std::size_t k) {
    mpfr_set(s_[PR], cre_[d_], R);
    mpfr_set(s_[PI], cim_[d_], R);
    mpfr_set_zero(s_[DR], 1);
    mpfr_set_zero(s_[DI], 1);
    for (std::size_t j = d_; j-- > 0;) {
      cmul(s_[DR], s_[DI], zre_[k], zim_[k]);
      mpfr_add(s_[DR], s_[DR], s_[PR], R);
      mpfr_add(s_[DI], s_[DI], s_[PI], R);
      cmul(s_[PR], s_[PI], zre_[k], zim_[k]);
      mpfr_add(s_[PR], s_[PR], cre_[j], R);
      mpfr_add(s_[PI], s_[PI], cim_[j], R);
    }
  }

  // sum_j |a_j| |z_k|^j into BE.
  void backward_scale(std::size_t k) {
    mpfr_hypot(s_[ZA], zre_[k], zim_[k], R);
    mpfr_set(s_[BE], cabs_[d_], R);
    for (std::size_t j = d_; j-- > 0;) mpfr_fma(s_[BE], s_[BE], s_[ZA], cabs_[j], R);
  }

  Real residual(std::size_t k) {
    horner(k);
    backward_scale(k);
    Real r = Real::zero(bits_);
    mpfr_hypot(r.raw(), s_[PR], s_[PI], R);
    if (!mpfr_zero_p(s_[BE])) mpfr_div(r.raw(), r.raw(), s_[BE], R);
    return r;
  }

  bool residual_ok(std::size_t k) {
    Real r = residual(k);
    return r.is_zero() || r.exponent2() <= -(bits_ / 2);
  }

  // One Aberth correction of root k; true when the correction is below 2^{-bits/2}|z_k|.
  bool step(std::size_t k) {
    horner(k);
    if (mpfr_zero_p(s_[PR]) && mpfr_zero_p(s_[PI])) return true;
    if (mpfr_zero_p(s_[DR]) && mpfr_zero_p(s_[DI])) {
      // Stationary point of p: nudge off it.
      mpfr_mul_2si(s_[U1], zre_[k], -20, R);
      mpfr_add(zre_[k], zre_[k], s_[U1], R);
      mpfr_mul_2si(s_[U1], zim_[k], -21, R);
      mpfr_add(zim_[k], zim_[k], s_[U1], R);
      return false;
    }
    // ratio q = p/p'
    mpfr_set(s_[QR], s_[PR], R);
    mpfr_set(s_[QI], s_[PI], R);
    cdiv(s_[QR], s_[QI], s_[DR], s_[DI]);
    // sum_{j != k} 1/(z_k - z_j)
    mpfr_set_zero(s_[SR], 1);
    mpfr_set_zero(s_[SI], 1);
    for (std::size_t j = 0; j < d_; ++j) {
      if (j == k) continue;
      mpfr_sub(s_[XR], zre_[k], zre_[j], R);
      mpfr_sub(s_[XI], zim_[k], zim_[j], R);
      mpfr_sqr(s_[T1], s_[XR], R);
      mpfr_sqr(s_[T2], s_[XI], R);
      mpfr_add(s_[N2], s_[T1], s_[T2], R);
      if (mpfr_zero_p(s_[N2])) continue;
      mpfr_ui_div(s_[N2], 1, s_[N2], R);
      mpfr_fma(s_[SR], s_[XR], s_[N2], s_[SR], R);
      mpfr_fms(s_[SI], s_[XI], s_[N2], s_[SI], R);
      mpfr_neg(s_[SI], s_[SI], R);
    }
    // w = q / (1 - q * sum)
    mpfr_set(s_[U1], s_[QR], R);
    mpfr_set(s_[U2], s_[QI], R);
    cmul(s_[U1], s_[U2], s_[SR], s_[SI]);
    mpfr_ui_sub(s_[U1], 1, s_[U1], R);
    mpfr_neg(s_[U2], s_[U2], R);
    mpfr_set(s_[WR], s_[QR], R);
    mpfr_set(s_[WI], s_[QI], R);
    if (!(mpfr_zero_p(s_[U1]) && mpfr_zero_p(s_[U2]))) cdiv(s_[WR], s_[WI], s_[U1], s_[U2]);
    mpfr_sub(zre_[k], zre_[k], s_[WR], R);
    mpfr_sub(zim_[k], zim_[k], s_[WI], R);
    // |w| <= 2^{-bits/2} |z_k|
    mpfr_hypot(s_[U3], s_[WR], s_[WI], R);
    mpfr_hypot(s_[ZN], zre_[k], zim_[k], R);
    mpfr_mul_2si(s_[ZN], s_[ZN], -(bits_ / 2), R);
    return mpfr_lessequal_p(s_[U3], s_[ZN]) != 0;
  }
};

LevelResult solve_level(const std::vector<APComplex>& coeffs, int bits,
                        const std::vector<APComplex>* seed) {
  Aberth solver(coeffs, bits);
  if (seed != nullptr) {
    solver.seed(*seed);
  } else {
    solver.seed_circle();
  }
  return solver.run();
}

std::vector<APComplex> rounded(const std::vector<APComplex>& c, int bits) {
  std::vector<APComplex> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.with_bits(bits));
  return out;
}

// Greedy nearest matching; true when every pair agrees to tol relative.
bool agree(const std::vector<APComplex>& lo, const std::vector<APComplex>& hi, double tol) {
  const std::size_t d = lo.size();
  std::vector<std::complex<double>> a(d), b(d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = lo[i].to_cdouble();
    b[i] = hi[i].to_cdouble();
  }
  std::vector<char> used(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t best = d;
    double best_dist = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j]) continue;
      const double dist = std::abs(a[i] - b[j]);
      if (best == d || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    used[best] = 1;
    // Recheck the matched pair at full precision.
    const Real diff = abs(lo[i].with_bits(hi[best].bits()) - hi[best]);
    if (diff > Real(tol, 64) * abs(hi[best])) return false;
  }
  return true;
}

void sort_roots(std::vector<APComplex>& roots, std::vector<Real>& residuals) {
  std::vector<std::size_t> idx(roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<double, double>> key(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double ang = std::arg(roots[i].to_cdouble());
    if (ang < 0.0) ang += 2.0 * M_PI;
    if (ang >= 2.0 * M_PI) ang = 0.0;
    key[i] = {ang, std::abs(roots[i].to_cdouble())};
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
  std::vector<APComplex> r2;
  std::vector<Real> res2;
  for (auto i : idx) {
    r2.push_back(roots[i]);
    res2.push_back(residuals[i]);
  }
  roots = std::move(r2);
  residuals = std::move(res2);
}

}  // namespace

ZeroSet find_zeros(const std::vector<APComplex>& coeffs, const PrecisionPolicy& policy) {
  policy.validate();
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo].is_zero()) ++lo;
  if (lo == coeffs.size()) throw DomainError("polynomial is identically zero");
  std::size_t hi = coeffs.size() - 1;
  while (coeffs[hi].is_zero()) --hi;
  ZeroSet zs;
  zs.n = static_cast<int>(coeffs.size()) - 1;
  zs.origin_multiplicity = static_cast<int>(lo);
  const std::vector<APComplex> core(coeffs.begin() + static_cast<long>(lo),
                                    coeffs.begin() + static_cast<long>(hi) + 1);
  if (core.size() < 2) {
    if (lo == 0) throw DomainError("polynomial has degree zero");
    zs.bits_used = policy.start_bits;
    return zs;
  }

  int bits = policy.start_bits;
  LevelResult low = solve_level(rounded(core, bits), bits, nullptr);
  int total_sweeps = low.sweeps;
  while (low.stalled) {
    bits *= 2;
    if (bits > policy.max_bits) throw ConvergenceError("root finder stalled up to the precision cap");
    std::vector<APComplex> seed = rounded(low.roots, bits);
    low = solve_level(rounded(core, bits), bits, &seed);
    total_sweeps += low.sweeps;
  }
  for (;;) {
    const int next = 2 * bits;
    if (next > policy.max_bits) {
      throw ConvergenceError("roots did not agree across precision levels below the cap");
    }
    std::vector<APComplex> seed = rounded(low.roots, next);
    LevelResult high = solve_level(rounded(core, next), next, &seed);
    total_sweeps += high.sweeps;
    if (!high.stalled && agree(low.roots, high.roots, policy.agreement_tol)) {
      zs.zeros = std::move(high.roots);
      zs.residuals = std::move(high.residuals);
      zs.bits_used = next;
      zs.sweeps = total_sweeps;
      sort_roots(zs.zeros, zs.residuals);
      return zs;
    }
    bits = next;
    low = std::move(high);
  }
}

ZeroSet find_section_zeros(const SectionPoly& section, const PrecisionPolicy& policy) {
  ZeroSet zs = find_zeros(section.normalized(), policy);
  zs.spec = section.spec;
  zs.n = section.n;
  return zs;
}

std::vector<std::complex<long double>> companion_roots(const std::vector<APComplex>& coeffs) {
  using C = std::complex<long double>;
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo].is_zero()) ++lo;
  std::size_t hi = coeffs.size();
  while (hi > lo && coeffs[hi - 1].is_zero()) --hi;
  if (hi - lo < 2) return {};
  const auto d = static_cast<Eigen::Index>(hi - lo - 1);
  auto to_c = [](const APComplex& z) {
    return C(mpfr_get_ld(z.re().raw(), MPFR_RNDN), mpfr_get_ld(z.im().raw(), MPFR_RNDN));
  };
  const C lead = to_c(coeffs[hi - 1]);
  Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> M =
      Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) M(i, i - 1) = C(1.0L);
  for (Eigen::Index i = 0; i < d; ++i) M(i, d - 1) = -to_c(coeffs[lo + static_cast<std::size_t>(i)]) / lead;
  Eigen::ComplexEigenSolver<decltype(M)> solver(M, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solve failed");
  std::vector<C> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  return out;
}

EKBounds ek_bounds(const std::vector<APComplex>& coeffs) {
  if (coeffs.size() < 2) throw DomainError("Enestrom-Kakeya bounds need degree >= 1");
  for (const auto& c : coeffs) {
    if (!c.is_real() || c.re().sign() <= 0) {
      throw DomainError("Enestrom-Kakeya bounds need real positive coefficients");
    }
  }
  EKBounds b{coeffs[0].re() / coeffs[1].re(), coeffs[0].re() / coeffs[1].re()};
  for (std::size_t k = 1; k + 1 < coeffs.size(); ++k) {
    const Real r = coeffs[k].re() / coeffs[k + 1].re();
    b.alpha = min(b.alpha, r);
    b.beta = max(b.beta, r);
  }
  return b;
}

bool ek_strict(const std::vector<APComplex>& coeffs) {
  const EKBounds b = ek_bounds(coeffs);
  return (b.beta * coeffs[1].re() - coeffs[0].re()).sign() > 0;
}

void write_zeros_csv(std::ostream& out, const ZeroSet& zs, bool header) {
  if (header) out << "family,n,k,re,im,residual\n";
  const std::string fam = zs.spec ? zs.spec->family_name() : std::string("poly");
  for (std::size_t k = 0; k < zs.zeros.size(); ++k) {
    out << fam << ',' << zs.n << ',' << k << ',' << zs.zeros[k].re().to_string(30) << ','
        << zs.zeros[k].im().to_string(30) << ',' << zs.residuals[k].to_string(30) << '\n';
  }
}

}  // namespace szego
