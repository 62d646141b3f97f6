#include "nulq/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nulq {

double uniform_alpha(const PhysicalConstants& pc, int nu, int m, Spin spin,
                     double B0) {
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  const double b = pc.dimensionless_field(B0, 0.0);
  const double q = nu + 0.5 * (std::abs(m) - m) + 0.5 +
                   0.5 * spin_sign(spin);
  return 2.0 * b * q;
}

double uniform_energy(const PhysicalConstants& pc, int nu, double B0,
                      double pz_mev_c) {
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  const double b = pc.dimensionless_field(B0, 0.0);
  return std::sqrt(pz_mev_c * pz_mev_c +
                   pc.m_e_c2 * pc.m_e_c2 * (1.0 + 2.0 * nu * b));
}

double variational_ground(const PhysicalConstants& pc,
                          const FieldProfile& profile, Spin spin) {
  if (!(profile.n > -1.0)) {
    throw std::invalid_argument("variational bound requires n > -1");
  }
  if (!(profile.B0 > 0.0)) throw std::invalid_argument("B0 must be positive");
  if (spin == Spin::down) return 0.0;
  const double n = profile.n;
  const double lam = pc.lambda_e;
  const double kB0 = pc.k() * profile.B0;
  const double np2 = n + 2.0;
  return kB0 * lam * 2.0 / std::tgamma(2.0 / np2) *
         std::pow(2.0 * kB0 / (lam * np2 * np2), -n / np2);
}

double fit_alpha(const FitConstants& fc, double B0_15, int nu, Spin spin) {
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  const double e = (2.0 + 2.0 * fc.n) / (fc.n + 2.0);
  const double bracket = 1.0 + spin_sign(spin) * fc.C5 / (nu + fc.C5);
  return fc.C3 * std::pow(B0_15, 2.0 / (fc.n + 2.0)) *
         std::pow(nu + fc.C5, e) * bracket;
}

namespace {

struct FitLevel {
  int nu;
  double sign;  // +1 spin-up, -1 spin-down
  double log_alpha;
};

// Mean log-residual (closed-form log C3) and the residual SSE at fixed C5.
std::pair<double, double> fit_at_c5(const std::vector<FitLevel>& lv, double n,
                                    double log_b, double c5) {
  const double e = (2.0 + 2.0 * n) / (n + 2.0);
  const double base = 2.0 / (n + 2.0) * log_b;
  double mean = 0.0;
  std::vector<double> r(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const double model = base + e * std::log(lv[i].nu + c5) +
                         std::log(1.0 + lv[i].sign * c5 / (lv[i].nu + c5));
    r[i] = lv[i].log_alpha - model;
    mean += r[i];
  }
  mean /= static_cast<double>(lv.size());
  double sse = 0.0;
  for (const double x : r) sse += (x - mean) * (x - mean);
  return {mean, sse};
}

FitResult fit_levels(std::vector<FitLevel> lv, double B0_15, double n) {
  if (lv.size() < 3) {
    throw std::runtime_error("singular fit: fewer than 3 usable levels");
  }
  const double log_b = std::log(B0_15);
  double lo = 0.02, hi = 0.98;
  for (int it = 0; it < 80; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (fit_at_c5(lv, n, log_b, m1).second <
        fit_at_c5(lv, n, log_b, m2).second) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double c5 = 0.5 * (lo + hi);
  const auto [log_c3, sse] = fit_at_c5(lv, n, log_b, c5);
  FitResult out;
  out.constants = {n, std::exp(log_c3), c5};
  out.rms_log_residual = std::sqrt(sse / static_cast<double>(lv.size()));
  out.levels_used = static_cast<int>(lv.size());
  for (const auto& l : lv) {
    const Spin s = l.sign > 0 ? Spin::up : Spin::down;
    const double fit = fit_alpha(out.constants, B0_15, l.nu, s);
    out.max_rel_error = std::max(
        out.max_rel_error, std::fabs(fit / std::exp(l.log_alpha) - 1.0));
  }
  return out;
}

std::vector<FitLevel> collect_levels(const std::vector<double>& alpha_down,
                                     const std::vector<double>& alpha_up,
                                     int nu0) {
  double amax = 0.0;
  for (const double a : alpha_down) amax = std::max(amax, a);
  for (const double a : alpha_up) amax = std::max(amax, a);
  std::vector<FitLevel> lv;
  auto add = [&](const std::vector<double>& as, double sign) {
    for (std::size_t k = 0; k < as.size(); ++k) {
      if (as[k] > 1e-6 * amax) {
        lv.push_back({nu0 + static_cast<int>(k), sign, std::log(as[k])});
      }
    }
  };
  add(alpha_down, -1.0);
  add(alpha_up, +1.0);
  return lv;
}

}  // namespace

FitResult fit_constants(const std::vector<double>& alpha_down,
                        const std::vector<double>& alpha_up, double B0_15,
                        double n, int nu_of_index0) {
  if (alpha_down.size() < 4 || alpha_up.size() < 4) {
    throw std::invalid_argument("fit needs >= 4 levels per spin branch");
  }
  if (!(B0_15 > 0.0)) throw std::invalid_argument("B0 must be positive");
  return fit_levels(collect_levels(alpha_down, alpha_up, nu_of_index0), B0_15,
                    n);
}

FitResult fit_constants(const Spectrum& spec_down, const Spectrum& spec_up,
                        double B0_15, double n) {
  if (spec_down.levels.size() < 4 || spec_up.levels.size() < 4) {
    throw std::invalid_argument("fit needs >= 4 levels per spin branch");
  }
  if (spec_down.m != 0 || spec_up.m != 0) {
    throw std::invalid_argument("fit is defined for m = 0 spectra");
  }
  if (spec_down.spin != Spin::down || spec_up.spin != Spin::up) {
    throw std::invalid_argument("pass the spin-down and spin-up spectra");
  }
  if (std::fabs(spec_down.profile.n - n) > 1e-9 ||
      std::fabs(spec_up.profile.n - n) > 1e-9) {
    throw std::invalid_argument("spectra were computed at a different n");
  }
  if (!(B0_15 > 0.0)) throw std::invalid_argument("B0 must be positive");
  double amax = 0.0;
  for (const auto& st : spec_down.levels) amax = std::max(amax, st.alpha);
  for (const auto& st : spec_up.levels) amax = std::max(amax, st.alpha);
  std::vector<FitLevel> lv;
  auto add = [&](const Spectrum& sp, double sign) {
    for (const auto& st : sp.levels) {
      if (st.alpha > 1e-6 * amax) {
        lv.push_back({st.q.nu, sign, std::log(st.alpha)});
      }
    }
  };
  add(spec_down, -1.0);
  add(spec_up, +1.0);
  return fit_levels(std::move(lv), B0_15, n);
}

namespace {

struct TableRow {
  double n, C3, C5;
};

// Reference constants for B0 in units of 1e15 G pm^-n, m = 0.
constexpr std::array<TableRow, 10> kFitTable{{
    {-0.5, 195.66, 0.484},
    {-0.4, 134.63, 0.486},
    {-0.3, 97.0, 0.488},
    {-0.2, 72.5, 0.4934},
    {-0.1, 56.0, 0.50},
    {0.0, 44.42, 0.50},
    {1.0, 10.95, 0.5156},
    {2.0, 5.72, 0.50},
    {3.0, 3.965, 0.51},
    {4.0, 3.15, 0.51},
}};

}  // namespace

FitConstants published_fit_constants(double n) {
  for (const auto& row : kFitTable) {
    if (std::fabs(row.n - n) < 1e-12) return {row.n, row.C3, row.C5};
  }
  throw std::out_of_range("no reference fit constants tabulated for n = " +
                          std::to_string(n));
}

FitConstants interpolated_fit_constants(double n) {
  if (n < kFitTable.front().n || n > kFitTable.back().n) {
    throw std::out_of_range("n outside the tabulated range [-0.5, 4]");
  }
  for (const auto& row : kFitTable) {
    if (std::fabs(row.n - n) < 1e-12) return {row.n, row.C3, row.C5};
  }
  std::size_t hi = 1;
  while (kFitTable[hi].n < n) ++hi;
  const auto& a = kFitTable[hi - 1];
  const auto& b = kFitTable[hi];
  const double t = (n - a.n) / (b.n - a.n);
  return {n, a.C3 + t * (b.C3 - a.C3), a.C5 + t * (b.C5 - a.C5)};
}

}  // namespace nulq
