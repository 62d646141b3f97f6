#include "nulq/eos.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nulq {

namespace {

constexpr double pm3_in_cm3 = 1e-30;

double four_pi2() {
  const double pi = std::numbers::pi;
  return 4.0 * pi * pi;  // (2 pi)^2
}

}  // namespace

std::string to_string(LevelSource source) {
  switch (source) {
    case LevelSource::uniform_closed_form:
      return "uniform-closed-form";
    case LevelSource::fit_formula:
      return "fit-formula";
    case LevelSource::computed_spectrum:
      return "computed-spectrum";
  }
  return "unknown";
}

LevelScheme LevelScheme::uniform(const PhysicalConstants& pc, double B0) {
  LevelScheme s;
  s.source_ = LevelSource::uniform_closed_form;
  s.B0_ = B0;
  s.n_ = 0.0;
  s.b_ = pc.dimensionless_field(B0, 0.0);
  return s;
}

LevelScheme LevelScheme::fit(const FitConstants& fc, double B0_15) {
  if (!(B0_15 > 0.0)) throw std::invalid_argument("B0 must be positive");
  LevelScheme s;
  s.source_ = LevelSource::fit_formula;
  s.fc_ = fc;
  s.B0_15_ = B0_15;
  s.B0_ = B0_15 * 1e15;
  s.n_ = fc.n;
  return s;
}

LevelScheme LevelScheme::computed(const PhysicalConstants& pc,
                                  const FieldProfile& profile,
                                  const SolverOptions& options) {
  LevelScheme s;
  s.source_ = LevelSource::computed_spectrum;
  s.pc_ = pc;
  s.profile_ = profile;
  s.options_ = options;
  s.B0_ = profile.B0;
  s.n_ = profile.n;
  return s;
}

double LevelScheme::alpha(int nu, Spin spin) const {
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  switch (source_) {
    case LevelSource::uniform_closed_form:
      return 2.0 * b_ * (nu + (spin == Spin::up ? 1 : 0));
    case LevelSource::fit_formula:
      return fit_alpha(*fc_, B0_15_, nu, spin);
    case LevelSource::computed_spectrum: {
      auto& cache = spin == Spin::down ? cache_down_ : cache_up_;
      while (static_cast<int>(cache.size()) <= nu) {
        const int k = static_cast<int>(cache.size());
        double a =
            solve_level(*pc_, *profile_, {0, spin, k}, options_).alpha;
        // The spin-down ground level is an exact zero mode; the solver
        // recovers it only to its tolerance, so snap it.
        if (k == 0 && spin == Spin::down && std::fabs(a) < 1e-5) a = 0.0;
        cache.push_back(a);
      }
      return cache[nu];
    }
  }
  throw std::logic_error("unreachable");
}

double LevelScheme::alpha_down(int nu) const { return alpha(nu, Spin::down); }
double LevelScheme::alpha_up(int nu) const { return alpha(nu, Spin::up); }

double x_fermi(double eps_F, double alpha) {
  if (!(eps_F >= 1.0)) throw std::invalid_argument("x_fermi requires eps_F >= 1");
  const double under = eps_F * eps_F - 1.0 - alpha;
  if (under < 0.0) {
    throw std::domain_error("level unoccupied at this Fermi energy");
  }
  return std::sqrt(under);
}

int max_level(const LevelScheme& scheme, double eps_F, Spin spin) {
  if (!(eps_F >= 1.0)) throw std::invalid_argument("max_level requires eps_F >= 1");
  const double cap = eps_F * eps_F - 1.0;
  int nu = -1;
  while (scheme.alpha(nu + 1, spin) <= cap) {
    ++nu;
    if (nu > 10'000'000) {
      throw std::runtime_error("more than 1e7 occupied levels");
    }
  }
  return nu;
}

double level_weight(const LevelScheme& scheme, int nu, Spin spin) {
  if (nu < 0) throw std::invalid_argument("nu must be >= 0");
  if (nu == 0) return scheme.alpha(1, spin) - scheme.alpha(0, spin);
  return 0.5 * (scheme.alpha(nu + 1, spin) - scheme.alpha(nu - 1, spin));
}

namespace {

// Alphas 0..nu_m+1 of one branch (nu_m = size - 2), fetched once so the sums
// touch each level a single time; the fit-formula alpha costs two pow calls
// and dominates the structure integrator's profile otherwise.
std::vector<double> occupied_alphas(const LevelScheme& scheme, double eps_F,
                                    Spin spin) {
  if (!(eps_F >= 1.0)) {
    throw std::invalid_argument("level sums require eps_F >= 1");
  }
  const double cap = eps_F * eps_F - 1.0;
  std::vector<double> as;
  as.push_back(scheme.alpha(0, spin));
  while (as.back() <= cap) {
    if (as.size() > 10'000'000) {
      throw std::runtime_error("more than 1e7 occupied levels");
    }
    as.push_back(scheme.alpha(static_cast<int>(as.size()), spin));
  }
  return as;
}

double branch_weight(const std::vector<double>& as, int nu) {
  if (nu == 0) return as[1] - as[0];
  return 0.5 * (as[nu + 1] - as[nu - 1]);
}

}  // namespace

double number_density(const PhysicalConstants& pc, const LevelScheme& scheme,
                      double eps_F) {
  const double lam3 = std::pow(pc.lambda_e, 3);
  double sum = 0.0;
  for (const Spin spin : {Spin::down, Spin::up}) {
    const auto as = occupied_alphas(scheme, eps_F, spin);
    const int nu_m = static_cast<int>(as.size()) - 2;
    for (int nu = 0; nu <= nu_m; ++nu) {
      sum += branch_weight(as, nu) * x_fermi(eps_F, as[nu]);
    }
  }
  return sum / (four_pi2() * lam3);
}

double pressure(const PhysicalConstants& pc, const LevelScheme& scheme,
                double eps_F) {
  const double lam3 = std::pow(pc.lambda_e, 3);
  double sum = 0.0;
  for (const Spin spin : {Spin::down, Spin::up}) {
    const auto as = occupied_alphas(scheme, eps_F, spin);
    const int nu_m = static_cast<int>(as.size()) - 2;
    for (int nu = 0; nu <= nu_m; ++nu) {
      const double a = as[nu];
      const double x = x_fermi(eps_F, a);
      sum += branch_weight(as, nu) * (1.0 + a) * f2(x / std::sqrt(1.0 + a));
    }
  }
  const double p_mev_pm3 = pc.m_e_c2 * sum / (four_pi2() * lam3);
  return mev_to_erg(p_mev_pm3) / pm3_in_cm3;  // erg/cm^3
}

double f2(double z) {
  if (std::fabs(z) < 1e-4) {
    const double z2 = z * z;
    return z * z2 * (1.0 / 3.0 + z2 * (-0.1 + z2 * (3.0 / 56.0)));
  }
  return 0.5 * (z * std::sqrt(1.0 + z * z) - std::asinh(z));
}

EosTable eos_table(const PhysicalConstants& pc, const LevelScheme& scheme,
                   double mu_e, double eps_F_max, int steps) {
  if (!(eps_F_max > 1.0)) throw std::invalid_argument("eps_F_max must exceed 1");
  if (steps < 10) throw std::invalid_argument("steps must be >= 10");
  EosTable t{scheme, mu_e, {}};
  t.rows.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double eps = 1.0 + (eps_F_max - 1.0) * i / steps;
    EosPoint p;
    p.eps_F = eps;
    p.n_e = number_density(pc, scheme, eps) / pm3_in_cm3;
    p.rho_mass = p.n_e * pc.m_p * mu_e;
    p.P_e = pressure(pc, scheme, eps);
    t.rows.push_back(p);
  }
  return t;
}

EosPoint chandrasekhar_eos(const PhysicalConstants& pc, double eps_F,
                           double mu_e) {
  if (!(eps_F >= 1.0)) throw std::invalid_argument("eps_F must be >= 1");
  const double x = std::sqrt(eps_F * eps_F - 1.0);
  const double lam3 = std::pow(pc.lambda_e, 3);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EosPoint p;
  p.eps_F = eps_F;
  p.n_e = x * x * x / (3.0 * pi2 * lam3) / pm3_in_cm3;
  p.rho_mass = p.n_e * pc.m_p * mu_e;
  const double integral =
      x * (2.0 * x * x / 3.0 - 1.0) * std::sqrt(1.0 + x * x) + std::asinh(x);
  p.P_e = mev_to_erg(pc.m_e_c2 * integral / (8.0 * pi2 * lam3)) / pm3_in_cm3;
  return p;
}

}  // namespace nulq
