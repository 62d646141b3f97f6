// Zero-temperature equation of state of the Landau-quantized electron gas:
// level-resolved number density and pressure sums over both spin branches,
// with the level sequence alpha(nu) supplied by a closed form, the fitted
// eigenvalue formula, or the numerical solver. The non-magnetic degenerate
// gas is included as the weak-field limit and oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nulq/analytic.hpp"
#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/field.hpp"

namespace nulq {

enum class LevelSource { uniform_closed_form, fit_formula, computed_spectrum };

std::string to_string(LevelSource source);

// Supplies the level sequences alpha_down(nu), alpha_up(nu) entering the EOS
// sums (m = 0). Both sequences are strictly increasing and alpha_down(0) = 0.
class LevelScheme {
 public:
  // Exact n = 0 levels, alpha = 2 (B0/B_c) (nu + (1 +- 1)/2).
  static LevelScheme uniform(const PhysicalConstants& pc, double B0);
  // Fitted eigenvalue formula with the given constants; B0_15 is B0 in units
  // of 1e15 G pm^-n.
  static LevelScheme fit(const FitConstants& fc, double B0_15);
  // Levels from the numerical solver, cached lazily per nu. Exact but slow;
  // not safe for concurrent use (the cache grows on demand).
  static LevelScheme computed(const PhysicalConstants& pc,
                              const FieldProfile& profile,
                              const SolverOptions& options = {});

  double alpha_down(int nu) const;
  double alpha_up(int nu) const;
  double alpha(int nu, Spin spin) const;

  LevelSource source() const { return source_; }
  double B0() const { return B0_; }        // G pm^-n
  double n() const { return n_; }
  // Fit constants in use (fit_formula source only).
  const std::optional<FitConstants>& constants() const { return fc_; }

 private:
  LevelScheme() = default;
  LevelSource source_ = LevelSource::uniform_closed_form;
  double B0_ = 0.0;
  double n_ = 0.0;
  double b_ = 0.0;  // B0/B_c (uniform source)
  std::optional<FitConstants> fc_;
  double B0_15_ = 0.0;
  std::optional<PhysicalConstants> pc_;
  std::optional<FieldProfile> profile_;
  SolverOptions options_;
  mutable std::vector<double> cache_down_, cache_up_;
};

// Dimensionless Fermi momentum of one level: sqrt(eps_F^2 - 1 - alpha).
// Throws std::domain_error when the level is unoccupied (callers filter via
// max_level); eps_F < 1 throws std::invalid_argument.
double x_fermi(double eps_F, double alpha);

// Largest nu with alpha(nu) <= eps_F^2 - 1 on the given spin branch, or -1
// when even nu = 0 is unoccupied.
int max_level(const LevelScheme& scheme, double eps_F, Spin spin);

// Degeneracy weight beta(nu) = (alpha(nu+1) - alpha(nu-1))/2 for nu >= 1;
// the one-sided beta(0) = alpha(1) - alpha(0) reproduces the standard
// uniform-field degeneracy counting exactly.
double level_weight(const LevelScheme& scheme, int nu, Spin spin);

// n_e = 1/((2 pi)^2 lambda_e^3) * sum over spins, nu <= nu_m of beta x_F,
// in pm^-3.
double number_density(const PhysicalConstants& pc, const LevelScheme& scheme,
                      double eps_F);

// P_e = m_e c^2/((2 pi)^2 lambda_e^3) * sum of beta (1+alpha)
// f2[x_F/sqrt(1+alpha)], exported in erg/cm^3.
double pressure(const PhysicalConstants& pc, const LevelScheme& scheme,
                double eps_F);

// f2(z) = (z sqrt(1+z^2) - asinh z)/2 = int_0^z t^2/sqrt(1+t^2) dt.
double f2(double z);

struct EosPoint {
  double eps_F = 0.0;
  double n_e = 0.0;       // cm^-3
  double rho_mass = 0.0;  // g/cm^3, = n_e m_p mu_e
  double P_e = 0.0;       // erg/cm^3
};

struct EosTable {
  LevelScheme scheme;
  double mu_e = 2.0;
  std::vector<EosPoint> rows;
};

// Uniform grid of steps+1 rows over eps_F in [1, eps_F_max]. Preconditions:
// eps_F_max > 1, steps >= 10.
EosTable eos_table(const PhysicalConstants& pc, const LevelScheme& scheme,
                   double mu_e, double eps_F_max, int steps);

// Non-magnetic zero-temperature degenerate electron gas at the same
// (eps_F, mu_e): x = sqrt(eps_F^2-1), n_e = x^3/(3 pi^2 lambda_e^3),
// P_e = m_e c^2/(8 pi^2 lambda_e^3) [x(2x^2/3 - 1)sqrt(1+x^2) + asinh x].
EosPoint chandrasekhar_eos(const PhysicalConstants& pc, double eps_F,
                           double mu_e);

}  // namespace nulq
