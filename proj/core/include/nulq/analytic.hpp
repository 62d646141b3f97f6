// Closed-form results that bracket and cross-check the numerical solver:
// the uniform-field (n = 0) level formula, the variational upper bound on the
// ground level for general n, and the two-constant fitted eigenvalue formula
// together with the least-squares fitting of its constants.
#pragma once

#include <vector>

#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/field.hpp"

namespace nulq {

// Uniform-field eigenvalue alpha = 2 k lambda_e B0 (nu + |m|/2 - m/2 + 1/2
// +- 1/2). Exact for n = 0; the spin-down m >= 0 ground level is exactly 0.
double uniform_alpha(const PhysicalConstants& pc, int nu, int m, Spin spin,
                     double B0);

// Level energy in MeV for the uniform field: E^2 = p_z^2 c^2 + m_e^2 c^4
// (1 + 2 nu B0 / B_c). p_z c is passed in MeV.
double uniform_energy(const PhysicalConstants& pc, int nu, double B0,
                      double pz_mev_c = 0.0);

// Variational upper bound on the ground-level alpha for a power-law field,
//   alpha <= k B0 lambda_e (1 +- 1) / Gamma(2/(n+2))
//           * (2 k B0 / (lambda_e (n+2)^2))^{-n/(n+2)},
// from a Gaussian-type trial state. Spin-down gives exactly 0; at n = 0 the
// spin-up bound coincides with the exact uniform-field value. Requires
// profile.n > -1.
double variational_ground(const PhysicalConstants& pc,
                          const FieldProfile& profile, Spin spin);

// Constants of the fitted eigenvalue formula
//   alpha = C3 B0^{2/(n+2)} (nu + C5)^{(2+2n)/(n+2)} [1 +- C5/(nu + C5)]
// with B0 expressed in units of 1e15 G pm^-n.
struct FitConstants {
  double n = 0.0;
  double C3 = 0.0;  // > 0
  double C5 = 0.0;  // in (0, 1)
};

// Evaluates the fitted formula. B0_15 is B0 in units of 1e15 G pm^-n; the
// spin-down nu = 0 value is exactly 0.
double fit_alpha(const FitConstants& fc, double B0_15, int nu, Spin spin);

struct FitResult {
  FitConstants constants;
  double rms_log_residual = 0.0;  // RMS of log(alpha_fit) - log(alpha)
  double max_rel_error = 0.0;     // max |alpha_fit/alpha - 1| over used levels
  int levels_used = 0;
};

// Least-squares fit of (C3, C5) in log space over the levels of both spin
// branches, excluding identically-zero levels (the spin-down ground state).
// C3 has a closed form given C5; C5 is located by ternary search in (0, 1).
// Preconditions: both spectra have >= 4 levels, m = 0, matching n.
// Throws std::runtime_error if fewer than 3 usable levels remain.
FitResult fit_constants(const Spectrum& spec_down, const Spectrum& spec_up,
                        double B0_15, double n);

// Same fit from bare eigenvalue arrays indexed by nu (alpha_down[k] and
// alpha_up[k] belong to nu = nu_of_index0 + k).
FitResult fit_constants(const std::vector<double>& alpha_down,
                        const std::vector<double>& alpha_up, double B0_15,
                        double n, int nu_of_index0 = 0);

// Reference constants tabulated for n in {-0.5, -0.4, ..., 0, 1, 2, 3, 4}.
// Exact-row lookup; throws std::out_of_range for other n.
FitConstants published_fit_constants(double n);

// Linear interpolation of the reference table between bracketing rows;
// throws std::out_of_range outside the tabulated range.
FitConstants interpolated_fit_constants(double n);

}  // namespace nulq
