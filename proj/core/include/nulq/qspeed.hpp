// Mandelstam-Tamm minimum evolution time between the two lowest levels, the
// radial displacement carried by that transition, and the resulting quantum
// speed, swept over the field power-law index.
#pragma once

#include <string>
#include <vector>

#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/field.hpp"

namespace nulq {

struct SpeedResult {
  double n = 0.0;
  double B0 = 0.0;  // G pm^-n
  Spin spin = Spin::down;
  double T_min = 0.0;     // s
  double rho_disp = 0.0;  // pm
  double speed = 0.0;     // pm/s, = rho_disp / T_min
};

// Minimum evolution time between energy eigenstates: T_min = pi hbar /
// (2 dH) with dH = (E1 - E0)/2. Energies are in MeV; throws
// std::invalid_argument unless E1 > E0.
double min_transition_time(const PhysicalConstants& pc, double E0_mev,
                           double E1_mev);

// Quadrature measure for the transition overlap.
enum class DisplacementMeasure {
  radial_2d,  // 2 |int R0 R1 rho^2 drho|  (2-D radial volume element; default)
  radial_1d,  // 2 |int R0 R1 rho   drho|  (plain line element, for comparison)
};

// Transition displacement 2|<0|rho|1>| between two states on the same grid.
// Preconditions: identical grid object, m = 0, same spin, both normalized
// under int |R|^2 rho drho = 1; violations throw std::invalid_argument.
double radial_displacement(
    const EigenState& state0, const EigenState& state1,
    DisplacementMeasure measure = DisplacementMeasure::radial_2d);

// Solves the nu = 0 and nu = 1 levels at m = 0 for the given spin and chains
// them into T_min, rho_disp and speed. Solver failures propagate.
SpeedResult quantum_speed(
    const PhysicalConstants& pc, const FieldProfile& profile, Spin spin,
    double tol = 1e-6,
    DisplacementMeasure measure = DisplacementMeasure::radial_2d);

// One sweep point; `ok` is false when the solver failed at that n, in which
// case `error` holds the diagnostic and `result` only carries (n, B0, spin).
struct SweepEntry {
  double n = 0.0;
  bool ok = false;
  SpeedResult result;
  std::string error;
};

// quantum_speed over a list of powers at fixed B0; failures are recorded
// per point and the sweep continues. Input order is preserved.
std::vector<SweepEntry> speed_sweep(
    const PhysicalConstants& pc, double B0, const std::vector<double>& n_values,
    Spin spin, double tol = 1e-6,
    DisplacementMeasure measure = DisplacementMeasure::radial_2d);

// n in {-0.5, -0.4, ..., 0, 0.5, 1, 2, ..., 8}.
std::vector<double> default_sweep_grid();

}  // namespace nulq
