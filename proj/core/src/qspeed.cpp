#include "nulq/qspeed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nulq {

namespace {

double trapezoid(const std::vector<double>& f, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 0.5 * (f[i] + f[i + 1]) * (x[i + 1] - x[i]);
  }
  return s;
}

bool normalized(const EigenState& st) {
  std::vector<double> u2(st.u.size());
  for (std::size_t i = 0; i < st.u.size(); ++i) u2[i] = st.u[i] * st.u[i];
  return std::fabs(trapezoid(u2, st.grid->rho) - 1.0) < 1e-6;
}

}  // namespace

double min_transition_time(const PhysicalConstants& pc, double E0_mev,
                           double E1_mev) {
  if (!(E1_mev > E0_mev)) {
    throw std::invalid_argument("min_transition_time requires E1 > E0");
  }
  const double dH = 0.5 * (E1_mev - E0_mev);
  return std::numbers::pi * pc.hbar / (2.0 * dH);
}

double radial_displacement(const EigenState& state0, const EigenState& state1,
                           DisplacementMeasure measure) {
  if (state0.grid != state1.grid) {
    throw std::invalid_argument("states must share one radial grid");
  }
  if (state0.q.m != 0 || state1.q.m != 0) {
    throw std::invalid_argument("displacement is defined for m = 0 states");
  }
  if (state0.q.spin != state1.q.spin) {
    throw std::invalid_argument("states must be on the same spin branch");
  }
  if (!normalized(state0) || !normalized(state1)) {
    throw std::invalid_argument("states must be normalized");
  }
  const auto& rho = state0.grid->rho;
  std::vector<double> f(rho.size());
  // In terms of u = sqrt(rho) R: R0 R1 rho^2 = u0 u1 rho, R0 R1 rho = u0 u1.
  for (std::size_t i = 0; i < rho.size(); ++i) {
    f[i] = state0.u[i] * state1.u[i] *
           (measure == DisplacementMeasure::radial_2d ? rho[i] : 1.0);
  }
  return 2.0 * std::fabs(trapezoid(f, rho));
}

SpeedResult quantum_speed(const PhysicalConstants& pc,
                          const FieldProfile& profile, Spin spin, double tol,
                          DisplacementMeasure measure) {
  SolverOptions opt;
  opt.tol = tol;
  const Spectrum sp = spectrum(pc, profile, 0, spin, 1, opt);
  const EigenState& s0 = sp.levels[0];
  const EigenState& s1 = sp.levels[1];
  SpeedResult out;
  out.n = profile.n;
  out.B0 = profile.B0;
  out.spin = spin;
  out.T_min =
      min_transition_time(pc, s0.energy_mev(pc), s1.energy_mev(pc));
  out.rho_disp = radial_displacement(s0, s1, measure);
  out.speed = out.rho_disp / out.T_min;
  return out;
}

std::vector<SweepEntry> speed_sweep(const PhysicalConstants& pc, double B0,
                                    const std::vector<double>& n_values,
                                    Spin spin, double tol,
                                    DisplacementMeasure measure) {
  std::vector<SweepEntry> out;
  out.reserve(n_values.size());
  for (const double n : n_values) {
    SweepEntry e;
    e.n = n;
    try {
      e.result = quantum_speed(pc, FieldProfile{B0, n}, spin, tol, measure);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.ok = false;
      e.error = ex.what();
      e.result.n = n;
      e.result.B0 = B0;
      e.result.spin = spin;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<double> default_sweep_grid() {
  return {-0.5, -0.4, -0.3, -0.2, -0.1, 0.0, 0.5, 1.0,
          2.0,  3.0,  4.0,  5.0,  6.0,  7.0, 8.0};
}

}  // namespace nulq
