#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nulq/field.hpp"

namespace nulq {

struct RadialGrid {
  enum class Spacing { uniform, geometric };

  std::vector<double> rho;  // strictly increasing, first point > 0
  Spacing spacing = Spacing::geometric;

  std::size_t size() const { return rho.size(); }
};

// Geometric grid with `points` samples between rho_min and rho_max.
// Grids are validated (>= 1000 points, strictly increasing, positive).
std::shared_ptr<const RadialGrid> make_geometric_grid(double rho_min,
                                                      double rho_max,
                                                      std::size_t points);

// One bound level. u = sqrt(rho) R is the reduced radial function, sampled on
// grid->rho and normalized so that the trapezoid of u^2 drho (equivalently
// |R|^2 rho drho) equals 1. Sign convention: u > 0 near the origin.
struct EigenState {
  QuantumNumbers q;
  double alpha = 0.0;  // dimensionless eigenvalue, eps^2 - 1
  std::shared_ptr<const RadialGrid> grid;
  std::vector<double> u;
  std::vector<double> R;  // u/sqrt(rho)
  bool norm_checked = false;

  double epsilon() const;                              // sqrt(1 + alpha)
  double energy_mev(const PhysicalConstants& pc) const;  // m_e c^2 epsilon
};

struct Spectrum {
  FieldProfile profile;
  int m = 0;
  Spin spin = Spin::down;
  std::vector<EigenState> levels;  // nu = 0..nu_max, alpha non-decreasing
};

struct SolverOptions {
  double tol = 1e-6;     // relative eigenvalue tolerance
  std::size_t n_base = 0;  // base grid size; 0 = automatic (20001; 30001 for n<0)
  double rho_min = 0.0;    // inner grid start [pm]; 0 = automatic (n-dependent)
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shooting-and-matching solution of
//   alpha u = (-lambda_e^2 d^2/drho^2 + V_eff) u
// for the level with exactly q.nu interior nodes. Throws SolverError with a
// bracket diagnostic if no such level is found.
EigenState solve_level(const PhysicalConstants& pc, const FieldProfile& profile,
                       const QuantumNumbers& q, double tol);
EigenState solve_level(const PhysicalConstants& pc, const FieldProfile& profile,
                       const QuantumNumbers& q,
                       const SolverOptions& options = {});

// Levels nu = 0..nu_max for one (m, spin) branch, all sampled on one shared
// grid (sized for the highest level) so that downstream overlap integrals can
// use common abscissae.
Spectrum spectrum(const PhysicalConstants& pc, const FieldProfile& profile,
                  int m, Spin spin, int nu_max,
                  const SolverOptions& options = {});

// Spin labels of the lowest `count` levels when both spin branches at fixed m
// are merged and sorted by alpha. Near-degenerate neighbours
// (|d alpha| <= tie_tol * max(alpha, 1)) are recorded as ties.
struct SpinPattern {
  std::string labels;                  // e.g. "dududu"
  std::vector<std::size_t> tie_after;  // label i tied with label i+1
  std::vector<double> alphas;

  // Tie groups parenthesized, e.g. "d(du)(du)(du)" for a uniform field.
  std::string annotated() const;
};

SpinPattern spin_pattern(const PhysicalConstants& pc,
                         const FieldProfile& profile, int m, int count,
                         double tie_tol = 1e-5,
                         const SolverOptions& options = {});

// Strict sign changes of a sampled function, ignoring samples below
// 1e-10 * max|u| (round-off oscillation guard).
int count_nodes(const std::vector<double>& u);

}  // namespace nulq
