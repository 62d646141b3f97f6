#pragma once

#include "nulq/constants.hpp"

namespace nulq {

enum class Spin : int { down = -1, up = +1 };

inline int spin_sign(Spin s) { return static_cast<int>(s); }
inline char spin_char(Spin s) { return s == Spin::down ? 'd' : 'u'; }

// Power-law field B(rho) = B0 rho^n, rho in pm, B0 in G pm^-n.
// Eigen-solving requires n > -1; classification accepts any n > -2.
struct FieldProfile {
  double B0;
  double n;
};

struct QuantumNumbers {
  int m = 0;                // azimuthal quantum number
  Spin spin = Spin::down;
  int nu = 0;               // level index (number of radial nodes)
};

// B0 rho^n [G]. Throws std::domain_error for rho <= 0.
double field_strength(const FieldProfile& profile, double rho);

// Azimuthal gauge potential A(rho) = B0 rho^{n+1}/(n+2) [G pm].
double vector_potential(const FieldProfile& profile, double rho);

// The scalar potential of the reduced radial problem
//   alpha u = (-lambda_e^2 d^2/drho^2 + V_eff) u,   alpha = eps^2 - 1,
// precomputed as V(rho) = cf/rho^2 + A2 rho^{2n+2} + Bq rho^n with
//   cf = lambda_e^2 (m^2 - 1/4)
//   A2 = (k B0/(n+2))^2
//   Bq = k lambda_e B0 (-2m/(n+2) + spin).
class EffectivePotential {
 public:
  EffectivePotential(const PhysicalConstants& pc, const FieldProfile& profile,
                     int m, Spin spin);

  double operator()(double rho) const;

  double n() const { return n_; }
  double cf() const { return cf_; }
  double A2() const { return A2_; }
  double Bq() const { return Bq_; }
  double lambda() const { return lambda_; }
  double kB0() const { return kB0_; }  // k B0 [pm^-1 x pm^-n]

 private:
  double n_, cf_, A2_, Bq_, lambda_, kB0_;
};

// Convenience single-point evaluation. Throws std::domain_error for rho <= 0.
double effective_potential(const PhysicalConstants& pc,
                           const FieldProfile& profile,
                           const QuantumNumbers& q, double rho);

enum class Confinement { confining, repulsive };

// Samples V_eff on a geometric grid and reports whether the window contains
// a well: interior values below a tail that still rises at rho_max (bound
// states possible). A flat or falling tail classifies as repulsive. Defined
// for any n > -2, including n <= -1 where no eigen-solve exists.
Confinement classify_confinement(const PhysicalConstants& pc,
                                 const FieldProfile& profile,
                                 const QuantumNumbers& q, double rho_min = 1e-2,
                                 double rho_max = 1e2, int samples = 10000);

}  // namespace nulq
