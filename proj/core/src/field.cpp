#include "nulq/field.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nulq {

namespace {
void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
}
}  // namespace

double field_strength(const FieldProfile& profile, double rho) {
  require_positive_rho(rho);
  return profile.B0 * std::pow(rho, profile.n);
}

double vector_potential(const FieldProfile& profile, double rho) {
  require_positive_rho(rho);
  return profile.B0 * std::pow(rho, profile.n + 1.0) / (profile.n + 2.0);
}

EffectivePotential::EffectivePotential(const PhysicalConstants& pc,
                                       const FieldProfile& profile, int m,
                                       Spin spin) {
  n_ = profile.n;
  lambda_ = pc.lambda_e;
  kB0_ = profile.B0 / (pc.B_c * pc.lambda_e);
  A2_ = kB0_ / (n_ + 2.0);
  A2_ *= A2_;
  Bq_ = kB0_ * lambda_ * (-2.0 * m / (n_ + 2.0) + spin_sign(spin));
  cf_ = lambda_ * lambda_ * (static_cast<double>(m) * m - 0.25);
}

double EffectivePotential::operator()(double rho) const {
  return cf_ / (rho * rho) + A2_ * std::pow(rho, 2.0 * n_ + 2.0) +
         Bq_ * std::pow(rho, n_);
}

double effective_potential(const PhysicalConstants& pc,
                           const FieldProfile& profile,
                           const QuantumNumbers& q, double rho) {
  require_positive_rho(rho);
  return EffectivePotential(pc, profile, q.m, q.spin)(rho);
}

Confinement classify_confinement(const PhysicalConstants& pc,
                                 const FieldProfile& profile,
                                 const QuantumNumbers& q, double rho_min,
                                 double rho_max, int samples) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min) || samples < 100) {
    throw std::invalid_argument("classify_confinement: invalid grid");
  }
  EffectivePotential V(pc, profile, q.m, q.spin);
  std::vector<double> v(samples);
  const double lmin = std::log(rho_min), lmax = std::log(rho_max);
  for (int i = 0; i < samples; ++i) {
    const double rho = std::exp(lmin + (lmax - lmin) * i / (samples - 1));
    v[i] = V(rho);
  }
  // Confining: the grid window contains a well, i.e. the interior dips below
  // a tail that is still growing at rho_max. At m = 0 the well floor sits at
  // the inner edge (the centrifugal term is attractive), so no three-point
  // interior minimum is required. "Growing" means rising with increasing
  // increments on the geometric grid; a tail that saturates toward a finite
  // asymptote (shrinking increments) or falls cannot hold the electron in.
  constexpr double rel = 1e-12;
  const double tail = v[samples - 1];
  const double scale = std::max(std::fabs(tail), 1.0);
  const int k = std::max(1, (samples - 1) / 100);
  const double d1 = v[samples - 1] - v[samples - 1 - k];
  const double d0 = v[samples - 1 - k] - v[samples - 1 - 2 * k];
  const bool growing_tail = d1 > rel * scale && d1 > d0 + rel * scale;
  bool dips_below_tail = false;
  for (int i = 0; i + 1 < samples; ++i) {
    if (v[i] < tail - rel * scale) {
      dips_below_tail = true;
      break;
    }
  }
  return (growing_tail && dips_below_tail) ? Confinement::confining
                                           : Confinement::repulsive;
}

}  // namespace nulq
