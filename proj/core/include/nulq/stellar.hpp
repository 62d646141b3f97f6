// Newtonian hydrostatic structure of a magnetized white dwarf: a piecewise
// power-law field profile B(r), the fieldwise pressure/density split
// d(P_e + B^2/8pi)/dr = -G M (rho_e + rho_B)/r^2, and mass-radius curves
// parameterized by the central Fermi energy.
#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nulq/constants.hpp"
#include "nulq/eos.hpp"

namespace nulq {

// One branch B(r) = amplitude * (r / 1 km)^exponent on [r_lo, r_hi). When
// hi_inclusive is set the right endpoint belongs to this branch instead of
// the next one (the reference profile's middle branch covers 850-900 km with
// both endpoints).
struct FieldSegment {
  double r_lo_km = 0.0;
  double r_hi_km = std::numeric_limits<double>::infinity();
  double amplitude_G = 0.0;
  double exponent = 0.0;
  bool hi_inclusive = true;
};

class PiecewiseFieldProfile {
 public:
  // Segments must be ordered and cover (0, inf) without gaps.
  PiecewiseFieldProfile(std::vector<FieldSegment> segments, double B0_central);

  // Reference profile: constant B0 inside 850 km, then B0 (r/1 km)^-0.37 up
  // to 900 km, then B0 (r/1 km)^-0.99. The amplitudes are all B0, so the
  // field value drops discontinuously at both interior boundaries; the
  // surface field at ~2000 km comes out near 1e12 G for B0 = 2e15 G.
  static PiecewiseFieldProfile literal_decay(double B0 = 2e15);
  // Same exponents with amplitudes rescaled so B(r) is continuous.
  static PiecewiseFieldProfile continuous_decay(double B0 = 2e15);
  static PiecewiseFieldProfile no_field();

  double operator()(double r_km) const;  // field in G
  // d(B^2)/dr in G^2/cm within the segment containing r.
  double db2_dr(double r_km) const;
  // Interior segment boundaries (finite r_hi), in km; the field may jump
  // across these.
  std::vector<double> boundary_radii() const;
  std::size_t segment_index(double r_km) const;

  const std::vector<FieldSegment>& segments() const { return segments_; }
  double B0_central() const { return B0_central_; }

 private:
  std::vector<FieldSegment> segments_;
  double B0_central_ = 0.0;
};

double wd_field(const PiecewiseFieldProfile& profile, double r_km);

// rho_B = B^2 / (8 pi c^2) in g/cm^3.
double magnetic_density(const PhysicalConstants& pc, double B_G);

// How the electron EOS follows the field profile:
//  three_region - uniform-field Landau EOS at B0_central in the innermost
//                 segment, fitted-formula levels (constants interpolated at
//                 the segment exponent) with the local field in interior
//                 segments, non-magnetic gas in the outermost segment;
//  lq_local     - uniform-field Landau EOS evaluated with the local field
//                 value everywhere.
// Wherever the field vanishes the non-magnetic gas is used.
enum class EosMode { three_region, lq_local };

std::string to_string(EosMode mode);

struct StructureOptions {
  EosMode mode = EosMode::three_region;
  double step_km = 0.1;
  // Electron-pressure surface cutoff; < 0 selects the default, the
  // non-magnetic pressure at eps_F = 1 + 1e-6.
  double P_stop = -1.0;
  double mu_e = 2.0;
};

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Radial profiles of one integrated model. P and rho are the totals
// (electron + magnetic); P_e and rho_e are the electron parts. The total
// pressure is continuous across field jumps (P_e absorbs -d(B^2/8pi)),
// and rows at the interior boundaries carry the post-jump state.
struct StellarModel {
  std::vector<double> r;      // km
  std::vector<double> M;      // enclosed mass, g
  std::vector<double> P;      // total pressure, erg/cm^3
  std::vector<double> rho;    // total density, g/cm^3
  std::vector<double> B;      // G
  std::vector<double> P_e;    // erg/cm^3
  std::vector<double> rho_e;  // g/cm^3
  double surface_r = 0.0;     // km
  double total_mass = 0.0;    // M_sun
  double eps_F_central = 0.0;
  double rho_e_central = 0.0;  // g/cm^3
};

// Fixed-step fourth-order outward integration from r = step, landing exactly
// on segment boundaries and applying the electron-pressure jump there; stops
// when P_e reaches P_stop (final step located by bisection). Throws
// StructureError when P_e turns negative inside a segment or when the
// central pressure is already below the cutoff.
StellarModel integrate_structure(const PhysicalConstants& pc,
                                 double eps_F_central,
                                 const PiecewiseFieldProfile& field,
                                 const StructureOptions& options = {});

struct CurvePoint {
  double eps_F_central = 0.0;
  bool ok = false;
  double mass_msun = 0.0;
  double radius_km = 0.0;
  double rho_c_proxy = 0.0;  // central electron mass density, g/cm^3
  std::string error;
};

// One integration per central Fermi energy; failures are recorded per point
// and the curve continues.
std::vector<CurvePoint> mass_radius_curve(const PhysicalConstants& pc,
                                          const std::vector<double>& eps_F_list,
                                          const PiecewiseFieldProfile& field,
                                          const StructureOptions& options = {});

}  // namespace nulq
