#pragma once

#include <string_view>

namespace nulq {

// Physical constants in the working unit system used throughout:
// lengths in pm, magnetic fields in G (with the power-law amplitude B0
// carrying G·pm^-n), energies in MeV, bulk (EOS / stellar) quantities in CGS.
//
// The radial eigenproblem depends on the field only through the combination
// k·B0 with k = 1/(B_c·lambda_e); the dimensionless field strength entering
// level spacings is b = B0/B_c.
struct PhysicalConstants {
  double lambda_e;  // reduced Compton wavelength hbar/(m_e c)        [pm]
  double B_c;       // quantizing critical field m_e^2 c^3/(e hbar)   [G]
  double m_e_c2;    // electron rest energy                           [MeV]
  double hbar;      // reduced Planck constant                        [MeV s]
  double c;         // speed of light                                 [cm/s]
  double G_newton;  // Newton's constant                              [cm^3 g^-1 s^-2]
  double m_p;       // proton mass                                    [g]
  double M_sun;     // solar mass                                     [g]
  double m_e;       // electron mass                                  [g]
  double e_esu;     // elementary charge                              [esu]

  // b = B0/B_c: dimensionless field amplitude (any pm^-n factor in B0 is
  // carried symbolically by the caller). Throws std::domain_error for B0 <= 0.
  double dimensionless_field(double B0, double n) const;

  // k = 1/(B_c lambda_e) in G^-1 pm^-1.
  double k() const { return 1.0 / (B_c * lambda_e); }
};

inline constexpr double mev_in_erg = 1.602176634e-6;  // exact (2019 SI)

double mev_to_erg(double mev);
double erg_to_mev(double erg);

// CODATA-2018 values.
const PhysicalConstants& codata();

// Identical to codata() except B_c = 2e15/44.418 G, the calibration implied
// by the published uniform-field fit constant; selecting it reproduces the
// published eigenvalue and bound tables tightly.
const PhysicalConstants& paper_calibrated();

// name is "codata" or "paper"; throws std::invalid_argument otherwise.
const PhysicalConstants& constants_by_name(std::string_view name);

}  // namespace nulq
