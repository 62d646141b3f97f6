// Independent eigenvalue oracle: a staggered finite-volume discretization of
// the cylindrical radial equation in its original R(rho) form (no sqrt(rho)
// reduction), with a hard wall at rho_max, solved by Sturm-sequence bisection
// on the symmetric tridiagonal matrix. Nothing here touches the shooting
// code paths under test.
#pragma once

#include <vector>

#include "nulq/constants.hpp"
#include "nulq/field.hpp"

namespace nulq_test {

// Lowest `count` eigenvalues alpha on cells r_i = (i + 1/2) h, h = rho_max/N.
std::vector<double> fd_eigenvalues(const nulq::PhysicalConstants& pc,
                                   const nulq::FieldProfile& profile, int m,
                                   nulq::Spin spin, double rho_max, int cells,
                                   int count);

// Richardson extrapolation (4 e_{2N} - e_N) / 3 over cell counts N and 2N,
// cancelling the scheme's O(h^2) error.
std::vector<double> fd_eigenvalues_richardson(
    const nulq::PhysicalConstants& pc, const nulq::FieldProfile& profile,
    int m, nulq::Spin spin, double rho_max, int cells, int count);

}  // namespace nulq_test
