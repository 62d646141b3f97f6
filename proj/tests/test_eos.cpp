// Landau-level EOS: f2, level bookkeeping, the three level sources, and the
// non-magnetic oracle.
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nulq/analytic.hpp"
#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/eos.hpp"

using namespace nulq;

namespace {

constexpr double kPmInvCubedToCm = 1e30;  // pm^-3 -> cm^-3

// Textbook uniform-field sums with the explicit degeneracy g_j = 2 - delta_j0
// and spacing 2b, written independently of the LevelScheme bookkeeping.
struct StandardSums {
  double n_e_pm3 = 0.0;
  double P_erg_cc = 0.0;
};

StandardSums standard_uniform_sums(const PhysicalConstants& pc, double B0,
                                   double eps_F) {
  const double b = pc.dimensionless_field(B0, 0.0);
  const double cap = eps_F * eps_F - 1.0;
  const double lam3 = std::pow(pc.lambda_e, 3);
  const double pref = 2.0 * b / (4.0 * std::numbers::pi * std::numbers::pi * lam3);
  StandardSums out;
  for (int j = 0; 2.0 * b * j <= cap; ++j) {
    const double g = (j == 0) ? 1.0 : 2.0;
    const double x = std::sqrt(cap - 2.0 * b * j);
    const double e2 = 1.0 + 2.0 * b * j;
    out.n_e_pm3 += pref * g * x;
    out.P_erg_cc += pref * g * e2 * f2(x / std::sqrt(e2));
  }
  out.P_erg_cc *= pc.m_e_c2 * mev_in_erg * kPmInvCubedToCm;
  return out;
}

}  // namespace

TEST_SUITE("eos") {

TEST_CASE("f2 matches its integral representation") {
  CHECK(f2(0.0) == 0.0);
  CHECK(f2(1.0) == doctest::Approx(0.2664199876767760).epsilon(1e-13));
  // Small arguments follow the odd series z^3/3 - z^5/10 + 3 z^7/56 ...
  const double z1 = 5e-5;
  CHECK(f2(z1) == doctest::Approx(z1 * z1 * z1 / 3.0 -
                                  std::pow(z1, 5) / 10.0)
                      .epsilon(1e-12));
  // ... and the closed form takes over smoothly at the branch point.
  const double z2 = 2e-4;
  const double series2 = z2 * z2 * z2 / 3.0 - std::pow(z2, 5) / 10.0 +
                         3.0 * std::pow(z2, 7) / 56.0;
  CHECK(f2(z2) == doctest::Approx(series2).epsilon(1e-6));
  // Strictly increasing.
  CHECK(f2(0.5) < f2(1.0));
  CHECK(f2(1.0) < f2(2.0));
}

TEST_CASE("x_fermi handles occupation edges") {
  CHECK(x_fermi(17.0, 0.0) == doctest::Approx(std::sqrt(288.0)).epsilon(1e-15));
  CHECK(x_fermi(17.0, 288.0) == 0.0);
  CHECK(x_fermi(1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(x_fermi(17.0, 288.1), std::domain_error);
  CHECK_THROWS_AS(x_fermi(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("uniform scheme exposes the closed-form ladder") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  const double b = pc.dimensionless_field(2e15, 0.0);

  CHECK(scheme.source() == LevelSource::uniform_closed_form);
  CHECK(scheme.B0() == 2e15);
  CHECK(scheme.n() == 0.0);
  CHECK_FALSE(scheme.constants().has_value());

  CHECK(scheme.alpha_down(0) == 0.0);
  for (int nu = 0; nu <= 5; ++nu) {
    CHECK(scheme.alpha_down(nu) ==
          doctest::Approx(2.0 * b * nu).epsilon(1e-14));
    CHECK(scheme.alpha_up(nu) ==
          doctest::Approx(2.0 * b * (nu + 1)).epsilon(1e-14));
    CHECK(level_weight(scheme, nu, Spin::down) ==
          doctest::Approx(2.0 * b).epsilon(1e-12));
    CHECK(level_weight(scheme, nu, Spin::up) ==
          doctest::Approx(2.0 * b).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scheme.alpha(-1, Spin::down), std::invalid_argument);
  CHECK_THROWS_AS(level_weight(scheme, -1, Spin::up), std::invalid_argument);
}

TEST_CASE("max_level counts occupied branches") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  // b = 45.31: eps_F = 17 holds four spin-down and three spin-up levels.
  CHECK(max_level(scheme, 17.0, Spin::down) == 3);
  CHECK(max_level(scheme, 17.0, Spin::up) == 2);
  // eps_F = 5 sits below the first spin-up level.
  CHECK(max_level(scheme, 5.0, Spin::down) == 0);
  CHECK(max_level(scheme, 5.0, Spin::up) == -1);
  CHECK(max_level(scheme, 1.0, Spin::down) == 0);
  CHECK_THROWS_AS(max_level(scheme, 0.9, Spin::down), std::invalid_argument);
}

TEST_CASE("fit scheme evaluates the eigenvalue formula") {
  const auto fc = published_fit_constants(1.0);
  const auto scheme = LevelScheme::fit(fc, 1.0);
  CHECK(scheme.source() == LevelSource::fit_formula);
  REQUIRE(scheme.constants().has_value());
  CHECK(scheme.constants()->C3 == fc.C3);
  for (int nu = 0; nu <= 4; ++nu) {
    CHECK(scheme.alpha_down(nu) ==
          doctest::Approx(fit_alpha(fc, 1.0, nu, Spin::down)).epsilon(1e-14));
    CHECK(scheme.alpha_up(nu) ==
          doctest::Approx(fit_alpha(fc, 1.0, nu, Spin::up)).epsilon(1e-14));
  }
  CHECK(scheme.alpha_down(0) == 0.0);
  CHECK_THROWS_AS(LevelScheme::fit(fc, 0.0), std::invalid_argument);
}

TEST_CASE("computed scheme caches solver levels") {
  const auto& pc = codata();
  const FieldProfile f{1e15, 2.0};
  const auto scheme = LevelScheme::computed(pc, f);
  CHECK(scheme.source() == LevelSource::computed_spectrum);
  CHECK(scheme.B0() == 1e15);
  CHECK(scheme.n() == 2.0);

  CHECK(scheme.alpha_down(0) == 0.0);
  const double a1 = scheme.alpha_down(1);
  CHECK(a1 ==
        doctest::Approx(solve_level(pc, f, {0, Spin::down, 1}).alpha)
            .epsilon(1e-10));
  // Second read comes from the cache and must not drift.
  CHECK(scheme.alpha_down(1) == a1);
  CHECK(scheme.alpha_up(0) ==
        doctest::Approx(solve_level(pc, f, {0, Spin::up, 0}).alpha)
            .epsilon(1e-10));
}

TEST_CASE("level sums reproduce the standard uniform-field EOS") {
  const auto& pc = codata();
  for (const double B0 : {5e14, 2e15}) {
    const auto scheme = LevelScheme::uniform(pc, B0);
    for (const double eps : {1.7, 5.0, 17.0}) {
      const auto ref = standard_uniform_sums(pc, B0, eps);
      CHECK(number_density(pc, scheme, eps) ==
            doctest::Approx(ref.n_e_pm3).epsilon(1e-12));
      CHECK(pressure(pc, scheme, eps) ==
            doctest::Approx(ref.P_erg_cc).epsilon(1e-12));
    }
  }
}

TEST_CASE("frozen uniform-field table row") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  const auto table = eos_table(pc, scheme, 2.0, 17.0, 160);
  REQUIRE(table.rows.size() == 161);
  const EosPoint& last = table.rows.back();
  CHECK(last.eps_F == doctest::Approx(17.0).epsilon(1e-14));
  CHECK(last.n_e == doctest::Approx(2.94060768e33).epsilon(1e-8));
  CHECK(last.rho_mass == doctest::Approx(9.83704975e9).epsilon(1e-8));
  CHECK(last.P_e == doctest::Approx(1.05472434e28).epsilon(1e-8));
  // rho is n_e m_p mu_e by construction.
  CHECK(last.rho_mass ==
        doctest::Approx(last.n_e * pc.m_p * table.mu_e).epsilon(1e-14));
}

TEST_CASE("frozen fit-scheme pressure at n = -0.4") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::fit(published_fit_constants(-0.4), 2.0);
  const auto table = eos_table(pc, scheme, 2.0, 17.0, 160);
  CHECK(table.rows.back().P_e == doctest::Approx(1.48823416e28).epsilon(1e-8));
}

TEST_CASE("eos_table grid and preconditions") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  const auto table = eos_table(pc, scheme, 2.0, 9.0, 10);
  REQUIRE(table.rows.size() == 11);
  CHECK(table.mu_e == 2.0);
  CHECK(table.rows.front().eps_F == 1.0);
  CHECK(table.rows.front().n_e == 0.0);
  CHECK(table.rows.front().P_e == 0.0);
  CHECK(table.rows[5].eps_F == doctest::Approx(5.0).epsilon(1e-14));
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    CHECK(table.rows[i].n_e <= table.rows[i + 1].n_e);
    CHECK(table.rows[i].P_e <= table.rows[i + 1].P_e);
  }
  CHECK_THROWS_AS(eos_table(pc, scheme, 2.0, 1.0, 20), std::invalid_argument);
  CHECK_THROWS_AS(eos_table(pc, scheme, 2.0, 9.0, 5), std::invalid_argument);
}

TEST_CASE("weak field converges to the non-magnetic gas") {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 1e13);
  const double eps = 10.0;
  CHECK(max_level(scheme, eps, Spin::down) > 100);
  const EosPoint ref = chandrasekhar_eos(pc, eps, 2.0);
  const double n_cm3 = number_density(pc, scheme, eps) * kPmInvCubedToCm;
  CHECK(std::fabs(n_cm3 - ref.n_e) / ref.n_e < 0.01);
  const double P = pressure(pc, scheme, eps);
  CHECK(std::fabs(P - ref.P_e) / ref.P_e < 0.01);
}

TEST_CASE("chandrasekhar_eos frozen points") {
  const auto& pc = codata();
  const EosPoint p17 = chandrasekhar_eos(pc, 17.0, 2.0);
  CHECK(p17.rho_mass == doctest::Approx(9.58950357e9).epsilon(1e-8));
  CHECK(p17.rho_mass ==
        doctest::Approx(p17.n_e * pc.m_p * 2.0).epsilon(1e-14));
  const EosPoint brink = chandrasekhar_eos(pc, 1.0 + 1e-6, 2.0);
  CHECK(brink.P_e == doctest::Approx(543292300.0).epsilon(1e-6));
  CHECK(chandrasekhar_eos(pc, 1.0, 2.0).P_e == 0.0);
  CHECK_THROWS_AS(chandrasekhar_eos(pc, 0.99, 2.0), std::invalid_argument);
}

TEST_CASE("level source names") {
  CHECK(to_string(LevelSource::uniform_closed_form) == "uniform-closed-form");
  CHECK(to_string(LevelSource::fit_formula) == "fit-formula");
  CHECK(to_string(LevelSource::computed_spectrum) == "computed-spectrum");
}

}  // TEST_SUITE
