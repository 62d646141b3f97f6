#include "nulq/stellar.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace nulq {

namespace {

constexpr double km_in_cm = 1e5;

double pi() { return std::numbers::pi; }

}  // namespace

PiecewiseFieldProfile::PiecewiseFieldProfile(std::vector<FieldSegment> segments,
                                             double B0_central)
    : segments_(std::move(segments)), B0_central_(B0_central) {
  if (segments_.empty()) {
    throw std::invalid_argument("field profile needs at least one segment");
  }
  if (segments_.front().r_lo_km != 0.0 ||
      !std::isinf(segments_.back().r_hi_km)) {
    throw std::invalid_argument("segments must cover (0, inf)");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].r_lo_km < segments_[i].r_hi_km)) {
      throw std::invalid_argument("segment needs r_lo < r_hi");
    }
    if (segments_[i].amplitude_G < 0.0) {
      throw std::invalid_argument("segment amplitude must be >= 0");
    }
    if (i + 1 < segments_.size() &&
        segments_[i].r_hi_km != segments_[i + 1].r_lo_km) {
      throw std::invalid_argument("segments must be contiguous");
    }
  }
}

PiecewiseFieldProfile PiecewiseFieldProfile::literal_decay(double B0) {
  const double inf = std::numeric_limits<double>::infinity();
  return PiecewiseFieldProfile(
      {{0.0, 850.0, B0, 0.0, false},
       {850.0, 900.0, B0, -0.37, true},
       {900.0, inf, B0, -0.99, true}},
      B0);
}

PiecewiseFieldProfile PiecewiseFieldProfile::continuous_decay(double B0) {
  const double inf = std::numeric_limits<double>::infinity();
  const double A2 = B0 * std::pow(850.0, 0.37);
  const double A3 = A2 * std::pow(900.0, 0.62);
  return PiecewiseFieldProfile({{0.0, 850.0, B0, 0.0, false},
                                {850.0, 900.0, A2, -0.37, true},
                                {900.0, inf, A3, -0.99, true}},
                               B0);
}

PiecewiseFieldProfile PiecewiseFieldProfile::no_field() {
  const double inf = std::numeric_limits<double>::infinity();
  return PiecewiseFieldProfile({{0.0, inf, 0.0, 0.0, true}}, 0.0);
}

std::size_t PiecewiseFieldProfile::segment_index(double r_km) const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (r_km < s.r_hi_km || (s.hi_inclusive && r_km == s.r_hi_km)) return i;
  }
  return segments_.size() - 1;
}

double PiecewiseFieldProfile::operator()(double r_km) const {
  if (r_km <= 0.0) return B0_central_;
  const auto& s = segments_[segment_index(r_km)];
  return s.amplitude_G * std::pow(r_km, s.exponent);
}

double PiecewiseFieldProfile::db2_dr(double r_km) const {
  const auto& s = segments_[segment_index(r_km)];
  if (s.exponent == 0.0) return 0.0;
  const double B = s.amplitude_G * std::pow(r_km, s.exponent);
  return 2.0 * s.exponent * B * B / (r_km * km_in_cm);
}

std::vector<double> PiecewiseFieldProfile::boundary_radii() const {
  std::vector<double> out;
  for (const auto& s : segments_) {
    if (std::isfinite(s.r_hi_km)) out.push_back(s.r_hi_km);
  }
  return out;
}

double wd_field(const PiecewiseFieldProfile& profile, double r_km) {
  if (!(r_km > 0.0)) throw std::invalid_argument("wd_field requires r > 0");
  return profile(r_km);
}

double magnetic_density(const PhysicalConstants& pc, double B_G) {
  if (B_G < 0.0) throw std::invalid_argument("field must be >= 0");
  return B_G * B_G / (8.0 * pi() * pc.c * pc.c);
}

std::string to_string(EosMode mode) {
  return mode == EosMode::three_region ? "three-region" : "lq-local";
}

namespace {

// (rho_e g/cm^3, P_e erg/cm^3) at the local field, per the region rules.
std::pair<double, double> eos_rho_P(const PhysicalConstants& pc,
                                    const PiecewiseFieldProfile& field,
                                    EosMode mode, double mu_e, double eps,
                                    double r_km) {
  if (eps <= 1.0) return {0.0, 0.0};
  const double B = r_km <= 0.0 ? field.B0_central() : field(r_km);
  const auto chandra = [&] {
    const EosPoint p = chandrasekhar_eos(pc, eps, mu_e);
    return std::pair<double, double>{p.rho_mass, p.P_e};
  };
  if (B == 0.0) return chandra();
  LevelScheme scheme = LevelScheme::uniform(pc, B);
  if (mode == EosMode::three_region) {
    const std::size_t idx = r_km <= 0.0 ? 0 : field.segment_index(r_km);
    const std::size_t nseg = field.segments().size();
    if (nseg > 1) {
      if (idx == nseg - 1) return chandra();
      if (idx > 0) {
        const double exponent = field.segments()[idx].exponent;
        scheme = LevelScheme::fit(interpolated_fit_constants(exponent),
                                  B / 1e15);
      } else {
        scheme = LevelScheme::uniform(pc, field.B0_central());
      }
    }
  }
  const double n_e_pm3 = number_density(pc, scheme, eps);
  return {n_e_pm3 * 1e30 * pc.m_p * mu_e, pressure(pc, scheme, eps)};
}

double invert_eps(const PhysicalConstants& pc,
                  const PiecewiseFieldProfile& field, EosMode mode,
                  double mu_e, double P_target, double r_km) {
  auto P_of = [&](double eps) {
    return eos_rho_P(pc, field, mode, mu_e, eps, r_km).second;
  };
  double lo = 1.0, hi = 2.0;
  while (P_of(hi) < P_target) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw StructureError("Fermi energy blow-up inverting the EOS at r = " +
                           std::to_string(r_km) + " km");
    }
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (P_of(mid) < P_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

StellarModel integrate_structure(const PhysicalConstants& pc,
                                 double eps_F_central,
                                 const PiecewiseFieldProfile& field,
                                 const StructureOptions& options) {
  if (!(eps_F_central > 1.0)) {
    throw std::invalid_argument("central eps_F must exceed 1");
  }
  if (!(options.step_km > 0.0)) {
    throw std::invalid_argument("step must be positive");
  }
  if (!(options.mu_e > 0.0)) throw std::invalid_argument("mu_e must be positive");

  const double P_stop =
      options.P_stop >= 0.0
          ? options.P_stop
          : chandrasekhar_eos(pc, 1.0 + 1e-6, options.mu_e).P_e;

  auto eos = [&](double eps, double r_km) {
    return eos_rho_P(pc, field, options.mode, options.mu_e, eps, r_km);
  };
  auto invert = [&](double P_target, double r_km) {
    return invert_eps(pc, field, options.mode, options.mu_e, P_target, r_km);
  };

  StellarModel model;
  model.eps_F_central = eps_F_central;
  const auto [rho_c, P_c] = eos(eps_F_central, 0.0);
  model.rho_e_central = rho_c;
  if (P_c <= P_stop) {
    throw StructureError(
        "central pressure is below the surface cutoff; nothing to integrate");
  }

  const double h = options.step_km * km_in_cm;
  double r = h;
  double P = P_c;  // electron pressure
  double M = 4.0 / 3.0 * pi() * r * r * r *
             (rho_c + magnetic_density(pc, field(options.step_km)));

  auto derivs = [&](double r_cm, double Pe, double Mg) {
    const double r_km = r_cm / km_in_cm;
    const double eps = invert(Pe, r_km);
    const double rho_e = eos(eps, r_km).first;
    const double rho_t = rho_e + magnetic_density(pc, field(r_km));
    const double dP = -pc.G_newton * Mg * rho_t / (r_cm * r_cm) -
                      field.db2_dr(r_km) / (8.0 * pi());
    const double dM = 4.0 * pi() * r_cm * r_cm * rho_t;
    return std::pair<double, double>{dP, dM};
  };

  auto record = [&](double r_cm, double Pe, double Mg) {
    const double r_km = r_cm / km_in_cm;
    const double B = field(r_km);
    const double rho_e = eos(invert(Pe, r_km), r_km).first;
    const double rho_B = magnetic_density(pc, B);
    model.r.push_back(r_km);
    model.M.push_back(Mg);
    model.P.push_back(Pe + B * B / (8.0 * pi()));
    model.rho.push_back(rho_e + rho_B);
    model.B.push_back(B);
    model.P_e.push_back(Pe);
    model.rho_e.push_back(rho_e);
  };

  std::vector<double> boundaries = field.boundary_radii();
  std::size_t bi = 0;
  while (bi < boundaries.size() && boundaries[bi] * km_in_cm <= r) ++bi;

  record(r, P, M);
  long nstep = 0;
  while (true) {
    double h_eff = h;
    bool landed = false;
    if (bi < boundaries.size()) {
      const double rb = boundaries[bi] * km_in_cm;
      if (r < rb && rb <= r + h) {
        h_eff = rb - r;
        landed = true;
      }
    }
    const auto k1 = derivs(r, P, M);
    const auto k2 = derivs(r + 0.5 * h_eff, P + 0.5 * h_eff * k1.first,
                           M + 0.5 * h_eff * k1.second);
    const auto k3 = derivs(r + 0.5 * h_eff, P + 0.5 * h_eff * k2.first,
                           M + 0.5 * h_eff * k2.second);
    const auto k4 =
        derivs(r + h_eff, P + h_eff * k3.first, M + h_eff * k3.second);
    const double Pn =
        P + h_eff / 6.0 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
    const double Mn = M + h_eff / 6.0 *
                              (k1.second + 2.0 * k2.second + 2.0 * k3.second +
                               k4.second);
    if (!std::isfinite(Pn) || Pn <= P_stop) {
      // Locate the surface inside this step along the first-derivative ray,
      // so the recorded surface row sits on the cutoff itself.
      double s = h_eff;
      if (k1.first < 0.0) {
        s = std::min((P - P_stop) / -k1.first, h_eff);
      }
      const double r_s = r + s;
      const double M_s = M + s * k1.second;
      record(r_s, std::max(P + s * k1.first, 0.0), M_s);
      model.surface_r = r_s / km_in_cm;
      model.total_mass = M_s / pc.M_sun;
      return model;
    }
    if (Pn <= 0.0) {
      throw StructureError("electron pressure went negative at r = " +
                           std::to_string((r + h_eff) / km_in_cm) + " km");
    }
    r += h_eff;
    P = Pn;
    M = Mn;
    if (landed) {
      const double rb_km = boundaries[bi];
      r = rb_km * km_in_cm;
      const double B_in = field(rb_km - 1e-9);
      const double B_out = field(rb_km + 1e-9);
      P += (B_in * B_in - B_out * B_out) / (8.0 * pi());
      if (P <= 0.0) {
        throw StructureError(
            "electron pressure went negative crossing the boundary at r = " +
            std::to_string(rb_km) + " km");
      }
      ++bi;
    }
    record(r, P, M);
    if (++nstep > 1'000'000) {
      throw StructureError("no surface found within 1e6 steps");
    }
  }
}

std::vector<CurvePoint> mass_radius_curve(const PhysicalConstants& pc,
                                          const std::vector<double>& eps_F_list,
                                          const PiecewiseFieldProfile& field,
                                          const StructureOptions& options) {
  if (eps_F_list.empty()) {
    throw std::invalid_argument("eps_F list must be non-empty");
  }
  std::vector<CurvePoint> out;
  out.reserve(eps_F_list.size());
  for (const double eps : eps_F_list) {
    CurvePoint p;
    p.eps_F_central = eps;
    try {
      const StellarModel m = integrate_structure(pc, eps, field, options);
      p.ok = true;
      p.mass_msun = m.total_mass;
      p.radius_km = m.surface_r;
      p.rho_c_proxy = m.rho_e_central;
    } catch (const std::exception& ex) {
      p.ok = false;
      p.error = ex.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace nulq
