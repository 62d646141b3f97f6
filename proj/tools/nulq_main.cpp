// Batch front end: every subcommand computes one pipeline stage, writes
// plot-ready CSV tables into --out-dir, and records a JSON run manifest
// (schema: docs/manifest.schema.json) naming every output it produced.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nulq/analytic.hpp"
#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/eos.hpp"
#include "nulq/field.hpp"
#include "nulq/manifest.hpp"
#include "nulq/qspeed.hpp"
#include "nulq/stellar.hpp"
#include "nulq/version.hpp"

#include <json.hpp>

namespace fs = std::filesystem;
using namespace nulq;

namespace {

// Flag combinations that parse but make no sense; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
  }
  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

struct Common {
  std::string constants = "codata";
  std::string out_dir = ".";
  bool gnuplot = false;

  const PhysicalConstants& pc() const { return constants_by_name(constants); }
  std::string convention() const {
    return constants == "paper" ? "paper-calibrated" : "codata";
  }
  fs::path dir() const { return out_dir; }
  fs::path prepare() const {
    fs::create_directories(out_dir);
    return out_dir;
  }
};

void warn(const std::string& msg) {
  std::fprintf(stderr, "warning: %s\n", msg.c_str());
}

// Manifests sit next to the files they describe, so outputs are recorded by
// bare name rather than by the path the tool happened to be launched with.
void add_out(RunManifest& man, const fs::path& path) {
  man.add_output(path);
  man.outputs.back().path = path.filename().string();
}

std::string spin_name(Spin s) { return s == Spin::down ? "down" : "up"; }

std::string join_doubles(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += fmt(xs[i]);
  }
  return s;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// ---------------------------------------------------------------- veff ----

struct VeffOpts {
  double B0 = 0.0;
  std::vector<double> ns{1.0, 0.0, -0.5, -1.0, -1.1};
  int m = 0;
  std::string spin = "down";
  double rho_min = 1e-2;
  double rho_max = 1e2;
  int points = 400;
};

void run_veff(const Common& common, const VeffOpts& o) {
  const auto& pc = common.pc();
  const Spin spin = o.spin == "up" ? Spin::up : Spin::down;
  const fs::path dir = common.prepare();
  RunManifest man = make_manifest("veff", common.convention());
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("n", join_doubles(o.ns));
  man.add_parameter("m", std::to_string(o.m));
  man.add_parameter("spin", o.spin);
  man.add_parameter("rho_min", fmt(o.rho_min));
  man.add_parameter("rho_max", fmt(o.rho_max));
  man.add_parameter("points", std::to_string(o.points));

  std::vector<std::string> files;
  for (const double n : o.ns) {
    if (n == -2.0) {
      warn("n=-2 skipped: the gauge potential is undefined there");
      man.notes.push_back("n=-2 skipped: gauge potential undefined");
      continue;
    }
    if (n <= -1.0) {
      warn("n=" + fmt(n) +
           ": no bound-state solver is defined for n <= -1; "
           "potential written for inspection only");
      man.notes.push_back("n=" + fmt(n) +
                          ": classification-only (no eigen-solve for n <= -1)");
    }
    const FieldProfile profile{o.B0, n};
    const EffectivePotential V(pc, profile, o.m, spin);
    const std::string name = "veff_n" + fmt(n) + ".csv";
    CsvWriter csv(dir / name, "rho_pm,veff");
    const double la = std::log(o.rho_min), lb = std::log(o.rho_max);
    for (int i = 0; i < o.points; ++i) {
      const double rho = std::exp(la + (lb - la) * i / (o.points - 1));
      csv.row({fmt(rho), fmt(V(rho))});
    }
    files.push_back(name);
    const Confinement c =
        classify_confinement(pc, profile, {o.m, spin, 0}, o.rho_min, o.rho_max);
    man.add_result("classification_n" + fmt(n),
                   c == Confinement::confining ? "confining" : "repulsive");
  }
  for (const auto& f : files) add_out(man, dir / f);
  if (common.gnuplot && !files.empty()) {
    std::string gp = "set datafile separator comma\nset logscale x\n"
                     "set xlabel 'rho [pm]'\nset ylabel 'V_eff'\nplot ";
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (i) gp += ", ";
      gp += "'" + files[i] + "' using 1:2 with lines title '" + files[i] + "'";
    }
    gp += "\n";
    write_text(dir / "veff.gp", gp);
    add_out(man, dir / "veff.gp");
  }
  write_manifest(man, dir / "veff_manifest.json");
}

// ------------------------------------------------------------ spectrum ----

struct SpectrumOpts {
  double B0 = 0.0;
  double n = 0.0;
  int m = 0;
  int nu_max = 5;
  double tol = 1e-6;
};

void run_spectrum(const Common& common, const SpectrumOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  SolverOptions sopt;
  sopt.tol = o.tol;
  const FieldProfile profile{o.B0, o.n};
  const Spectrum down = spectrum(pc, profile, o.m, Spin::down, o.nu_max, sopt);
  const Spectrum up = spectrum(pc, profile, o.m, Spin::up, o.nu_max, sopt);

  CsvWriter csv(dir / "spectrum.csv", "nu,spin,alpha");
  for (const auto& st : down.levels) {
    csv.row({std::to_string(st.q.nu), "down", fmt(st.alpha)});
  }
  for (const auto& st : up.levels) {
    csv.row({std::to_string(st.q.nu), "up", fmt(st.alpha)});
  }

  // Merged orderings of the lowest levels, with near-degenerate ties marked.
  std::vector<std::pair<double, char>> merged;
  for (const auto& st : down.levels) merged.push_back({st.alpha, 'd'});
  for (const auto& st : up.levels) merged.push_back({st.alpha, 'u'});
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  merged.resize(o.nu_max + 1);
  SpinPattern pat;
  for (const auto& [a, c] : merged) {
    pat.labels += c;
    pat.alphas.push_back(a);
  }
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double scale = std::max(std::fabs(merged[i + 1].first), 1.0);
    if (std::fabs(merged[i + 1].first - merged[i].first) <= 1e-5 * scale) {
      pat.tie_after.push_back(i);
    }
  }

  RunManifest man = make_manifest("spectrum", common.convention());
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("n", fmt(o.n));
  man.add_parameter("m", std::to_string(o.m));
  man.add_parameter("nu_max", std::to_string(o.nu_max));
  man.add_parameter("tol", fmt(o.tol));
  man.add_result("pattern", pat.labels);
  man.add_result("pattern_annotated", pat.annotated());
  if (!pat.tie_after.empty()) {
    std::string note = "degenerate pairs (within 1e-5 relative) after merged "
                       "positions:";
    for (const auto i : pat.tie_after) note += " " + std::to_string(i);
    man.notes.push_back(note);
  }
  add_out(man, dir / "spectrum.csv");
  if (common.gnuplot) {
    write_text(dir / "spectrum.gp",
               "set datafile separator comma\nset xlabel 'nu'\n"
               "set ylabel 'alpha'\n"
               "plot 'spectrum.csv' every ::1 using 1:3 with points "
               "title 'levels'\n");
    add_out(man, dir / "spectrum.gp");
  }
  write_manifest(man, dir / "spectrum_manifest.json");
}

// ----------------------------------------------------------------- fit ----

struct FitOpts {
  double B0 = 0.0;
  double n = 0.0;
  int nu_max = 9;
  double tol = 1e-8;
};

void run_fit(const Common& common, const FitOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  if (o.nu_max < 4) throw UsageError("fit needs --nu-max >= 4");
  SolverOptions sopt;
  sopt.tol = o.tol;
  const FieldProfile profile{o.B0, o.n};
  const Spectrum down = spectrum(pc, profile, 0, Spin::down, o.nu_max, sopt);
  const Spectrum up = spectrum(pc, profile, 0, Spin::up, o.nu_max, sopt);
  // The fit uses nu >= 1 of both branches: the spin-down ground level is an
  // exact zero (excluded by definition) and its spin-up partner is dropped
  // symmetrically so both branches constrain the same index range.
  std::vector<double> ad, au;
  for (int nu = 1; nu <= o.nu_max; ++nu) {
    ad.push_back(down.levels[nu].alpha);
    au.push_back(up.levels[nu].alpha);
  }
  const FitResult fit = fit_constants(ad, au, o.B0 / 1e15, o.n, 1);

  CsvWriter csv(dir / "fit.csv", "n,C3,C5");
  csv.row({fmt(o.n), fmt(fit.constants.C3), fmt(fit.constants.C5)});

  RunManifest man = make_manifest("fit", common.convention());
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("n", fmt(o.n));
  man.add_parameter("nu_max", std::to_string(o.nu_max));
  man.add_parameter("tol", fmt(o.tol));
  man.add_result("C3", fmt(fit.constants.C3));
  man.add_result("C5", fmt(fit.constants.C5));
  man.add_result("rms_log_residual", fmt(fit.rms_log_residual));
  man.add_result("levels_used", std::to_string(fit.levels_used));
  try {
    const FitConstants ref = published_fit_constants(o.n);
    man.add_result("C3_reference", fmt(ref.C3));
    man.add_result("C5_reference", fmt(ref.C5));
    man.add_result("C3_rel_diff", fmt(fit.constants.C3 / ref.C3 - 1.0));
    man.add_result("C5_abs_diff", fmt(fit.constants.C5 - ref.C5));
  } catch (const std::out_of_range&) {
    // no reference row for this n
  }
  add_out(man, dir / "fit.csv");
  write_manifest(man, dir / "fit_manifest.json");
}

// --------------------------------------------------------- variational ----

struct VariationalOpts {
  double B0 = 0.0;
  std::vector<double> ns{-0.5, -0.4, -0.3, -0.2, -0.1, 0.0, 1.0, 2.0, 3.0, 4.0};
  double tol = 1e-8;
};

void run_variational(const Common& common, const VariationalOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  SolverOptions sopt;
  sopt.tol = o.tol;
  CsvWriter csv(dir / "variational.csv", "n,alpha_computed,alpha_bound");
  RunManifest man = make_manifest("variational", common.convention());
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("n", join_doubles(o.ns));
  man.add_parameter("tol", fmt(o.tol));
  for (const double n : o.ns) {
    const FieldProfile profile{o.B0, n};
    const double computed =
        solve_level(pc, profile, {0, Spin::up, 0}, sopt).alpha;
    const double bound = variational_ground(pc, profile, Spin::up);
    csv.row({fmt(n), fmt(computed), fmt(bound)});
    if (bound < computed) {
      man.notes.push_back("bound below computed at n=" + fmt(n) +
                          " (should not happen)");
    }
  }
  add_out(man, dir / "variational.csv");
  write_manifest(man, dir / "variational_manifest.json");
}

// -------------------------------------------------------------- qspeed ----

struct QspeedOpts {
  double B0 = 1e16;
  std::string spin = "both";
  std::vector<double> ns = default_sweep_grid();
  double tol = 1e-6;
  std::string measure = "radial-2d";
};

void run_qspeed(const Common& common, const QspeedOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  const DisplacementMeasure measure = o.measure == "radial-1d"
                                          ? DisplacementMeasure::radial_1d
                                          : DisplacementMeasure::radial_2d;
  std::vector<Spin> spins;
  if (o.spin == "both" || o.spin == "down") spins.push_back(Spin::down);
  if (o.spin == "both" || o.spin == "up") spins.push_back(Spin::up);

  RunManifest man = make_manifest("qspeed", common.convention());
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("spin", o.spin);
  man.add_parameter("n", join_doubles(o.ns));
  man.add_parameter("tol", fmt(o.tol));
  man.add_parameter("measure", o.measure);

  int total_ok = 0;
  for (const Spin spin : spins) {
    const auto sweep = speed_sweep(pc, o.B0, o.ns, spin, o.tol, measure);
    const std::string name = "qspeed_" + spin_name(spin) + ".csv";
    CsvWriter csv(dir / name, "n,T_min_s,rho_disp_pm,speed_pm_s");
    double best_speed = -1.0, best_n = 0.0;
    for (const auto& e : sweep) {
      if (!e.ok) {
        warn("qspeed " + spin_name(spin) + " n=" + fmt(e.n) + ": " + e.error);
        man.notes.push_back("failed: spin " + spin_name(spin) + " n=" +
                            fmt(e.n) + " (" + e.error + ")");
        continue;
      }
      ++total_ok;
      csv.row({fmt(e.result.n), fmt(e.result.T_min), fmt(e.result.rho_disp),
               fmt(e.result.speed)});
      if (e.result.speed > best_speed) {
        best_speed = e.result.speed;
        best_n = e.result.n;
      }
    }
    if (best_speed > 0.0) {
      man.add_result("peak_n_" + spin_name(spin), fmt(best_n));
      man.add_result("peak_speed_" + spin_name(spin), fmt(best_speed));
    }
    add_out(man, dir / name);
  }
  if (total_ok == 0) throw std::runtime_error("every sweep point failed");
  if (common.gnuplot) {
    std::string gp = "set datafile separator comma\nset xlabel 'n'\n"
                     "set ylabel 'speed [pm/s]'\nplot ";
    bool first = true;
    for (const Spin spin : spins) {
      if (!first) gp += ", ";
      gp += "'qspeed_" + spin_name(spin) + ".csv' every ::1 using 1:4 "
            "with linespoints title '" + spin_name(spin) + "'";
      first = false;
    }
    gp += "\n";
    write_text(dir / "qspeed.gp", gp);
    add_out(man, dir / "qspeed.gp");
  }
  write_manifest(man, dir / "qspeed_manifest.json");
}

// ----------------------------------------------------------------- eos ----

struct EosOpts {
  double B0 = 2e15;
  double n = 0.0;
  double eps_max = 17.0;
  int steps = 160;
  double mu_e = 2.0;
  std::string source = "auto";
  double tol = 1e-6;
};

void run_eos(const Common& common, const EosOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  RunManifest man = make_manifest("eos", common.convention());

  std::string source = o.source;
  if (source == "auto") source = (o.n == 0.0) ? "uniform" : "fit";

  LevelScheme scheme = LevelScheme::uniform(pc, o.B0);
  if (source == "uniform") {
    if (o.n != 0.0) {
      throw UsageError("the uniform closed form only applies at n = 0");
    }
  } else if (source == "fit") {
    FitConstants fc;
    try {
      fc = published_fit_constants(o.n);
    } catch (const std::out_of_range&) {
      try {
        fc = interpolated_fit_constants(o.n);
        man.notes.push_back("fit constants interpolated between reference rows");
      } catch (const std::out_of_range&) {
        source = "computed";
        man.notes.push_back(
            "n outside the reference fit table; falling back to computed "
            "levels");
      }
    }
    if (source == "fit") scheme = LevelScheme::fit(fc, o.B0 / 1e15);
  }
  if (source == "computed") {
    SolverOptions sopt;
    sopt.tol = o.tol;
    scheme = LevelScheme::computed(pc, FieldProfile{o.B0, o.n}, sopt);
  }

  const EosTable table = eos_table(pc, scheme, o.mu_e, o.eps_max, o.steps);
  CsvWriter csv(dir / "eos.csv", "eps_F,n_e_cm3,rho_g_cc,P_erg_cc");
  for (const auto& r : table.rows) {
    csv.row({fmt(r.eps_F), fmt(r.n_e), fmt(r.rho_mass), fmt(r.P_e)});
  }

  nlohmann::ordered_json sidecar;
  sidecar["B0"] = scheme.B0();
  sidecar["n"] = scheme.n();
  sidecar["source"] = to_string(scheme.source());
  sidecar["mu_e"] = table.mu_e;
  if (scheme.constants()) {
    sidecar["constants"] = {{"C3", scheme.constants()->C3},
                            {"C5", scheme.constants()->C5}};
  } else {
    sidecar["constants"] = nullptr;
  }
  write_text(dir / "eos_scheme.json", sidecar.dump(2) + "\n");

  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("n", fmt(o.n));
  man.add_parameter("eps_max", fmt(o.eps_max));
  man.add_parameter("steps", std::to_string(o.steps));
  man.add_parameter("mu_e", fmt(o.mu_e));
  man.add_parameter("source", to_string(scheme.source()));
  add_out(man, dir / "eos.csv");
  add_out(man, dir / "eos_scheme.json");
  if (common.gnuplot) {
    write_text(dir / "eos.gp",
               "set datafile separator comma\nset logscale xy\n"
               "set xlabel 'rho [g/cc]'\nset ylabel 'P [erg/cc]'\n"
               "plot 'eos.csv' every ::2 using 3:4 with lines title 'EOS'\n");
    add_out(man, dir / "eos.gp");
  }
  write_manifest(man, dir / "eos_manifest.json");
}

// ------------------------------------------------------------------ wd ----

struct WdOpts {
  std::string profile = "paper";
  double B0 = 2e15;
  std::string eos_mode = "three-region";
  double step = 0.1;
  double mu_e = 2.0;
  double p_stop = -1.0;
  std::string curve;
  double central = 0.0;
};

void run_wd(const Common& common, const WdOpts& o) {
  const auto& pc = common.pc();
  const fs::path dir = common.prepare();
  if (o.curve.empty() && o.central == 0.0) {
    throw UsageError("wd needs --curve eps_f=... and/or --central <eps_F>");
  }

  PiecewiseFieldProfile field = PiecewiseFieldProfile::no_field();
  if (o.profile == "paper") {
    field = PiecewiseFieldProfile::literal_decay(o.B0);
  } else if (o.profile == "continuous") {
    field = PiecewiseFieldProfile::continuous_decay(o.B0);
  }

  StructureOptions sopt;
  sopt.mode = o.eos_mode == "lq-local" ? EosMode::lq_local
                                       : EosMode::three_region;
  sopt.step_km = o.step;
  sopt.mu_e = o.mu_e;
  sopt.P_stop = o.p_stop >= 0.0
                    ? o.p_stop
                    : chandrasekhar_eos(pc, 1.0 + 1e-6, o.mu_e).P_e;

  RunManifest man = make_manifest("wd", common.convention());
  man.add_parameter("profile", o.profile);
  man.add_parameter("B0", fmt(o.B0));
  man.add_parameter("eos_mode", to_string(sopt.mode));
  man.add_parameter("step_km", fmt(sopt.step_km));
  man.add_parameter("mu_e", fmt(sopt.mu_e));
  man.add_parameter("P_stop", fmt(sopt.P_stop));

  if (!o.curve.empty()) {
    const std::string prefix = "eps_f=";
    if (o.curve.rfind(prefix, 0) != 0 || o.curve.size() <= prefix.size()) {
      throw UsageError("--curve expects the form eps_f=3,5,8 (got '" +
                       o.curve + "')");
    }
    std::vector<double> eps_list;
    std::string rest = o.curve.substr(prefix.size());
    for (std::size_t pos = 0; pos != std::string::npos;) {
      const std::size_t comma = rest.find(',', pos);
      const std::string tok = rest.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        eps_list.push_back(v);
      } catch (const std::exception&) {
        throw UsageError("--curve: cannot parse '" + tok + "' as a number");
      }
      pos = comma == std::string::npos ? std::string::npos : comma + 1;
    }
    man.add_parameter("curve_eps_f", join_doubles(eps_list));

    const auto curve = mass_radius_curve(pc, eps_list, field, sopt);
    CsvWriter csv(dir / "wd_curve.csv", "rho_c_proxy,mass_msun,radius_km");
    double max_mass = 0.0;
    int failed = 0;
    for (const auto& p : curve) {
      if (!p.ok) {
        ++failed;
        warn("wd eps_F=" + fmt(p.eps_F_central) + ": " + p.error);
        man.notes.push_back("failed: eps_F=" + fmt(p.eps_F_central) + " (" +
                            p.error + ")");
        continue;
      }
      csv.row({fmt(p.rho_c_proxy), fmt(p.mass_msun), fmt(p.radius_km)});
      max_mass = std::max(max_mass, p.mass_msun);
    }
    if (failed == static_cast<int>(curve.size())) {
      throw std::runtime_error("every curve point failed");
    }
    man.add_result("max_mass_msun", fmt(max_mass));
    add_out(man, dir / "wd_curve.csv");
    if (common.gnuplot) {
      write_text(dir / "wd_curve.gp",
                 "set datafile separator comma\nset xlabel 'R [km]'\n"
                 "set ylabel 'M [M_sun]'\n"
                 "plot 'wd_curve.csv' every ::1 using 3:2 with linespoints "
                 "title 'mass-radius'\n");
      add_out(man, dir / "wd_curve.gp");
    }
  }

  if (o.central > 0.0) {
    const StellarModel model = integrate_structure(pc, o.central, field, sopt);
    man.add_parameter("central_eps_f", fmt(o.central));
    CsvWriter csv(dir / "wd_profile.csv", "r_km,M_g,P_erg_cc,rho_g_cc,B_G");
    for (std::size_t i = 0; i < model.r.size(); ++i) {
      csv.row({fmt(model.r[i]), fmt(model.M[i]), fmt(model.P[i]),
               fmt(model.rho[i]), fmt(model.B[i])});
    }
    man.add_result("total_mass_msun", fmt(model.total_mass));
    man.add_result("surface_r_km", fmt(model.surface_r));
    add_out(man, dir / "wd_profile.csv");
  }

  write_manifest(man, dir / "wd_manifest.json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-state spectra of an electron in power-law magnetic "
               "fields, and their downstream tables: variational bounds, "
               "fitted eigenvalue constants, quantum-speed sweeps, the "
               "Landau-quantized electron EOS, and magnetized white-dwarf "
               "structure"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  Common common;
  app.add_option("--constants", common.constants,
                 "Constant convention: codata or paper")
      ->check(CLI::IsMember({"codata", "paper"}));
  app.add_option("-o,--out-dir", common.out_dir, "Output directory");
  app.add_flag("--gnuplot", common.gnuplot, "Also write gnuplot scripts");

  VeffOpts veff;
  auto* c_veff =
      app.add_subcommand("veff", "Tabulate the effective radial potential");
  c_veff->add_option("--B0", veff.B0, "Field amplitude [G pm^-n]")->required();
  c_veff->add_option("--n", veff.ns, "Power-law indices")->delimiter(',');
  c_veff->add_option("--m", veff.m, "Azimuthal quantum number");
  c_veff->add_option("--spin", veff.spin)->check(CLI::IsMember({"down", "up"}));
  c_veff->add_option("--rho-min", veff.rho_min, "Grid start [pm]");
  c_veff->add_option("--rho-max", veff.rho_max, "Grid end [pm]");
  c_veff->add_option("--points", veff.points)->check(CLI::PositiveNumber);
  c_veff->callback([&] { run_veff(common, veff); });

  SpectrumOpts spec;
  auto* c_spec = app.add_subcommand(
      "spectrum", "Solve the lowest levels of both spin branches");
  c_spec->add_option("--B0", spec.B0, "Field amplitude [G pm^-n]")->required();
  c_spec->add_option("--n", spec.n, "Power-law index (> -1)");
  c_spec->add_option("--m", spec.m, "Azimuthal quantum number");
  c_spec->add_option("--nu-max", spec.nu_max)->check(CLI::NonNegativeNumber);
  c_spec->add_option("--tol", spec.tol, "Relative eigenvalue tolerance");
  c_spec->callback([&] { run_spectrum(common, spec); });

  FitOpts fit;
  auto* c_fit = app.add_subcommand(
      "fit", "Fit the two-constant eigenvalue formula to computed levels");
  c_fit->add_option("--B0", fit.B0, "Field amplitude [G pm^-n]")->required();
  c_fit->add_option("--n", fit.n, "Power-law index (> -1)");
  c_fit->add_option("--nu-max", fit.nu_max, "Highest level index fitted");
  c_fit->add_option("--tol", fit.tol, "Relative eigenvalue tolerance");
  c_fit->callback([&] { run_fit(common, fit); });

  VariationalOpts var;
  auto* c_var = app.add_subcommand(
      "variational", "Computed spin-up ground level vs the variational bound");
  c_var->add_option("--B0", var.B0, "Field amplitude [G pm^-n]")->required();
  c_var->add_option("--n", var.ns, "Power-law indices")->delimiter(',');
  c_var->add_option("--tol", var.tol, "Relative eigenvalue tolerance");
  c_var->callback([&] { run_variational(common, var); });

  QspeedOpts qs;
  auto* c_qs = app.add_subcommand(
      "qspeed", "Quantum-speed sweep over the power-law index");
  c_qs->add_option("--B0", qs.B0, "Field amplitude [G pm^-n]");
  c_qs->add_option("--spin", qs.spin)->check(CLI::IsMember({"down", "up", "both"}));
  c_qs->add_option("--n", qs.ns, "Power-law indices")->delimiter(',');
  c_qs->add_option("--tol", qs.tol, "Relative eigenvalue tolerance");
  c_qs->add_option("--measure", qs.measure, "Overlap measure")
      ->check(CLI::IsMember({"radial-2d", "radial-1d"}));
  c_qs->callback([&] { run_qspeed(common, qs); });

  EosOpts eos;
  auto* c_eos = app.add_subcommand(
      "eos", "Landau-quantized electron EOS table");
  c_eos->add_option("--B0", eos.B0, "Field amplitude [G pm^-n]");
  c_eos->add_option("--n", eos.n, "Power-law index");
  c_eos->add_option("--eps-max", eos.eps_max, "Fermi-energy upper end")
      ->check(CLI::Range(1.0 + 1e-9, 1.0e6));
  c_eos->add_option("--steps", eos.steps)->check(CLI::Range(10, 1000000));
  c_eos->add_option("--mu-e", eos.mu_e, "Mean molecular weight per electron");
  c_eos->add_option("--source", eos.source, "Level source")
      ->check(CLI::IsMember({"auto", "uniform", "fit", "computed"}));
  c_eos->add_option("--tol", eos.tol, "Solver tolerance (computed source)");
  c_eos->callback([&] { run_eos(common, eos); });

  WdOpts wd;
  auto* c_wd = app.add_subcommand(
      "wd", "Magnetized white-dwarf structure and mass-radius curve");
  c_wd->add_option("--profile", wd.profile, "Field profile")
      ->check(CLI::IsMember({"paper", "continuous", "none"}));
  c_wd->add_option("--B0", wd.B0, "Central field [G]");
  c_wd->add_option("--eos-mode", wd.eos_mode)
      ->check(CLI::IsMember({"three-region", "lq-local"}));
  c_wd->add_option("--step", wd.step, "Integration step [km]")
      ->check(CLI::PositiveNumber);
  c_wd->add_option("--mu-e", wd.mu_e, "Mean molecular weight per electron");
  c_wd->add_option("--p-stop", wd.p_stop, "Surface pressure cutoff [erg/cc]");
  c_wd->add_option("--curve", wd.curve,
                   "Mass-radius curve, e.g. eps_f=3,5,8,12,17,25");
  c_wd->add_option("--central", wd.central,
                   "Central eps_F for a single radial profile");
  c_wd->callback([&] { run_wd(common, wd); });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
