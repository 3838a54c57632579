#include "tcs/cli_app.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcs/grid_io.hpp"
#include "tcs/oracle.hpp"
#include "tcs/quasiperiodic.hpp"
#include "tcs/theta.hpp"
#include "tcs/torus.hpp"
#include "tcs/verify.hpp"

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;

struct CommonFlags {
  std::vector<double> l{0.0, 0.0};
  std::vector<double> alpha{0.0, 0.0};
  std::string sector_spec;
  std::vector<double> j0;
  double tol_eps = 1e-14;
  bool degrees = false;
  int precision = 12;

  bool general() const { return !j0.empty(); }

  double angle(double x) const { return degrees ? x * pi / 180.0 : x; }

  TorusSector sector() const {
    if (general()) return make_sector(j0[0], j0[1]);
    if (sector_spec.empty()) return make_sector(0.0, 0.0);
    const auto comma = sector_spec.find(',');
    if (comma == std::string::npos) {
      throw CLI::ValidationError("--sector", "expected two comma-separated labels");
    }
    const auto token = [](const std::string& t) {
      if (t == "0") return 0.0;
      if (t == "h" || t == "0.5" || t == "1/2") return 0.5;
      throw CLI::ValidationError("--sector", "labels must be 0 or h");
    };
    return make_sector(token(sector_spec.substr(0, comma)),
                       token(sector_spec.substr(comma + 1)));
  }

  std::array<double, 2> j0_pair() const {
    const TorusSector s = sector();
    return {s.axis[0].j0, s.axis[1].j0};
  }

  TorusPhasePoint point() const {
    return TorusPhasePoint(l[0], l[1], angle(alpha[0]), angle(alpha[1]));
  }

  Tolerance tolerance() const { return Tolerance{tol_eps}; }

  std::string label() const {
    if (general()) {
      return "j0=(" + format_sig(j0[0], 6) + "," + format_sig(j0[1], 6) + ")";
    }
    const TorusSector s = sector();
    return "sector=(" + format_sig(s.axis[0].j0, 2) + "," +
           format_sig(s.axis[1].j0, 2) + ")";
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_point) {
  if (needs_point) {
    cmd->add_option("--l", flags.l, "classical angular momenta l1,l2")
        ->delimiter(',');
    cmd->add_option("--alpha", flags.alpha, "classical angles alpha1,alpha2")
        ->delimiter(',');
  }
  auto* sector = cmd->add_option("--sector", flags.sector_spec,
                                 "time-reversal sector: 0,0 | 0,h | h,0 | h,h");
  auto* general = cmd->add_option("--j0", flags.j0,
                                  "general boundary labels j01,j02 in [0,1)")
                      ->delimiter(',');
  sector->excludes(general);
  general->excludes(sector);
  cmd->add_option("--tol", flags.tol_eps,
                  "theta series truncation tolerance (absolute)")
      ->envname("TCS_TOL");
  cmd->add_flag("--degrees", flags.degrees, "angles are given in degrees");
  cmd->add_option("--precision", flags.precision,
                  "significant digits in printed numbers");
}

void validate_pairs(const CommonFlags& flags) {
  if (flags.l.size() != 2 || flags.alpha.size() != 2) {
    throw CLI::ValidationError("--l/--alpha", "expected two components");
  }
  if (!flags.j0.empty() && flags.j0.size() != 2) {
    throw CLI::ValidationError("--j0", "expected two components");
  }
}

void print_complex_record(std::ostream& out, const std::string& name, complex v,
                          int prec) {
  out << name << " re=" << format_sig(v.real(), prec)
      << " im=" << format_sig(v.imag(), prec)
      << " abs=" << format_sig(std::abs(v), prec)
      << " arg=" << format_sig(std::arg(v), prec) << "\n";
}

int cmd_overlap(const CommonFlags& flags, const std::vector<double>& h,
                const std::vector<double>& beta, std::ostream& out) {
  if (h.size() != 2 || beta.size() != 2) {
    throw CLI::ValidationError("--h/--beta", "expected two components");
  }
  const TorusPhasePoint z = flags.point();
  const TorusPhasePoint w(h[0], h[1], flags.angle(beta[0]), flags.angle(beta[1]));
  const complex value =
      flags.general()
          ? overlap_general(z, w, flags.j0_pair(), flags.tolerance())
          : overlap(z, w, flags.sector(), flags.tolerance());
  out << flags.label() << " bra=(l=" << format_sig(z.l(0), 6) << ","
      << format_sig(z.l(1), 6) << " alpha=" << format_sig(z.alpha(0), 6) << ","
      << format_sig(z.alpha(1), 6) << ") ket=(l=" << format_sig(w.l(0), 6) << ","
      << format_sig(w.l(1), 6) << " alpha=" << format_sig(w.alpha(0), 6) << ","
      << format_sig(w.alpha(1), 6) << ")\n";
  print_complex_record(out, "overlap", value, flags.precision);
  return 0;
}

int cmd_expect(const CommonFlags& flags, bool as_json, std::ostream& out) {
  const TorusPhasePoint p = flags.point();
  const Tolerance tol = flags.tolerance();
  std::array<double, 2> J;
  std::array<complex, 2> U;
  if (flags.general()) {
    J = expect_J_general({p.l(0), p.l(1)}, flags.j0_pair(), tol);
    U = expect_U_general(p, flags.j0_pair(), tol);
  } else {
    J = expect_J({p.l(0), p.l(1)}, flags.sector(), tol);
    U = expect_U(p, flags.sector(), tol);
  }
  const auto j0 = flags.j0_pair();
  std::array<double, 2> dev{std::abs(J[0] - p.l(0)), std::abs(J[1] - p.l(1))};
  std::array<double, 2> law{std::abs(classical_error_law(p.l(0) - j0[0])),
                            std::abs(classical_error_law(p.l(1) - j0[1]))};

  if (as_json) {
    nlohmann::json doc;
    doc["l"] = {p.l(0), p.l(1)};
    doc["alpha"] = {p.alpha(0), p.alpha(1)};
    doc[flags.general() ? "j0" : "sector"] = {j0[0], j0[1]};
    doc["J"] = {J[0], J[1]};
    doc["J_deviation"] = {dev[0], dev[1]};
    doc["error_law"] = {law[0], law[1]};
    doc["U_re"] = {U[0].real(), U[1].real()};
    doc["U_im"] = {U[0].imag(), U[1].imag()};
    doc["U_abs"] = {std::abs(U[0]), std::abs(U[1])};
    doc["U_arg"] = {std::arg(U[0]), std::arg(U[1])};
    out << doc.dump(2) << "\n";
    return 0;
  }

  const int prec = flags.precision;
  out << flags.label() << "\n";
  out << "axis l alpha J |J-l| error_law U_re U_im U_abs U_arg\n";
  for (int k = 0; k < 2; ++k) {
    out << (k + 1) << ' ' << format_sig(p.l(k), prec) << ' '
        << format_sig(p.alpha(k), prec) << ' ' << format_sig(J[k], prec) << ' '
        << format_sig(dev[k], prec) << ' ' << format_sig(law[k], prec) << ' '
        << format_sig(U[k].real(), prec) << ' ' << format_sig(U[k].imag(), prec)
        << ' ' << format_sig(std::abs(U[k]), prec) << ' '
        << format_sig(std::arg(U[k]), prec) << "\n";
  }
  return 0;
}

int cmd_density(const CommonFlags& flags, int n1, int n2,
                const std::string& format, std::string out_path,
                std::ostream& out) {
  const TorusPhasePoint p = flags.point();
  const DensityGrid grid =
      flags.general()
          ? density_general(p, flags.j0_pair(), n1, n2, flags.tolerance())
          : density(p, flags.sector(), n1, n2, flags.tolerance());

  std::ostringstream comment;
  comment << "torus coherent-state density " << flags.label()
          << " l=(" << format_sig(p.l(0), 6) << "," << format_sig(p.l(1), 6)
          << ") alpha=(" << format_sig(p.alpha(0), 6) << ","
          << format_sig(p.alpha(1), 6) << ") n1=" << n1 << " n2=" << n2;

  if (out_path.empty()) {
    out_path = format == "pgm" ? "density.pgm" : "density.csv";
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  if (format == "pgm") {
    write_density_pgm(file, grid, comment.str());
  } else {
    write_density_csv(file, grid, comment.str(), flags.precision);
  }
  file.close();

  const auto [m1, m2] = grid.argmax();
  const int prec = flags.precision;
  out << "wrote " << out_path << "\n";
  out << "argmax phi=(" << format_sig(grid.phi1(m1), prec) << ","
      << format_sig(grid.phi2(m2), prec) << ") cell=(" << m1 << "," << m2
      << ")\n";
  out << "peak " << format_sig(grid.at(m1, m2), prec) << "\n";
  out << "mean " << format_sig(grid.mean(), prec) << "\n";
  return 0;
}

int cmd_wavefunction(const CommonFlags& flags, const std::vector<double>& phi,
                     const std::vector<int>& grid_spec,
                     const std::string& out_path, std::ostream& out) {
  const TorusPhasePoint p = flags.point();
  const Tolerance tol = flags.tolerance();
  const auto eval = [&](double phi1, double phi2) {
    return flags.general()
               ? wavefunction_general(p, phi1, phi2, flags.j0_pair(), tol)
               : position_wavefunction(p, phi1, phi2, flags.sector(), tol);
  };

  if (!grid_spec.empty()) {
    if (grid_spec.size() != 2) {
      throw CLI::ValidationError("--grid", "expected n1,n2");
    }
    const int n1 = grid_spec[0], n2 = grid_spec[1];
    std::ofstream file(out_path.empty() ? "wavefunction.csv" : out_path,
                       std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file");
    file << "phi1,phi2,re,im,abs2\n";
    for (int m1 = 0; m1 < n1; ++m1) {
      const double phi1 = 2.0 * pi * m1 / n1;
      for (int m2 = 0; m2 < n2; ++m2) {
        const double phi2 = 2.0 * pi * m2 / n2;
        const complex v = eval(phi1, phi2);
        file << format_sig(phi1, flags.precision) << ','
             << format_sig(phi2, flags.precision) << ','
             << format_sig(v.real(), flags.precision) << ','
             << format_sig(v.imag(), flags.precision) << ','
             << format_sig(std::norm(v), flags.precision) << '\n';
      }
    }
    out << "wrote " << (out_path.empty() ? "wavefunction.csv" : out_path) << "\n";
    return 0;
  }

  if (phi.size() != 2) {
    throw CLI::ValidationError("--phi", "expected two components");
  }
  const complex v = eval(flags.angle(phi[0]), flags.angle(phi[1]));
  out << flags.label() << " phi=(" << format_sig(flags.angle(phi[0]), 6) << ","
      << format_sig(flags.angle(phi[1]), 6) << ")\n";
  print_complex_record(out, "psi", v, flags.precision);
  out << "abs2 " << format_sig(std::norm(v), flags.precision) << "\n";
  return 0;
}

int cmd_verify(bool as_json, std::uint64_t seed, double perturb,
               std::ostream& out) {
  set_theta3_perturbation(perturb);
  const auto results = run_verification(VerifyOptions{seed});
  set_theta3_perturbation(0.0);

  int failures = 0;
  if (as_json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
      doc.push_back({{"name", r.name},
                     {"max_error", r.max_error},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}});
      failures += r.pass ? 0 : 1;
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r.name << ' ' << format_sig(r.max_error, 6) << ' '
          << format_sig(r.tolerance, 6) << ' ' << (r.pass ? "PASS" : "FAIL")
          << "\n";
      failures += r.pass ? 0 : 1;
    }
    out << (failures == 0 ? "all checks passed" : "checks failed") << " ("
        << (results.size() - failures) << "/" << results.size() << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"coherent states for a quantum particle on a circle and a torus"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* overlap_cmd =
      app.add_subcommand("overlap", "overlap <l,alpha|h,beta> of two states");
  // frees the short name so the ket momenta can be spelled --h
  overlap_cmd->set_help_flag("--help", "print help");
  std::vector<double> h{0.0, 0.0}, beta{0.0, 0.0};
  add_common(overlap_cmd, flags, true);
  overlap_cmd->add_option("--h", h, "ket angular momenta h1,h2")->delimiter(',');
  overlap_cmd->add_option("--beta", beta, "ket angles beta1,beta2")->delimiter(',');

  auto* expect_cmd =
      app.add_subcommand("expect", "expectation values of J_k and U_k");
  bool expect_json = false;
  add_common(expect_cmd, flags, true);
  expect_cmd->add_flag("--json", expect_json, "emit JSON");

  auto* density_cmd =
      app.add_subcommand("density", "probability density grid over [0,2pi)^2");
  int n1 = 256, n2 = 256;
  std::string format = "csv", out_path;
  add_common(density_cmd, flags, true);
  density_cmd->add_option("--n1", n1, "grid rows (phi1 samples)");
  density_cmd->add_option("--n2", n2, "grid columns (phi2 samples)");
  density_cmd->add_option("--format", format, "csv or pgm")
      ->check(CLI::IsMember({"csv", "pgm"}));
  density_cmd->add_option("--out", out_path, "output path");

  auto* wave_cmd =
      app.add_subcommand("wavefunction", "position wavefunction <phi|l,alpha>");
  std::vector<double> phi;
  std::vector<int> grid_spec;
  std::string wave_out;
  add_common(wave_cmd, flags, true);
  wave_cmd->add_option("--phi", phi, "evaluation point phi1,phi2")->delimiter(',');
  wave_cmd->add_option("--grid", grid_spec, "sample a full n1,n2 grid to CSV")
      ->delimiter(',');
  wave_cmd->add_option("--out", wave_out, "output path for --grid");

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the oracle-vs-closed-form and invariant checks");
  bool verify_json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  double perturb = 0.0;
  verify_cmd->add_flag("--json", verify_json, "emit JSON");
  verify_cmd->add_option("--seed", seed, "random seed for the check inputs");
  verify_cmd
      ->add_option("--perturb-theta3", perturb,
                   "debug: additively perturb theta3 to prove the suite "
                   "detects faults")
      ->group("");  // hidden

  std::vector<const char*> argv;
  argv.push_back("tcs");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
    if (overlap_cmd->parsed()) {
      validate_pairs(flags);
      return cmd_overlap(flags, h, beta, out);
    }
    if (expect_cmd->parsed()) {
      validate_pairs(flags);
      return cmd_expect(flags, expect_json, out);
    }
    if (density_cmd->parsed()) {
      validate_pairs(flags);
      return cmd_density(flags, n1, n2, format, out_path, out);
    }
    if (wave_cmd->parsed()) {
      validate_pairs(flags);
      return cmd_wavefunction(flags, phi, grid_spec, wave_out, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_json, seed, perturb, out);
    }
    err << "no subcommand selected\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tcs
