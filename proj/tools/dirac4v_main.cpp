// Command-line front end: gate construction, unitary decomposition,
// intertwining verification, Lorentz-force evaluation, Landau spectra and
// the generalized Pauli-Dirac matrix hierarchy.
//
// Exit codes: 0 success, 2 parse error, 3 dimension error, 4 verification
// failure; 1 for anything else.

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dirac4v/cliffgen.hpp"
#include "dirac4v/darboux.hpp"
#include "dirac4v/errors.hpp"
#include "dirac4v/fourvec.hpp"
#include "dirac4v/gates.hpp"
#include "dirac4v/json_io.hpp"
#include "dirac4v/landau.hpp"

using namespace d4v;
using json_io::format_double;
using json_io::JsonWriter;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitVerify = 4;

struct Output {
  std::string format = "json"; // json | csv | pretty
  std::string path;            // empty = stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      out << text << "\n";
    }
  }
};

std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::string matrix_pretty(const CMat& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const cd v = m(i, j);
      s += "(" + format_double(v.real()) + (v.imag() < 0 ? "" : "+") + format_double(v.imag()) + "i)";
      s += j + 1 < m.cols() ? ' ' : '\n';
    }
  }
  return s;
}

std::string matrix_csv(const CMat& m) {
  std::string s = "row,col,re,im\n";
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      s += std::to_string(i) + "," + std::to_string(j) + "," + format_double(m(i, j).real()) + "," +
           format_double(m(i, j).imag()) + "\n";
  s.pop_back();
  return s;
}

std::string gate_payload(const GateMatrix& g, const Output& out) {
  if (out.format == "pretty") {
    return matrix_pretty(g.m) + "unitary: " + (g.unitary ? "true" : "false") +
           " (defect " + format_double(g.m.unitarity_defect()) + ")";
  }
  if (out.format == "csv") return matrix_csv(g.m);
  JsonWriter w;
  w.begin_object();
  w.key("matrix");
  w.raw(json_io::matrix_json(g.m));
  w.key("unitary");
  w.value(g.unitary);
  w.key("unitarity_defect");
  w.value(g.m.unitarity_defect());
  w.end_object();
  return w.out();
}

GateMatrix build_gate(const std::string& spec, int n, double tol) {
  std::string s;
  for (char c : spec) s += (char)std::tolower((unsigned char)c);
  if (s == "controlled-not" || s == "controlledn-not" || s == "cnot-n") return gates::controlled_n_not(n);
  if (s == "not-cyclic" || s == "notcyclic" || s == "not-cyclic-n") return gates::not_cyclic_n(n);
  if (spec.find('(') != std::string::npos) return gates::compile(gates::parse_expr(spec), tol);
  return gates::named_gate(spec);
}

int cmd_verify(const std::string& table, const std::string& v0_path, const std::string& v1_path,
               const std::string& u_name, bool negative_control, const Output& out) {
  bool pass = false;
  JsonWriter w;
  w.begin_object();
  if (!table.empty()) {
    const auto sc = darboux::scenario_from_name(table);
    if (!sc) throw std::invalid_argument("unknown scenario '" + table + "' (expected u0..u3)");
    const darboux::ScenarioReport rep = darboux::run_scenario(*sc);
    w.key("table");
    w.value(std::string(darboux::scenario_name(*sc)));
    w.key("gate");
    w.value(rep.gate_name);
    w.key("delta_v_match");
    w.value(rep.delta_v_match);
    w.key("poly_solution_found");
    w.value(rep.poly_solution_found);
    w.key("alpha");
    w.value(rep.alpha);
    w.key("beta");
    w.value(rep.beta);
    w.key("delta_eps");
    w.complex_value(rep.delta_eps);
    w.key("max_residual");
    w.value(rep.max_residual);
    w.key("transport_eps0");
    w.complex_value(rep.transport_eps0);
    w.key("transport_eps1");
    w.complex_value(rep.transport_eps1);
    w.key("state_residual");
    w.value(rep.state_residual);
    w.key("gate_action_defect");
    w.value(rep.gate_action_defect);
    w.key("gate_action");
    w.value(rep.gate_action_note);
    // The table pairings are verified by the delta-V identity and by the
    // numeric state transport; the polynomial operator-identity solve is
    // reported as data (it succeeds only for u3; see README).
    pass = rep.delta_v_match && rep.state_residual <= 1e-4;
  } else {
    if (v0_path.empty() || v1_path.empty() || u_name.empty())
      throw std::invalid_argument("custom verification needs --v0, --v1 and --u");
    const MatrixPoly V0 = json_io::parse_pauli_poly(json_io::read_file(v0_path));
    const MatrixPoly V1 = json_io::parse_pauli_poly(json_io::read_file(v1_path));
    const GateMatrix U = gates::named_gate(u_name);
    const auto lv1 = cliffgen::clifford_level(1);
    const MatrixPoly dV = V1 - V0;
    const CMat want = darboux::delta_v(U.m, lv1);
    const bool dv_match = dV.degree() <= 0 && dV.coeff(0).max_abs_diff(want) <= 1e-12;
    // profile: scalar coefficient of U's direction in V0, with a fallback to
    // the first nonzero Pauli component.
    const auto comps = V0.pauli_components();
    const auto ucomp = gates::pauli_decompose(U.m);
    Poly profile;
    for (int i = 0; i < 4; ++i)
      if (std::abs(ucomp[i]) > 0.5 && !comps[i].is_zero()) profile = comps[i];
    if (profile.is_zero())
      for (int i = 3; i >= 0; --i)
        if (!comps[i].is_zero()) profile = comps[i];
    const auto sol = darboux::solve_intertwiner(V0, V1, U.m, profile, pauli(3));
    w.key("delta_v_match");
    w.value(dv_match);
    w.key("poly_solution_found");
    w.value(sol.solution_found);
    w.key("alpha");
    w.value(sol.L.alpha.str());
    w.key("beta");
    w.value(sol.L.beta.str());
    w.key("delta_eps");
    w.complex_value(sol.delta_eps);
    w.key("max_residual");
    w.value(sol.max_residual);
    double state_res = -1.0; // reported when a solved intertwiner exists
    if (sol.solution_found) {
      const darboux::Grid grid;
      const cd eps0(1, 0);
      const auto h0 = darboux::DiracHamiltonian::level1(V0, eps0);
      const auto h1 = darboux::DiracHamiltonian::level1(V1, eps0 + sol.delta_eps);
      const auto psi =
          darboux::integrate_eigenfunction(h0, CMat(2, 1, {cd(0.8, 0.1), cd(0.3, -0.4)}), grid);
      const auto phi = darboux::transform_state(psi, sol.L, grid);
      state_res = darboux::hamiltonian_residual(h1, phi, grid);
    }
    w.key("state_residual");
    w.value(state_res);
    pass = dv_match && sol.solution_found && (state_res >= 0 && state_res <= 1e-4);
  }
  if (negative_control) pass = !pass;
  w.key("pass");
  w.value(pass);
  w.end_object();
  out.emit(w.out());
  return pass ? kExitOk : kExitVerify;
}

std::array<double, 3> parse_vec3(const std::string& s) {
  std::array<double, 3> v{};
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v[0], &v[1], &v[2]) != 3)
    throw std::invalid_argument("expected three comma-separated numbers, got '" + s + "'");
  return v;
}

std::array<double, 4> parse_vec4(const std::string& s) {
  std::array<double, 4> v{};
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
    throw std::invalid_argument("expected four comma-separated numbers, got '" + s + "'");
  return v;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirac4v: Pauli four-vector algebra, coupled quantum gates, Dirac intertwiners, Landau spectra"};
  app.require_subcommand(1);

  Output out;
  std::string config_path;
  double unitarity_tol = 1e-12;
  if (const char* env = std::getenv("DIRAC4V_FORMAT")) out.format = env;

  app.add_option("--config", config_path, "key=value config file (format, output, unitarity_tolerance)");
  auto* fmt_opt = app.add_option("--format", out.format, "output format: json, csv or pretty")
                      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  auto* out_opt = app.add_option("--output", out.path, "write output to a file instead of stdout");
  auto* tol_opt = app.add_option("--unitarity-tolerance", unitarity_tol, "tolerance for unitarity checks");

  // build-gate
  std::string gate_spec;
  int chain_n = 1;
  auto* cmd_gate = app.add_subcommand("build-gate", "compile a named gate or coupling expression");
  cmd_gate->fallthrough();
  cmd_gate->add_option("gate", gate_spec, "name (CC, SWAP, ...) or prefix expression like co(I,X)")->required();
  cmd_gate->add_option("--n", chain_n, "chain length for controlled-not / not-cyclic");

  // decompose
  std::string unitary_path;
  auto* cmd_dec = app.add_subcommand("decompose", "Pauli (2x2) or gamma-basis (4x4) decomposition");
  cmd_dec->fallthrough();
  cmd_dec->add_option("--unitary", unitary_path, "JSON matrix file")->required();

  // verify-intertwine
  std::string table, v0_path, v1_path, u_name;
  bool negative_control = false;
  auto* cmd_ver = app.add_subcommand("verify-intertwine", "check a potential tuning pair");
  cmd_ver->fallthrough();
  cmd_ver->add_option("--table", table, "built-in scenario u0..u3");
  cmd_ver->add_option("--v0", v0_path, "initial potential (Pauli polynomial JSON)");
  cmd_ver->add_option("--v1", v1_path, "final potential (Pauli polynomial JSON)");
  cmd_ver->add_option("--u", u_name, "gate direction for the custom pair");
  cmd_ver->add_flag("--negative-control", negative_control, "invert the pass criterion");

  // lorentz
  std::string e_str = "0,0,0", b_str = "0,0,0", v_str = "1,0,0,0";
  double charge = 1.0;
  auto* cmd_lor = app.add_subcommand("lorentz", "four-force from charge, velocity and constant fields");
  cmd_lor->fallthrough();
  cmd_lor->add_option("--e", e_str, "electric field ex,ey,ez");
  cmd_lor->add_option("--b", b_str, "magnetic field bx,by,bz");
  cmd_lor->add_option("--v", v_str, "four-velocity v0,v1,v2,v3");
  cmd_lor->add_option("--q", charge, "charge");

  // landau-spectrum
  landau::LandauConfig lc;
  bool do_verify = false;
  auto* cmd_lan = app.add_subcommand("landau-spectrum", "Landau levels of the massless Dirac fermion");
  cmd_lan->fallthrough();
  cmd_lan->add_option("--b", lc.Bfield, "magnetic field strength");
  cmd_lan->add_option("--vf", lc.vF, "Fermi velocity");
  cmd_lan->add_option("--nmax", lc.Nmax, "highest level");
  cmd_lan->add_option("--grid-points", lc.grid_points, "finite-difference grid size");
  cmd_lan->add_option("--extent", lc.extent, "xi half-width (0 = auto)");
  cmd_lan->add_flag("--verify", do_verify, "run the finite-difference check");

  // theta
  int theta_n = 2;
  auto* cmd_th = app.add_subcommand("theta", "generalized Pauli-Dirac matrices at level n");
  cmd_th->fallthrough();
  cmd_th->add_option("--n", theta_n, "qubit count (1..8)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      const auto kv = load_config(config_path);
      if (auto it = kv.find("format"); it != kv.end() && fmt_opt->count() == 0) out.format = it->second;
      if (auto it = kv.find("output"); it != kv.end() && out_opt->count() == 0) out.path = it->second;
      if (auto it = kv.find("unitarity_tolerance"); it != kv.end() && tol_opt->count() == 0)
        unitarity_tol = std::stod(it->second);
    }

    if (cmd_gate->parsed()) {
      out.emit(gate_payload(build_gate(gate_spec, chain_n, unitarity_tol), out));
      return kExitOk;
    }

    if (cmd_dec->parsed()) {
      const CMat m = json_io::parse_matrix(json_io::read_file(unitary_path));
      JsonWriter w;
      w.begin_object();
      if (m.rows() == 2) {
        const auto a = gates::pauli_decompose(m);
        double norm = 0.0;
        w.key("basis");
        w.value(std::string("pauli"));
        w.key("coefficients");
        w.begin_array();
        for (const cd& c : a) {
          w.complex_value(c);
          norm += std::norm(c);
        }
        w.end_array();
        w.key("coeff_norm_sq");
        w.value(norm);
      } else if (m.rows() == 4) {
        const auto c = cliffgen::gamma_basis_decompose(m);
        const auto& basis = cliffgen::gamma_basis();
        w.key("basis");
        w.value(std::string("gamma"));
        w.key("coefficients");
        w.begin_object();
        for (int i = 0; i < 16; ++i) {
          w.key(basis.names[i]);
          w.complex_value(c[i]);
        }
        w.end_object();
        w.key("reconstruction_error");
        w.value(cliffgen::gamma_basis_reconstruct(c).max_abs_diff(m));
      } else {
        throw DimensionError("decompose", "expected a 2x2 or 4x4 matrix");
      }
      w.end_object();
      out.emit(w.out());
      return kExitOk;
    }

    if (cmd_ver->parsed()) return cmd_verify(table, v0_path, v1_path, u_name, negative_control, out);

    if (cmd_lor->parsed()) {
      darboux::FieldConfig cfg;
      cfg.q = charge;
      cfg.E = parse_vec3(e_str);
      cfg.B = parse_vec3(b_str);
      cfg.v = parse_vec4(v_str);
      cfg.has_fields = true;
      const auto direct = darboux::lorentz_force(cfg);
      const auto tensor = darboux::lorentz_force_tensor(cfg);
      JsonWriter w;
      w.begin_object();
      w.key("force");
      w.raw(json_io::pauli_vector_json(direct));
      w.key("tensor_route_max_diff");
      w.value(direct.max_abs_diff(tensor));
      w.key("normalized");
      w.raw(json_io::pauli_vector_json(darboux::perturbation_from_force(direct)));
      w.end_object();
      out.emit(w.out());
      return kExitOk;
    }

    if (cmd_lan->parsed()) {
      const auto spec = landau::landau_spectrum(lc);
      landau::FdReport rep;
      if (do_verify) rep = landau::verify_spectrum_fd(lc);
      if (out.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("omega_c");
        w.value(lc.omega_c());
        w.key("levels");
        w.begin_array();
        for (const auto& lv : spec) {
          w.begin_object();
          w.key("N");
          w.value((long)lv.N);
          w.key("eps_plus");
          w.value(lv.eps_plus);
          w.key("eps_minus");
          w.value(lv.eps_minus);
          if (do_verify && lv.N >= 1) {
            w.key("fd_error");
            w.value(rep.level_rel_error[lv.N - 1]);
          }
          w.end_object();
        }
        w.end_array();
        if (do_verify) {
          w.key("zero_mode_abs");
          w.value(rep.zero_mode_abs);
          w.key("pair_symmetry");
          w.value(rep.pair_symmetry);
        }
        w.end_object();
        out.emit(w.out());
      } else {
        std::string csv = "N,eps_plus,eps_minus,fd_error\n";
        for (const auto& lv : spec) {
          csv += std::to_string(lv.N) + "," + format_double(lv.eps_plus) + "," + format_double(lv.eps_minus) + ",";
          csv += (do_verify && lv.N >= 1) ? format_double(rep.level_rel_error[lv.N - 1]) : "";
          csv += "\n";
        }
        csv.pop_back();
        out.emit(csv);
      }
      return kExitOk;
    }

    if (cmd_th->parsed()) {
      const auto lv = cliffgen::clifford_level(theta_n);
      JsonWriter w;
      w.begin_object();
      w.key("n");
      w.value((long)lv.n);
      w.key("dim");
      w.value((long)lv.dim);
      w.key("clifford_defect");
      w.value(cliffgen::clifford_defect(lv));
      w.key("theta");
      w.begin_array();
      for (const CMat& th : lv.theta) w.raw(json_io::matrix_json(th));
      w.end_array();
      w.end_object();
      out.emit(w.out());
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
