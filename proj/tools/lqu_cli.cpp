// lqu_cli: command-line front end for the LQU engine.
//
// Exit codes: 0 success, 1 acceptance failure (compare, generators --check,
// random-check), 2 usage error, 3 invalid input data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lqu/entanglement.hpp"
#include "lqu/error.hpp"
#include "lqu/heisenberg.hpp"
#include "lqu/linear_response.hpp"
#include "lqu/lqu_core.hpp"
#include "lqu/matrix_io.hpp"
#include "lqu/random_states.hpp"
#include "lqu/sqrt_perturbation.hpp"
#include "lqu/su_algebra.hpp"
#include "lqu/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lqu;

constexpr int kExitAcceptance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct Common {
  std::string output;
  std::string format = "json";
  int workers = 1;
  std::uint64_t seed = 1;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw Error(ErrorKind::input, "cannot write " + c.output);
  out << text;
}

// Flat key/value records: JSON object or two-line CSV.
void emit_record(const Common& c, const json& record) {
  if (c.format == "json") {
    emit(c, record.dump(2) + "\n");
    return;
  }
  std::string head;
  std::string row;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += it.key();
    if (it->is_number_float()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", it->get<double>());
      row += buf;
    } else if (it->is_number() || it->is_boolean()) {
      row += it->dump();
    } else if (it->is_string()) {
      row += it->get<std::string>();
    } else {
      row += '"' + it->dump() + '"';
    }
  }
  emit(c, head + "\n" + row + "\n");
}

json lqu_record(const LquResult& r) {
  json ev = json::array();
  for (Eigen::Index k = 0; k < r.w_eigenvalues.size(); ++k) ev.push_back(r.w_eigenvalues(k));
  return {{"lqu", r.value},
          {"lqu_reported", r.reported()},
          {"max_eigenvalue", r.max_eigenvalue},
          {"mode", to_string(r.mode)},
          {"w_eigenvalues", ev},
          {"flags", r.flags.labels()}};
}

json matrix_record(const CMatrix& m) { return json::parse(matrix_to_json(m).dump()); }

Bipartition infer_parts(const CMatrix& m, int d1, int d2) {
  if (d1 > 0 && d2 > 0) return {d1, d2};
  if (m.rows() == 4) return {2, 2};
  throw Error(ErrorKind::input, "--d1 and --d2 are required unless the state is 4x4");
}

CMatrix drive_operator(const std::string& spec) {
  return is_two_qubit_operator_name(spec) ? two_qubit_operator(spec) : read_matrix_file(spec);
}

void emit_sweep(const Common& c, const sweep::RunConfig& cfg, const sweep::SweepTable& table) {
  Common out = c;
  if (out.output.empty()) out.output = cfg.output_path;
  const bool as_json = c.format == "json" || (c.format.empty() && cfg.format == sweep::Format::json);
  emit(out, as_json ? sweep::to_json(table).dump(2) + "\n" : sweep::to_csv(table));
}

void print_summary(const sweep::SweepTable& table) {
  std::cerr << "points: " << table.summary.points << ", flagged: " << table.summary.flagged_points;
  if (table.summary.max_discrepancy) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", *table.summary.max_discrepancy);
    std::cerr << ", max |closed - pipeline|: " << buf;
  }
  std::cerr << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local quantum uncertainty: exact, first-order and closed-form evaluation"};
  app.require_subcommand(1);
  Common common;

  // generators
  int gen_d = 2;
  bool gen_check = false;
  bool gen_print = false;
  auto* gen_cmd = app.add_subcommand("generators", "Generalized Gell-Mann basis of su(d)");
  gen_cmd->add_option("--d", gen_d, "Dimension d >= 2")->required();
  gen_cmd->add_flag("--check", gen_check, "Fail (exit 1) if the product-rule residual exceeds 1e-12");
  gen_cmd->add_flag("--print", gen_print, "Include the matrices in the output");
  gen_cmd->add_option("--output", common.output);
  gen_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // lqu-static
  std::string state_path;
  std::string rho1_path;
  double epsilon = 0.0;
  int d1 = 0;
  int d2 = 0;
  auto* static_cmd = app.add_subcommand("lqu-static", "LQU of a state, optionally to first order in rho1");
  static_cmd->add_option("--state", state_path, "JSON matrix file")->required();
  static_cmd->add_option("--rho1", rho1_path, "Traceless Hermitian perturbation (JSON matrix file)");
  static_cmd->add_option("--epsilon", epsilon, "Perturbation strength");
  static_cmd->add_option("--d1", d1);
  static_cmd->add_option("--d2", d2);
  static_cmd->add_option("--output", common.output);
  static_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // lqu-driven
  std::string h0_path;
  std::string drive = "sz1";
  double T = 1.0;
  double xi = 0.0;
  double omega = 0.0;
  double delta = 0.2;
  auto* driven_cmd = app.add_subcommand("lqu-driven", "First-order LQU of a driven thermal state");
  driven_cmd->add_option("--H0", h0_path, "Hamiltonian (JSON matrix file)")->required();
  driven_cmd->add_option("--d1", d1);
  driven_cmd->add_option("--d2", d2);
  driven_cmd->add_option("--drive", drive, "sx1..sz2 or a JSON matrix file");
  driven_cmd->add_option("--T", T, "Temperature");
  driven_cmd->add_option("--xi", xi, "Drive strength");
  driven_cmd->add_option("--omega", omega, "Drive frequency");
  driven_cmd->add_option("--delta", delta, "Broadening");
  driven_cmd->add_option("--output", common.output);
  driven_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // heisenberg
  double J = 0.5;
  std::string quantity = "lqu";
  auto* heis_cmd = app.add_subcommand("heisenberg", "Closed forms of the driven two-spin Heisenberg model");
  heis_cmd->add_option("--J", J, "Exchange coupling");
  heis_cmd->add_option("--T", T, "Temperature");
  heis_cmd->add_option("--xi", xi, "Drive strength");
  heis_cmd->add_option("--delta", delta, "Broadening");
  heis_cmd->add_option("--omega", omega, "Drive frequency");
  heis_cmd->add_option("--drive", drive, "Drive operator for the pipeline value");
  heis_cmd->add_option("--quantity", quantity)
      ->check(CLI::IsMember({"lqu", "w", "concurrence", "tc", "xstate"}));
  heis_cmd->add_option("--output", common.output);
  heis_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // concurrence
  auto* conc_cmd = app.add_subcommand("concurrence", "Wootters concurrence of a two-qubit state");
  conc_cmd->add_option("--state", state_path, "JSON matrix file")->required();
  conc_cmd->add_option("--output", common.output);
  conc_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // run / compare
  std::string config_path;
  std::optional<int> workers;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a sweep config");
  run_cmd->add_option("--config", config_path, "JSON run config")->required();
  run_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--output", common.output);
  run_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  auto* cmp_cmd = app.add_subcommand("compare", "Closed form against pipeline over a sweep config");
  cmp_cmd->add_option("--config", config_path, "JSON run config (heisenberg model)")->required();
  cmp_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  cmp_cmd->add_option("--output", common.output);
  cmp_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  // random-check
  int samples = 20;
  auto* rnd_cmd = app.add_subcommand("random-check", "Property checks on seeded random states");
  rnd_cmd->add_option("--seed", common.seed, "RNG seed");
  rnd_cmd->add_option("--samples", samples, "States per property")->check(CLI::PositiveNumber);
  rnd_cmd->add_option("--output", common.output);
  rnd_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  common.format.clear();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  auto fmt_or = [&](const char* fallback) {
    if (common.format.empty()) common.format = fallback;
  };

  try {
    if (*gen_cmd) {
      fmt_or("json");
      const GeneratorSet gen = build_generators(gen_d);
      const double residual = product_rule_residual(gen);
      json rec = {{"d", gen_d}, {"generators", gen.size()}, {"product_rule_residual", residual}};
      if (gen_print && common.format == "json") {
        json mats = json::array();
        for (const auto& t : gen.generators()) mats.push_back(matrix_record(t));
        rec["matrices"] = mats;
      }
      emit_record(common, rec);
      return gen_check && !(residual <= 1e-12) ? kExitAcceptance : 0;
    }

    if (*static_cmd) {
      fmt_or("json");
      const CMatrix rho = read_matrix_file(state_path);
      const Bipartition parts = infer_parts(rho, d1, d2);
      const GeneratorSet gen = build_generators(parts.d1);
      if (rho1_path.empty()) {
        emit_record(common, lqu_record(lqu_exact(DensityMatrix(rho, parts), gen)));
      } else {
        const DensityMatrix rho0(rho, parts);
        const PerturbationMatrix rho1(read_matrix_file(rho1_path), epsilon, parts);
        emit_record(common, lqu_record(lqu_perturbative(eig_hermitian(rho0.data()), rho1, gen)));
      }
      return 0;
    }

    if (*driven_cmd) {
      fmt_or("json");
      const CMatrix h0 = read_matrix_file(h0_path);
      const Bipartition parts = infer_parts(h0, d1, d2);
      const Hamiltonian h(h0, parts);
      if (!(T > 0.0)) throw Error(ErrorKind::input, "--T must be > 0");
      const SpectralData spec = eig_hermitian(h.data());
      const RVector w = thermal_weights(spec, 1.0 / T);
      const DriveSpec d{drive_operator(drive), xi, omega, delta};
      emit_record(common, lqu_record(lqu_driven(spec, w, d, build_generators(parts.d1), parts.d2)));
      return 0;
    }

    if (*heis_cmd) {
      fmt_or("json");
      const heisenberg::Params p{J, T, xi, delta, omega};
      p.validate();
      if (quantity == "lqu") {
        json rec = lqu_record(heisenberg::pipeline_lqu(p, drive_operator(drive)));
        rec["lqu_pipeline"] = rec["lqu"];
        rec["lqu"] = heisenberg::closed_form_lqu(p);
        emit_record(common, rec);
      } else if (quantity == "w") {
        const auto w = heisenberg::closed_form_w(p);
        emit_record(common, {{"a", w.a},
                             {"b", w.b},
                             {"e_plus", w.e_plus},
                             {"re_f21", w.re_f21},
                             {"im_f21", w.im_f21},
                             {"Z", w.partition}});
      } else if (quantity == "concurrence") {
        const auto c = heisenberg::closed_form_concurrence(p);
        emit_record(common, {{"concurrence", c.value}, {"raw", c.raw}});
      } else if (quantity == "tc") {
        const auto tc = heisenberg::critical_temperatures(p);
        emit_record(common, {{"tc0", tc.tc0},
                             {"tc1", tc.tc1},
                             {"Omega", tc.omega_factor},
                             {"tc_bisection", heisenberg::critical_temperature_bisection(p)}});
      } else {
        const auto x = heisenberg::x_state(p);
        emit_record(common, {{"A", x.A},
                             {"B_plus", x.B_plus},
                             {"B_minus", x.B_minus},
                             {"C_re", x.C.real()},
                             {"C_im", x.C.imag()},
                             {"D", x.D},
                             {"Omega", x.Omega}});
      }
      return 0;
    }

    if (*conc_cmd) {
      fmt_or("json");
      const DensityMatrix rho(read_matrix_file(state_path), {2, 2});
      const auto c = concurrence_wootters(rho);
      emit_record(common, {{"concurrence", c.value}, {"raw", c.raw}});
      return 0;
    }

    if (*run_cmd || *cmp_cmd) {
      sweep::RunConfig cfg = sweep::load_config(config_path);
      if (*cmp_cmd) {
        if (cfg.model != sweep::Model::heisenberg) {
          throw Error(ErrorKind::input, "compare needs the heisenberg model");
        }
        cfg.outputs = {sweep::Quantity::lqu_closed, sweep::Quantity::lqu_pipeline};
      }
      const auto table = sweep::run(cfg, workers.value_or(cfg.workers));
      emit_sweep(common, cfg, table);
      print_summary(table);
      if (*cmp_cmd) {
        const double d = table.summary.max_discrepancy.value_or(0.0);
        if (!(d <= cfg.tolerance)) {
          std::cerr << "compare: discrepancy exceeds tolerance " << cfg.tolerance << '\n';
          return kExitAcceptance;
        }
      }
      return 0;
    }

    if (*rnd_cmd) {
      fmt_or("json");
      random::Engine rng(common.seed);
      const GeneratorSet su2 = build_generators(2);
      double min_ratio = 1e300;
      double max_ratio = 0.0;
      double worst_x = 0.0;
      double worst_gap_low = 1e300;
      double worst_gap_high = 0.0;
      for (int s = 0; s < samples; ++s) {
        const CMatrix rho0 = random::full_rank_state(rng, 4);
        const CMatrix rho1 = random::traceless_hermitian(rng, 4);
        const SpectralData spec = eig_hermitian(rho0);
        const auto err = [&](double eps) {
          const SqrtExpansion ex = perturbative_sqrt(spec, PerturbationMatrix(rho1, eps, {2, 2}));
          return (exact_sqrt(CMatrix(rho0 + eps * rho1)) - ex.evaluate()).norm();
        };
        const double ratio = err(1e-2) / err(1e-3);
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);

        const auto x = random::x_state(rng);
        const double cx = concurrence_x_state(x).value;
        const double cw = concurrence_wootters(DensityMatrix(x.matrix(), {2, 2})).value;
        worst_x = std::max(worst_x, std::abs(cx - cw));

        const DensityMatrix st(random::mixed_state(rng, 4), {2, 2});
        const double gap = lqu_brute_force_qubit(st, 10000) - lqu_exact(st, su2).value;
        worst_gap_low = std::min(worst_gap_low, gap);
        worst_gap_high = std::max(worst_gap_high, gap);
      }
      const bool ok = min_ratio >= 80.0 && max_ratio <= 120.0 && worst_x <= 1e-10 &&
                      worst_gap_low >= -1e-10 && worst_gap_high <= 1e-3;
      emit_record(common, {{"seed", common.seed},
                           {"samples", samples},
                           {"sqrt_ratio_min", min_ratio},
                           {"sqrt_ratio_max", max_ratio},
                           {"x_state_max_diff", worst_x},
                           {"brute_force_gap_min", worst_gap_low},
                           {"brute_force_gap_max", worst_gap_high},
                           {"pass", ok}});
      return ok ? 0 : kExitAcceptance;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
