#include "lqu/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "lqu/entanglement.hpp"
#include "lqu/error.hpp"
#include "lqu/heisenberg.hpp"
#include "lqu/linear_response.hpp"
#include "lqu/lqu_core.hpp"
#include "lqu/matrix_io.hpp"
#include "lqu/su_algebra.hpp"

namespace lqu::sweep {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::input, "config: " + msg); }

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing field '") + key + "'");
  if (!obj.at(key).is_number()) bad(std::string("field '") + key + "' must be a number");
  return obj.at(key).get<double>();
}

double number_field_or(const json& obj, const char* key, double fallback) {
  return obj.contains(key) ? number_field(obj, key) : fallback;
}

std::vector<double> parse_axis(const json& grid, const char* key) {
  if (!grid.contains(key)) bad(std::string("grid is missing '") + key + "'");
  const json& axis = grid.at(key);
  std::vector<double> values;
  if (axis.is_array()) {
    for (const json& v : axis) {
      if (!v.is_number()) bad(std::string("grid.") + key + " must contain numbers");
      values.push_back(v.get<double>());
    }
  } else if (axis.is_object()) {
    values = inclusive_range(number_field(axis, "start"), number_field(axis, "stop"),
                             number_field(axis, "step"));
  } else if (axis.is_number()) {
    values.push_back(axis.get<double>());
  } else {
    bad(std::string("grid.") + key + " must be a list, a number or {start, stop, step}");
  }
  if (values.empty()) bad(std::string("grid.") + key + " is empty");
  return values;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Evaluator {
  const RunConfig& config;
  GeneratorSet gen;
  std::optional<SpectralData> h_spec;

  explicit Evaluator(const RunConfig& c) : config(c), gen(build_generators(c.parts.d1)) {
    if (config.model == Model::custom) h_spec = eig_hermitian(config.h0);
  }

  SweepRow operator()(double T, double omega) const {
    SweepRow row;
    row.T = T;
    row.omega = omega;
    std::vector<std::string> flags;
    const heisenberg::Params p{config.J, T, config.xi, config.delta, omega};

    std::optional<LquResult> pipeline;
    auto pipeline_result = [&]() -> const LquResult& {
      if (!pipeline) {
        if (config.model == Model::heisenberg) {
          pipeline = heisenberg::pipeline_lqu(p, config.drive_op);
        } else {
          const RVector w = thermal_weights(*h_spec, 1.0 / T);
          const DriveSpec drive{config.drive_op, config.xi, omega, config.delta};
          pipeline = lqu_driven(*h_spec, w, drive, gen, config.parts.d2);
        }
        for (auto& f : pipeline->flags.labels()) flags.push_back(f);
      }
      return *pipeline;
    };

    for (Quantity q : config.outputs) {
      switch (q) {
        case Quantity::lqu_closed:
          row.values.push_back(heisenberg::closed_form_lqu(p));
          break;
        case Quantity::lqu_pipeline:
          row.values.push_back(pipeline_result().value);
          break;
        case Quantity::concurrence:
          if (config.model == Model::heisenberg) {
            row.values.push_back(heisenberg::closed_form_concurrence(p).value);
          } else {
            const RVector w = thermal_weights(*h_spec, 1.0 / T);
            const DriveSpec drive{config.drive_op, config.xi, omega, config.delta};
            const PerturbationMatrix rho1 = rho1_driven(*h_spec, w, drive, config.parts);
            const CMatrix rho0 = h_spec->eigenvectors * w.cast<cplx>().asDiagonal() *
                                 h_spec->eigenvectors.adjoint();
            const CMatrix rho = hermitize(rho0 + rho1.scaled());
            if (validate(rho, config.parts).ok()) {
              row.values.push_back(concurrence_wootters(DensityMatrix::trusted(rho, config.parts)).value);
            } else {
              row.values.push_back(std::nan(""));
              flags.emplace_back("non-state");
            }
          }
          break;
        case Quantity::tc: {
          const auto tc = heisenberg::critical_temperatures(p);
          row.values.push_back(tc.tc0);
          row.values.push_back(tc.tc1);
          break;
        }
        case Quantity::w_eigenvalues: {
          const RVector& ev = pipeline_result().w_eigenvalues;
          for (Eigen::Index k = 0; k < ev.size(); ++k) row.values.push_back(ev(k));
          break;
        }
      }
    }
    std::sort(flags.begin(), flags.end());
    flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
    row.flags = std::move(flags);
    return row;
  }
};

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::lqu_closed:
      return "lqu_closed";
    case Quantity::lqu_pipeline:
      return "lqu_pipeline";
    case Quantity::concurrence:
      return "concurrence";
    case Quantity::tc:
      return "tc";
    case Quantity::w_eigenvalues:
      return "w_eigenvalues";
  }
  return "unknown";
}

std::optional<Quantity> quantity_from_string(const std::string& s) {
  for (Quantity q : {Quantity::lqu_closed, Quantity::lqu_pipeline, Quantity::concurrence,
                     Quantity::tc, Quantity::w_eigenvalues}) {
    if (s == to_string(q)) return q;
  }
  return std::nullopt;
}

std::vector<double> inclusive_range(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) bad("range step must be positive");
  if (!std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    bad("range stop must be >= start");
  }
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (!doc.contains("schema") || !doc.at("schema").is_number_integer() ||
      doc.at("schema").get<int>() != 1) {
    bad("unsupported or missing schema (expected \"schema\": 1)");
  }
  RunConfig cfg;
  const std::string model = doc.value("model", std::string());
  if (model == "heisenberg") {
    cfg.model = Model::heisenberg;
    cfg.J = number_field(doc, "J");
    if (!(cfg.J > 0.0)) bad("J must be > 0");
  } else if (model == "custom") {
    cfg.model = Model::custom;
    if (!doc.contains("H0") || !doc.at("H0").is_string()) bad("custom model needs an \"H0\" path");
    cfg.h0 = read_matrix_file(resolve(base_dir, doc.at("H0").get<std::string>()));
    cfg.parts.d1 = static_cast<int>(number_field(doc, "d1"));
    cfg.parts.d2 = static_cast<int>(number_field(doc, "d2"));
    if (cfg.parts.d1 < 2 || cfg.parts.d2 < 1) bad("d1 must be >= 2 and d2 >= 1");
    if (cfg.h0.rows() != cfg.parts.total() || cfg.h0.cols() != cfg.parts.total()) {
      bad("H0 is " + std::to_string(cfg.h0.rows()) + "x" + std::to_string(cfg.h0.cols()) +
          " but d1*d2 = " + std::to_string(cfg.parts.total()));
    }
    Hamiltonian check(cfg.h0, cfg.parts);
  } else {
    bad("model must be \"heisenberg\" or \"custom\"");
  }

  const json drive = doc.value("drive", json::object());
  if (!drive.is_object()) bad("drive must be an object");
  cfg.xi = number_field_or(drive, "xi", 0.0);
  cfg.delta = number_field_or(drive, "delta", 0.2);
  if (!(cfg.delta > 0.0)) bad("drive.delta must be > 0");
  cfg.drive_name = drive.value("operator", std::string("sz1"));
  if (is_two_qubit_operator_name(cfg.drive_name)) {
    if (cfg.parts.total() != 4) bad("named drive operators need a 2x2 system");
    cfg.drive_op = two_qubit_operator(cfg.drive_name);
  } else {
    cfg.drive_op = read_matrix_file(resolve(base_dir, cfg.drive_name));
    if (cfg.drive_op.rows() != cfg.parts.total() || cfg.drive_op.cols() != cfg.parts.total()) {
      bad("drive operator dimension does not match the system");
    }
  }

  if (!doc.contains("grid") || !doc.at("grid").is_object()) bad("missing grid object");
  cfg.temperatures = parse_axis(doc.at("grid"), "T");
  cfg.omegas = parse_axis(doc.at("grid"), "omega");
  for (double t : cfg.temperatures) {
    if (!(t > 0.0)) bad("temperatures must be > 0");
  }
  for (double w : cfg.omegas) {
    if (!(w >= 0.0)) bad("frequencies must be >= 0");
  }

  if (!doc.contains("outputs") || !doc.at("outputs").is_array() || doc.at("outputs").empty()) {
    bad("outputs must be a non-empty list");
  }
  for (const json& q : doc.at("outputs")) {
    const auto parsed = q.is_string() ? quantity_from_string(q.get<std::string>()) : std::nullopt;
    if (!parsed) bad("unknown output quantity " + q.dump());
    if (cfg.model == Model::custom && (*parsed == Quantity::lqu_closed || *parsed == Quantity::tc)) {
      bad(std::string(to_string(*parsed)) + " is only available for the heisenberg model");
    }
    if (cfg.model == Model::custom && *parsed == Quantity::concurrence && cfg.parts.total() != 4) {
      bad("concurrence needs a two-qubit system");
    }
    cfg.outputs.push_back(*parsed);
  }

  if (doc.contains("output")) {
    const json& out = doc.at("output");
    if (!out.is_object()) bad("output must be an object");
    cfg.output_path = out.value("path", std::string());
    const std::string fmt = out.value("format", std::string("csv"));
    if (fmt == "csv") {
      cfg.format = Format::csv;
    } else if (fmt == "json") {
      cfg.format = Format::json;
    } else {
      bad("output.format must be csv or json");
    }
  }
  cfg.workers = static_cast<int>(number_field_or(doc, "workers", 1));
  if (cfg.workers < 1) bad("workers must be >= 1");
  cfg.tolerance = number_field_or(doc, "tolerance", 1e-8);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input, "cannot read config file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::input, "config file " + path.string() + " is not JSON: " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

std::vector<std::string> value_columns(const RunConfig& config) {
  std::vector<std::string> cols;
  const int n = config.parts.d1 * config.parts.d1 - 1;
  for (Quantity q : config.outputs) {
    switch (q) {
      case Quantity::tc:
        cols.emplace_back("tc0");
        cols.emplace_back("tc1");
        break;
      case Quantity::w_eigenvalues:
        for (int k = 0; k < n; ++k) cols.push_back("w_eig_" + std::to_string(k));
        break;
      default:
        cols.emplace_back(to_string(q));
    }
  }
  return cols;
}

SweepTable run(const RunConfig& config, int workers) {
  const Evaluator eval(config);
  const std::size_t nw = config.omegas.size();
  const std::size_t total = config.temperatures.size() * nw;

  SweepTable table;
  table.columns = {"T", "omega"};
  for (auto& c : value_columns(config)) table.columns.push_back(std::move(c));
  table.columns.emplace_back("flags");
  table.rows.resize(total);

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      table.rows[idx] = eval(config.temperatures[idx / nw], config.omegas[idx % nw]);
    }
  };
  const int n_threads = std::max(1, std::min<int>(workers, static_cast<int>(total)));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }

  table.summary.points = total;
  std::optional<std::size_t> closed_col;
  std::optional<std::size_t> pipe_col;
  {
    std::size_t offset = 0;
    const int n = config.parts.d1 * config.parts.d1 - 1;
    for (Quantity q : config.outputs) {
      if (q == Quantity::lqu_closed) closed_col = offset;
      if (q == Quantity::lqu_pipeline) pipe_col = offset;
      offset += q == Quantity::tc ? 2 : q == Quantity::w_eigenvalues ? static_cast<std::size_t>(n) : 1;
    }
  }
  for (const SweepRow& row : table.rows) {
    if (!row.flags.empty()) ++table.summary.flagged_points;
    if (closed_col && pipe_col) {
      const double d = std::abs(row.values[*closed_col] - row.values[*pipe_col]);
      table.summary.max_discrepancy = std::max(table.summary.max_discrepancy.value_or(0.0), d);
    }
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const SweepRow& row : table.rows) {
    os << format_number(row.T) << ',' << format_number(row.omega);
    for (double v : row.values) os << ',' << format_number(v);
    os << ",\"";
    for (std::size_t f = 0; f < row.flags.size(); ++f) {
      if (f) os << ',';
      os << row.flags[f];
    }
    os << "\"\n";
  }
  return os.str();
}

json to_json(const SweepTable& table) {
  json rows = json::array();
  for (const SweepRow& row : table.rows) {
    json r = json::array({row.T, row.omega});
    for (double v : row.values) r.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    r.push_back(row.flags);
    rows.push_back(std::move(r));
  }
  json summary = {{"points", table.summary.points},
                  {"flagged_points", table.summary.flagged_points}};
  if (table.summary.max_discrepancy) summary["max_discrepancy"] = *table.summary.max_discrepancy;
  return {{"columns", table.columns}, {"rows", std::move(rows)}, {"summary", std::move(summary)}};
}

}  // namespace lqu::sweep
