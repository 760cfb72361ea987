#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lqu/linalg.hpp"
#include "lqu/quantum_state.hpp"

namespace lqu::sweep {

enum class Model { heisenberg, custom };
enum class Quantity { lqu_closed, lqu_pipeline, concurrence, tc, w_eigenvalues };
enum class Format { csv, json };

const char* to_string(Quantity q);
std::optional<Quantity> quantity_from_string(const std::string& s);

/// A sweep over a (T, ω) grid. Loaded from a JSON document with "schema": 1:
///
///   {
///     "schema": 1,
///     "model": "heisenberg",             // or "custom"
///     "J": 0.5,                          // heisenberg only
///     "H0": "h0.json", "d1": 2, "d2": 2, // custom only; path relative to the config
///     "drive": {"operator": "sz1", "xi": 0.05, "delta": 0.2},
///     "grid": {"T": {"start": 0.1, "stop": 2.0, "step": 0.05},
///              "omega": [0.4, 0.5, 0.6]},
///     "outputs": ["lqu_closed", "lqu_pipeline"],
///     "output": {"path": "out.csv", "format": "csv"},
///     "workers": 1,
///     "tolerance": 1e-8
///   }
///
/// The drive operator is a two-qubit name (sx1 … sz2) or a path to a JSON
/// matrix. δ defaults to 0.2 and ξ to 0; nothing else has a default except
/// the output block (stdout, csv), workers (1) and tolerance (1e-8).
struct RunConfig {
  Model model = Model::heisenberg;
  double J = 0.0;
  CMatrix h0;
  Bipartition parts{2, 2};

  std::string drive_name = "sz1";
  CMatrix drive_op;
  double xi = 0.0;
  double delta = 0.2;

  std::vector<double> temperatures;
  std::vector<double> omegas;
  std::vector<Quantity> outputs;

  std::string output_path;
  Format format = Format::csv;
  int workers = 1;
  double tolerance = 1e-8;
};

/// Throws Error(input) with a message naming the offending field.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// start, start+step, … up to stop inclusive (with 1e-9·step slack).
/// Throws Error(input) for a non-positive step or stop < start.
std::vector<double> inclusive_range(double start, double stop, double step);

struct SweepRow {
  double T = 0.0;
  double omega = 0.0;
  std::vector<double> values;
  std::vector<std::string> flags;
};

struct SweepSummary {
  std::size_t points = 0;
  std::size_t flagged_points = 0;
  /// max |lqu_closed − lqu_pipeline| when both were requested.
  std::optional<double> max_discrepancy;
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// Column names after T and omega, in output order.
std::vector<std::string> value_columns(const RunConfig& config);

/// Evaluates every grid point, T-major then ω, on `workers` threads. Row
/// order and values do not depend on the worker count.
SweepTable run(const RunConfig& config, int workers = 1);

/// Header `T,omega,<columns…>,flags`; numbers with 17 significant digits;
/// flags comma-joined in one quoted field.
std::string to_csv(const SweepTable& table);
nlohmann::json to_json(const SweepTable& table);

}  // namespace lqu::sweep
