#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lqu/linalg.hpp"

namespace lqu {

/// Dense complex matrices as JSON: an array of rows, each row an array of
/// [re, im] pairs.
///
///   [[[0.5, 0], [0, 0]],
///    [[0, 0], [0.5, 0]]]
///
/// Throws Error(input) on malformed documents or ragged rows.
CMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const CMatrix& m);

CMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const CMatrix& m);

}  // namespace lqu
