#pragma once

#include <string>

#include <json.hpp>

#include "dpe/types.hpp"

namespace dpe {

/// {"q": q, "rows": r, "cols": c, "data": [row-major entries]}
nlohmann::json matrix_to_json(const QMatrix& a);
QMatrix matrix_from_json(const nlohmann::json& j);

/// {"length": n, "data": [...]} with null marking an erased entry; "Q" when known.
nlohmann::json vector_to_json(const ReadVector& y, std::optional<Int> Q = std::nullopt);
ReadVector vector_from_json(const nlohmann::json& j);

/// {"status": "ok", "prefix": [...]} or {"status": "e"}.
nlohmann::json outcome_to_json(const DecodeOutcome& outcome);

nlohmann::json read_json_file(const std::string& path);
/// Compact single-line JSON with sorted keys plus a trailing newline.
void write_json_file(const std::string& path, const nlohmann::json& j);
std::string render_json(const nlohmann::json& j);

}  // namespace dpe
