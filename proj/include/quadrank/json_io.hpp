#pragma once

#include <string>

#include <json.hpp>

#include "quadrank/prime_average.hpp"
#include "quadrank/rank.hpp"
#include "quadrank/surface.hpp"

namespace quadrank {

using json = nlohmann::json;

json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j);

json surface_to_json(const QuadraticSurface& s);
/// Accepts {"coeff_matrix": 4x3} or {"A": [...], "B": [...], "C": [...]}
/// (ascending powers). Throws ParseError on schema violations.
QuadraticSurface surface_from_json(const json& j);

/// Compact single-line form used for hashing.
std::string canonical_surface_json(const QuadraticSurface& s);

/// File form: one matrix row per line. `extra` members (e.g. provenance)
/// are appended after coeff_matrix in insertion order.
std::string surface_file_text(const QuadraticSurface& s, const json& extra = json::object());

QuadraticSurface read_surface_file(const std::string& path);

json factorization_to_json(const FactorizationQ& f);
json rank_report_to_json(const RankReport& r);
json validation_to_json(const ValidationReport& v);
json estimate_to_json(const PrimeAverageEstimate& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace quadrank
