#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "supchar/table_analysis.hpp"

namespace supchar {

/// Coefficient array of "num/den" strings, lowest power first.
nlohmann::json cyc_to_json(const CycNumber& value);
CycNumber cyc_from_json(unsigned prime, const nlohmann::json& j);

nlohmann::json pair_to_json(const RootSystem& rs, const BasicPair& pair);
BasicPair pair_from_json(const RootSystem& rs, const nlohmann::json& j);

nlohmann::json table_to_json(const SuperTable& table);
/// Header row of class ids, a row of class sizes, then one row per
/// supercharacter: id, degree, norm, values.
std::string table_to_csv(const SuperTable& table);

nlohmann::json report_to_json(const CheckReport& report);

/// {"index": [...], "rows": [[...], ...]} with field elements as integers.
nlohmann::json matrix_to_json(const GroupModel& g, const Matrix& x);
/// Accepts the matrix form above or {"coords": {"2e1": 2, ...}}; coordinates
/// are those of a_z. Throws std::invalid_argument on malformed input. The
/// result is not checked for membership in U.
Matrix element_from_json(const GroupModel& g, const nlohmann::json& j);
/// "2e1=2,e1-e2=1" as coordinates of a_z.
Coords coords_from_text(const GroupModel& g, const std::string& text);

}  // namespace supchar
