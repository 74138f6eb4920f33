#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "conegauge/check.hpp"
#include "conegauge/cone.hpp"
#include "conegauge/properness.hpp"

namespace conegauge::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"dim": n, "rep": "H"|"V", "rows": [[...], ...]}; rows are normalized.
json cone_to_json(const Cone& cone);
/// Throws InvalidArgument on malformed input.
Cone cone_from_json(const json& j);
Cone load_cone(const std::filesystem::path& path);
void save_cone(const Cone& cone, const std::filesystem::path& path);

json vector_to_json(const Vector& v);
json check_to_json(const CheckResult& c);
json report_to_json(const CheckReport& r);
json properness_to_json(const PropernessReport& r);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
/// "1,2,-3" -> Vector. Throws InvalidArgument.
Vector parse_vector(std::string_view text);
std::string format_csv_row(const Vector& v);
/// Reads one vector per non-empty line; lines starting with '#' are skipped.
std::vector<Vector> read_points_csv(const std::filesystem::path& path);

}  // namespace conegauge::io
