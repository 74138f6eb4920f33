#include "conegauge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace conegauge::io {

json vector_to_json(const Vector& v) { return json(v.data()); }

json cone_to_json(const Cone& cone) {
  json j;
  j["dim"] = dim(cone);
  j["rows"] = json::array();
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, HalfspaceCone>) {
          j["rep"] = "H";
          for (const auto& a : c.normals()) j["rows"].push_back(vector_to_json(a));
        } else {
          j["rep"] = "V";
          for (const auto& g : c.generators()) j["rows"].push_back(vector_to_json(g));
        }
      },
      cone);
  return j;
}

Cone cone_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("cone JSON must be an object");
    const auto n = j.at("dim").get<std::size_t>();
    const auto rep = j.at("rep").get<std::string>();
    const auto& rows_json = j.at("rows");
    if (n == 0) throw InvalidArgument("cone dim must be >= 1");
    if (!rows_json.is_array() || rows_json.empty()) {
      throw InvalidArgument("cone rows must be a non-empty array");
    }
    std::vector<Vector> rows;
    for (const auto& r : rows_json) {
      Vector v(r.get<std::vector<double>>());
      require_dim(v, n);
      rows.push_back(std::move(v));
    }
    if (rep == "H") return HalfspaceCone(std::move(rows));
    if (rep == "V") return GeneratorCone(std::move(rows));
    throw InvalidArgument("cone rep must be \"H\" or \"V\"");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed cone JSON: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw InvalidArgument(std::string("cone row ") + e.what());
  }
}

Cone load_cone(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open cone file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
  return cone_from_json(j);
}

void save_cone(const Cone& cone, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << cone_to_json(cone).dump(2) << '\n';
}

json check_to_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["max_violation"] = c.max_violation;
  j["tolerance"] = c.tolerance;
  j["evaluated"] = c.evaluated;
  j["skipped"] = c.skipped;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.witness.empty()) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = json::array();
    for (const auto& w : c.witness) j["witness"].push_back(vector_to_json(w));
  }
  return j;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["pass"] = r.all_pass();
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  return j;
}

json properness_to_json(const PropernessReport& r) {
  json j;
  j["candidate_apex"] = vector_to_json(r.candidate_apex);
  j["samples_used"] = r.samples_used;
  j["condition_i"] = check_to_json(r.condition_i);
  j["condition_ii"] = check_to_json(r.condition_ii);
  j["condition_iii_fwd"] = check_to_json(r.condition_iii_fwd);
  j["condition_iii_bwd"] = check_to_json(r.condition_iii_bwd);
  j["all_pass"] = r.all_pass();
  j["consistent"] = r.consistent();
  return j;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Vector parse_vector(std::string_view text) {
  std::vector<double> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) {
      tok.remove_suffix(1);
    }
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw InvalidArgument("cannot parse vector \"" + std::string(text) + "\"");
    }
    coords.push_back(v);
    pos = end + 1;
  }
  return Vector(std::move(coords));
}

std::string format_csv_row(const Vector& v) {
  std::string row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) row += ',';
    row += format_double(v[i]);
  }
  return row;
}

std::vector<Vector> read_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open points file " + path.string());
  std::vector<Vector> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#' || line == "\r") continue;
    pts.push_back(parse_vector(line));
  }
  return pts;
}

}  // namespace conegauge::io
