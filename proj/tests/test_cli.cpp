#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "conegauge/cli.hpp"
#include "conegauge/gauge.hpp"
#include "conegauge/io.hpp"
#include "conegauge/oracle.hpp"
#include "doctest.h"

using namespace conegauge;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(CONEGAUGE_TEST_DATA) + "/" + name;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("conegauge_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli: cone-check") {
  const Run ok = run({"cone-check", "--cone", data("orthant2.json")});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["schema"] == 1);
  CHECK(j["proper"] == true);
  CHECK(j["pointed"] == true);
  CHECK(j["irredundant_facets"].size() == 2);

  const Run half = run({"cone-check", "--cone", data("halfplane.json")});
  CHECK(half.code == 1);
  CHECK(json::parse(half.out)["proper"] == false);

  CHECK(run({"cone-check", "--cone", data("truncated.json")}).code == 2);
  CHECK(run({"cone-check", "--cone", data("missing.json")}).code == 2);
  CHECK(run({"cone-check"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
}

TEST_CASE("cli: gauge") {
  const Run r = run({"gauge", "--cone", data("orthant2.json"), "--apex", "1,1",
                     "--point=-3,2", "--point", "0,0", "--oracle"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const auto& p0 = j["points"][0];
  CHECK(p0["q"] == 2.0);
  CHECK(p0["ps"] == 3.0);
  CHECK(p0["kernel"] == false);
  CHECK(std::abs(p0["delta"].get<double>()) <= 1e-9);
  const auto& p1 = j["points"][1];
  CHECK(p1["q"] == 0.0);
  CHECK(p1["ps"] == 0.0);
  CHECK(p1["kernel"] == true);

  const Run boundary = run({"gauge", "--cone", data("orthant2.json"), "--apex", "1,0",
                            "--point", "0,0"});
  CHECK(boundary.code == 1);
  CHECK(json::parse(boundary.out)["detail"]["apex_margin"] == 0.0);

  CHECK(run({"gauge", "--cone", data("orthant2.json"), "--point", "1,2,3"}).code == 2);
  CHECK(run({"gauge", "--cone", data("orthant2.json"), "--point", "a,b"}).code == 2);

  const Run csv = run({"gauge", "--fixture", "orthant2", "--point=-3,2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "# dim=2\nq,ps,kernel\n2,3,0\n");
}

TEST_CASE("cli: retract") {
  const Run r = run({"retract", "--cone", data("orthant2.json"), "--apex", "1,1",
                     "--point=-3,2", "--point=-1,-2", "--point", "1,1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["points"][0]["Q"] == json({-5.0, 0.0}));
  CHECK(j["points"][0]["R"] == json({2.0, 2.0}));
  CHECK(j["points"][0]["active_facet"] == 2);
  CHECK(j["points"][1]["Q"] == json({-1.0, -2.0}));
  CHECK(j["points"][1]["R"] == json({0.0, 0.0}));
  CHECK(j["points"][1]["active_facet"].is_null());
  CHECK(j["points"][2]["Q"] == json({0.0, 0.0}));
  CHECK(j["points"][2]["R"] == json({1.0, 1.0}));
}

TEST_CASE("cli: audit and proper-check") {
  const Run a = run({"audit", "--fixture", "orthant2", "--samples", "10000"});
  CHECK(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["pass"] == true);
  CHECK(j["retraction"]["checks"].size() == 11);
  CHECK(run({"audit", "--fixture", "orthant2", "--samples", "10000"}).out == a.out);

  const Run e = run({"proper-check", "--functional", "euclidean", "--dim", "2",
                     "--samples", "500"});
  CHECK(e.code == 1);
  const json je = json::parse(e.out);
  CHECK(je["axioms"]["pass"] == true);
  CHECK(je["properness"]["all_pass"] == false);
  CHECK(je["properness"]["consistent"] == true);
  CHECK_FALSE(je["properness"]["condition_i"]["witness"].is_null());

  const Run g = run({"proper-check", "--fixture", "wedge", "--samples", "500"});
  CHECK(g.code == 0);

  CHECK(run({"proper-check", "--functional", "euclidean", "--samples", "5"}).code == 2);
  CHECK(run({"audit", "--fixture", "orthant2", "--samples", "0"}).code == 2);
}

TEST_CASE("cli: sphere-dump") {
  const auto dir = scratch_dir("dump");
  const std::string file = (dir / "wedge.csv").string();
  const Run r = run({"sphere-dump", "--fixture", "wedge", "--count", "100", "--seed", "7",
                     "--output", file});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());

  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "# dim=2 seed=7");
  const auto pts = io::read_points_csv(file);
  REQUIRE(pts.size() == 100);
  const auto w = fixture_by_name("wedge");
  const GaugeNorm g(w.cone_h, w.apex);
  for (const auto& x : pts) CHECK(std::abs(g(x) - 1.0) <= 1e-9);

  const Run again = run({"sphere-dump", "--fixture", "wedge", "--count", "100", "--seed", "7"});
  std::ifstream in2(file);
  std::stringstream saved;
  saved << in2.rdbuf();
  CHECK(again.out == saved.str());

  const Run one = run({"sphere-dump", "--fixture", "wedge", "--count", "1"});
  CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);
}

TEST_CASE("cli: fixtures export round-trips") {
  const auto dir = scratch_dir("fixtures");
  const Run r = run({"fixtures", "--export", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["fixtures"].size() == 6);
  for (const auto& f : fixture_suite()) {
    CAPTURE(f.name);
    const Cone h = io::load_cone(dir / (f.name + ".H.json"));
    const Cone v = io::load_cone(dir / (f.name + ".V.json"));
    const auto& hn = std::get<HalfspaceCone>(h).normals();
    const auto& vg = std::get<GeneratorCone>(v).generators();
    REQUIRE(hn.size() == f.cone_h.normals().size());
    REQUIRE(vg.size() == f.cone_v.generators().size());
    for (std::size_t i = 0; i < hn.size(); ++i) {
      CHECK(norm_inf(hn[i] - f.cone_h.normals()[i]) <= 1e-12);
    }
    for (std::size_t i = 0; i < vg.size(); ++i) {
      CHECK(norm_inf(vg[i] - f.cone_v.generators()[i]) <= 1e-12);
    }
  }
}

TEST_CASE("io: cone JSON validation") {
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"dim": 2, "rep": "X", "rows": [[1,0]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"dim": 3, "rep": "H", "rows": [[1,0]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"dim": 2, "rep": "H", "rows": []})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"dim": 2, "rep": "H"})")), InvalidArgument);
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"dim": 2, "rep": "H", "rows": [[0,0]]})")),
                  InvalidArgument);
  const Cone c = io::cone_from_json(json::parse(R"({"dim": 2, "rep": "V", "rows": [[3,4]]})"));
  CHECK(norm_inf(std::get<GeneratorCone>(c).generators()[0] - Vector{0.6, 0.8}) <= 1e-15);
}

TEST_CASE("io: number formatting round-trips") {
  Sampler s(3);
  for (int i = 0; i < 1000; ++i) {
    const Vector v = s.point(4);
    CHECK(io::parse_vector(io::format_csv_row(v)) == v);
  }
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(-5.0) == "-5");
  CHECK(io::parse_vector(" 1, -2 ,+3") == Vector{1, -2, 3});
  CHECK_THROWS_AS(io::parse_vector("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_vector(""), InvalidArgument);
}
