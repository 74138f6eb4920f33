#include "conegauge/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conegauge/gauge.hpp"
#include "conegauge/io.hpp"
#include "conegauge/oracle.hpp"
#include "conegauge/properness.hpp"
#include "conegauge/retraction.hpp"

namespace conegauge::cli {

namespace {

using io::json;

struct Config {
  std::string cone_file;
  std::string fixture;
  std::string rep = "H";
  std::string apex;
  std::vector<std::string> points;
  std::string points_file;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  double tol = tolerance::kFeasibility;
  std::string output;
  std::string format = "json";
  bool oracle = false;
  std::string functional = "gauge";
  std::size_t dim = 0;
  std::size_t count = 100;
  std::string export_dir;
};

/// A mathematical check failed in a way that is reported, not a usage error.
struct CheckFailure {
  std::string message;
  json detail;
};

struct Input {
  Cone cone;
  std::optional<Vector> apex;
};

Input load_input(const Config& cfg) {
  if (!cfg.cone_file.empty() && !cfg.fixture.empty()) {
    throw InvalidArgument("give either --cone or --fixture, not both");
  }
  if (!cfg.fixture.empty()) {
    Fixture f = fixture_by_name(cfg.fixture);
    Cone cone = cfg.rep == "V" ? Cone(f.cone_v) : Cone(f.cone_h);
    std::optional<Vector> apex = f.apex;
    if (!cfg.apex.empty()) apex = io::parse_vector(cfg.apex);
    return {std::move(cone), std::move(apex)};
  }
  if (cfg.cone_file.empty()) throw InvalidArgument("missing --cone or --fixture");
  Cone cone = io::load_cone(cfg.cone_file);
  std::optional<Vector> apex;
  if (!cfg.apex.empty()) apex = io::parse_vector(cfg.apex);
  return {std::move(cone), std::move(apex)};
}

/// Builds the gauge; a non-proper cone or boundary apex is a check failure.
GaugeNorm make_gauge(const Input& in) {
  try {
    Vector u = in.apex ? *in.apex : -interior_point(in.cone);
    require_dim(u, dim(in.cone));
    return GaugeNorm(in.cone, std::move(u));
  } catch (const ApexNotInterior& e) {
    throw CheckFailure{e.what(), json{{"apex_margin", e.margin()},
                                      {"required_margin", tolerance::kApexMargin}}};
  } catch (const ConeNotProper& e) {
    throw CheckFailure{e.what(), json::object()};
  } catch (const NotFullDimensional& e) {
    throw CheckFailure{"cone not proper", json{{"reason", e.what()}}};
  }
}

std::vector<Vector> load_points(const Config& cfg) {
  std::vector<Vector> pts;
  for (const auto& p : cfg.points) pts.push_back(io::parse_vector(p));
  if (!cfg.points_file.empty()) {
    auto more = io::read_points_csv(cfg.points_file);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  if (pts.empty()) throw InvalidArgument("no points given (--point or --points)");
  return pts;
}

json header(const std::string& command, const Config& cfg, bool randomized) {
  json j;
  j["schema"] = io::kSchemaVersion;
  j["command"] = command;
  if (randomized) {
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
  }
  return j;
}

CheckOptions check_options(const Config& cfg) {
  return CheckOptions{.samples = cfg.samples, .seed = cfg.seed, .tol = cfg.tol};
}

// Each command writes its document into `doc` and returns an exit code.

int cmd_cone_check(const Config& cfg, std::string& doc) {
  const Input in = load_input(cfg);
  json j = header("cone-check", cfg, false);
  j["dim"] = dim(in.cone);
  j["rep"] = std::holds_alternative<HalfspaceCone>(in.cone) ? "H" : "V";
  const bool pointed = is_pointed(in.cone);
  std::optional<Vector> interior;
  try {
    interior = interior_point(in.cone);
  } catch (const NotFullDimensional&) {
  }
  j["pointed"] = pointed;
  j["full_dimensional"] = interior.has_value();
  j["proper"] = pointed && interior.has_value();
  j["interior_point"] = interior ? io::vector_to_json(*interior) : json(nullptr);
  if (const auto* h = std::get_if<HalfspaceCone>(&in.cone)) {
    j["irredundant_facets"] = io::cone_to_json(eliminate_redundancy(*h))["rows"];
  } else {
    j["irredundant_facets"] = nullptr;
  }
  doc = j.dump(2) + "\n";
  return j["proper"].get<bool>() ? kPass : kCheckFailed;
}

int cmd_gauge(const Config& cfg, std::string& doc) {
  const Input in = load_input(cfg);
  const GaugeNorm g = make_gauge(in);
  const Functional q = as_functional(g);
  const Functional qs = symmetrize(q);
  const auto pts = load_points(cfg);

  if (cfg.format == "csv") {
    std::string out = "# dim=" + std::to_string(g.dim()) + "\n";
    out += cfg.oracle ? "q,ps,kernel,bisection,delta\n" : "q,ps,kernel\n";
    for (const auto& x : pts) {
      const double v = q(x);
      out += io::format_double(v) + "," + io::format_double(qs(x)) + "," +
             (kernel_contains(q, x, cfg.tol) ? "1" : "0");
      if (cfg.oracle) {
        const double b = gauge_by_bisection(g.cone(), g.apex(), x);
        out += "," + io::format_double(b) + "," + io::format_double(v - b);
      }
      out += "\n";
    }
    doc = std::move(out);
    return kPass;
  }

  json j = header("gauge", cfg, false);
  j["apex"] = io::vector_to_json(g.apex());
  j["apex_margin"] = g.apex_margin();
  j["points"] = json::array();
  for (const auto& x : pts) {
    json e;
    e["x"] = io::vector_to_json(x);
    e["q"] = q(x);
    e["ps"] = qs(x);
    e["kernel"] = kernel_contains(q, x, cfg.tol);
    if (cfg.oracle) {
      const double b = gauge_by_bisection(g.cone(), g.apex(), x);
      e["bisection"] = b;
      e["delta"] = e["q"].get<double>() - b;
    }
    j["points"].push_back(std::move(e));
  }
  doc = j.dump(2) + "\n";
  return kPass;
}

int cmd_retract(const Config& cfg, std::string& doc) {
  const Input in = load_input(cfg);
  const RetractionPair pair(make_gauge(in));
  const auto pts = load_points(cfg);
  const auto* facets = std::get_if<HalfspaceCone>(&pair.range_cone());

  json j = header("retract", cfg, false);
  j["apex"] = io::vector_to_json(pair.ray_direction());
  j["points"] = json::array();
  for (const auto& x : pts) {
    const double qx = gauge_eval(pair.gauge(), x);
    const Vector qx_vec = apply_Q(pair, x);
    json e;
    e["x"] = io::vector_to_json(x);
    e["Q"] = io::vector_to_json(qx_vec);
    e["R"] = io::vector_to_json(apply_R(pair, x));
    e["q"] = qx;
    e["active_facet"] = nullptr;
    if (facets != nullptr && qx > cfg.tol) {
      // 1-based index into the irredundant facet list.
      if (auto f = active_facet(*facets, qx_vec, 1e-8)) e["active_facet"] = *f + 1;
    }
    j["points"].push_back(std::move(e));
  }
  j["facets"] = io::cone_to_json(pair.range_cone())["rows"];
  doc = j.dump(2) + "\n";
  return kPass;
}

int cmd_audit(const Config& cfg, std::string& doc) {
  const Input in = load_input(cfg);
  const RetractionPair pair(make_gauge(in));
  const CheckOptions opts = check_options(cfg);
  const PropernessReport proper = verify_equivalence(pair.gauge(), opts);
  const CheckReport audit = audit_retraction(pair, opts);

  json j = header("audit", cfg, true);
  j["apex"] = io::vector_to_json(pair.ray_direction());
  j["properness"] = io::properness_to_json(proper);
  j["retraction"] = io::report_to_json(audit);
  const bool pass = proper.all_pass() && audit.all_pass();
  j["pass"] = pass;
  doc = j.dump(2) + "\n";
  return pass ? kPass : kCheckFailed;
}

int cmd_proper_check(const Config& cfg, std::string& doc) {
  const CheckOptions opts = check_options(cfg);
  json j = header("proper-check", cfg, true);
  j["functional"] = cfg.functional;

  std::optional<PropernessReport> proper;
  std::optional<CheckReport> axioms;
  if (cfg.functional == "euclidean") {
    if (cfg.dim == 0) throw InvalidArgument("--functional euclidean needs --dim");
    const Functional p = euclidean_norm(cfg.dim);
    const Vector u = cfg.apex.empty() ? Vector::unit(cfg.dim, 0) : io::parse_vector(cfg.apex);
    require_dim(u, cfg.dim);
    PropernessOptions popts;
    popts.check = opts;
    axioms = check_axioms(p, opts);
    proper = verify_equivalence(p, u, popts);
  } else if (cfg.functional == "gauge") {
    const GaugeNorm g = make_gauge(load_input(cfg));
    const std::vector<Vector> extra{g.apex()};
    axioms = check_axioms(as_functional(g), opts, extra);
    proper = verify_equivalence(g, opts);
  } else {
    throw InvalidArgument("unknown functional: " + cfg.functional);
  }

  j["axioms"] = io::report_to_json(*axioms);
  j["properness"] = io::properness_to_json(*proper);
  if (!proper->consistent()) {
    j["meta_failure"] = "conditions disagree; tolerance miscalibrated";
  }
  const bool pass = proper->all_pass() && axioms->all_pass();
  j["pass"] = pass;
  doc = j.dump(2) + "\n";
  return pass ? kPass : kCheckFailed;
}

int cmd_sphere_dump(const Config& cfg, std::string& doc) {
  const Input in = load_input(cfg);
  const GaugeNorm g = make_gauge(in);
  std::string out = "# dim=" + std::to_string(g.dim()) + " seed=" + std::to_string(cfg.seed) + "\n";
  for (const auto& x : sphere_sample(g, cfg.count, cfg.seed)) {
    out += io::format_csv_row(x) + "\n";
  }
  doc = std::move(out);
  return kPass;
}

int cmd_fixtures(const Config& cfg, std::string& doc) {
  json j = header("fixtures", cfg, false);
  j["fixtures"] = json::array();
  if (!cfg.export_dir.empty()) std::filesystem::create_directories(cfg.export_dir);
  for (const auto& f : fixture_suite()) {
    json e;
    e["name"] = f.name;
    e["dim"] = f.apex.size();
    e["apex"] = io::vector_to_json(f.apex);
    e["closed_form"] = f.closed_form ? json(*f.closed_form) : json(nullptr);
    if (!cfg.export_dir.empty()) {
      const std::filesystem::path dir(cfg.export_dir);
      const auto h = dir / (f.name + ".H.json");
      const auto v = dir / (f.name + ".V.json");
      io::save_cone(f.cone_h, h);
      io::save_cone(f.cone_v, v);
      e["files"] = {h.string(), v.string()};
    }
    j["fixtures"].push_back(std::move(e));
  }
  doc = j.dump(2) + "\n";
  return kPass;
}

void add_cone_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--cone", cfg.cone_file, "cone JSON file");
  sub->add_option("--fixture", cfg.fixture, "built-in fixture name");
  sub->add_option("--rep", cfg.rep, "fixture representation")->check(CLI::IsMember({"H", "V"}));
}

void add_gauge_options(CLI::App* sub, Config& cfg) {
  add_cone_options(sub, cfg);
  sub->add_option("--apex", cfg.apex, "apex u with -u interior, e.g. 1,1");
  sub->add_option("--tol", cfg.tol, "absolute tolerance")->check(CLI::PositiveNumber);
}

void add_point_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--point", cfg.points, "input point, e.g. -3,2 (repeatable)")
      ->allow_extra_args(false);
  sub->add_option("--points", cfg.points_file, "CSV file of points");
}

void add_sampling_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--samples", cfg.samples, "random samples")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "random seed")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Proper asymmetric norms as gauges of polyhedral cones"};
  app.require_subcommand(1);

  auto* cone_check = app.add_subcommand("cone-check", "pointedness, interior and facets of a cone");
  add_cone_options(cone_check, cfg);

  auto* gauge = app.add_subcommand("gauge", "evaluate q, its symmetrization and kernel membership");
  add_gauge_options(gauge, cfg);
  add_point_options(gauge, cfg);
  gauge->add_flag("--oracle", cfg.oracle, "also evaluate by bisection");
  gauge->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

  auto* retract = app.add_subcommand("retract", "apply the retraction pair Q, R");
  add_gauge_options(retract, cfg);
  add_point_options(retract, cfg);

  auto* audit = app.add_subcommand("audit", "properness and retraction audit of a gauge");
  add_gauge_options(audit, cfg);
  add_sampling_options(audit, cfg);

  auto* proper = app.add_subcommand("proper-check", "axioms and properness of a functional");
  add_gauge_options(proper, cfg);
  add_sampling_options(proper, cfg);
  proper->add_option("--functional", cfg.functional)
      ->check(CLI::IsMember({"gauge", "euclidean"}));
  proper->add_option("--dim", cfg.dim, "dimension for --functional euclidean");

  auto* dump = app.add_subcommand("sphere-dump", "CSV sample of the unit sphere q = 1");
  add_gauge_options(dump, cfg);
  dump->add_option("--count", cfg.count, "number of points")->check(CLI::PositiveNumber);
  dump->add_option("--seed", cfg.seed, "random seed")->check(CLI::PositiveNumber);

  auto* fixtures = app.add_subcommand("fixtures", "list built-in fixtures");
  fixtures->add_option("--export", cfg.export_dir, "write fixture cones as JSON here");

  for (auto* sub : {cone_check, gauge, retract, audit, proper, dump, fixtures}) {
    sub->add_option("--output,-o", cfg.output, "write output here instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::string doc;
  int code = kPass;
  try {
    if (*cone_check) code = cmd_cone_check(cfg, doc);
    else if (*gauge) code = cmd_gauge(cfg, doc);
    else if (*retract) code = cmd_retract(cfg, doc);
    else if (*audit) code = cmd_audit(cfg, doc);
    else if (*proper) code = cmd_proper_check(cfg, doc);
    else if (*dump) code = cmd_sphere_dump(cfg, doc);
    else code = cmd_fixtures(cfg, doc);
  } catch (const CheckFailure& f) {
    json j;
    j["schema"] = io::kSchemaVersion;
    j["error"] = f.message;
    j["detail"] = f.detail;
    doc = j.dump(2) + "\n";
    err << "check failed: " << f.message << "\n";
    code = kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (cfg.output.empty()) {
    out << doc;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.output << "\n";
      return kUsageError;
    }
    file << doc;
  }
  return code;
}

}  // namespace conegauge::cli
