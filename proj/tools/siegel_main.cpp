// Command-line front end: admissibility, Gale duality, complex construction,
// leaf minimisation, retraction, moment-angle projection, p-sweeps, rigidity
// and Jacobian certification, and the bundled property suites.  Every
// command is a pure function of its input files, flags, and the seed taken
// from SIEGEL_SEED (default 0); outputs are byte-stable JSON unless CSV is
// requested.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siegel/errors.hpp"
#include "siegel/json_io.hpp"
#include "siegel/sampling.hpp"

namespace {

using siegel::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw siegel::ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& err) {
    throw siegel::ParseError(what + ": " + err.what());
  }
}

Json load_json(const std::string& path) {
  return parse_json(read_file(path), path);
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("SIEGEL_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw siegel::ParseError("SIEGEL_SEED must be a nonnegative integer");
  }
  return value;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw siegel::ParseError(what + ": not a number: " + text);
  }
}

// "a:b:xF" (geometric), "a:b:+S" (arithmetic), or a comma list of values.
std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') == std::string::npos) {
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      out.push_back(parse_number(token, "schedule entry"));
    }
  } else {
    const std::size_t first = text.find(':');
    const std::size_t second = text.find(':', first + 1);
    if (second == std::string::npos) {
      throw siegel::ParseError("schedule must look like 2:1024:x2");
    }
    const double start = parse_number(text.substr(0, first), "schedule start");
    const double stop =
        parse_number(text.substr(first + 1, second - first - 1),
                     "schedule stop");
    const std::string step = text.substr(second + 1);
    if (step.size() < 2 || (step[0] != 'x' && step[0] != '+')) {
      throw siegel::ParseError("schedule step must look like x2 or +8");
    }
    const double amount = parse_number(step.substr(1), "schedule step");
    if (step[0] == 'x') {
      if (amount <= 1.0) {
        throw siegel::ParseError("multiplicative step must exceed 1");
      }
      for (double p = start; p <= stop * (1.0 + 1e-12); p *= amount) {
        out.push_back(p);
      }
    } else {
      if (amount <= 0.0) {
        throw siegel::ParseError("additive step must be positive");
      }
      for (double p = start; p <= stop + 1e-12; p += amount) {
        out.push_back(p);
      }
    }
  }
  if (out.empty()) throw siegel::ParseError("schedule is empty");
  return out;
}

void emit(const Json& doc) { std::cout << siegel::dump_json(doc) << "\n"; }

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value - 1);  // external lists are 1-based
    } catch (const std::exception&) {
      throw siegel::ParseError("permutation entries must be integers");
    }
  }
  return out;
}

std::vector<double> parse_real_point(const Json& doc) {
  const Json* arr = nullptr;
  if (doc.is_array()) {
    arr = &doc;
  } else if (doc.is_object() && doc.contains("re")) {
    arr = &doc["re"];
  } else {
    throw siegel::ParseError(
        "a real point is an array of numbers or an object with \"re\"");
  }
  std::vector<double> out;
  for (const Json& value : *arr) {
    if (!value.is_number()) {
      throw siegel::ParseError("real point entries must be numbers");
    }
    out.push_back(value.get<double>());
  }
  return out;
}

// Shared request plumbing for minimize/retract: either a configuration file
// plus --point/--p flags, or a single request document with the fields
// {configuration, point, p, settings}.
struct LeafRequest {
  siegel::Configuration conf;
  siegel::AmbientPoint point;
  double p = 2.0;
  siegel::SolverSettings settings;
};

LeafRequest leaf_request(const Json& doc, const std::string& point_path,
                         std::optional<double> p_flag,
                         const std::string& settings_path) {
  if (doc.contains("configuration")) {
    LeafRequest req{siegel::configuration_from_json(doc["configuration"]),
                    {}, 0.0, {}};
    if (!point_path.empty()) {
      req.point = siegel::point_from_json(load_json(point_path));
    } else if (doc.contains("point")) {
      req.point = siegel::point_from_json(doc["point"]);
    } else {
      throw siegel::ParseError("no point given (field or --point)");
    }
    if (p_flag.has_value()) {
      req.p = *p_flag;
    } else if (doc.contains("p")) {
      req.p = doc["p"].get<double>();
    } else {
      throw siegel::ParseError("no exponent given (field or --p)");
    }
    if (!settings_path.empty()) {
      req.settings = siegel::settings_from_json(load_json(settings_path));
    } else if (doc.contains("settings")) {
      req.settings = siegel::settings_from_json(doc["settings"]);
    }
    return req;
  }
  LeafRequest req{siegel::configuration_from_json(doc), {}, 0.0, {}};
  if (point_path.empty()) {
    throw siegel::ParseError("--point is required with a configuration file");
  }
  req.point = siegel::point_from_json(load_json(point_path));
  if (!p_flag.has_value()) {
    throw siegel::ParseError("--p is required with a configuration file");
  }
  req.p = *p_flag;
  if (!settings_path.empty()) {
    req.settings = siegel::settings_from_json(load_json(settings_path));
  }
  return req;
}

// Runs minimize/retract over a JSON-lines stream of {point, p, settings}
// requests against one configuration; one compact result line each.
int run_batch(const siegel::Configuration& conf, const std::string& batch_path,
              bool retraction) {
  std::ifstream in(batch_path, std::ios::binary);
  if (!in) throw siegel::ParseError("cannot open " + batch_path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json doc =
        parse_json(line, batch_path + ":" + std::to_string(lineno));
    if (!doc.contains("point") || !doc.contains("p")) {
      throw siegel::ParseError("batch lines need \"point\" and \"p\"");
    }
    const siegel::AmbientPoint point = siegel::point_from_json(doc["point"]);
    const double p = doc["p"].get<double>();
    siegel::SolverSettings settings;
    if (doc.contains("settings")) {
      settings = siegel::settings_from_json(doc["settings"]);
    }
    const Json result =
        retraction
            ? siegel::to_json(siegel::retract(conf, point, p, settings))
            : siegel::to_json(siegel::minimize(conf, point, p, settings));
    std::cout << siegel::dump_json(result, -1) << "\n";
  }
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Siegel-leaf norm minima, moment-angle projections, and their"
               " certificates"};
  app.require_subcommand(1);

  std::string cfg_path;
  std::string other_path;
  std::string point_path;
  std::string settings_path;
  std::string batch_path;
  std::string method = "combinatorial";
  std::string schedule_text;
  std::string out_format = "json";
  std::string perm_text;
  std::string face_text;
  std::string suite_name;
  double p_value = 2.0;
  double step = 1e-5;
  double tol = 1e-8;
  int samples = 4;
  bool orthant = false;

  CLI::App* admissible = app.add_subcommand(
      "admissible", "Siegel condition, weak hyperbolicity, and centering");
  admissible->add_option("cfg", cfg_path, "configuration JSON")->required();

  CLI::App* gale = app.add_subcommand(
      "gale",
      "Gale dual of a configuration, or the configuration of a matrix");
  gale->add_option("input", cfg_path, "configuration or V-matrix JSON")
      ->required();

  CLI::App* complex_cmd =
      app.add_subcommand("complex", "maximal faces of the complex");
  complex_cmd->add_option("cfg", cfg_path, "configuration JSON")->required();

  CLI::App* minimize = app.add_subcommand(
      "minimize", "unique leaf minimum of the p-norm");
  minimize->add_option("cfg", cfg_path, "configuration or request JSON")
      ->required();
  minimize->add_option("--point", point_path, "point JSON (re/im arrays)");
  minimize->add_option("--p", p_value, "norm exponent, at least 1");
  minimize->add_option("--settings", settings_path, "solver settings JSON");
  minimize->add_option("--batch", batch_path,
                       "JSON-lines stream of {point, p, settings}");

  CLI::App* retract_cmd = app.add_subcommand(
      "retract", "retraction onto the unit-norm critical set");
  retract_cmd->add_option("cfg", cfg_path, "configuration or request JSON")
      ->required();
  retract_cmd->add_option("--point", point_path, "point JSON");
  retract_cmd->add_option("--p", p_value, "norm exponent, at least 1");
  retract_cmd->add_option("--settings", settings_path,
                          "solver settings JSON");
  retract_cmd->add_option("--batch", batch_path,
                          "JSON-lines stream of {point, p, settings}");

  CLI::App* project = app.add_subcommand(
      "project", "projection onto the moment-angle complex");
  project->add_option("cfg", cfg_path, "configuration JSON")->required();
  project->add_option("--point", point_path, "point JSON")->required();
  project->add_option("--method", method, "combinatorial or plimit")
      ->check(CLI::IsMember({"combinatorial", "plimit"}));
  project->add_option("--p-schedule", schedule_text,
                      "plimit schedule, e.g. 2:1024:x2");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "minimiser statistics along a p schedule");
  sweep_cmd->add_option("cfg", cfg_path, "configuration JSON")->required();
  sweep_cmd->add_option("--point", point_path, "point JSON")->required();
  sweep_cmd->add_option("--p-schedule", schedule_text,
                        "schedule, e.g. 2:1024:x2");
  sweep_cmd->add_option("--out", out_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* rigidity = app.add_subcommand(
      "rigidity", "round-trip retraction diagram between two configurations");
  rigidity->add_option("cfgA", cfg_path, "first configuration JSON")
      ->required();
  rigidity->add_option("cfgB", other_path, "second configuration JSON")
      ->required();
  rigidity->add_option("--perm", perm_text, "1-based image list, e.g. 2,1,3")
      ->required();
  rigidity->add_option("--samples", samples, "points to test");
  rigidity->add_option("--p", p_value, "norm exponent");
  rigidity->add_option("--tol", tol, "pass tolerance");

  CLI::App* jacobian = app.add_subcommand(
      "jacobian", "finite-difference rank certificate on a stratum");
  jacobian->add_option("cfg", cfg_path, "configuration JSON")->required();
  jacobian->add_option("--face", face_text,
                       "cube stratum: 1-based free coordinates, e.g. 1,3");
  jacobian->add_flag("--orthant", orthant,
                     "probe the positive orthant stratum instead");
  jacobian->add_option("--point", point_path,
                       "on-stratum real point (JSON array); sampled if absent");
  jacobian->add_option("--step", step, "finite-difference step");

  CLI::App* verify =
      app.add_subcommand("verify", "run one bundled property suite");
  verify->add_option("suite", suite_name,
                     "admissibility, combinatorics, minimization, projection,"
                     " rigidity, or jacobian")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::uint64_t seed = seed_from_env();
  std::optional<double> p_flag;
  if (minimize->count("--p") + retract_cmd->count("--p") +
          rigidity->count("--p") >
      0) {
    p_flag = p_value;
  }

  if (admissible->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    emit(siegel::to_json(siegel::admissibility(conf)));
    return 0;
  }

  if (gale->parsed()) {
    const Json doc = load_json(cfg_path);
    if (doc.contains("A")) {
      const siegel::Configuration conf = siegel::configuration_from_json(doc);
      const siegel::RatMatrix v = siegel::gale_dual(conf);
      Json out = Json::object();
      out["n"] = static_cast<int>(v.rows());
      out["m"] = static_cast<int>(v.cols());
      out["V"] = siegel::rational_matrix_to_json(v);
      emit(out);
      return 0;
    }
    if (!doc.contains("V")) {
      throw siegel::ParseError("input needs a field \"A\" or \"V\"");
    }
    const siegel::RatMatrix v = siegel::rational_matrix_from_json(doc["V"]);
    std::optional<int> declared;
    if (doc.contains("d")) declared = doc["d"].get<int>();
    const siegel::Configuration conf = siegel::gale_transform(v, declared);
    Json out = Json::object();
    out["configuration"] = siegel::configuration_to_json(conf);
    out["admissibility"] = siegel::to_json(siegel::admissibility(conf));
    emit(out);
    return 0;
  }

  if (complex_cmd->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    emit(siegel::complex_to_json(siegel::build_complex(conf)));
    return 0;
  }

  if (minimize->parsed() || retract_cmd->parsed()) {
    const bool retraction = retract_cmd->parsed();
    const Json doc = load_json(cfg_path);
    if (!batch_path.empty()) {
      const siegel::Configuration conf = siegel::configuration_from_json(
          doc.contains("configuration") ? doc["configuration"] : doc);
      return run_batch(conf, batch_path, retraction);
    }
    const LeafRequest req =
        leaf_request(doc, point_path, p_flag, settings_path);
    if (retraction) {
      emit(siegel::to_json(
          siegel::retract(req.conf, req.point, req.p, req.settings)));
    } else {
      emit(siegel::to_json(
          siegel::minimize(req.conf, req.point, req.p, req.settings)));
    }
    return 0;
  }

  if (project->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    const siegel::AmbientPoint point =
        siegel::point_from_json(load_json(point_path));
    if (method == "combinatorial") {
      const siegel::SimplicialComplex complex = siegel::build_complex(conf);
      emit(siegel::to_json(
          siegel::project_combinatorial(conf, complex, point)));
    } else {
      const std::vector<double> schedule =
          schedule_text.empty() ? siegel::default_p_schedule()
                                : parse_schedule(schedule_text);
      emit(siegel::to_json(siegel::project_plimit(conf, point, schedule)));
    }
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    const siegel::AmbientPoint point =
        siegel::point_from_json(load_json(point_path));
    const std::vector<double> schedule =
        schedule_text.empty() ? siegel::default_p_schedule()
                              : parse_schedule(schedule_text);
    const std::vector<siegel::SweepRow> rows =
        siegel::sweep(conf, point, schedule);
    if (out_format == "csv") {
      std::cout << siegel::sweep_csv(rows, conf.d());
      return 0;
    }
    Json out = Json::array();
    for (const siegel::SweepRow& row : rows) {
      Json entry = Json::object();
      entry["p"] = row.p;
      Json t = Json::array();
      for (Eigen::Index i = 0; i < row.T.size(); ++i) t.push_back(row.T[i]);
      entry["T"] = std::move(t);
      entry["fp_norm"] = row.fp_norm;
      entry["xp_inf"] = row.xp_inf;
      entry["residual"] = row.residual;
      entry["iterations"] = row.iterations;
      out.push_back(std::move(entry));
    }
    emit(out);
    return 0;
  }

  if (rigidity->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    const siegel::Configuration other =
        siegel::configuration_from_json(load_json(other_path));
    const std::vector<int> phi = parse_permutation(perm_text);
    const siegel::RigidityReport report = siegel::rigidity_check(
        conf, other, phi, samples, seed, p_flag.value_or(2.0), tol);
    emit(siegel::to_json(report));
    return report.passed ? 0 : 1;
  }

  if (jacobian->parsed()) {
    const siegel::Configuration conf =
        siegel::configuration_from_json(load_json(cfg_path));
    const siegel::SimplicialComplex complex = siegel::build_complex(conf);
    if (orthant == !face_text.empty()) {
      throw siegel::ParseError("choose exactly one of --face and --orthant");
    }
    siegel::Stratum stratum;
    std::vector<double> point;
    std::mt19937_64 rng(seed);
    if (orthant) {
      stratum.kind = siegel::Stratum::Kind::kOrthant;
      if (!point_path.empty()) {
        point = parse_real_point(load_json(point_path));
      } else {
        const auto sampled = siegel::random_orthant_stratum_point(rng, conf);
        if (!sampled.has_value()) {
          throw siegel::PreconditionFailure(
              "the origin is not interior to the hull: no orthant stratum");
        }
        point = *sampled;
      }
    } else {
      stratum.kind = siegel::Stratum::Kind::kCubeFace;
      stratum.face = parse_permutation(face_text);  // same 1-based list form
      if (!point_path.empty()) {
        point = parse_real_point(load_json(point_path));
      } else {
        point =
            siegel::random_cube_stratum_point(rng, conf.m(), stratum.face);
      }
    }
    const siegel::JacobianCertificate cert =
        siegel::jacobian_rank(conf, complex, stratum, point, step);
    emit(siegel::to_json(cert));
    return cert.pass ? 0 : 1;
  }

  if (verify->parsed()) {
    const siegel::SuiteReport report = siegel::run_suite(suite_name, seed);
    emit(siegel::to_json(report));
    return report.all_pass ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const siegel::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
