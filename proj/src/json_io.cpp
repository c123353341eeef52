#include "siegel/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"

namespace siegel {

namespace {

Rat rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rat(value.get<long long>());
  }
  throw ParseError("expected a rational string such as \"3/4\"");
}

int int_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

std::vector<double> doubles_from_json(const Json& arr, const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const Json& value : arr) {
    if (!value.is_number()) {
      throw ParseError(std::string(what) + " must be an array of numbers");
    }
    out.push_back(value.get<double>());
  }
  return out;
}

Json doubles_to_json(const std::vector<double>& values) {
  Json out = Json::array();
  for (double value : values) out.push_back(value);
  return out;
}

Json eigen_to_json(const Eigen::VectorXd& values) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) out.push_back(values[i]);
  return out;
}

// 0-based internal indices -> 1-based external.
Json indices_to_json(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

Json rationals_to_json(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const Rat& value : values) out.push_back(format_rational(value));
  return out;
}

}  // namespace

RatMatrix rational_matrix_from_json(const Json& rows) {
  if (!rows.is_array()) {
    throw ParseError("matrix must be an array of row arrays");
  }
  const std::size_t r = rows.size();
  std::size_t c = 0;
  for (const Json& row : rows) {
    if (!row.is_array()) {
      throw ParseError("matrix must be an array of row arrays");
    }
    if (c == 0) c = row.size();
    if (row.size() != c || c == 0) {
      throw ParseError("matrix rows must be nonempty and of equal length");
    }
  }
  RatMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      out.at(i, j) = rational_from_json(rows[i][j]);
    }
  }
  return out;
}

Json rational_matrix_to_json(const RatMatrix& mat) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      row.push_back(format_rational(mat.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Configuration configuration_from_json(const Json& doc) {
  const int d = int_field(doc, "d");
  const int m = int_field(doc, "m");
  if (!doc.contains("A")) throw ParseError("missing matrix field \"A\"");
  if (d == 0) {
    // With no rows the matrix body carries no shape, so "A" may be [].
    if (!doc["A"].is_array() || !doc["A"].empty()) {
      throw ParseError("for d = 0 the field \"A\" must be []");
    }
    if (m <= 0) throw ParseError("m must be positive");
    return Configuration(RatMatrix(0, m));
  }
  const RatMatrix mat = rational_matrix_from_json(doc["A"]);
  if (static_cast<int>(mat.rows()) != d || static_cast<int>(mat.cols()) != m) {
    throw ParseError("matrix shape disagrees with the declared d and m");
  }
  if (m <= d) {
    // An ill-shaped document is an input error, not an internal size bug.
    throw ParseError("configuration needs more vectors than the dimension");
  }
  return Configuration(mat);
}

Json configuration_to_json(const Configuration& conf) {
  Json doc = Json::object();
  doc["d"] = conf.d();
  doc["m"] = conf.m();
  doc["A"] = rational_matrix_to_json(conf.matrix());
  return doc;
}

SimplicialComplex complex_from_json(const Json& doc) {
  const int m = int_field(doc, "m");
  if (!doc.contains("maximal_faces") || !doc["maximal_faces"].is_array()) {
    throw ParseError("missing array field \"maximal_faces\"");
  }
  std::vector<std::uint32_t> maximal;
  for (const Json& face : doc["maximal_faces"]) {
    if (!face.is_array()) {
      throw ParseError("each maximal face must be an array of vertices");
    }
    std::uint32_t mask = 0;
    for (const Json& vertex : face) {
      if (!vertex.is_number_integer()) {
        throw ParseError("vertices must be integers");
      }
      const int v = vertex.get<int>();
      if (v < 1 || v > m) throw ParseError("vertex out of range 1..m");
      mask |= std::uint32_t{1} << (v - 1);
    }
    maximal.push_back(mask);
  }
  return SimplicialComplex::from_maximal(m, maximal);
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json doc = Json::object();
  doc["m"] = complex.ground_size();
  Json faces = Json::array();
  for (std::uint32_t mask : complex.maximal_faces()) {
    faces.push_back(indices_to_json(mask_to_indices(mask)));
  }
  doc["maximal_faces"] = std::move(faces);
  return doc;
}

AmbientPoint point_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("re")) {
    throw ParseError("a point needs at least the field \"re\"");
  }
  const std::vector<double> re = doubles_from_json(doc["re"], "\"re\"");
  std::vector<double> im(re.size(), 0.0);
  if (doc.contains("im")) {
    im = doubles_from_json(doc["im"], "\"im\"");
    if (im.size() != re.size()) {
      throw ParseError("\"re\" and \"im\" must have the same length");
    }
  }
  AmbientPoint out;
  out.z.resize(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    out.z[i] = std::complex<double>(re[i], im[i]);
  }
  if (doc.contains("zero_threshold")) {
    if (!doc["zero_threshold"].is_number()) {
      throw ParseError("\"zero_threshold\" must be a number");
    }
    out.zero_threshold = doc["zero_threshold"].get<double>();
  }
  return out;
}

Json point_to_json(const std::vector<std::complex<double>>& z) {
  Json doc = Json::object();
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& value : z) {
    re.push_back(value.real());
    im.push_back(value.imag());
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc;
}

SolverSettings settings_from_json(const Json& doc) {
  SolverSettings out;
  if (doc.is_null()) return out;
  if (!doc.is_object()) throw ParseError("settings must be an object");
  if (doc.contains("tol")) out.tol = doc["tol"].get<double>();
  if (doc.contains("max_iter")) out.max_iter = doc["max_iter"].get<int>();
  if (doc.contains("ls_shrink")) out.ls_shrink = doc["ls_shrink"].get<double>();
  if (doc.contains("ls_decrease")) {
    out.ls_decrease = doc["ls_decrease"].get<double>();
  }
  if (doc.contains("initial_T")) {
    const std::vector<double> t =
        doubles_from_json(doc["initial_T"], "\"initial_T\"");
    Eigen::VectorXd t0(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) t0[i] = t[i];
    out.initial_T = std::move(t0);
  }
  return out;
}

Json to_json(const AdmissibilityReport& report) {
  Json doc = Json::object();
  doc["siegel"] = report.siegel;
  doc["weak_hyperbolicity"] = report.weakly_hyperbolic;
  doc["centered"] = report.centered;
  doc["admissible"] = report.admissible;
  doc["siegel_certificate"] = report.siegel_certificate.has_value()
                                  ? rationals_to_json(*report.siegel_certificate)
                                  : Json();
  doc["violating_subset"] = report.violating_subset.has_value()
                                ? indices_to_json(*report.violating_subset)
                                : Json();
  doc["violating_certificate"] =
      report.violating_certificate.has_value()
          ? rationals_to_json(*report.violating_certificate)
          : Json();
  return doc;
}

Json to_json(const SiegelMembership& membership) {
  Json doc = Json::object();
  doc["member"] = membership.member;
  doc["support"] = indices_to_json(membership.support);
  doc["certificate"] = membership.certificate.has_value()
                           ? rationals_to_json(*membership.certificate)
                           : Json();
  return doc;
}

Json to_json(const LeafMinimum& minimum) {
  Json doc = Json::object();
  doc["p"] = minimum.p;
  doc["T"] = eigen_to_json(minimum.T);
  doc["f_p"] = point_to_json(minimum.minimizer);
  doc["norm"] = minimum.norm;
  doc["residual"] = minimum.residual;
  doc["iterations"] = minimum.iterations;
  return doc;
}

Json to_json(const RetractionResult& retraction) {
  Json doc = Json::object();
  doc["p"] = retraction.p;
  doc["x"] = point_to_json(retraction.x);
  doc["T"] = eigen_to_json(retraction.T);
  doc["norm"] = retraction.norm;
  doc["residual"] = retraction.residual;
  doc["iterations"] = retraction.iterations;
  return doc;
}

Json to_json(const ChartTriple& chart) {
  Json doc = Json::object();
  doc["x"] = point_to_json(chart.x);
  doc["T"] = eigen_to_json(chart.T);
  doc["r"] = chart.r;
  return doc;
}

Json to_json(const MomentAngleMembership& membership) {
  Json doc = Json::object();
  doc["inside"] = membership.inside;
  doc["max_norm"] = membership.max_norm;
  doc["norm_ok"] = membership.norm_ok;
  doc["coords_ok"] = membership.coords_ok;
  doc["face_ok"] = membership.face_ok;
  doc["strict_set"] = indices_to_json(membership.strict_set);
  doc["circle_set"] = indices_to_json(membership.circle_set);
  doc["carrier"] = indices_to_json(membership.carrier);
  return doc;
}

Json to_json(const ProjectionResult& result) {
  Json doc = Json::object();
  doc["y"] = point_to_json(result.y);
  doc["T_inf"] = eigen_to_json(result.T_inf);
  doc["r"] = result.r;
  doc["sigma"] = indices_to_json(result.sigma);
  doc["u"] = doubles_to_json(result.u);
  doc["c"] = result.c;
  doc["phases"] = point_to_json(result.phases);
  doc["zero_set"] = indices_to_json(result.zero_set);
  doc["strict_set"] = indices_to_json(result.strict_set);
  doc["mu"] = doubles_to_json(result.mu);
  doc["rho"] = result.rho;
  doc["residual"] = result.residual;
  return doc;
}

Json to_json(const PlimitResult& result) {
  Json doc = Json::object();
  doc["schedule"] = doubles_to_json(result.schedule);
  doc["T_inf"] = eigen_to_json(result.T);
  doc["T_raw"] = eigen_to_json(result.T_raw);
  doc["y"] = point_to_json(result.y);
  doc["r"] = result.r;
  doc["increments"] = doubles_to_json(result.increments);
  doc["total_iterations"] = result.total_iterations;
  return doc;
}

Json to_json(const EscapeReport& report) {
  Json doc = Json::object();
  doc["escapes"] = report.escapes;
  doc["p"] = report.p;
  doc["coordinate"] =
      report.coordinate >= 0 ? Json(report.coordinate + 1) : Json();
  doc["excess"] = report.excess;
  return doc;
}

Json to_json(const RigidityReport& report) {
  Json doc = Json::object();
  doc["permutation"] = indices_to_json(report.permutation);
  doc["diagram_residual"] = report.diagram_residual;
  doc["samples"] = report.samples;
  doc["passed"] = report.passed;
  return doc;
}

Json to_json(const JacobianCertificate& certificate) {
  Json doc = Json::object();
  Json stratum = Json::object();
  stratum["kind"] = certificate.stratum.kind == Stratum::Kind::kCubeFace
                        ? "cube_face"
                        : "orthant";
  stratum["face"] = indices_to_json(certificate.stratum.face);
  doc["stratum"] = std::move(stratum);
  doc["point"] = doubles_to_json(certificate.point);
  doc["expected_rank"] = certificate.expected_rank;
  doc["rank"] = certificate.rank;
  doc["singular_values"] = doubles_to_json(certificate.singular_values);
  doc["step"] = certificate.step;
  doc["richardson"] = certificate.richardson;
  doc["pass"] = certificate.pass;
  return doc;
}

Json to_json(const SuiteReport& report) {
  Json doc = Json::object();
  doc["suite"] = report.suite;
  doc["passed"] = report.passed;
  doc["total"] = report.total;
  doc["all_pass"] = report.all_pass;
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    Json entry = Json::object();
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    // Keep the document valid JSON; the solvers never emit these.
    return "null";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void dump_rec(const Json& node, std::string& out, int indent, int depth) {
  const bool pretty = indent >= 0;
  const auto pad = [&](int level) {
    if (pretty) out.append(static_cast<std::size_t>(indent) * level, ' ');
  };
  switch (node.type()) {
    case Json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      if (pretty) out += '\n';
      bool first = true;
      for (const auto& item : node.items()) {
        if (!first) {
          out += ',';
          if (pretty) out += '\n';
        }
        first = false;
        pad(depth + 1);
        out += Json(item.key()).dump();
        out += pretty ? ": " : ":";
        dump_rec(item.value(), out, indent, depth + 1);
      }
      if (pretty) out += '\n';
      pad(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (node.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      if (pretty) out += '\n';
      bool first = true;
      for (const Json& item : node) {
        if (!first) {
          out += ',';
          if (pretty) out += '\n';
        }
        first = false;
        pad(depth + 1);
        dump_rec(item, out, indent, depth + 1);
      }
      if (pretty) out += '\n';
      pad(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(node.get<double>());
      return;
    default:
      // Strings (with escaping), integers, booleans, null.
      out += node.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
  std::string out;
  dump_rec(doc, out, indent, 0);
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int d) {
  std::string out = "p";
  for (int i = 1; i <= d; ++i) out += ",T_" + std::to_string(i);
  out += ",fp_norm,xp_inf,residual\n";
  for (const SweepRow& row : rows) {
    out += format_double(row.p);
    for (Eigen::Index i = 0; i < row.T.size(); ++i) {
      out += ',';
      out += format_double(row.T[i]);
    }
    out += ',';
    out += format_double(row.fp_norm);
    out += ',';
    out += format_double(row.xp_inf);
    out += ',';
    out += format_double(row.residual);
    out += '\n';
  }
  return out;
}

}  // namespace siegel
