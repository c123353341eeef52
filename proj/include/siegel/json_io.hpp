#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "siegel/configuration.hpp"
#include "siegel/leaf.hpp"
#include "siegel/projection.hpp"
#include "siegel/simplicial.hpp"
#include "siegel/verify.hpp"

namespace siegel {

using Json = nlohmann::ordered_json;

// All documents use 1-based coordinate/vertex indices externally and 0-based
// internally; rationals travel as "p/q" strings ("p" when q = 1).

// {"d": int, "m": int, "A": [[rational-string, ...] per row]}
Configuration configuration_from_json(const Json& doc);
Json configuration_to_json(const Configuration& conf);

// Bare rational matrix as an array of row arrays.
RatMatrix rational_matrix_from_json(const Json& rows);
Json rational_matrix_to_json(const RatMatrix& mat);

// {"m": int, "maximal_faces": [[int, ...], ...]} with 1-based vertices.
SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& complex);

// {"re": [...], "im": [...]} with "im" optional (defaults to zeros) and an
// optional "zero_threshold".
AmbientPoint point_from_json(const Json& doc);
Json point_to_json(const std::vector<std::complex<double>>& z);

// Optional keys: tol, max_iter, ls_shrink, ls_decrease, initial_T.
SolverSettings settings_from_json(const Json& doc);

Json to_json(const AdmissibilityReport& report);
Json to_json(const SiegelMembership& membership);
Json to_json(const LeafMinimum& minimum);
Json to_json(const RetractionResult& retraction);
Json to_json(const ChartTriple& chart);
Json to_json(const MomentAngleMembership& membership);
Json to_json(const ProjectionResult& result);
Json to_json(const PlimitResult& result);
Json to_json(const EscapeReport& report);
Json to_json(const RigidityReport& report);
Json to_json(const JacobianCertificate& certificate);
Json to_json(const SuiteReport& report);

// Deterministic dump: objects keep insertion order, every floating value is
// rendered with 17 significant digits, so identical documents are
// byte-identical.  indent < 0 emits a single line.
std::string dump_json(const Json& doc, int indent = 2);

// 17-significant-digit rendering used by dump_json and the CSV writer.
std::string format_double(double value);

// CSV for a sweep: header p, T_1..T_d, fp_norm, xp_inf, residual, then one
// row per scheduled p.
std::string sweep_csv(const std::vector<SweepRow>& rows, int d);

}  // namespace siegel
