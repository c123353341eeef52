#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/configuration.hpp"
#include "siegel/simplicial.hpp"

namespace siegel {

// Commutativity of the retraction diagram between two configurations whose
// complexes are isomorphic: points are sampled on the p = 2 solution set of
// the first configuration, transported by phi (coordinate i of the first
// goes to coordinate phi[i] of the second), retracted there, transported
// back, and retracted again; the report carries the largest round-trip
// displacement.
struct RigidityReport {
  std::vector<int> permutation;    // the supplied phi
  double diagram_residual = 0.0;   // max round-trip displacement, sup norm
  int samples = 0;
  bool passed = false;             // diagram_residual <= tol
};

// Requires both configurations to share m and phi to induce a face bijection
// between their complexes (InvalidFace otherwise).  Sample moduli are drawn
// uniformly from [1/2, 2] with uniform phases, seeded.
RigidityReport rigidity_check(const Configuration& conf,
                              const Configuration& other,
                              const std::vector<int>& phi, int n_samples,
                              std::uint64_t seed, double p = 2.0,
                              double tol = 1e-8);

// A stratum at which the differential of the p = 2 retraction is probed:
// either a cube face of the real moment-angle model (free coordinates on a
// face, the rest pinned to +-1), or the positive orthant piece of the p = 1
// unit set (the polytope of hull certificates).
struct Stratum {
  enum class Kind { kCubeFace, kOrthant };
  Kind kind = Kind::kOrthant;
  std::vector<int> face;  // cube only: free coordinates, must be a face
};

struct JacobianCertificate {
  Stratum stratum;
  std::vector<double> point;  // the probed sample, real coordinates
  int expected_rank = 0;  // |face| for cube strata, m - d - 1 for orthant
  int rank = 0;
  std::vector<double> singular_values;
  double step = 0.0;       // finite-difference step actually used
  bool richardson = false; // second-order refinement was needed
  bool pass = false;
};

// Central finite differences of the retraction along the stratum's tangent
// directions at the supplied on-stratum point, SVD, and rank with the 1e-6
// relative cutoff.  Singular values falling in the ambiguous band
// (1e-8, 1e-4) relative to the largest trigger a Richardson-extrapolated
// retry (4 J_{h/2} - J_h) / 3.  Cube points must pin the off-face
// coordinates to +-1 and keep the face coordinates strictly inside (-1, 1);
// orthant points must be strictly positive hull certificates.  Off-stratum
// points throw PreconditionFailure.
JacobianCertificate jacobian_rank(const Configuration& conf,
                                  const SimplicialComplex& complex,
                                  const Stratum& stratum,
                                  const std::vector<double>& point,
                                  double h = 1e-5, double p = 2.0);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  int passed = 0;
  int total = 0;
  bool all_pass = false;
};

// Names accepted by run_suite, in canonical order: admissibility,
// combinatorics, minimization, projection, rigidity, jacobian.
std::vector<std::string> suite_names();

// Runs one named property suite over the seeded standard corpus plus the
// fixed worked examples.  Throws ParseError for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace siegel
