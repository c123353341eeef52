#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "siegel/leaf.hpp"
#include "siegel/simplicial.hpp"

namespace siegel {

// Membership of a point in the moment-angle complex attached to `complex`:
// every coordinate modulus is at most 1, the largest equals 1, and the set
// of coordinates strictly below 1 (including exact zeros) is a face.
struct MomentAngleMembership {
  bool inside = false;
  double max_norm = 0.0;
  bool norm_ok = false;    // max modulus within tol of 1
  bool coords_ok = false;  // no modulus above 1 + tol
  bool face_ok = false;    // strict set is a face
  std::vector<int> strict_set;  // { i : |y_i| < 1 - tol }, ascending
  std::vector<int> circle_set;  // complement, moduli within tol of 1
  // Minimal face whose deleted-polydisk block contains the point; for a
  // member this is exactly the strict set.
  std::vector<int> carrier;
};

MomentAngleMembership mac_contains(const SimplicialComplex& complex,
                                   const AmbientPoint& point,
                                   double tol = 1e-8);

struct ProjectionOptions {
  double mac_tol = 1e-8;
  // When set, the scan order of the candidate link simplices is shuffled
  // with this seed; the result must not depend on it (uniqueness probe).
  std::optional<std::uint64_t> facet_shuffle_seed;
};

// Projection of a Siegel-set point onto the moment-angle complex, computed
// combinatorially: the Gale direction of the moduli is radially decomposed
// in the (negated) Gale polytope of the link of the zero set, which yields
// the strict set and the log-moduli of the image; the leaf parameters (T, r)
// are then reconstructed so that y = r * flow(z, T) exactly.
struct ProjectionResult {
  std::vector<std::complex<double>> y;
  Eigen::VectorXd T_inf;
  double r = 1.0;
  // Carrier face of y: the coordinates with modulus strictly below 1,
  // i.e. the zero set united with the strictly-contracted nonzero ones.
  std::vector<int> sigma;
  // Log-moduli of y on its support: u_i = ln|y_i| <= 0, with u_i = 0 off
  // sigma and u_i unset (0) on the zero set.
  std::vector<double> u;
  double c = 0.0;  // r = e^c
  // Unit phases of z (and of y), one per coordinate; 1 on the zero set.
  std::vector<std::complex<double>> phases;
  std::vector<int> zero_set;    // coordinates of z below the zero threshold
  std::vector<int> strict_set;  // nonzero coordinates pushed strictly inside
  std::vector<double> mu;       // radial convex weights, aligned w/ strict_set
  double rho = 0.0;             // radial stretch of the Gale direction
  double residual = 0.0;        // consistency defect of the reconstruction
};

ProjectionResult project_combinatorial(const Configuration& conf,
                                       const SimplicialComplex& complex,
                                       const AmbientPoint& point,
                                       const ProjectionOptions& options = {});

// The same projection through the analytic route: leaf minimisers at a
// growing schedule of p values, with Richardson extrapolation of the affine
// tail T_p = T_inf + v/p + o(1/p).
struct PlimitResult {
  std::vector<double> schedule;
  Eigen::VectorXd T;       // extrapolated limit
  Eigen::VectorXd T_raw;   // minimiser at the final p, for diagnostics
  std::vector<std::complex<double>> y;  // flow(z, T) scaled to sup norm 1
  double r = 1.0;                       // y = r * flow(z, T)
  std::vector<double> increments;  // ||T_{p_k} - T_{p_{k-1}}||_inf
  int total_iterations = 0;
};

// Doubling schedule 2, 4, 8, ..., 1024.
std::vector<double> default_p_schedule();

PlimitResult project_plimit(const Configuration& conf,
                            const AmbientPoint& point,
                            const std::vector<double>& schedule = {},
                            const SolverSettings& settings = {});

// Escape probe for a sup-norm-1 Siegel point outside the moment-angle
// complex: successive leaf minimisers must eventually leave the polydisk
// through some coordinate.  Preconditions (sup norm 1, Siegel membership,
// non-membership in the complex) are enforced with PreconditionFailure.
struct EscapeReport {
  bool escapes = false;
  double p = 0.0;      // first scheduled p that witnesses the escape
  int coordinate = -1; // witnessing coordinate (0-based)
  double excess = 0.0; // |x_p,i| - |z_i| at the witness
};

EscapeReport escape_check(const Configuration& conf,
                          const SimplicialComplex& complex,
                          const AmbientPoint& point,
                          const std::vector<double>& schedule = {},
                          const SolverSettings& settings = {});

// One row per scheduled p: the minimiser statistics used to study the
// p -> infinity drift.
struct SweepRow {
  double p = 0.0;
  Eigen::VectorXd T;
  double fp_norm = 0.0;  // ||flow(z, T_p)||_p
  double xp_inf = 0.0;   // sup norm of the unit p-norm representative
  double residual = 0.0;
  int iterations = 0;
};

std::vector<SweepRow> sweep(const Configuration& conf,
                            const AmbientPoint& point,
                            const std::vector<double>& schedule = {},
                            const SolverSettings& settings = {});

}  // namespace siegel
