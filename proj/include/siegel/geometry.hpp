#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

// Points are always the *columns* of a RatMatrix: a d x N matrix holds N
// points of R^d.  All hull/facet computations below are exact.

// True when `lambda` is a valid convex certificate for the origin:
// lambda_j >= 0 (strictly > 0 when `strict`), sum lambda = 1, and
// sum_j lambda_j * points_j = 0.
bool certificate_is_valid(const RatMatrix& points,
                          const std::vector<Rat>& lambda, bool strict = false);

// Exact test "0 in conv(points)".  Returns a convex certificate on success,
// std::nullopt otherwise.  Deterministic (Bland pivoting underneath).
std::optional<std::vector<Rat>> origin_in_hull(const RatMatrix& points);

// Exact test "0 in relint conv(points)", i.e. the origin admits a convex
// certificate with *all* coefficients strictly positive.  Solved as an exact
// LP maximising the uniform slack t in lambda_j = s_j + t; success iff the
// optimum t* is > 0, and the returned certificate then has lambda_j >= t*.
std::optional<std::vector<Rat>> origin_in_relint(const RatMatrix& points);

// Basis (as rows) of { x in R^N : sum_j x_j points_j = 0 and sum_j x_j = 0 }.
RatMatrix affine_nullspace(const RatMatrix& points);

// One facet of a full-dimensional polytope conv(points): the inequality
// <normal, x> <= offset holds on the whole polytope with equality exactly on
// the listed point indices (sorted ascending).
struct Facet {
  std::vector<Rat> normal;
  Rat offset;
  std::vector<int> points;
};

struct FacetEnumeration {
  int ambient_dim = 0;
  std::vector<Facet> facets;        // deduplicated, deterministic order
  std::vector<int> vertices;        // indices of extreme points
  std::vector<int> boundary;        // on some facet but not extreme
  std::vector<int> interior;        // on no facet
};

// Exact brute-force facet enumeration of conv(points).  Requires the points
// to affinely span the ambient space (throws DegenerateSpan otherwise).  In
// ambient dimension 0 the polytope is the single point of R^0: no facets,
// every input point interior.
FacetEnumeration facet_enumeration(const RatMatrix& points);

// Radial decomposition of a direction nu against conv(points) (which must
// contain 0 in its interior): writes nu = rho * x* with x* on the boundary,
// x* = sum_{j in face} mu_j points_j a convex combination on the unique face
// whose relative interior contains x*.  nu = 0 gives rho = 0 with empty face.
struct RadialDecomposition {
  double rho = 0.0;
  std::vector<int> face;    // point indices, sorted ascending
  std::vector<double> mu;   // convex weights aligned with `face`
};

// `facet_order`, when given, is a permutation of facet indices controlling
// the scan order; the result does not depend on it (used to probe
// determinism).  Tie breaking: every facet whose ray parameter is within
// relative 1e-9 of the best is considered active, and the face is the
// intersection of the active facets' point sets.
RadialDecomposition radial_decompose(
    const FacetEnumeration& fac, const RatMatrix& points,
    const Eigen::VectorXd& nu,
    const std::vector<int>* facet_order = nullptr);

}  // namespace siegel
