#include <Eigen/Dense>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "siegel/errors.hpp"
#include "siegel/geometry.hpp"

using namespace siegel;
using testutil::int_matrix;
using testutil::oracle_origin_in_hull;
using testutil::rat_matrix;

namespace {

// Triangle with the origin strictly inside: columns sum to zero.
RatMatrix triangle() { return int_matrix({{1, 0, -1}, {0, 1, -1}}); }

}  // namespace

TEST_CASE("certificate validation enforces all three conditions") {
  const RatMatrix pts = triangle();
  const std::vector<Rat> good = {Rat(1) / 3, Rat(1) / 3, Rat(1) / 3};
  CHECK(certificate_is_valid(pts, good));
  CHECK(certificate_is_valid(pts, good, /*strict=*/true));

  // Wrong sum.
  CHECK_FALSE(certificate_is_valid(pts, {Rat(1), Rat(1), Rat(1)}));
  // Negative weight.
  CHECK_FALSE(certificate_is_valid(
      pts, {Rat(3) / 2, Rat(1) / 2, Rat(-1)}));
  // Right weights, wrong point sum.
  CHECK_FALSE(certificate_is_valid(pts, {Rat(1), Rat(0), Rat(0)}));
  // Zero weight fails only the strict check.
  const RatMatrix seg = int_matrix({{-1, 0, 1}});
  const std::vector<Rat> border = {Rat(1) / 2, Rat(0), Rat(1) / 2};
  CHECK(certificate_is_valid(seg, border));
  CHECK_FALSE(certificate_is_valid(seg, border, /*strict=*/true));
}

TEST_CASE("hull membership agrees with the subset-elimination oracle") {
  // Fixed shapes first.
  CHECK(origin_in_hull(triangle()).has_value());
  CHECK(oracle_origin_in_hull(triangle()));

  const RatMatrix off = int_matrix({{1, 2, 1}, {0, 1, 1}});
  CHECK_FALSE(origin_in_hull(off).has_value());
  CHECK_FALSE(oracle_origin_in_hull(off));

  // Origin on an edge.
  const RatMatrix edge = int_matrix({{-1, 1, 0}, {0, 0, 1}});
  CHECK(origin_in_hull(edge).has_value());
  CHECK(oracle_origin_in_hull(edge));

  // Zero-row matrices: hull of any nonempty set in R^0 is {0}.
  CHECK(origin_in_hull(RatMatrix(0, 2)).has_value());
  CHECK(oracle_origin_in_hull(RatMatrix(0, 2)));
  CHECK_FALSE(origin_in_hull(RatMatrix(0, 0)).has_value());

  // Randomised agreement sweep over small integer point sets.
  std::mt19937_64 rng(7);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 6);
    RatMatrix pts(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j)
        pts.at(i, j) = static_cast<int>(rng() % 7) - 3;
    const auto cert = origin_in_hull(pts);
    const bool oracle = oracle_origin_in_hull(pts);
    REQUIRE(cert.has_value() == oracle);
    if (cert) {
      ++hits;
      CHECK(certificate_is_valid(pts, *cert));
    }
  }
  CHECK(hits > 20);  // the sweep exercised both outcomes
}

TEST_CASE("relative-interior membership distinguishes boundary points") {
  // Strictly inside.
  const auto strict = origin_in_relint(triangle());
  REQUIRE(strict.has_value());
  CHECK(certificate_is_valid(triangle(), *strict, /*strict=*/true));

  // Origin is a vertex of the segment [0, e1]: in the hull, not the relint.
  const RatMatrix corner = int_matrix({{0, 1}, {0, 0}});
  CHECK(origin_in_hull(corner).has_value());
  CHECK_FALSE(origin_in_relint(corner).has_value());

  // Origin on the boundary edge of a triangle.
  const RatMatrix edge = int_matrix({{-1, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(origin_in_relint(edge).has_value());

  // A single zero point: conv = relint = {0}.
  const RatMatrix zero = int_matrix({{0}, {0}});
  CHECK(origin_in_relint(zero).has_value());
}

TEST_CASE("affine nullspace spans the expected kernel") {
  const RatMatrix ns = affine_nullspace(triangle());
  CHECK(ns.rows() == 0);  // three affinely independent points

  // Four points with one affine relation.
  const RatMatrix sq = testutil::square_matrix();
  const RatMatrix ns2 = affine_nullspace(sq);
  REQUIRE(ns2.rows() == 1);
  for (std::size_t r = 0; r < ns2.rows(); ++r) {
    Rat sum = 0;
    std::vector<Rat> img(2, Rat(0));
    for (std::size_t j = 0; j < ns2.cols(); ++j) {
      sum += ns2.at(r, j);
      img[0] += ns2.at(r, j) * sq.at(0, j);
      img[1] += ns2.at(r, j) * sq.at(1, j);
    }
    CHECK(sum == 0);
    CHECK(img[0] == 0);
    CHECK(img[1] == 0);
  }
}

TEST_CASE("facet enumeration classifies vertices, boundary, interior") {
  // Unit square with a centre point.
  const RatMatrix pts =
      int_matrix({{1, -1, -1, 1, 0}, {1, 1, -1, -1, 0}});
  const FacetEnumeration fac = facet_enumeration(pts);
  CHECK(fac.ambient_dim == 2);
  CHECK(fac.facets.size() == 4);
  CHECK(fac.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(fac.interior == std::vector<int>{4});
  CHECK(fac.boundary.empty());
  for (const Facet& f : fac.facets) {
    CHECK(f.points.size() == 2);
    // Each inequality is tight on its own points.
    for (int j : f.points) {
      Rat val = 0;
      for (std::size_t i = 0; i < 2; ++i)
        val += f.normal[i] * pts.at(i, static_cast<std::size_t>(j));
      CHECK(val == f.offset);
    }
  }

  // Midpoint of an edge is boundary but not a vertex.
  const RatMatrix with_mid =
      int_matrix({{1, -1, -1, 1, 1}, {1, 1, -1, -1, 0}});
  const FacetEnumeration fac2 = facet_enumeration(with_mid);
  CHECK(fac2.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(fac2.boundary == std::vector<int>{4});

  // One-dimensional case: extreme points are the segment ends.
  const FacetEnumeration seg = facet_enumeration(int_matrix({{-1, 2, 0}}));
  CHECK(seg.facets.size() == 2);
  CHECK(seg.vertices == std::vector<int>{0, 1});
  CHECK(seg.interior == std::vector<int>{2});

  // Ambient dimension 0: no facets, everything interior.
  const FacetEnumeration dot = facet_enumeration(RatMatrix(0, 3));
  CHECK(dot.facets.empty());
  CHECK(dot.interior == std::vector<int>{0, 1, 2});

  // Points that do not span throw.
  CHECK_THROWS_AS(facet_enumeration(int_matrix({{1, 2}, {1, 2}})),
                  DegenerateSpan);
}

TEST_CASE("radial decomposition matches hand-computed stretches") {
  const RatMatrix pts = triangle();
  const FacetEnumeration fac = facet_enumeration(pts);

  // Ray through (1,1) exits the triangle at (1/2, 1/2), the midpoint of the
  // edge between the first two points: stretch 2, equal weights.
  Eigen::VectorXd nu(2);
  nu << 1.0, 1.0;
  const RadialDecomposition dec = radial_decompose(fac, pts, nu);
  CHECK(dec.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dec.face == std::vector<int>{0, 1});
  REQUIRE(dec.mu.size() == 2);
  CHECK(dec.mu[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dec.mu[1] == doctest::Approx(0.5).epsilon(1e-12));

  // Ray through a vertex.
  Eigen::VectorXd along(2);
  along << 2.0, 0.0;
  const RadialDecomposition vert = radial_decompose(fac, pts, along);
  CHECK(vert.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vert.face == std::vector<int>{0});
  REQUIRE(vert.mu.size() == 1);
  CHECK(vert.mu[0] == doctest::Approx(1.0).epsilon(1e-12));

  // Zero direction: zero stretch, empty face.
  const RadialDecomposition centre =
      radial_decompose(fac, pts, Eigen::VectorXd::Zero(2));
  CHECK(centre.rho == 0.0);
  CHECK(centre.face.empty());

  // The answer must not depend on the facet scan order.
  std::vector<int> order(fac.facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    const RadialDecomposition again = radial_decompose(fac, pts, nu, &order);
    CHECK(again.rho == doctest::Approx(dec.rho).epsilon(1e-12));
    CHECK(again.face == dec.face);
  }
}
