#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "siegel/configuration.hpp"
#include "siegel/errors.hpp"
#include "siegel/geometry.hpp"

using namespace siegel;
using testutil::four_cycle_configuration;
using testutil::four_cycle_gale;
using testutil::int_matrix;
using testutil::oracle_origin_in_hull;
using testutil::point_of;
using testutil::segment_configuration;
using testutil::square_matrix;

namespace {

// Oracle weak hyperbolicity: no subset of at most d columns captures the
// origin, checked exhaustively against the elimination oracle.
bool oracle_weakly_hyperbolic(const Configuration& conf) {
  const int m = conf.m();
  const int d = conf.d();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > d) continue;
    std::vector<int> idx;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1u) idx.push_back(j);
    if (oracle_origin_in_hull(conf.submatrix(idx))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction enforces more vectors than dimensions") {
  CHECK_THROWS_AS(Configuration(int_matrix({{1}})), DimensionMismatch);
  CHECK_THROWS_AS(Configuration(int_matrix({{1, 2}, {3, 4}})),
                  DimensionMismatch);
  const Configuration empty = testutil::empty_rows_configuration(2);
  CHECK(empty.d() == 0);
  CHECK(empty.m() == 2);
  CHECK(empty.gale_dim() == 1);
}

TEST_CASE("centering is reported, not enforced") {
  CHECK(four_cycle_configuration().centered());
  const Configuration lopsided(int_matrix({{1, 1, -1}}));
  CHECK_FALSE(lopsided.centered());
  CHECK_FALSE(admissibility(lopsided).centered);
  CHECK_THROWS_AS(gale_dual(lopsided), NotCentered);
}

TEST_CASE("the four-cycle example is admissible with a valid certificate") {
  const Configuration conf = four_cycle_configuration();
  const AdmissibilityReport report = admissibility(conf);
  CHECK(report.siegel);
  CHECK(report.weakly_hyperbolic);
  CHECK(report.centered);
  CHECK(report.admissible);
  REQUIRE(report.siegel_certificate.has_value());
  CHECK(certificate_is_valid(conf.matrix(), *report.siegel_certificate));
  CHECK_FALSE(report.violating_subset.has_value());

  // Independent confirmation of both conditions.
  CHECK(oracle_origin_in_hull(conf.matrix()));
  CHECK(oracle_weakly_hyperbolic(conf));
}

TEST_CASE("the axis square fails weak hyperbolicity with a minimal witness") {
  const Configuration conf{square_matrix()};
  const AdmissibilityReport report = admissibility(conf);
  CHECK(report.siegel);
  CHECK(report.centered);
  CHECK_FALSE(report.weakly_hyperbolic);
  CHECK_FALSE(report.admissible);
  REQUIRE(report.violating_subset.has_value());
  CHECK(report.violating_subset->size() == 2);
  CHECK(*report.violating_subset == std::vector<int>{0, 1});
  REQUIRE(report.violating_certificate.has_value());
  CHECK(certificate_is_valid(conf.submatrix(*report.violating_subset),
                             *report.violating_certificate));
  CHECK_FALSE(oracle_weakly_hyperbolic(conf));
}

TEST_CASE("zero-dimensional configurations are trivially admissible") {
  for (int m = 1; m <= 3; ++m) {
    const AdmissibilityReport report =
        admissibility(testutil::empty_rows_configuration(m));
    CHECK(report.siegel);
    CHECK(report.weakly_hyperbolic);
    CHECK(report.centered);
    CHECK(report.admissible);
  }
}

TEST_CASE("admissibility agrees with the oracle on random integer stacks") {
  std::mt19937_64 rng(11);
  int admissible_seen = 0;
  int rejected_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const int m = d + 2 + static_cast<int>(rng() % 3);
    RatMatrix a(static_cast<std::size_t>(d), static_cast<std::size_t>(m));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < m; ++j)
        a.at(i, j) = static_cast<int>(rng() % 5) - 2;
    const Configuration conf{a};
    const AdmissibilityReport report = admissibility(conf);
    CHECK(report.siegel == oracle_origin_in_hull(a));
    CHECK(report.weakly_hyperbolic == oracle_weakly_hyperbolic(conf));
    (report.admissible ? admissible_seen : rejected_seen)++;
  }
  CHECK(admissible_seen > 5);
  CHECK(rejected_seen > 5);
}

TEST_CASE("augmented rank counts affine dimensions of column subsets") {
  const Configuration conf = four_cycle_configuration();
  CHECK(augmented_rank(conf, {0, 1, 2, 3, 4}) == 3);
  // The two duplicated horizontal vectors span a single affine point.
  CHECK(augmented_rank(conf, {2, 3}) == 1);
  CHECK(augmented_rank(conf, {0}) == 1);
  CHECK(augmented_rank(conf, {0, 1}) == 2);

  const Configuration square{square_matrix()};
  CHECK(augmented_rank(square, {0, 1}) == 2);
}

TEST_CASE("the Gale dual of the four-cycle example is reproduced exactly") {
  CHECK(gale_dual(four_cycle_configuration()) == four_cycle_gale());

  // The dual rows really annihilate the configuration and sum to zero.
  const RatMatrix v = four_cycle_gale();
  const RatMatrix a = four_cycle_configuration().matrix();
  for (std::size_t r = 0; r < v.rows(); ++r) {
    Rat sum = 0;
    Rat img0 = 0;
    Rat img1 = 0;
    for (std::size_t j = 0; j < v.cols(); ++j) {
      sum += v.at(r, j);
      img0 += v.at(r, j) * a.at(0, j);
      img1 += v.at(r, j) * a.at(1, j);
    }
    CHECK(sum == 0);
    CHECK(img0 == 0);
    CHECK(img1 == 0);
  }
}

TEST_CASE("Gale duals of edge cases have the right shape") {
  CHECK(gale_dual(segment_configuration()).rows() == 0);
  CHECK(gale_dual(segment_configuration()).cols() == 2);

  const RatMatrix simplex = gale_dual(testutil::empty_rows_configuration(3));
  CHECK(simplex == int_matrix({{-1, 1, 0}, {-1, 0, 1}}));
}

TEST_CASE("the Gale transform inverts the dual up to row space") {
  // The balanced sign vector on four points transforms to the axis square.
  const Configuration square = gale_transform(int_matrix({{-1, -1, 1, 1}}));
  CHECK(square.d() == 2);
  CHECK(square.m() == 4);
  CHECK(same_row_space(square.matrix(), square_matrix()));
  CHECK(square.centered());
  CHECK_FALSE(admissibility(square).weakly_hyperbolic);

  // Declared dimension is validated.
  CHECK_NOTHROW(gale_transform(int_matrix({{-1, -1, 1, 1}}), 2));
  CHECK_THROWS_AS(gale_transform(int_matrix({{-1, -1, 1, 1}}), 1),
                  DimensionMismatch);

  // Segment endpoints transform to the empty stack of rows.
  const Configuration dot = gale_transform(int_matrix({{-1, 1}}));
  CHECK(dot.d() == 0);
  CHECK(dot.m() == 2);

  // Round trip through the dual reproduces the original row space.
  const Configuration back =
      gale_transform(gale_dual(four_cycle_configuration()), 2);
  CHECK(same_row_space(back.matrix(), four_cycle_configuration().matrix()));
  CHECK(back.centered());
}

TEST_CASE("Siegel membership depends only on the support") {
  const Configuration conf = four_cycle_configuration();

  const SiegelMembership full = siegel_membership(conf, point_of({1, 1, 1, 1, 1}));
  CHECK(full.member);
  CHECK(full.support == std::vector<int>{0, 1, 2, 3, 4});

  const SiegelMembership out =
      siegel_membership(conf, point_of({1, 1, 0, 0, 1}));
  CHECK_FALSE(out.member);
  CHECK(out.support == std::vector<int>{0, 1, 4});
  CHECK_FALSE(out.certificate.has_value());

  // Dropping the first coordinate keeps membership; the certificate is
  // pinned by the remaining support up to the split between the duplicated
  // columns.
  const SiegelMembership strat =
      siegel_membership(conf, point_of({0, 1, 1, 1, 1}));
  CHECK(strat.member);
  CHECK(strat.support == std::vector<int>{1, 2, 3, 4});
  REQUIRE(strat.certificate.has_value());
  const std::vector<Rat>& lam = *strat.certificate;
  REQUIRE(lam.size() == 5);
  CHECK(lam[0] == 0);
  CHECK(lam[1] == Rat(1) / 2);
  CHECK(lam[2] + lam[3] == Rat(1) / 3);
  CHECK(lam[4] == Rat(1) / 6);
  CHECK(certificate_is_valid(conf.matrix(), lam));

  // Random moduli and phases on the same support leave the verdict alone.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::complex<double>> z(5);
    for (int i = 1; i < 5; ++i) {
      const double mod = 0.5 + 1.5 * (static_cast<double>(rng() % 1000) / 1000.0);
      const double arg = 6.28 * (static_cast<double>(rng() % 1000) / 1000.0);
      z[i] = std::polar(mod, arg);
    }
    CHECK(siegel_membership(conf, point_of(z)).member);
  }
}

TEST_CASE("the zero threshold decides the support") {
  const Configuration conf = four_cycle_configuration();
  AmbientPoint tiny = point_of({1e-13, 1, 1, 1, 1});
  CHECK(siegel_membership(conf, tiny).support ==
        std::vector<int>{1, 2, 3, 4});
  tiny.zero_threshold = 1e-14;
  CHECK(siegel_membership(conf, tiny).support ==
        std::vector<int>{0, 1, 2, 3, 4});
}
