#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "siegel/errors.hpp"
#include "siegel/projection.hpp"
#include "siegel/sampling.hpp"

using namespace siegel;
using testutil::four_cycle_configuration;
using testutil::point_of;
using testutil::real_point;
using testutil::segment_configuration;
using testutil::sup_diff;
using testutil::sup_norm;

namespace {

const double kE = std::exp(1.0);

// y must equal r * flow(z, T); the defect is measured in the sup norm,
// recomputed here from scratch.
double reconstruction_defect(const Configuration& conf, const AmbientPoint& z,
                             const ProjectionResult& res) {
  auto recon = flow(conf, z.z, res.T_inf);
  for (auto& c : recon) c *= res.r;
  return sup_diff(recon, res.y);
}

}  // namespace

TEST_CASE("moment-angle membership separates the defining conditions") {
  const SimplicialComplex seg = build_complex(segment_configuration());

  const MomentAngleMembership in = mac_contains(seg, real_point({1.0, 1.0}));
  CHECK(in.inside);
  CHECK(in.norm_ok);
  CHECK(in.coords_ok);
  CHECK(in.face_ok);
  CHECK(in.max_norm == doctest::Approx(1.0));
  CHECK(in.strict_set.empty());
  CHECK(in.circle_set == std::vector<int>{0, 1});
  CHECK(in.carrier.empty());

  // A strictly contracted coordinate needs its index to be a face.
  const MomentAngleMembership out = mac_contains(seg, real_point({0.5, 1.0}));
  CHECK_FALSE(out.inside);
  CHECK(out.norm_ok);
  CHECK(out.coords_ok);
  CHECK_FALSE(out.face_ok);
  CHECK(out.strict_set == std::vector<int>{0});

  const MomentAngleMembership big = mac_contains(seg, real_point({1.0, 1.2}));
  CHECK_FALSE(big.inside);
  CHECK_FALSE(big.coords_ok);

  const MomentAngleMembership small = mac_contains(seg, real_point({0.9, 0.9}));
  CHECK_FALSE(small.inside);
  CHECK_FALSE(small.norm_ok);

  // Unit phases are irrelevant.
  const MomentAngleMembership spun =
      mac_contains(seg, point_of({{0.0, 1.0}, {-1.0, 0.0}}));
  CHECK(spun.inside);
}

TEST_CASE("moment-angle membership on the four-cycle uses its faces") {
  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);

  const MomentAngleMembership strat =
      mac_contains(k, real_point({0.0, 1.0, 1.0, 1.0, 1.0}));
  CHECK(strat.inside);
  CHECK(strat.strict_set == std::vector<int>{0});
  CHECK(strat.carrier == std::vector<int>{0});

  const MomentAngleMembership edge =
      mac_contains(k, real_point({0.3, 1.0, 0.9, 1.0, 1.0}));
  CHECK(edge.inside);
  CHECK(edge.strict_set == std::vector<int>{0, 2});

  // {0, 1} is not a face, so contracting both tips the point outside.
  const MomentAngleMembership off =
      mac_contains(k, real_point({0.3, 0.9, 1.0, 1.0, 1.0}));
  CHECK_FALSE(off.inside);
  CHECK_FALSE(off.face_ok);

  // The isolated coordinate can never contract.
  const MomentAngleMembership iso =
      mac_contains(k, real_point({1.0, 1.0, 1.0, 1.0, 0.99}));
  CHECK_FALSE(iso.inside);

  // Tolerance band: moduli within tol of 1 count as on the circle.
  const MomentAngleMembership near =
      mac_contains(k, real_point({1.0 - 5e-9, 1.0, 1.0, 1.0, 1.0}), 1e-8);
  CHECK(near.inside);
  CHECK(near.strict_set.empty());
}

TEST_CASE("projection of a full-support pair matches the closed form") {
  const Configuration seg = segment_configuration();
  const SimplicialComplex k = build_complex(seg);

  const double a = 0.7, b = 1.9;
  const ProjectionResult res = project_combinatorial(seg, k, real_point({a, b}));
  REQUIRE(res.y.size() == 2);
  CHECK(std::abs(res.y[0] - 1.0) < 1e-12);
  CHECK(std::abs(res.y[1] - 1.0) < 1e-12);
  CHECK(res.sigma.empty());
  CHECK(res.zero_set.empty());
  CHECK(res.u == std::vector<double>{0.0, 0.0});
  CHECK(res.T_inf[0] == doctest::Approx(0.5 * std::log(b / a)).epsilon(1e-12));
  CHECK(res.r == doctest::Approx(1.0 / std::sqrt(a * b)).epsilon(1e-12));
  CHECK(res.c == doctest::Approx(std::log(res.r)));
  CHECK(res.residual < 1e-12);
  CHECK(reconstruction_defect(seg, real_point({a, b}), res) < 1e-12);

  // Phases ride along unchanged: (i, -e^2) lands on (i, -1).
  const AmbientPoint spun = point_of({{0.0, 1.0}, {-kE * kE, 0.0}});
  const ProjectionResult twisted = project_combinatorial(seg, k, spun);
  CHECK(std::abs(twisted.y[0] - std::complex<double>(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(twisted.y[1] - std::complex<double>(-1.0, 0.0)) < 1e-12);
  CHECK(twisted.T_inf[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(twisted.r == doctest::Approx(1.0 / kE).epsilon(1e-12));
  CHECK(std::abs(twisted.phases[0] - std::complex<double>(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(twisted.phases[1] - std::complex<double>(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("projection fixes the zero-stratum example pointwise") {
  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);
  const AmbientPoint z = real_point({0.0, 1.0, 1.0, 1.0, 1.0});
  const ProjectionResult res = project_combinatorial(conf, k, z);
  CHECK(res.zero_set == std::vector<int>{0});
  CHECK(res.sigma == std::vector<int>{0});
  CHECK(sup_diff(res.y, z.z) < 1e-12);
  CHECK(res.T_inf.lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK(res.r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mac_contains(k, point_of(res.y)).inside);
}

TEST_CASE("projection rejects points off the Siegel set") {
  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);
  CHECK_THROWS_AS(
      project_combinatorial(conf, k, real_point({1, 1, 0, 0, 1})),
      NotInSiegelSet);
}

TEST_CASE("projection satisfies its structural invariants on random points") {
  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);
  std::mt19937_64 rng(61);

  for (int trial = 0; trial < 8; ++trial) {
    const AmbientPoint z = trial < 5 ? random_point(rng, conf)
                                     : random_stratum_point(rng, conf, k);
    const ProjectionResult res = project_combinatorial(conf, k, z);

    // Lands inside; every visibly contracted coordinate sits in sigma, and
    // sigma itself only names strictly contracted coordinates (possibly by
    // less than the membership tolerance).
    const MomentAngleMembership mem = mac_contains(k, point_of(res.y));
    CHECK(mem.inside);
    for (int s : mem.strict_set) {
      CHECK(std::find(res.sigma.begin(), res.sigma.end(), s) !=
            res.sigma.end());
    }
    CHECK(k.contains(res.sigma));
    for (int s : res.sigma) CHECK(std::abs(res.y[s]) < 1.0);

    // u is nonpositive and vanishes exactly off sigma.
    for (int i = 0; i < conf.m(); ++i) {
      CHECK(res.u[i] <= 0.0);
      bool in_sigma = false;
      for (int s : res.sigma) in_sigma = in_sigma || s == i;
      if (!in_sigma) CHECK(res.u[i] == 0.0);
    }

    // Exact reconstruction and idempotence.
    CHECK(reconstruction_defect(conf, z, res) < 1e-9 * sup_norm(z.z));
    const ProjectionResult again = project_combinatorial(conf, k, point_of(res.y));
    CHECK(sup_diff(again.y, res.y) < 1e-8);
    CHECK(again.T_inf.lpNorm<Eigen::Infinity>() < 1e-8);
    CHECK(std::abs(again.r - 1.0) < 1e-8);

    // The radial scan order must not matter.
    for (std::uint64_t s : {1ull, 2ull, 3ull}) {
      ProjectionOptions opt;
      opt.facet_shuffle_seed = s;
      const ProjectionResult shuffled = project_combinatorial(conf, k, z, opt);
      CHECK(sup_diff(shuffled.y, res.y) < 1e-9);
      CHECK((shuffled.T_inf - res.T_inf).lpNorm<Eigen::Infinity>() < 1e-9);
    }

    // Torus equivariance: twisting phases twists y and nothing else.
    AmbientPoint spun = z;
    std::vector<std::complex<double>> twist(conf.m());
    for (int i = 0; i < conf.m(); ++i) {
      const double arg = 6.2831853 * (static_cast<double>(rng() % 1000) / 1000.0);
      twist[i] = std::polar(1.0, arg);
      spun.z[i] *= twist[i];
    }
    const ProjectionResult spun_res = project_combinatorial(conf, k, spun);
    CHECK((spun_res.T_inf - res.T_inf).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(std::abs(spun_res.r - res.r) < 1e-12 * res.r);
    for (int i = 0; i < conf.m(); ++i) {
      CHECK(std::abs(std::abs(spun_res.y[i]) - std::abs(res.y[i])) < 1e-12);
    }
  }
}

TEST_CASE("the p-limit route agrees with the combinatorial one") {
  const Configuration seg = segment_configuration();
  const AmbientPoint z = real_point({1.0, kE * kE});
  const PlimitResult pl = project_plimit(seg, z);
  CHECK(pl.schedule.front() == 2.0);
  CHECK(pl.schedule.back() == 1024.0);
  CHECK(pl.T[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(pl.y[0] - 1.0) < 1e-6);
  CHECK(std::abs(pl.y[1] - 1.0) < 1e-6);
  CHECK(pl.r == doctest::Approx(1.0 / kE).epsilon(1e-6));
  for (double inc : pl.increments) CHECK(inc < 1e-9);

  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 3; ++trial) {
    const AmbientPoint w = random_point(rng, conf);
    const ProjectionResult comb = project_combinatorial(conf, k, w);
    const PlimitResult lim = project_plimit(conf, w);
    CHECK((lim.T - comb.T_inf).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK(sup_diff(lim.y, comb.y) < 1e-4);
  }
}

TEST_CASE("p-limit schedules are validated") {
  const Configuration seg = segment_configuration();
  const AmbientPoint z = real_point({1.0, 2.0});
  CHECK_THROWS_AS(project_plimit(seg, z, {8.0}), DimensionMismatch);
  CHECK_THROWS_AS(project_plimit(seg, z, {4.0, 2.0}), DimensionMismatch);
  CHECK_THROWS_AS(project_plimit(seg, z, {2.0, 2.0}), DimensionMismatch);
  CHECK_NOTHROW(project_plimit(seg, z, {2.0, 4.0, 8.0}));
}

TEST_CASE("escape probes enforce their preconditions and find witnesses") {
  const Configuration conf = four_cycle_configuration();
  const SimplicialComplex k = build_complex(conf);

  CHECK_THROWS_AS(escape_check(conf, k, real_point({0.5, 1, 1, 1, 2})),
                  PreconditionFailure);
  CHECK_THROWS_AS(escape_check(conf, k, real_point({1, 1, 1, 1, 1})),
                  PreconditionFailure);

  // Contracting the isolated coordinate leaves the complex; the flow must
  // push some coordinate back over the polydisk wall.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    const auto target = boundary_escape_point(rng, conf, k);
    REQUIRE(target.has_value());
    CHECK_FALSE(mac_contains(k, *target).inside);
    const EscapeReport rep = escape_check(conf, k, *target);
    CHECK(rep.escapes);
    CHECK(rep.coordinate >= 0);
    CHECK(rep.excess > 0.0);
  }

  // Zero rows: the complex is the full simplex boundary, nothing escapes.
  const Configuration dots = testutil::empty_rows_configuration(3);
  const SimplicialComplex bound = build_complex(dots);
  std::mt19937_64 rng2(73);
  CHECK_FALSE(boundary_escape_point(rng2, dots, bound).has_value());
}

TEST_CASE("sweeps tabulate the drift of the minimiser with p") {
  const Configuration conf = four_cycle_configuration();
  std::mt19937_64 rng(79);
  const AmbientPoint z = random_point(rng, conf);
  const std::vector<SweepRow> rows = sweep(conf, z);
  REQUIRE(rows.size() == default_p_schedule().size());

  double prev_norm = 1e300;
  for (const SweepRow& row : rows) {
    CHECK(row.residual < 1e-9);
    // Unit-norm representative: sup norm between m^(-1/p) and 1.
    CHECK(row.xp_inf >= std::exp(-std::log(5.0) / row.p) - 1e-12);
    CHECK(row.xp_inf <= 1.0 + 1e-12);
    // The optimal value is nonincreasing in p.
    CHECK(row.fp_norm <= prev_norm * (1.0 + 1e-12));
    prev_norm = row.fp_norm;
  }
  CHECK(std::abs(rows.back().xp_inf - 1.0) < 1e-3);
}
