#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "siegel/configuration.hpp"
#include "siegel/simplicial.hpp"

namespace siegel {

// All samplers consume a caller-owned mt19937_64 and avoid the standard
// distributions, whose output is implementation-defined; results are
// reproducible from the seed alone.

// Uniform in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);
// Uniform integer in [0, bound), bound >= 1, by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Admissible centered configuration with integer entries in [-4, 4]: the
// first m - 1 columns are drawn at random and the last balances the sum;
// draws are rejected until the admissibility test passes.  Throws
// SolverFailure when max_tries draws all fail (practically unreachable for
// m >= d + 2).
Configuration random_admissible(std::mt19937_64& rng, int d, int m,
                                int max_tries = 10000);

// Deterministic mixed corpus: d = 0 with m = 1..3, then every (d, m) with
// 1 <= d <= 3 and d + 2 <= m <= 8.
std::vector<Configuration> standard_corpus(std::uint64_t seed);

// Full-support point with moduli in [1/2, 2) and uniform phases; always a
// Siegel-set point for an admissible configuration.
AmbientPoint random_point(std::mt19937_64& rng, const Configuration& conf);

// Point whose zero set is a uniformly chosen nonempty face of the complex
// (full support when only the empty face exists); remaining coordinates are
// drawn as in random_point.
AmbientPoint random_stratum_point(std::mt19937_64& rng,
                                  const Configuration& conf,
                                  const SimplicialComplex& complex);

std::vector<int> random_permutation(std::mt19937_64& rng, int m);

// Real point on the cube stratum indexed by `face`: the free coordinates
// get moduli in [0.3, 0.7] with random signs, the pinned ones random +-1.
std::vector<double> random_cube_stratum_point(std::mt19937_64& rng, int m,
                                              const std::vector<int>& face);

// Strictly positive hull certificate (a point of the orthant stratum of the
// p = 1 unit set), jiggled inside the certificate polytope by a random
// kernel vector; std::nullopt when the origin is not in the relative
// interior of the hull.  Requires a centered configuration.
std::optional<std::vector<double>> random_orthant_stratum_point(
    std::mt19937_64& rng, const Configuration& conf);

// Smallest proper subset that is not a face (smallest cardinality, then
// lexicographic); std::nullopt when every proper subset is a face.
std::optional<std::vector<int>> minimal_non_face(
    const SimplicialComplex& complex);

// Full-support point with sup norm exactly 1 that lies outside the
// moment-angle complex: moduli strictly below 1 on a minimal non-face and 1
// elsewhere.  std::nullopt when no such point exists (d = 0).
std::optional<AmbientPoint> boundary_escape_point(
    std::mt19937_64& rng, const Configuration& conf,
    const SimplicialComplex& complex);

}  // namespace siegel
