#include "siegel/sampling.hpp"

#include <cmath>
#include <numbers>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"
#include "siegel/geometry.hpp"

namespace siegel {

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DimensionMismatch("uniform_below: empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

Configuration random_admissible(std::mt19937_64& rng, int d, int m,
                                int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    RatMatrix a(d, m);
    for (int r = 0; r < d; ++r) {
      Rat sum = 0;
      for (int j = 0; j + 1 < m; ++j) {
        const Rat e = static_cast<int>(uniform_below(rng, 9)) - 4;
        a.at(r, j) = e;
        sum += e;
      }
      a.at(r, m - 1) = -sum;
    }
    Configuration conf(std::move(a));
    if (admissibility(conf).admissible) return conf;
  }
  throw SolverFailure("no admissible configuration found in the try budget");
}

std::vector<Configuration> standard_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (int m = 1; m <= 3; ++m) out.emplace_back(RatMatrix(0, m));
  for (int d = 1; d <= 3; ++d) {
    for (int m = d + 2; m <= 8; ++m) {
      out.push_back(random_admissible(rng, d, m));
    }
  }
  return out;
}

AmbientPoint random_point(std::mt19937_64& rng, const Configuration& conf) {
  AmbientPoint out;
  out.z.resize(conf.m());
  for (auto& value : out.z) {
    const double mod = 0.5 + 1.5 * uniform_unit(rng);
    const double arg = 2.0 * std::numbers::pi * uniform_unit(rng);
    value = std::polar(mod, arg);
  }
  return out;
}

AmbientPoint random_stratum_point(std::mt19937_64& rng,
                                  const Configuration& conf,
                                  const SimplicialComplex& complex) {
  AmbientPoint out = random_point(rng, conf);
  const auto& faces = complex.faces();
  if (faces.size() <= 1) return out;  // only the empty face
  // faces[0] is the empty face; pick among the rest.
  const std::uint32_t face =
      faces[1 + uniform_below(rng, faces.size() - 1)];
  for (int i : mask_to_indices(face)) out.z[i] = 0.0;
  return out;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) out[i] = i;
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(uniform_below(rng, i + 1));
    std::swap(out[i], out[j]);
  }
  return out;
}

std::vector<double> random_cube_stratum_point(std::mt19937_64& rng, int m,
                                              const std::vector<int>& face) {
  std::vector<double> out(m);
  for (int i = 0; i < m; ++i) {
    out[i] = uniform_below(rng, 2) == 0 ? 1.0 : -1.0;
  }
  for (int i : face) {
    if (i < 0 || i >= m) throw DimensionMismatch("face index out of range");
    out[i] *= 0.3 + 0.4 * uniform_unit(rng);
  }
  return out;
}

std::optional<std::vector<double>> random_orthant_stratum_point(
    std::mt19937_64& rng, const Configuration& conf) {
  const auto lambda = origin_in_relint(conf.matrix());
  if (!lambda.has_value()) return std::nullopt;
  const int m = conf.m();
  std::vector<double> out(m);
  double low = 1.0;
  for (int i = 0; i < m; ++i) {
    out[i] = to_double((*lambda)[i]);
    low = std::min(low, out[i]);
  }
  // Jiggle inside the certificate polytope: kernel vectors keep both the
  // barycentric sum and the moment exactly zero.
  const RatMatrix v = gale_dual(conf);
  std::vector<double> w(m, 0.0);
  double top = 0.0;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const double c = 2.0 * uniform_unit(rng) - 1.0;
    for (int i = 0; i < m; ++i) w[i] += c * to_double(v.at(r, i));
  }
  for (double value : w) top = std::max(top, std::abs(value));
  if (top > 0.0) {
    const double scale = 0.4 * low / top;
    for (int i = 0; i < m; ++i) out[i] += scale * w[i];
  }
  return out;
}

std::optional<std::vector<int>> minimal_non_face(
    const SimplicialComplex& complex) {
  const int m = complex.ground_size();
  for (int k = 1; k < m; ++k) {
    std::vector<int> idx = first_combination(k);
    do {
      if (!complex.contains(indices_to_mask(idx))) return idx;
    } while (next_combination(idx, m));
  }
  return std::nullopt;
}

std::optional<AmbientPoint> boundary_escape_point(
    std::mt19937_64& rng, const Configuration& conf,
    const SimplicialComplex& complex) {
  const auto non_face = minimal_non_face(complex);
  if (!non_face.has_value()) return std::nullopt;
  AmbientPoint out;
  out.z.resize(conf.m());
  for (int i = 0; i < conf.m(); ++i) {
    const double arg = 2.0 * std::numbers::pi * uniform_unit(rng);
    out.z[i] = std::polar(1.0, arg);
  }
  for (int i : *non_face) {
    // Strictly inside the disk but clearly nonzero.
    out.z[i] *= 0.3 + 0.4 * uniform_unit(rng);
  }
  return out;
}

}  // namespace siegel
