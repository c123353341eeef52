#pragma once

// Shared fixtures and independent oracles for the test suite.
//
// The oracles deliberately avoid the library's algorithms: the hull oracle
// solves Caratheodory subsets by direct rational Gauss-Jordan elimination
// (the library uses a two-phase simplex), the complex oracle enumerates all
// 2^m subsets against that hull oracle (the library prunes level by level),
// and the one-dimensional minimiser oracle is a golden-section bracketing
// search (the library uses damped Newton).  Agreement between the two
// codepaths is what the tests certify.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "siegel/configuration.hpp"
#include "siegel/rational.hpp"

namespace testutil {

inline siegel::RatMatrix rat_matrix(
    const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  siegel::RatMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      out.at(i, j) = siegel::parse_rational(rows[i][j]);
  return out;
}

inline siegel::RatMatrix int_matrix(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  siegel::RatMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out.at(i, j) = rows[i][j];
  return out;
}

// Five centered vectors in R^2 whose complex is a 4-cycle: two vertical
// stacked vectors, a doubled horizontal one, and a balancing fifth.
inline siegel::Configuration four_cycle_configuration() {
  return siegel::Configuration(rat_matrix({{"0", "0", "1", "1", "-2"},
                                           {"1", "1/2", "0", "0", "-3/2"}}));
}

// Exact Gale dual of four_cycle_configuration (hand-checked: rows annihilate
// the configuration and sum to zero coordinatewise).
inline siegel::RatMatrix four_cycle_gale() {
  return int_matrix({{0, 0, -1, 1, 0}, {6, -9, 2, 0, 1}});
}

// The four axis unit vectors of R^2: Siegel but not weakly hyperbolic
// (opposite pairs capture the origin with only two vectors).
inline siegel::RatMatrix square_matrix() {
  return int_matrix({{0, 0, 1, -1}, {1, -1, 0, 0}});
}

// One balanced pair on the line; the smallest admissible configuration with
// d > 0.
inline siegel::Configuration segment_configuration() {
  return siegel::Configuration(int_matrix({{1, -1}}));
}

inline siegel::Configuration empty_rows_configuration(int m) {
  return siegel::Configuration(
      siegel::RatMatrix(0, static_cast<std::size_t>(m)));
}

inline siegel::AmbientPoint point_of(std::vector<std::complex<double>> z) {
  siegel::AmbientPoint out;
  out.z = std::move(z);
  return out;
}

inline siegel::AmbientPoint real_point(const std::vector<double>& x) {
  siegel::AmbientPoint out;
  out.z.reserve(x.size());
  for (double v : x) out.z.emplace_back(v, 0.0);
  return out;
}

inline double sup_diff(const std::vector<std::complex<double>>& a,
                       const std::vector<std::complex<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  if (a.size() != b.size()) return 1e300;
  return worst;
}

inline double sup_norm(const std::vector<std::complex<double>>& a) {
  double worst = 0.0;
  for (const auto& v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

// ---------------------------------------------------------------------------
// Independent hull oracle.
//
// 0 lies in conv(points) iff some affinely independent subset of at most
// d + 1 points carries a nonnegative affine combination of the origin
// (Caratheodory).  Each subset system [P_j; 1] lambda = (0, ..., 0, 1) is
// solved by rational Gauss-Jordan elimination below; affinely dependent
// subsets are skipped because a minimal certificate never needs them.

inline bool oracle_subset_carries_origin(const siegel::RatMatrix& pts,
                                         const std::vector<int>& idx) {
  using siegel::Rat;
  const std::size_t d = pts.rows();
  const std::size_t r = idx.size();
  std::vector<std::vector<Rat>> m(d + 1, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m[i][j] = pts.at(i, static_cast<std::size_t>(idx[j]));
  for (std::size_t j = 0; j < r; ++j) m[d][j] = 1;
  m[d][r] = 1;

  std::vector<std::size_t> pivot_row(r, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t sel = row;
    while (sel <= d && m[sel][col] == 0) ++sel;
    if (sel > d) return false;  // rank-deficient subset: skip it
    std::swap(m[sel], m[row]);
    const Rat piv = m[row][col];
    for (std::size_t j = col; j <= r; ++j) m[row][j] /= piv;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k == row || m[k][col] == 0) continue;
      const Rat f = m[k][col];
      for (std::size_t j = col; j <= r; ++j) m[k][j] -= f * m[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t k = row; k <= d; ++k)
    if (m[k][r] != 0) return false;  // inconsistent system
  for (std::size_t col = 0; col < r; ++col)
    if (m[pivot_row[col]][r] < 0) return false;  // negative weight
  return true;
}

inline bool oracle_origin_in_hull(const siegel::RatMatrix& pts) {
  const int n = static_cast<int>(pts.cols());
  const int d = static_cast<int>(pts.rows());
  if (n <= 0) return false;
  const int cap = std::min(n, d + 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > cap) continue;
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) idx.push_back(j);
    if (oracle_subset_carries_origin(pts, idx)) return true;
  }
  return false;
}

// All faces of { sigma : 0 in conv(columns off sigma) } by exhaustive
// enumeration, sorted by (cardinality, value) to match the library order.
inline std::vector<std::uint32_t> oracle_complex_faces(
    const siegel::Configuration& conf) {
  const int m = conf.m();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t sigma = 0; sigma < (1u << m); ++sigma) {
    std::vector<int> comp;
    for (int j = 0; j < m; ++j)
      if (!(sigma >> j & 1u)) comp.push_back(j);
    if (comp.empty()) continue;  // the empty hull misses the origin
    if (oracle_origin_in_hull(conf.submatrix(comp))) faces.push_back(sigma);
  }
  std::sort(faces.begin(), faces.end(),
            [](std::uint32_t a, std::uint32_t b) {
              const int ca = std::popcount(a);
              const int cb = std::popcount(b);
              return ca != cb ? ca < cb : a < b;
            });
  return faces;
}

// ---------------------------------------------------------------------------
// Independent one-dimensional minimiser oracle (d = 1 configurations).

// log ||flow(z, t)||_p, re-derived here as a max-subtracted log-sum-exp so
// the search below shares no code with the library solver.
inline double oracle_log_leaf_norm(const siegel::Configuration& conf,
                                   const std::vector<std::complex<double>>& z,
                                   double p, double t) {
  const Eigen::MatrixXd a = conf.to_double();
  double top = -1e300;
  std::vector<double> logs;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double mod = std::abs(z[i]);
    if (mod <= 1e-12) continue;
    const double l = std::log(mod) + a(0, static_cast<int>(i)) * t;
    logs.push_back(l);
    top = std::max(top, l);
  }
  double sum = 0.0;
  for (double l : logs) sum += std::exp(p * (l - top));
  return top + std::log(sum) / p;
}

// Golden-section search over t in [-40, 40]; the leaf norm of a Siegel point
// is strictly convex in t, so the bracket shrinks onto the unique minimum.
inline double oracle_minimize_1d(const siegel::Configuration& conf,
                                 const std::vector<std::complex<double>>& z,
                                 double p) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -40.0, hi = 40.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = oracle_log_leaf_norm(conf, z, p, x1);
  double f2 = oracle_log_leaf_norm(conf, z, p, x2);
  while (hi - lo > 1e-13) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = oracle_log_leaf_norm(conf, z, p, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = oracle_log_leaf_norm(conf, z, p, x2);
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace testutil
