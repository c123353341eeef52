#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

// A configuration of m rational vectors in R^d, stored as the columns of a
// d x m matrix.  Requires m > d >= 0; d = 0 (an empty stack of rows) is
// legal.  Centering (sum_i A_i = 0) is NOT required at construction; the
// operations that need it check and throw NotCentered.
class Configuration {
 public:
  explicit Configuration(RatMatrix vectors);

  int d() const { return vectors_.rows(); }
  int m() const { return vectors_.cols(); }
  // Dimension of the Gale dual space, n = m - d - 1.
  int gale_dim() const { return m() - d() - 1; }
  // Exact test of the centering condition sum_i A_i = 0.
  bool centered() const;

  const RatMatrix& matrix() const { return vectors_; }
  std::vector<Rat> column(int j) const;
  // Columns selected by `idx` (0-based), in the given order.
  RatMatrix submatrix(const std::vector<int>& idx) const;
  Eigen::MatrixXd to_double() const;

 private:
  RatMatrix vectors_;
};

struct AdmissibilityReport {
  bool siegel = false;              // 0 in conv{A_1..A_m}
  bool weakly_hyperbolic = false;   // 0 in conv A(I) forces |I| > d
  bool centered = false;            // sum_i A_i = 0 exactly
  bool admissible = false;          // siegel && weakly_hyperbolic
  // Convex certificate for the Siegel condition (length m), when it holds.
  std::optional<std::vector<Rat>> siegel_certificate;
  // First violating subset (by size, then lexicographic; 0-based) together
  // with its convex certificate, when weak hyperbolicity fails.
  std::optional<std::vector<int>> violating_subset;
  std::optional<std::vector<Rat>> violating_certificate;
};

// Exact admissibility check; subsets are scanned smallest-first so the
// reported violation is minimal.
AdmissibilityReport admissibility(const Configuration& conf);

// Exact rank of the augmented matrix whose columns are (A_i, 1), i in
// `subset` (0-based indices).
int augmented_rank(const Configuration& conf, const std::vector<int>& subset);

// Gale dual of the configuration: the n x m matrix (n = m - d - 1) whose
// rows form the canonical basis of { x : sum_i x_i A_i = 0, sum_i x_i = 0 }.
// Its columns V_1..V_m are the Gale vectors.  Throws NotCentered when the
// columns of the configuration do not sum to zero.
RatMatrix gale_dual(const Configuration& conf);

// Inverse construction: given an n x m matrix V, produce the (automatically
// centered) configuration whose rows form the canonical basis of
// { x : V x = 0, sum_i x_i = 0 }, so d = m - rank(V with a ones row).
// Throws DimensionMismatch when `declared_d` is given but disagrees.
Configuration gale_transform(const RatMatrix& v,
                             std::optional<int> declared_d = std::nullopt);

// A point of the ambient complex vector space C^m, with the threshold used
// to decide which coordinates count as zero.
struct AmbientPoint {
  std::vector<std::complex<double>> z;
  double zero_threshold = 1e-12;

  int size() const { return static_cast<int>(z.size()); }
  // Indices with |z_i| > zero_threshold, ascending.
  std::vector<int> support() const;
};

struct SiegelMembership {
  bool member = false;
  std::vector<int> support;  // 0-based
  // Convex certificate of length m (zero off the support) when member.
  std::optional<std::vector<Rat>> certificate;
};

// Membership of z in the Siegel set: 0 must lie in conv{ A_i : z_i != 0 }.
// Exact once the support is fixed by the zero threshold.
SiegelMembership siegel_membership(const Configuration& conf,
                                   const AmbientPoint& point);

}  // namespace siegel
