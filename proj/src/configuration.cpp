#include "siegel/configuration.hpp"

#include <algorithm>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"
#include "siegel/geometry.hpp"

namespace siegel {

Configuration::Configuration(RatMatrix vectors) : vectors_(std::move(vectors)) {
  if (m() <= d()) {
    throw DimensionMismatch(
        "configuration needs more vectors than the ambient dimension");
  }
}

bool Configuration::centered() const {
  for (int r = 0; r < d(); ++r) {
    Rat sum = 0;
    for (int j = 0; j < m(); ++j) sum += vectors_.at(r, j);
    if (sum != 0) return false;
  }
  return true;
}

std::vector<Rat> Configuration::column(int j) const {
  if (j < 0 || j >= m()) {
    throw DimensionMismatch("column index out of range");
  }
  return vectors_.col(j);
}

RatMatrix Configuration::submatrix(const std::vector<int>& idx) const {
  RatMatrix out(d(), static_cast<int>(idx.size()));
  for (int c = 0; c < static_cast<int>(idx.size()); ++c) {
    const int j = idx[c];
    if (j < 0 || j >= m()) {
      throw DimensionMismatch("column index out of range");
    }
    for (int r = 0; r < d(); ++r) out.at(r, c) = vectors_.at(r, j);
  }
  return out;
}

Eigen::MatrixXd Configuration::to_double() const {
  Eigen::MatrixXd out(d(), m());
  for (int r = 0; r < d(); ++r) {
    for (int j = 0; j < m(); ++j) out(r, j) = siegel::to_double(vectors_.at(r, j));
  }
  return out;
}

AdmissibilityReport admissibility(const Configuration& conf) {
  AdmissibilityReport report;
  report.centered = conf.centered();
  report.siegel_certificate = origin_in_hull(conf.matrix());
  report.siegel = report.siegel_certificate.has_value();

  // Weak hyperbolicity fails iff some subset of size <= d already captures
  // the origin in its hull; scan by size then lexicographically, so the
  // first hit is a minimal violation.
  report.weakly_hyperbolic = true;
  for (int k = 1; k <= conf.d() && report.weakly_hyperbolic; ++k) {
    std::vector<int> idx = first_combination(k);
    do {
      auto cert = origin_in_hull(conf.submatrix(idx));
      if (cert.has_value()) {
        report.weakly_hyperbolic = false;
        report.violating_subset = idx;
        report.violating_certificate = std::move(cert);
        break;
      }
    } while (next_combination(idx, conf.m()));
  }
  report.admissible = report.siegel && report.weakly_hyperbolic;
  return report;
}

int augmented_rank(const Configuration& conf, const std::vector<int>& subset) {
  return rat_rank(with_ones_row(conf.submatrix(subset)));
}

RatMatrix gale_dual(const Configuration& conf) {
  if (!conf.centered()) {
    throw NotCentered("gale_dual requires a centered configuration");
  }
  return nullspace_basis(with_ones_row(conf.matrix()));
}

Configuration gale_transform(const RatMatrix& v, std::optional<int> declared_d) {
  const RatMatrix augmented = with_ones_row(v);
  const int d = static_cast<int>(v.cols()) - static_cast<int>(rat_rank(augmented));
  if (declared_d.has_value() && *declared_d != d) {
    throw DimensionMismatch("gale_transform: rank mismatch with declared d");
  }
  // The sought configuration rows span the orthogonal complement of
  // span(rows of V, all-ones); taking the canonical nullspace basis makes
  // the result centered automatically.
  return Configuration(nullspace_basis(augmented));
}

std::vector<int> AmbientPoint::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (std::abs(z[i]) > zero_threshold) out.push_back(i);
  }
  return out;
}

SiegelMembership siegel_membership(const Configuration& conf,
                                   const AmbientPoint& point) {
  if (point.size() != conf.m()) {
    throw DimensionMismatch("point size does not match configuration");
  }
  SiegelMembership out;
  out.support = point.support();
  auto cert = origin_in_hull(conf.submatrix(out.support));
  out.member = cert.has_value();
  if (out.member) {
    std::vector<Rat> full(conf.m(), Rat(0));
    for (size_t k = 0; k < out.support.size(); ++k) {
      full[out.support[k]] = (*cert)[k];
    }
    out.certificate = std::move(full);
  }
  return out;
}

}  // namespace siegel
