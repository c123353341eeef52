#include "siegel/geometry.hpp"

#include <algorithm>
#include <map>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"
#include "siegel/linprog.hpp"

namespace siegel {

bool certificate_is_valid(const RatMatrix& points,
                          const std::vector<Rat>& lambda, bool strict) {
  const int d = points.rows();
  const int n = points.cols();
  if (static_cast<int>(lambda.size()) != n) return false;
  Rat total = 0;
  for (const Rat& l : lambda) {
    if (strict ? (l <= 0) : (l < 0)) return false;
    total += l;
  }
  if (total != 1) return false;
  for (int r = 0; r < d; ++r) {
    Rat acc = 0;
    for (int j = 0; j < n; ++j) acc += points.at(r, j) * lambda[j];
    if (acc != 0) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> origin_in_hull(const RatMatrix& points) {
  const RatMatrix a = with_ones_row(points);
  std::vector<Rat> b(a.rows(), Rat(0));
  b.back() = 1;
  const std::vector<Rat> cost(points.cols(), Rat(0));
  LpResult lp = solve_lp(a, b, cost);
  if (lp.status != LpStatus::kOptimal) return std::nullopt;
  return lp.x;
}

std::optional<std::vector<Rat>> origin_in_relint(const RatMatrix& points) {
  const int d = points.rows();
  const int n = points.cols();
  if (n == 0) return std::nullopt;
  // Variables (s_1..s_n, t), all >= 0, encoding lambda_j = s_j + t:
  //   sum_j s_j p_j + t * (sum_j p_j) = 0,   sum_j s_j + n t = 1.
  RatMatrix a(d + 1, n + 1);
  for (int r = 0; r < d; ++r) {
    Rat rowsum = 0;
    for (int j = 0; j < n; ++j) {
      a.at(r, j) = points.at(r, j);
      rowsum += points.at(r, j);
    }
    a.at(r, n) = rowsum;
  }
  for (int j = 0; j < n; ++j) a.at(d, j) = 1;
  a.at(d, n) = n;
  std::vector<Rat> b(d + 1, Rat(0));
  b.back() = 1;
  std::vector<Rat> cost(n + 1, Rat(0));
  cost.back() = -1;  // maximise t
  LpResult lp = solve_lp(a, b, cost);
  if (lp.status != LpStatus::kOptimal) return std::nullopt;
  const Rat t = -lp.objective;
  if (t <= 0) return std::nullopt;
  std::vector<Rat> lambda(n);
  for (int j = 0; j < n; ++j) lambda[j] = lp.x[j] + t;
  return lambda;
}

RatMatrix affine_nullspace(const RatMatrix& points) {
  return nullspace_basis(with_ones_row(points));
}

namespace {

// Scales (c, b) so that the first nonzero entry of c has absolute value 1,
// preserving the orientation of <c, x> <= b.
void normalize_facet(std::vector<Rat>& c, Rat& b) {
  for (const Rat& e : c) {
    if (e != 0) {
      const Rat s = 1 / abs(e);
      for (Rat& x : c) x *= s;
      b *= s;
      return;
    }
  }
}

}  // namespace

FacetEnumeration facet_enumeration(const RatMatrix& points) {
  const int d = points.rows();
  const int n = points.cols();
  if (rat_rank(with_ones_row(points)) != static_cast<std::size_t>(d + 1)) {
    throw DegenerateSpan("facet_enumeration: points do not affinely span");
  }
  FacetEnumeration out;
  out.ambient_dim = d;
  if (d == 0) {
    // conv(points) is the single point of R^0: no facets, all interior.
    for (int j = 0; j < n; ++j) out.interior.push_back(j);
    return out;
  }

  std::map<std::vector<Rat>, bool> seen;  // key = normalized (c, b)
  std::vector<int> idx = first_combination(d);
  do {
    // Hyperplane through the chosen points: (c, b) spans the nullspace of
    // the rows (p_j^T, -1); a 1-dimensional nullspace means the points are
    // affinely independent and determine the hyperplane <c, x> = b.
    RatMatrix sys(d, d + 1);
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < d; ++k) sys.at(r, k) = points.at(k, idx[r]);
      sys.at(r, d) = -1;
    }
    const RatMatrix ns = nullspace_basis(sys);
    if (ns.rows() != 1) continue;
    std::vector<Rat> c(d);
    for (int k = 0; k < d; ++k) c[k] = ns.at(0, k);
    Rat b = ns.at(0, d);

    // Supporting test: all points weakly on one side.
    std::vector<Rat> val(n);
    bool has_pos = false;
    bool has_neg = false;
    for (int j = 0; j < n; ++j) {
      Rat v = -b;
      for (int k = 0; k < d; ++k) v += c[k] * points.at(k, j);
      val[j] = v;
      if (v > 0) has_pos = true;
      if (v < 0) has_neg = true;
    }
    if (has_pos && has_neg) continue;
    if (has_pos) {
      for (Rat& e : c) e = -e;
      b = -b;
    }
    normalize_facet(c, b);
    std::vector<Rat> key = c;
    key.push_back(b);
    if (seen.emplace(std::move(key), true).second) {
      Facet f;
      f.normal = std::move(c);
      f.offset = b;
      for (int j = 0; j < n; ++j) {
        if (val[j] == 0) f.points.push_back(j);
      }
      out.facets.push_back(std::move(f));
    }
  } while (next_combination(idx, n));

  // Classification: a point is a vertex iff its active facet normals span
  // R^d (the tight constraints pin a zero-dimensional face).
  for (int j = 0; j < n; ++j) {
    std::vector<const Facet*> active;
    for (const Facet& f : out.facets) {
      if (std::binary_search(f.points.begin(), f.points.end(), j)) {
        active.push_back(&f);
      }
    }
    if (active.empty()) {
      out.interior.push_back(j);
      continue;
    }
    RatMatrix normals(static_cast<int>(active.size()), d);
    for (int r = 0; r < static_cast<int>(active.size()); ++r) {
      for (int k = 0; k < d; ++k) normals.at(r, k) = active[r]->normal[k];
    }
    if (rat_rank(normals) == static_cast<std::size_t>(d)) {
      out.vertices.push_back(j);
    } else {
      out.boundary.push_back(j);
    }
  }
  return out;
}

RadialDecomposition radial_decompose(const FacetEnumeration& fac,
                                     const RatMatrix& points,
                                     const Eigen::VectorXd& nu,
                                     const std::vector<int>* facet_order) {
  const int d = fac.ambient_dim;
  if (nu.size() != d) {
    throw DimensionMismatch("radial_decompose: direction has wrong size");
  }
  RadialDecomposition out;
  bool zero = true;
  for (int k = 0; k < d; ++k) {
    if (nu[k] != 0.0) zero = false;
  }
  if (zero) return out;  // rho = 0, empty face

  std::vector<int> order;
  if (facet_order != nullptr) {
    order = *facet_order;
  } else {
    order.resize(fac.facets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  }

  // Ray parameter per facet: the ray t -> t*nu crosses <c, x> = b at
  // t = b / <c, nu> whenever <c, nu> > 0; the first crossing wins.
  double best = -1.0;
  std::vector<std::pair<int, double>> hits;
  for (int fi : order) {
    const Facet& f = fac.facets[fi];
    double denom = 0.0;
    for (int k = 0; k < d; ++k) denom += to_double(f.normal[k]) * nu[k];
    if (denom <= 0.0) continue;
    const double t = to_double(f.offset) / denom;
    hits.emplace_back(fi, t);
    if (best < 0.0 || t < best) best = t;
  }
  if (best < 0.0) {
    throw Error("radial_decompose: direction never leaves the polytope");
  }
  out.rho = 1.0 / best;

  std::vector<int> face;
  bool first = true;
  for (const auto& [fi, t] : hits) {
    if (t > best * (1.0 + 1e-9)) continue;
    const std::vector<int>& pts = fac.facets[fi].points;
    if (first) {
      face = pts;
      first = false;
    } else {
      std::vector<int> merged;
      std::set_intersection(face.begin(), face.end(), pts.begin(), pts.end(),
                            std::back_inserter(merged));
      face = std::move(merged);
    }
  }
  out.face = face;

  // Convex weights on the face for the boundary point x* = best * nu,
  // solved in the affine system [p_j; 1] mu = [x*; 1].
  const int k = static_cast<int>(face.size());
  if (k > 0) {
    Eigen::MatrixXd sys(d + 1, k);
    Eigen::VectorXd rhs(d + 1);
    for (int col = 0; col < k; ++col) {
      for (int r = 0; r < d; ++r) {
        sys(r, col) = to_double(points.at(r, face[col]));
      }
      sys(d, col) = 1.0;
    }
    for (int r = 0; r < d; ++r) rhs(r) = best * nu[r];
    rhs(d) = 1.0;
    Eigen::VectorXd mu = sys.colPivHouseholderQr().solve(rhs);
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      if (mu[i] < 0.0) mu[i] = 0.0;
      total += mu[i];
    }
    out.mu.resize(k);
    for (int i = 0; i < k; ++i) out.mu[i] = mu[i] / total;
  }
  return out;
}

}  // namespace siegel
