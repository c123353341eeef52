#include "siegel/simplicial.hpp"

#include <algorithm>
#include <set>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"

namespace siegel {

namespace {

// Deterministic ordering of faces: by cardinality, then numeric value.
bool face_less(std::uint32_t a, std::uint32_t b) {
  const int pa = mask_size(a);
  const int pb = mask_size(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    int m, std::vector<std::uint32_t> maximal) {
  if (m < 0 || m > 31) {
    throw DimensionMismatch("ground set size must be between 0 and 31");
  }
  SimplicialComplex out;
  out.m_ = m;
  std::set<std::uint32_t> closure;
  for (std::uint32_t f : maximal) {
    if ((f & ~full_mask(m)) != 0) {
      throw InvalidFace("face uses vertices outside the ground set");
    }
    // All subsets of f, including f and the empty face.
    std::uint32_t sub = f;
    while (true) {
      closure.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  out.faces_.assign(closure.begin(), closure.end());
  std::sort(out.faces_.begin(), out.faces_.end(), face_less);
  for (std::uint32_t f : out.faces_) {
    bool is_max = true;
    for (std::uint32_t g : out.faces_) {
      if (g != f && (g & f) == f) {
        is_max = false;
        break;
      }
    }
    if (is_max) out.maximal_.push_back(f);
  }
  return out;
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return -2;
  return mask_size(faces_.back()) - 1;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
  for (int v : face) {
    if (v < 0 || v >= m_) return false;
  }
  return contains(indices_to_mask(face));
}

std::vector<int> SimplicialComplex::f_vector() const {
  if (faces_.empty()) return {};
  std::vector<int> f(mask_size(faces_.back()) + 1, 0);
  for (std::uint32_t face : faces_) ++f[mask_size(face)];
  return f;
}

SimplicialComplex SimplicialComplex::link_of(std::uint32_t sigma) const {
  if (!contains(sigma)) throw InvalidFace("link of a non-face");
  std::vector<std::uint32_t> gens;
  for (std::uint32_t f : maximal_) {
    if ((f & sigma) == sigma) gens.push_back(f & ~sigma);
  }
  return from_maximal(m_, std::move(gens));
}

SimplicialComplex SimplicialComplex::star_of(std::uint32_t sigma) const {
  if (!contains(sigma)) throw InvalidFace("star of a non-face");
  std::vector<std::uint32_t> gens;
  for (std::uint32_t f : maximal_) {
    if ((f & sigma) == sigma) gens.push_back(f);
  }
  return from_maximal(m_, std::move(gens));
}

SimplicialComplex build_complex(const Configuration& conf) {
  const AdmissibilityReport report = admissibility(conf);
  if (!report.admissible) {
    throw NotAdmissible(report.siegel
                            ? "configuration is not weakly hyperbolic"
                            : "origin is not in the convex hull");
  }
  const int m = conf.m();
  const int max_card = conf.gale_dim();  // |sigma| <= m - d - 1

  // Level-by-level growth.  A face of cardinality k is generated from its
  // prefix (drop the largest vertex), which is itself a face because the
  // complex is downward closed; candidates whose other subsets are missing
  // are pruned before the exact hull test.
  std::vector<std::uint32_t> prev{0};
  std::vector<std::uint32_t> maximal;
  for (int k = 1; k <= max_card; ++k) {
    std::vector<std::uint32_t> level;
    std::set<std::uint32_t> extended;  // members of prev that grew
    for (std::uint32_t tau : prev) {
      const int lo = tau == 0 ? 0 : 32 - std::countl_zero(tau);
      for (int v = lo; v < m; ++v) {
        const std::uint32_t sigma = tau | (1u << v);
        bool closed = true;
        for (std::uint32_t rest = sigma; rest != 0 && closed;) {
          const std::uint32_t low = rest & (~rest + 1);
          if (!std::binary_search(prev.begin(), prev.end(), sigma & ~low)) {
            closed = false;
          }
          rest &= ~low;
        }
        if (!closed) continue;
        const std::vector<int> complement =
            mask_to_indices(full_mask(m) & ~sigma);
        if (origin_in_hull(conf.submatrix(complement)).has_value()) {
          level.push_back(sigma);
          for (std::uint32_t rest = sigma; rest != 0;) {
            const std::uint32_t low = rest & (~rest + 1);
            extended.insert(sigma & ~low);
            rest &= ~low;
          }
        }
      }
    }
    std::sort(level.begin(), level.end());
    for (std::uint32_t tau : prev) {
      if (extended.find(tau) == extended.end()) maximal.push_back(tau);
    }
    prev = std::move(level);
    if (prev.empty()) break;
  }
  maximal.insert(maximal.end(), prev.begin(), prev.end());
  return SimplicialComplex::from_maximal(m, std::move(maximal));
}

bool verify_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                        const std::vector<int>& phi) {
  const int m = a.ground_size();
  if (b.ground_size() != m || static_cast<int>(phi.size()) != m) {
    throw DimensionMismatch("relabelling must cover the whole ground set");
  }
  std::vector<bool> hit(m, false);
  for (int v : phi) {
    if (v < 0 || v >= m || hit[v]) {
      throw DimensionMismatch("relabelling is not a permutation");
    }
    hit[v] = true;
  }
  std::vector<std::uint32_t> mapped;
  mapped.reserve(a.faces().size());
  for (std::uint32_t f : a.faces()) {
    std::uint32_t img = 0;
    for (int i = 0; i < m; ++i) {
      if (f & (1u << i)) img |= (1u << phi[i]);
    }
    mapped.push_back(img);
  }
  std::sort(mapped.begin(), mapped.end(), face_less);
  return mapped == b.faces();
}

PolytopeRealization realize_polytope(const Configuration& conf,
                                     const SimplicialComplex& complex) {
  PolytopeRealization out;
  out.gale = gale_dual(conf);
  out.facets = facet_enumeration(out.gale);
  const int m = conf.m();
  if (complex.ground_size() != m) {
    out.detail = "complex ground set does not match the configuration";
    return out;
  }

  if (conf.gale_dim() == 0) {
    // conv{V_i} is the point of R^0; its boundary is empty and must realize
    // the complex { empty face }.
    if (complex.faces() != std::vector<std::uint32_t>{0}) {
      out.detail = "expected the complex with only the empty face";
      return out;
    }
    out.boundary_matches = true;
    return out;
  }

  std::vector<int> singleton_vertices;
  for (int i = 0; i < m; ++i) {
    if (complex.contains(1u << i)) singleton_vertices.push_back(i);
  }
  if (out.facets.vertices != singleton_vertices) {
    out.detail = "polytope vertices differ from the singleton faces";
    return out;
  }
  if (!out.facets.boundary.empty()) {
    out.detail = "a non-vertex point lies on the boundary";
    return out;
  }
  std::set<std::uint32_t> facet_sets;
  for (const Facet& f : out.facets.facets) {
    facet_sets.insert(indices_to_mask(f.points));
  }
  const std::set<std::uint32_t> max_faces(complex.maximal_faces().begin(),
                                          complex.maximal_faces().end());
  if (facet_sets != max_faces) {
    out.detail = "facet point sets differ from the maximal faces";
    return out;
  }
  out.boundary_matches = true;
  return out;
}

}  // namespace siegel
