#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/configuration.hpp"
#include "siegel/geometry.hpp"

namespace siegel {

// Finite abstract simplicial complex on the ground set {0..m-1}, stored
// downward closed.  Faces are bitmasks, which caps the ground set at 31
// vertices.  The face list is ordered by (cardinality, numeric value), so
// iteration order is deterministic.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of the given faces; duplicates and non-maximal entries
  // in `maximal` are tolerated.  Passing no faces yields the void complex.
  static SimplicialComplex from_maximal(int m,
                                        std::vector<std::uint32_t> maximal);

  int ground_size() const { return m_; }
  // Largest face cardinality minus one: -1 when only the empty face is
  // present, -2 for the void complex.
  int dim() const;
  bool contains(std::uint32_t face) const;
  bool contains(const std::vector<int>& face) const;
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  const std::vector<std::uint32_t>& maximal_faces() const { return maximal_; }
  // f[k] = number of faces of cardinality k (f[0] = 1 for the empty face).
  std::vector<int> f_vector() const;

  // Link of a face: { tau : tau disjoint from sigma, tau union sigma a
  // face }.  Throws InvalidFace when sigma is not a face.
  SimplicialComplex link_of(std::uint32_t sigma) const;
  // Star of a face: the subcomplex generated by the maximal faces
  // containing sigma.  Throws InvalidFace when sigma is not a face.
  SimplicialComplex star_of(std::uint32_t sigma) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint32_t> faces_;
  std::vector<std::uint32_t> maximal_;
};

// The complex K(A) = { sigma : 0 in conv A(complement of sigma) } of an
// admissible configuration (throws NotAdmissible otherwise).  Built level by
// level with exact hull tests; downward closure makes the level pruning
// exact, and weak hyperbolicity caps face cardinality at m - d - 1.
SimplicialComplex build_complex(const Configuration& conf);

// True when relabelling vertex i of `a` as phi[i] maps the faces of `a`
// exactly onto the faces of `b`.
bool verify_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                        const std::vector<int>& phi);

// Geometric realization of the complex as the boundary of the Gale polytope
// conv{V_1..V_m}.
struct PolytopeRealization {
  RatMatrix gale;            // n x m Gale dual, columns are the points
  FacetEnumeration facets;   // exact facet structure of conv{V_i}
  bool boundary_matches = false;
  std::string detail;        // human-readable mismatch reason when false
};

// Checks that the boundary complex of conv{V_i} realizes `complex`:
// polytope vertices are exactly the singleton faces, facet point sets are
// exactly the maximal faces, and every non-vertex point is strictly
// interior.  For m = d + 1 the polytope lives in R^0 and the check demands
// the complex be { empty face } with every point interior.
PolytopeRealization realize_polytope(const Configuration& conf,
                                     const SimplicialComplex& complex);

}  // namespace siegel
