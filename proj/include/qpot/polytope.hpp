#pragma once

#include <string>
#include <vector>

#include "qpot/intmatrix.hpp"

namespace qpot {

// One inequality <normal, u> >= offset with a primitive integer normal.
struct FacetIneq {
  IntVec normal;
  Rat offset;
};

struct Face {
  std::vector<int> active_facets;   // sorted facet indices attaining equality
  std::vector<RatVec> vertices;     // sorted lexicographically
  int dim = -1;                     // affine dimension of the vertex set
};

// Facet-presented rational polytope at desk scale (dim <= 8, facets <= 24).
// Bounded full-dimensional by construction unless allow_unbounded is set,
// in which case only the facet list is usable.
class Polytope {
 public:
  static Polytope from_facets(int dim, std::vector<FacetIneq> facets,
                              bool allow_unbounded = false);

  int dim() const { return dim_; }
  const std::vector<FacetIneq>& facets() const { return facets_; }
  bool unbounded_allowed() const { return allow_unbounded_; }

  // Errors: Unbounded / Empty / NotFullDimensional.
  const std::vector<RatVec>& vertices() const;
  std::vector<Face> enumerate_faces() const;

  bool contains(const RatVec& point) const;
  RatVec interior_point() const;  // vertex centroid

 private:
  Polytope() = default;
  void compute_vertices();
  int dim_ = 0;
  std::vector<FacetIneq> facets_;
  bool allow_unbounded_ = false;
  bool has_vertices_ = false;
  std::string vertex_error_kind_;
  std::string vertex_error_msg_;
  std::vector<RatVec> vertices_;
};

// True iff level is in {A u + c : u in conv(face vertices)}. Exact.
bool project_face_contains(const Face& face, const IntMatrix& a, const RatVec& c,
                           const RatVec& level);

// conv of the primitive inward facet normals, as a facet presentation.
// Throws Error("DegenerateHull") when the normals do not affinely span.
Polytope dual_newton_polytope(const Polytope& p);

// Facet presentation of the convex hull of a full-dimensional point set.
Polytope hull_of_points(int dim, const std::vector<RatVec>& points);

// All integer points of a bounded polytope, sorted lexicographically.
std::vector<IntVec> lattice_points(const Polytope& p);

// Basis of the saturation of the span of the normals active on the face.
std::vector<IntVec> face_stabilizer_lattice(const Polytope& p, const Face& face);

std::string format_point(const RatVec& v);

}  // namespace qpot
