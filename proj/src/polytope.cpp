#include "qpot/polytope.hpp"

#include <algorithm>
#include <set>

#include "qpot/error.hpp"
#include "qpot/lattice.hpp"
#include "qpot/linprog.hpp"

namespace qpot {

namespace {

constexpr int kMaxDim = 8;
constexpr int kMaxFacets = 24;

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Exact solve of a square rational system; empty result if singular.
bool solve_square(std::vector<RatVec> a, RatVec b, RatVec& out) {
  size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  out.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
  return true;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  size_t n = pts[0].size();
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(n);
    for (size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  // rational row reduction
  int rank = 0;
  for (size_t c = 0; c < n && rank < static_cast<int>(diffs.size()); ++c) {
    int p = -1;
    for (size_t i = rank; i < diffs.size(); ++i)
      if (diffs[i][c] != 0) {
        p = static_cast<int>(i);
        break;
      }
    if (p < 0) continue;
    std::swap(diffs[rank], diffs[p]);
    for (size_t i = rank + 1; i < diffs.size(); ++i) {
      if (diffs[i][c] == 0) continue;
      Rat f = diffs[i][c] / diffs[rank][c];
      for (size_t j = c; j < n; ++j) diffs[i][j] -= f * diffs[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Primitive integer vector spanning the rational line `v`.
IntVec primitive_direction(const RatVec& v) {
  Int l(1);
  for (const auto& q : v) l = boost::multiprecision::lcm(l, rat_den(q));
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i] * Rat(l));
  Int g = vec_gcd(w);
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

bool subset_next(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string format_point(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rat_to_string(v[i]);
  return s + ")";
}

Polytope Polytope::from_facets(int dim, std::vector<FacetIneq> facets, bool allow_unbounded) {
  if (dim < 1 || dim > kMaxDim)
    throw Error("DeskScale", "dimension " + std::to_string(dim) + " outside supported range");
  if (static_cast<int>(facets.size()) > kMaxFacets)
    throw Error("DeskScale", "facet count exceeds desk scale");
  for (const auto& f : facets) {
    if (static_cast<int>(f.normal.size()) != dim)
      throw Error("DimensionMismatch", "facet normal length does not match dimension");
    if (is_zero(f.normal)) throw Error("InvalidNormal", "zero facet normal");
    if (vec_gcd(f.normal) != 1)
      throw Error("InvalidNormal", "facet normal is not primitive");
  }
  Polytope p;
  p.dim_ = dim;
  p.facets_ = std::move(facets);
  p.allow_unbounded_ = allow_unbounded;
  // Values are immutable after construction, so the vertex set (or the
  // reason there is none) is fixed here.
  try {
    p.compute_vertices();
  } catch (const Error& e) {
    if (!allow_unbounded) throw;
    p.vertex_error_kind_ = e.kind();
    std::string w = e.what();
    std::string prefix = e.kind() + ": ";
    p.vertex_error_msg_ = w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
  }
  return p;
}

const std::vector<RatVec>& Polytope::vertices() const {
  if (has_vertices_) return vertices_;
  throw Error(vertex_error_kind_, vertex_error_msg_);
}

void Polytope::compute_vertices() {
  int k = static_cast<int>(facets_.size());

  // Recession cone must be {0}: normals span, and no direction satisfies
  // every inequality weakly.
  std::vector<IntVec> normal_rows;
  for (const auto& f : facets_) normal_rows.push_back(f.normal);
  IntMatrix nm = normal_rows.empty() ? IntMatrix(0, dim_) : IntMatrix::from_rows(normal_rows);
  if (normal_rows.empty() || nm.rank() < dim_) throw Error("Unbounded", "facet normals do not span");
  int sub = dim_ - 1;
  std::vector<int> idx(sub);
  for (int i = 0; i < sub; ++i) idx[i] = i;
  bool more = k >= sub;
  while (more) {
    std::vector<IntVec> rows;
    for (int i : idx) rows.push_back(facets_[i].normal);
    std::vector<IntVec> null =
        rows.empty() ? std::vector<IntVec>{IntVec(dim_, Int(0))} : kernel_basis(IntMatrix::from_rows(rows));
    if (rows.empty()) null[0][0] = 1;
    if (null.size() == 1) {
      for (int side = 0; side < 2; ++side) {
        IntVec d = null[0];
        if (side) for (auto& x : d) x = -x;
        bool ray = true;
        for (const auto& f : facets_)
          if (dot(f.normal, d) < 0) {
            ray = false;
            break;
          }
        if (ray) throw Error("Unbounded", "recession direction " + format_point([&] {
                               RatVec r(d.size());
                               for (size_t i = 0; i < d.size(); ++i) r[i] = Rat(d[i]);
                               return r;
                             }()));
      }
    }
    more = subset_next(idx, k);
    if (sub == 0) break;
  }

  // Vertices: intersections of dim facet hyperplanes satisfying everything.
  std::set<std::vector<std::string>> seen;
  std::vector<RatVec> verts;
  std::vector<int> vidx(dim_);
  for (int i = 0; i < dim_; ++i) vidx[i] = i;
  bool vmore = k >= dim_;
  while (vmore) {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (int i : vidx) {
      RatVec r(dim_);
      for (int j = 0; j < dim_; ++j) r[j] = Rat(facets_[i].normal[j]);
      rows.push_back(std::move(r));
      rhs.push_back(facets_[i].offset);
    }
    RatVec sol;
    if (solve_square(rows, rhs, sol) && contains(sol)) {
      std::vector<std::string> key;
      for (const auto& q : sol) key.push_back(rat_to_string(q));
      if (seen.insert(key).second) verts.push_back(sol);
    }
    vmore = subset_next(vidx, k);
  }
  if (verts.empty()) throw Error("Empty", "polytope has no vertices");
  std::sort(verts.begin(), verts.end(), lex_less);
  if (affine_rank(verts) < dim_)
    throw Error("NotFullDimensional", "vertex set spans a proper affine subspace");
  vertices_ = std::move(verts);
  has_vertices_ = true;
}

bool Polytope::contains(const RatVec& point) const {
  for (const auto& f : facets_) {
    Rat v(0);
    for (int j = 0; j < dim_; ++j) v += Rat(f.normal[j]) * point[j];
    if (v < f.offset) return false;
  }
  return true;
}

RatVec Polytope::interior_point() const {
  const auto& vs = vertices();
  RatVec c(dim_, Rat(0));
  for (const auto& v : vs)
    for (int j = 0; j < dim_; ++j) c[j] += v[j];
  for (auto& x : c) x /= Rat(static_cast<long>(vs.size()));
  return c;
}

std::vector<Face> Polytope::enumerate_faces() const {
  const auto& vs = vertices();
  int k = static_cast<int>(facets_.size());
  int nv = static_cast<int>(vs.size());

  std::vector<std::set<int>> on_facet(k);
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < nv; ++v) {
      Rat val(0);
      for (int j = 0; j < dim_; ++j) val += Rat(facets_[i].normal[j]) * vs[v][j];
      if (val == facets_[i].offset) on_facet[i].insert(v);
    }

  std::set<int> all;
  for (int v = 0; v < nv; ++v) all.insert(v);
  std::set<std::set<int>> sets{all};
  std::vector<std::set<int>> queue{all};
  while (!queue.empty()) {
    std::set<int> s = queue.back();
    queue.pop_back();
    for (int i = 0; i < k; ++i) {
      std::set<int> t;
      std::set_intersection(s.begin(), s.end(), on_facet[i].begin(), on_facet[i].end(),
                            std::inserter(t, t.begin()));
      if (!t.empty() && sets.insert(t).second) queue.push_back(t);
    }
  }

  std::vector<Face> faces;
  for (const auto& s : sets) {
    Face f;
    for (int i = 0; i < k; ++i) {
      bool active = true;
      for (int v : s)
        if (!on_facet[i].count(v)) {
          active = false;
          break;
        }
      if (active) f.active_facets.push_back(i);
    }
    for (int v : s) f.vertices.push_back(vs[v]);
    std::sort(f.vertices.begin(), f.vertices.end(), lex_less);
    f.dim = affine_rank(f.vertices);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.active_facets.size() != b.active_facets.size())
      return a.active_facets.size() < b.active_facets.size();
    return a.active_facets < b.active_facets;
  });
  return faces;
}

bool project_face_contains(const Face& face, const IntMatrix& a, const RatVec& c,
                           const RatVec& level) {
  if (static_cast<size_t>(a.rows()) != c.size() || c.size() != level.size())
    throw Error("DimensionMismatch", "action rows, offsets and level must agree");
  std::vector<RatVec> projected;
  for (const auto& v : face.vertices) {
    if (static_cast<int>(v.size()) != a.cols())
      throw Error("DimensionMismatch", "action matrix columns must match polytope dimension");
    RatVec w(a.rows(), Rat(0));
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) w[i] += Rat(a.at(i, j)) * v[j];
      w[i] += c[i];
    }
    projected.push_back(std::move(w));
  }
  return in_convex_hull(projected, level);
}

Polytope hull_of_points(int dim, const std::vector<RatVec>& points) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw Error("DimensionMismatch", "point length does not match dimension");
  if (affine_rank(points) < dim)
    throw Error("DegenerateHull", "points do not affinely span the ambient space");

  int n = static_cast<int>(points.size());
  std::set<std::pair<std::vector<std::string>, std::string>> seen;
  std::vector<FacetIneq> facets;
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  bool more = n >= dim;
  while (more) {
    std::vector<RatVec> sub;
    for (int i : idx) sub.push_back(points[i]);
    if (affine_rank(sub) == dim - 1) {
      // hyperplane normal: rational kernel of the difference rows
      std::vector<IntVec> diff_rows;
      for (size_t i = 1; i < sub.size(); ++i) {
        RatVec d(dim);
        for (int j = 0; j < dim; ++j) d[j] = sub[i][j] - sub[0][j];
        diff_rows.push_back(primitive_direction(d));
      }
      auto nulls = kernel_basis(IntMatrix::from_rows(diff_rows));
      if (nulls.size() == 1) {
        IntVec normal = nulls[0];
        Rat offset(0);
        for (int j = 0; j < dim; ++j) offset += Rat(normal[j]) * sub[0][j];
        bool all_ge = true, all_le = true;
        for (const auto& p : points) {
          Rat v(0);
          for (int j = 0; j < dim; ++j) v += Rat(normal[j]) * p[j];
          if (v < offset) all_ge = false;
          if (v > offset) all_le = false;
        }
        if (all_ge || all_le) {
          if (all_le && !all_ge) {
            for (auto& x : normal) x = -x;
            offset = -offset;
          }
          std::vector<std::string> nk;
          for (const auto& x : normal) nk.push_back(x.str());
          if (seen.insert({nk, rat_to_string(offset)}).second)
            facets.push_back(FacetIneq{normal, offset});
        }
      }
    }
    more = subset_next(idx, n);
  }
  return Polytope::from_facets(dim, std::move(facets));
}

Polytope dual_newton_polytope(const Polytope& p) {
  std::vector<RatVec> pts;
  for (const auto& f : p.facets()) {
    RatVec v(p.dim());
    for (int j = 0; j < p.dim(); ++j) v[j] = Rat(f.normal[j]);
    pts.push_back(std::move(v));
  }
  if (affine_rank(pts) < p.dim())
    throw Error("DegenerateHull", "facet normals do not affinely span");
  return hull_of_points(p.dim(), pts);
}

std::vector<IntVec> lattice_points(const Polytope& p) {
  const auto& vs = p.vertices();
  int dim = p.dim();
  IntVec lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    Rat mn = vs[0][j], mx = vs[0][j];
    for (const auto& v : vs) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn);
    hi[j] = rat_floor(mx);
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  for (;;) {
    bool inside = true;
    for (const auto& f : p.facets()) {
      Rat v(0);
      for (int j = 0; j < dim; ++j) v += Rat(f.normal[j]) * Rat(cur[j]);
      if (v < f.offset) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(cur);
    int j = dim - 1;
    while (j >= 0) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> face_stabilizer_lattice(const Polytope& p, const Face& face) {
  std::vector<IntVec> active;
  for (int i : face.active_facets) active.push_back(p.facets()[i].normal);
  if (active.empty()) return {};
  return lattice_saturation(active, p.dim());
}

}  // namespace qpot
