// Test-side helpers: seeded random generators and independent oracles.
// The oracles share no code with the library: membership is decided by
// Caratheodory enumeration (not the simplex), lattice points by a separately
// coded scan, Smith diagonals by minor gcds with Laplace determinants.
#pragma once

#include <random>

#include "qpot/error.hpp"
#include "qpot/git_reduction.hpp"
#include "qpot/lattice.hpp"
#include "qpot/novikov.hpp"
#include "qpot/polytope.hpp"

namespace qpot_test {

using namespace qpot;
using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, int max_dim = 6, long lo = -5, long hi = 5) {
  int r = static_cast<int>(rand_int(rng, 1, max_dim));
  int c = static_cast<int>(rand_int(rng, 1, max_dim));
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rand_int(rng, lo, hi);
  return m;
}

inline IntMatrix random_unimodular(Rng& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  int ops = 3 * n + static_cast<int>(rand_int(rng, 0, n));
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rand_int(rng, 0, n - 1));
    int j = static_cast<int>(rand_int(rng, 0, n - 1));
    switch (rand_int(rng, 0, 2)) {
      case 0:
        if (i != j) u.add_row(i, j, Int(rand_int(rng, -2, 2)));
        break;
      case 1:
        u.swap_rows(i, j);
        break;
      default:
        u.negate_row(i);
        break;
    }
  }
  return u;
}

inline AffineFunctional random_affine(Rng& rng, const std::vector<std::string>& params) {
  AffineFunctional f{Rat(rand_int(rng, -4, 4), rand_int(rng, 1, 3))};
  for (const auto& p : params)
    if (rand_int(rng, 0, 2) != 0)
      f.set_coefficient(p, Rat(rand_int(rng, -3, 3), rand_int(rng, 1, 2)));
  return f;
}

inline Potential random_potential(Rng& rng, bool allow_duplicates = true) {
  Potential p;
  int nv = static_cast<int>(rand_int(rng, 1, 3));
  int np = static_cast<int>(rand_int(rng, 1, 3));
  for (int i = 1; i <= nv; ++i) p.variables.push_back("y" + std::to_string(i));
  for (int i = 1; i <= np; ++i) p.parameters.push_back("u" + std::to_string(i));
  int nt = static_cast<int>(rand_int(rng, 0, 6));
  for (int t = 0; t < nt; ++t) {
    NovikovTerm term;
    term.coefficient = Rat(rand_int(rng, -3, 3));
    for (int i = 0; i < nv; ++i) term.exponents.push_back(rand_int(rng, -3, 3));
    term.area = random_affine(rng, p.parameters);
    term.class_tags = {"c" + std::to_string(t)};
    p.terms.push_back(term);
    if (allow_duplicates && rand_int(rng, 0, 3) == 0) {
      NovikovTerm dup = p.terms.back();
      dup.coefficient = Rat(rand_int(rng, -3, 3));
      dup.class_tags = {"c" + std::to_string(t) + "b"};
      p.terms.push_back(dup);
    }
  }
  return p;
}

// Bounded full-dimensional random polytope as a hull of integer points.
inline Polytope random_polytope(Rng& rng, int dim, long coord = 4) {
  for (;;) {
    int npts = dim + 2 + static_cast<int>(rand_int(rng, 0, dim >= 4 ? 1 : 3));
    std::vector<RatVec> pts;
    for (int i = 0; i < npts; ++i) {
      RatVec v(dim);
      for (int j = 0; j < dim; ++j) v[j] = Rat(rand_int(rng, -coord, coord));
      pts.push_back(std::move(v));
    }
    try {
      Polytope p = hull_of_points(dim, pts);
      if (static_cast<int>(p.facets().size()) <= 20) return p;
    } catch (const Error&) {
      // degenerate sample; draw again
    }
  }
}

// ---- independent oracles -------------------------------------------------

// Exact barycentric solve over a point subset; true iff q is a nonnegative
// affine combination of the subset.
inline bool barycentric_contains(const std::vector<RatVec>& sub, const RatVec& q) {
  size_t k = sub.size(), r = q.size();
  std::vector<RatVec> a(r + 1, RatVec(k + 1, Rat(0)));
  for (size_t d = 0; d < r; ++d) {
    for (size_t i = 0; i < k; ++i) a[d][i] = sub[i][d];
    a[d][k] = q[d];
  }
  for (size_t i = 0; i < k; ++i) a[r][i] = 1;
  a[r][k] = 1;
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (size_t c = 0; c < k && rank < a.size(); ++c) {
    size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[rank][c];
      for (size_t j = c; j <= k; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (size_t i = rank; i < a.size(); ++i)
    if (a[i][k] != 0) return false;  // inconsistent
  if (rank < k) return false;        // affinely dependent subset; skip
  for (size_t i = 0; i < rank; ++i)
    if (a[i][k] / a[i][pivot_col[i]] < 0) return false;
  return true;
}

// Caratheodory: q lies in conv(points) iff some subset of size <= r+1 works.
inline bool oracle_hull_contains(const std::vector<RatVec>& points, const RatVec& q) {
  size_t r = q.size();
  size_t maxk = std::min(points.size(), r + 1);
  std::vector<int> idx;
  for (size_t k = 1; k <= maxk; ++k) {
    idx.assign(k, 0);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      std::vector<RatVec> sub;
      for (int i : idx) sub.push_back(points[i]);
      if (barycentric_contains(sub, q)) return true;
      int n = static_cast<int>(points.size());
      int kk = static_cast<int>(k);
      int pos = kk - 1;
      while (pos >= 0 && idx[pos] == n - (kk - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

// Separately coded integer scan: scaled integer comparisons instead of
// rational ones, bounds derived by explicit integer division.
inline std::vector<IntVec> oracle_lattice_points(const Polytope& p) {
  const auto& vs = p.vertices();
  int dim = p.dim();
  std::vector<long long> lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    Rat mn = vs[0][j], mx = vs[0][j];
    for (const auto& v : vs) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    Int num = rat_num(mn), den = rat_den(mn);
    Int fl = num / den;
    if (num < 0 && fl * den != num) fl -= 1;
    lo[j] = (fl + (fl * den == num ? 0 : 1)).convert_to<long long>();
    num = rat_num(mx);
    den = rat_den(mx);
    Int fh = num / den;
    if (num < 0 && fh * den != num) fh -= 1;
    hi[j] = fh.convert_to<long long>();
  }
  std::vector<IntVec> out;
  std::vector<long long> cur(lo);
  for (;;) {
    bool ok = true;
    for (const auto& f : p.facets()) {
      Int lhs(0);
      for (int j = 0; j < dim; ++j) lhs += f.normal[j] * Int(cur[j]);
      // lhs >= offset  <=>  lhs * den >= num   (den > 0)
      if (lhs * rat_den(f.offset) < rat_num(f.offset)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      IntVec v(dim);
      for (int j = 0; j < dim; ++j) v[j] = cur[j];
      out.push_back(v);
    }
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

// Laplace-expansion determinant, independent of the Bareiss routine.
inline Int laplace_det(const std::vector<IntVec>& rows) {
  size_t n = rows.size();
  if (n == 0) return Int(1);
  if (n == 1) return rows[0][0];
  Int sum(0);
  for (size_t c = 0; c < n; ++c) {
    if (rows[0][c] == 0) continue;
    std::vector<IntVec> minor;
    for (size_t i = 1; i < n; ++i) {
      IntVec r;
      for (size_t j = 0; j < n; ++j)
        if (j != c) r.push_back(rows[i][j]);
      minor.push_back(std::move(r));
    }
    Int term = rows[0][c] * laplace_det(minor);
    sum += (c % 2 == 0) ? term : Int(-term);
  }
  return sum;
}

// Invariant factors by minor gcds: d1*...*dk = gcd of all k x k minors.
inline IntVec oracle_invariant_factors(const IntMatrix& m) {
  int n = std::min(m.rows(), m.cols());
  IntVec products;  // products[k-1] = gcd of k x k minors
  for (int k = 1; k <= n; ++k) {
    Int g(0);
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    auto next = [](std::vector<int>& idx, int limit) {
      int kk = static_cast<int>(idx.size());
      for (int i = kk - 1; i >= 0; --i)
        if (idx[i] < limit - (kk - i)) {
          ++idx[i];
          for (int j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
      return false;
    };
    for (;;) {
      for (int i = 0; i < k; ++i) ci[i] = i;
      for (;;) {
        std::vector<IntVec> sub;
        for (int i : ri) {
          IntVec r;
          for (int j : ci) r.push_back(m.at(i, j));
          sub.push_back(std::move(r));
        }
        g = boost::multiprecision::gcd(g, laplace_det(sub));
        if (!next(ci, m.cols())) break;
      }
      if (!next(ri, m.rows())) break;
    }
    if (g == 0) break;
    products.push_back(g);
  }
  IntVec factors;
  for (size_t k = 0; k < products.size(); ++k)
    factors.push_back(k == 0 ? products[0] : Int(products[k] / products[k - 1]));
  return factors;
}

}  // namespace qpot_test
