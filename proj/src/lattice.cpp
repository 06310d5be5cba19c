#include "qpot/lattice.hpp"

#include <algorithm>

#include "qpot/error.hpp"

namespace qpot {

using boost::multiprecision::abs;

IntVec SmithForm::invariant_factors() const {
  IntVec f;
  int n = std::min(D.rows(), D.cols());
  for (int i = 0; i < n; ++i)
    if (D.at(i, i) != 0) f.push_back(D.at(i, i));
  return f;
}

int SmithForm::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

// Position of the nonzero entry of smallest magnitude in D[t.., t..].
bool find_pivot(const IntMatrix& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best(0);
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("DimensionMismatch", "empty matrix");
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  int n = std::min(d.rows(), d.cols());
  for (int t = 0; t < n; ++t) {
    int pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    s.U.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.V.swap_cols(t, pj);
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.add_row(i, t, -q);
          s.U.add_row(i, t, -q);
        }
        if (d.at(i, t) != 0) {  // remainder became the smaller pivot
          d.swap_rows(t, i);
          s.U.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.add_col(j, t, -q);
          s.V.add_col(j, t, -q);
        }
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          s.V.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // Divisibility: d_t must divide every remaining entry.
      bool fixed = true;
      for (int i = t + 1; i < d.rows() && fixed; ++i)
        for (int j = t + 1; j < d.cols() && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, Int(1));
            s.U.add_row(t, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm h{IntMatrix::identity(m.rows()), m, {}};
  IntMatrix& a = h.H;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    // gcd-reduce the column below `row` until a single nonzero remains.
    for (;;) {
      int p = -1;
      Int best(0);
      for (int i = row; i < a.rows(); ++i) {
        if (a.at(i, col) == 0) continue;
        Int v = abs(a.at(i, col));
        if (p < 0 || v < best) {
          p = i;
          best = v;
        }
      }
      if (p < 0) break;
      a.swap_rows(row, p);
      h.U.swap_rows(row, p);
      bool clean = true;
      for (int i = row + 1; i < a.rows(); ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(row, col);
        a.add_row(i, row, -q);
        h.U.add_row(i, row, -q);
        if (a.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(row, col) == 0) continue;
    if (a.at(row, col) < 0) {
      a.negate_row(row);
      h.U.negate_row(row);
    }
    for (int i = 0; i < row; ++i) {
      Int q = a.at(i, col) / a.at(row, col);
      if (a.at(i, col) - q * a.at(row, col) < 0) q -= 1;  // floor
      if (q != 0) {
        a.add_row(i, row, -q);
        h.U.add_row(i, row, -q);
      }
    }
    h.pivot_cols.push_back(col);
    ++row;
  }
  return h;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  SmithForm s = smith_normal_form(m);
  int r = s.rank();
  std::vector<IntVec> gens;
  for (int j = r; j < m.cols(); ++j) gens.push_back(s.V.col(j));
  return lattice_canonical_basis(gens, m.cols());
}

std::vector<IntVec> lattice_canonical_basis(const std::vector<IntVec>& gens, int m) {
  if (gens.empty()) return {};
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != m)
      throw Error("DimensionMismatch", "generator length mismatch");
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(gens));
  std::vector<IntVec> basis;
  for (size_t i = 0; i < h.pivot_cols.size(); ++i) basis.push_back(h.H.row(static_cast<int>(i)));
  return basis;
}

bool lattice_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int m) {
  return lattice_canonical_basis(a, m) == lattice_canonical_basis(b, m);
}

bool lattice_is_saturated(const std::vector<IntVec>& gens, int m) {
  if (gens.empty()) return true;
  SmithForm s = smith_normal_form(IntMatrix::from_rows(gens));
  (void)m;
  for (const Int& f : s.invariant_factors())
    if (f != 1) return false;
  return true;
}

std::vector<IntVec> lattice_saturation(const std::vector<IntVec>& gens, int m) {
  if (gens.empty()) return {};
  // sat(L) is the double kernel: vectors orthogonal to everything orthogonal to L.
  std::vector<IntVec> orth = kernel_basis(IntMatrix::from_rows(gens));
  if (orth.empty()) {
    // full rank: saturation is all of Z^m
    std::vector<IntVec> full;
    for (int i = 0; i < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      full.push_back(e);
    }
    return full;
  }
  return kernel_basis(IntMatrix::from_rows(orth));
}

std::vector<IntVec> lattice_intersection(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b, int m) {
  if (a.empty() || b.empty()) return {};
  // x in L_a ∩ L_b  <=>  x = s·A = t·B; solve (s, t) with s·A - t·B = 0.
  std::vector<IntVec> stacked;
  for (const auto& r : a) stacked.push_back(r);
  for (const auto& r : b) {
    IntVec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    stacked.push_back(neg);
  }
  IntMatrix st = IntMatrix::from_rows(stacked);  // (ra+rb) x m
  std::vector<IntVec> coeffs = kernel_basis(st.transpose());
  std::vector<IntVec> gens;
  for (const auto& c : coeffs) {
    IntVec x(m, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (int j = 0; j < m; ++j) x[j] += c[i] * a[i][j];
    if (!is_zero(x)) gens.push_back(x);
  }
  return lattice_canonical_basis(gens, m);
}

namespace {

// det of K restricted to the given columns, |cols| == K.rows().
Int column_minor(const IntMatrix& k, const std::vector<int>& cols) {
  IntMatrix sub(k.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < k.rows(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub.at(i, static_cast<int>(j)) = k.at(i, cols[j]);
  return sub.determinant();
}

bool next_subset(std::vector<int>& idx, int n) {
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

AdaptedBasis adapted_basis(const std::vector<IntVec>& kernel, int m) {
  int r = static_cast<int>(kernel.size());
  int s = m - r;
  for (const auto& k : kernel)
    if (static_cast<int>(k.size()) != m)
      throw Error("DimensionMismatch", "kernel vector length mismatch");
  if (s < 0) throw Error("InvalidKernel", "more kernel vectors than ambient rank");

  if (r > 0) {
    IntMatrix km = IntMatrix::from_rows(kernel);
    SmithForm sf = smith_normal_form(km);
    if (sf.rank() < r) throw Error("InvalidKernel", "kernel vectors are linearly dependent");
    IntVec torsion;
    for (const Int& f : sf.invariant_factors())
      if (f != 1) torsion.push_back(f);
    if (!torsion.empty()) {
      std::string msg = "kernel lattice is not primitive; torsion diagonal (";
      for (size_t i = 0; i < torsion.size(); ++i)
        msg += (i ? "," : "") + torsion[i].str();
      msg += ")";
      throw NotSaturatedError(msg, torsion);
    }
  }

  std::vector<IntVec> complement;
  if (s > 0 && r == 0) {
    for (int i = 0; i < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      complement.push_back(e);
    }
  } else if (s > 0) {
    IntMatrix km = IntMatrix::from_rows(kernel);
    // Lex-first coordinate subset J whose complementary minor of K is ±1;
    // then {e_j : j in J} extends the kernel to a unimodular basis.
    std::vector<int> j_set(s);
    for (int i = 0; i < s; ++i) j_set[i] = i;
    bool found = false;
    do {
      std::vector<int> comp_cols;
      size_t p = 0;
      for (int c = 0; c < m; ++c) {
        if (p < j_set.size() && j_set[p] == c) {
          ++p;
          continue;
        }
        comp_cols.push_back(c);
      }
      Int minor = column_minor(km, comp_cols);
      if (minor == 1 || minor == -1) {
        found = true;
        break;
      }
    } while (next_subset(j_set, m));
    if (found) {
      for (int j : j_set) {
        IntVec e(m, Int(0));
        e[j] = 1;
        complement.push_back(e);
      }
    } else {
      // No coordinate complement; complete via the Smith transform.
      SmithForm sf = smith_normal_form(IntMatrix::from_rows(kernel));
      IntMatrix vinv = sf.V.inverse_unimodular();
      for (int i = r; i < m; ++i) complement.push_back(vinv.row(i));
    }
  }

  std::vector<IntVec> rows = kernel;
  rows.insert(rows.end(), complement.begin(), complement.end());
  IntMatrix b = IntMatrix::from_rows(rows);
  if (!b.is_unimodular()) throw Error("InvalidKernel", "failed to complete kernel to a basis");
  IntMatrix binv = b.inverse_unimodular();
  IntMatrix proj(s, m);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < m; ++j) proj.at(i, j) = binv.at(j, r + i);
  return AdaptedBasis{kernel, proj, b};
}

}  // namespace qpot
