#include "qpot/linprog.hpp"

#include "qpot/error.hpp"

namespace qpot {

namespace {

class Simplex {
 public:
  // tableau rows: n structural columns, then m artificials, then rhs
  Simplex(const std::vector<RatVec>& a, const RatVec& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    tab_.assign(m_, RatVec(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      Rat s = b[i] < 0 ? Rat(-1) : Rat(1);
      for (size_t j = 0; j < n_; ++j) tab_[i][j] = s * a[i][j];
      tab_[i][n_ + i] = 1;
      tab_[i].back() = s * b[i];
      basis_[i] = n_ + i;
    }
  }

  // Returns optimum of the phase; costs indexed over all columns.
  Rat optimize(const RatVec& cost, bool* bounded) {
    *bounded = true;
    for (;;) {
      // reduced costs r_j = c_j - c_B . column_j
      int enter = -1;
      for (size_t j = 0; j < cost.size(); ++j) {
        if (blocked_[j]) continue;
        Rat r = cost[j];
        for (size_t i = 0; i < m_; ++i) r -= cost[basis_[i]] * tab_[i][j];
        if (r < 0) {
          enter = static_cast<int>(j);
          break;  // Bland: first improving index
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i].back() / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) {
        *bounded = false;
        return Rat(0);
      }
      pivot(leave, enter);
    }
    Rat obj(0);
    for (size_t i = 0; i < m_; ++i) obj += cost[basis_[i]] * tab_[i].back();
    return obj;
  }

  void pivot(int row, int col) {
    Rat p = tab_[row][col];
    for (auto& v : tab_[row]) v /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (static_cast<int>(i) == row || tab_[i][col] == 0) continue;
      Rat f = tab_[i][col];
      for (size_t j = 0; j < tab_[i].size(); ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  LpResult run(const RatVec& c) {
    blocked_.assign(n_ + m_, false);
    RatVec phase1(n_ + m_, Rat(0));
    for (size_t j = n_; j < n_ + m_; ++j) phase1[j] = 1;
    bool bounded = true;
    Rat inf = optimize(phase1, &bounded);
    LpResult res;
    if (inf != 0) return res;  // infeasible
    res.feasible = true;
    // Drive artificials out of the basis; redundant rows pivot harmlessly
    // on any structural column or stay at zero level.
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (size_t j = 0; j < n_; ++j)
        if (tab_[i][j] != 0) {
          col = static_cast<int>(j);
          break;
        }
      if (col >= 0) pivot(static_cast<int>(i), col);
    }
    for (size_t j = n_; j < n_ + m_; ++j) blocked_[j] = true;
    RatVec full_c(n_ + m_, Rat(0));
    for (size_t j = 0; j < n_; ++j) full_c[j] = c[j];
    res.objective = optimize(full_c, &res.bounded);
    res.x.assign(n_, Rat(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) res.x[basis_[i]] = tab_[i].back();
    return res;
  }

 private:
  size_t m_, n_;
  std::vector<RatVec> tab_;
  std::vector<size_t> basis_;
  std::vector<bool> blocked_;
};

}  // namespace

LpResult solve_lp(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "lp row count");
  for (const auto& row : a)
    if (row.size() != c.size()) throw Error("DimensionMismatch", "lp column count");
  if (a.empty()) {
    LpResult res;
    res.feasible = true;
    res.objective = 0;
    res.x.assign(c.size(), Rat(0));
    return res;
  }
  return Simplex(a, b).run(c);
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& q) {
  if (points.empty()) return false;
  size_t r = q.size(), k = points.size();
  std::vector<RatVec> a(r + 1, RatVec(k, Rat(0)));
  RatVec b(r + 1);
  for (size_t d = 0; d < r; ++d) {
    for (size_t i = 0; i < k; ++i) a[d][i] = points[i][d];
    b[d] = q[d];
  }
  for (size_t i = 0; i < k; ++i) a[r][i] = 1;
  b[r] = 1;
  RatVec c(k, Rat(0));
  return solve_lp(a, b, c).feasible;
}

bool in_relative_interior(const std::vector<RatVec>& points, const RatVec& q) {
  if (points.empty()) return false;
  size_t r = q.size(), k = points.size();
  // t_i = s_i + tau, s_i >= 0, tau = tp - tm; maximize tau.
  size_t n = k + 2;
  std::vector<RatVec> a(r + 1, RatVec(n, Rat(0)));
  RatVec b(r + 1);
  for (size_t d = 0; d < r; ++d) {
    Rat wsum(0);
    for (size_t i = 0; i < k; ++i) {
      a[d][i] = points[i][d];
      wsum += points[i][d];
    }
    a[d][k] = wsum;
    a[d][k + 1] = -wsum;
    b[d] = q[d];
  }
  for (size_t i = 0; i < k; ++i) a[r][i] = 1;
  a[r][k] = Rat(k);
  a[r][k + 1] = Rat(-static_cast<long>(k));
  b[r] = 1;
  RatVec c(n, Rat(0));
  c[k] = -1;
  c[k + 1] = 1;
  LpResult res = solve_lp(a, b, c);
  if (!res.feasible) return false;
  return -res.objective > 0;
}

}  // namespace qpot
