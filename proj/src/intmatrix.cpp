#include "qpot/intmatrix.hpp"

#include <sstream>

#include "qpot/error.hpp"

namespace qpot {

std::string int_to_string(const Int& n) { return n.str(); }

std::string rat_to_string(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { throw Error("MalformedSpec", "invalid rational '" + s + "'"); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
  };
  try {
    if (slash == std::string::npos) {
      check_int(s);
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) bad();
    return Rat(Int(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return Rat(0);
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("DimensionMismatch", "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(std::vector<IntVec> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows[0].size()) : 0;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols_)
      throw Error("DimensionMismatch", "ragged row lengths");
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (auto& r : rows)
    for (auto& x : r) data_.push_back(std::move(x));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMatrix::col(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("DimensionMismatch", "matrix product shape");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("DimensionMismatch", "matrix-vector shape");
  IntVec out(rows_, Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
  for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row(int i, int j, const Int& k) {
  for (int c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col(int i, int j, const Int& k) {
  for (int r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return Int(1);
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  Int sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

int IntMatrix::rank() const {
  IntMatrix a = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.swap_rows(r, p);
    for (int i = r + 1; i < rows_; ++i) {
      if (a.at(i, c) == 0) continue;
      Int g = boost::multiprecision::gcd(a.at(r, c), a.at(i, c));
      Int fr = a.at(i, c) / g, fi = a.at(r, c) / g;
      for (int j = c; j < cols_; ++j) a.at(i, j) = a.at(i, j) * fi - a.at(r, j) * fr;
    }
    ++r;
  }
  return r;
}

bool IntMatrix::is_unimodular() const {
  if (rows_ != cols_) return false;
  Int d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  if (rows_ != cols_) throw Error("DimensionMismatch", "inverse of non-square matrix");
  int n = rows_;
  // Rational Gauss-Jordan; entries of the result are integral for det ±1.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(at(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw Error("DimensionMismatch", "singular matrix has no inverse");
    std::swap(a[c], a[p]);
    Rat piv = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rat_den(a[i][n + j]) != 1)
        throw Error("DimensionMismatch", "matrix is not unimodular");
      inv.at(i, j) = rat_num(a[i][n + j]);
    }
  return inv;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product length");
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int vec_gcd(const IntVec& v) {
  Int g(0);
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace qpot
