#include "ihull/model.hpp"

#include <numeric>
#include <sstream>

namespace ihull {

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt l1_norm(std::span<const BigInt> a) {
  BigInt s = 0;
  for (const auto& x : a) s += abs(x);
  return s;
}

BigInt linf_norm(std::span<const BigInt> a) {
  BigInt s = 0;
  for (const auto& x : a) {
    BigInt v = abs(x);
    if (v > s) s = v;
  }
  return s;
}

BigInt l2_norm_sq(std::span<const BigInt> a) {
  BigInt s = 0;
  for (const auto& x : a) s += x * x;
  return s;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty() || rows[0].empty()) throw Error("from_rows: empty matrix");
  IntMatrix A(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < A.rows(); ++i) {
    if (rows[i].size() != static_cast<size_t>(A.cols()))
      throw Error("from_rows: ragged rows");
    for (int j = 0; j < A.cols(); ++j) A.at(i, j) = rows[i][j];
  }
  return A;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix A(n, n);
  for (int i = 0; i < n; ++i) A.at(i, i) = 1;
  return A;
}

IntVec IntMatrix::col(int j) const {
  IntVec c(m_);
  for (int i = 0; i < m_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::select_cols(const IndexSet& S) const {
  if (S.empty()) throw Error("select_cols: empty index set");
  IntMatrix B(m_, static_cast<int>(S.size()));
  for (int i = 0; i < m_; ++i)
    for (size_t k = 0; k < S.size(); ++k) {
      int j = S[k];
      if (j < 0 || j >= n_) throw Error("select_cols: index out of range");
      B.at(i, static_cast<int>(k)) = at(i, j);
    }
  return B;
}

BigInt IntMatrix::inf_norm() const {
  BigInt d = 0;
  for (const auto& x : e_) {
    BigInt v = abs(x);
    if (v > d) d = v;
  }
  return d;
}

BigInt IntMatrix::col_l1(int j) const {
  BigInt s = 0;
  for (int i = 0; i < m_; ++i) s += abs(at(i, j));
  return s;
}

bool IntPoint::is_zero() const {
  for (const auto& x : coords)
    if (x != 0) return false;
  return true;
}

bool IntPoint::is_nonnegative() const {
  for (const auto& x : coords)
    if (x < 0) return false;
  return true;
}

IndexSet support(const IntPoint& p) {
  IndexSet s;
  for (int i = 0; i < p.dim(); ++i)
    if (p.coords[i] != 0) s.push_back(i);
  return s;
}

void Instance::validate() const {
  if (b.size() != static_cast<size_t>(A.rows()))
    throw Error("instance: |b| != row count");
  if (c && c->size() != static_cast<size_t>(A.cols()))
    throw Error("instance: |c| != column count");
  if (var_upper_bounds) {
    if (var_upper_bounds->size() != static_cast<size_t>(A.cols()))
      throw Error("instance: |var_upper_bounds| != column count");
    for (const auto& u : *var_upper_bounds)
      if (u < 0) throw Error("instance: var_upper_bounds must be nonnegative");
  }
}

IntVec residual(const IntMatrix& A, const IntVec& b, const IntPoint& x) {
  if (b.size() != static_cast<size_t>(A.rows()))
    throw Error("residual: |b| != row count");
  if (x.dim() != A.cols()) throw Error("residual: |x| != column count");
  IntVec r(A.rows());
  for (int i = 0; i < A.rows(); ++i) r[i] = dot(A.row(i), x.coords) - b[i];
  return r;
}

IndexSet full_index_set(int n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::string point_to_string(const IntPoint& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i) os << ",";
    os << p.coords[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace ihull
