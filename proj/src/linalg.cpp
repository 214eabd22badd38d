#include "ihull/linalg.hpp"

namespace ihull {

BigInt bareiss_det(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw Error("bareiss_det: matrix not square");
  int n = A.rows();
  std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;  // exact
      }
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

IntMatrix gram(const IntMatrix& A) {
  int m = A.rows();
  IntMatrix G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      BigInt s = dot(A.row(i), A.row(j));
      G.at(i, j) = s;
      G.at(j, i) = s;
    }
  return G;
}

std::optional<RatVec> solve_square(RatMatrix M, RatVec rhs) {
  size_t n = M.size();
  if (rhs.size() != n) throw Error("solve_square: size mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    BigRat inv = M[col][col];
    for (size_t j = col; j < n; ++j) M[col][j] /= inv;
    rhs[col] /= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      BigRat f = M[i][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

int rat_rank(RatMatrix M) {
  if (M.empty()) return 0;
  size_t rows = M.size(), cols = M[0].size();
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      BigRat f = M[i][c] / M[r][c];
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<int> independent_rows(const IntMatrix& A) {
  std::vector<int> keep;
  RatMatrix R;
  for (int i = 0; i < A.rows(); ++i) {
    std::vector<BigRat> row(A.cols());
    for (int j = 0; j < A.cols(); ++j) row[j] = BigRat(A.at(i, j));
    R.push_back(row);
    if (rat_rank(R) == static_cast<int>(R.size())) {
      keep.push_back(i);
    } else {
      R.pop_back();
    }
  }
  return keep;
}

}  // namespace ihull
