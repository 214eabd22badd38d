#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ihull/numeric.hpp"

namespace ihull {

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRat>;
using IndexSet = std::vector<int>;  // sorted, no duplicates

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);
BigInt l1_norm(std::span<const BigInt> a);
BigInt linf_norm(std::span<const BigInt> a);
/// Exact squared euclidean norm.
BigInt l2_norm_sq(std::span<const BigInt> a);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : m_(rows), n_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw Error("IntMatrix: dimensions must be >= 1");
  }
  IntMatrix(int rows, int cols, std::vector<BigInt> entries)
      : m_(rows), n_(cols), e_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw Error("IntMatrix: dimensions must be >= 1");
    if (e_.size() != static_cast<size_t>(rows) * cols)
      throw Error("IntMatrix: entry count does not match dimensions");
  }
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix identity(int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

  std::span<const BigInt> row(int i) const {
    return {e_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
  }
  IntVec col(int j) const;
  /// Column submatrix A[S].
  IntMatrix select_cols(const IndexSet& S) const;

  /// Delta = max |a_ij|.
  BigInt inf_norm() const;
  BigInt row_l1(int i) const { return l1_norm(row(i)); }
  BigInt row_l2_sq(int i) const { return l2_norm_sq(row(i)); }
  BigInt col_l1(int j) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int m_ = 0, n_ = 0;
  std::vector<BigInt> e_;
};

/// Integer point; coordinate vector of length n.
struct IntPoint {
  IntVec coords;

  IntPoint() = default;
  explicit IntPoint(IntVec c) : coords(std::move(c)) {}
  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool is_nonnegative() const;
  bool operator==(const IntPoint&) const = default;
  auto operator<=>(const IntPoint&) const = default;
};

/// Indices of nonzero coordinates.
IndexSet support(const IntPoint& p);

/// The IP / polytope under study: { x >= 0 : Ax = b }, optional objective c.
struct Instance {
  std::string name;
  IntMatrix A;
  IntVec b;
  std::optional<IntVec> c;
  std::optional<IntVec> var_upper_bounds;

  int m() const { return A.rows(); }
  int n() const { return A.cols(); }
  void validate() const;
};

/// Ax - b, exact. Throws on dimension mismatch.
IntVec residual(const IntMatrix& A, const IntVec& b, const IntPoint& x);

/// All-columns index set {0,...,n-1}.
IndexSet full_index_set(int n);

std::string point_to_string(const IntPoint& p);

}  // namespace ihull
