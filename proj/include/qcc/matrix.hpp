#pragma once

#include <string>
#include <vector>

#include "qcc/bigint.hpp"

namespace qcc {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  long long operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(int r0, int c0, int rows, int cols) const;
  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> a_;
};

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Exact inverse over Q; throws SingularMatrix.
RationalMatrix rational_inverse(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

}  // namespace qcc
