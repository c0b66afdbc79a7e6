#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gradedproj/numeric.hpp"

namespace gradedproj {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
      }
    return out;
  }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  // Determinant by fraction-free Gaussian elimination (Bareiss). Square only.
  Int determinant() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

struct SmithDecomposition {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix v;  // cols x cols, unimodular
};

// U*A*V = D with D in Smith normal form. Total on all integer matrices.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Solves A*x = b over the integers via SNF. Returns the particular solution
// with zero homogeneous part (deterministic); empty optional if unsolvable.
std::vector<Int> solve_linear_diophantine(const IntMatrix& a, const std::vector<Int>& b,
                                          bool& solvable);

}  // namespace gradedproj
