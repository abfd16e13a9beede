#pragma once

#include <cstddef>
#include <vector>

#include "fiberwalk/types.hpp"

namespace fiberwalk {

/// Dense matrix over exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;

  RatMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form (Gauss-Jordan with exact pivots).
RatMatrix rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column of the rref.
std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m);

/// Stacks matrices with equal column counts on top of each other.
RatMatrix vstack(const std::vector<RatMatrix>& blocks);

}  // namespace fiberwalk
