#include "fiberwalk/ratmat.hpp"

#include "fiberwalk/errors.hpp"

namespace fiberwalk {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - other.data_[i];
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != other.data_[i]) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RatMatrix rref(RatMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    Rat inv = m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) /= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      Rat factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::size_t count = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++count;
  }
  return count;
}

std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    if (j == n) break;
    pivot_col_of_row.push_back(j);
    is_pivot[j] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(n);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[pivot_col_of_row[i]] = -r.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix vstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols)
      throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  RatMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out.at(r, j) = b.at(i, j);
  return out;
}

}  // namespace fiberwalk
