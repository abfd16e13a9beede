#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk {

/// Rectangular integer matrix with exact entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntegerMatrix from_rows(const std::vector<std::vector<Coord>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coord& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Coord at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// A * x in exact integer arithmetic.
  Point apply(const Point& x) const;

  bool is_zero() const;
  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coord> data_;
};

/// Implicit description {x : Ax = b, Gx <= h, l <= x <= u}; every block is
/// optional but at least one must be present.
struct PolytopeSpec {
  std::optional<std::pair<IntegerMatrix, Point>> equalities;
  std::optional<std::pair<IntegerMatrix, Point>> inequalities;
  std::optional<Point> lower;
  std::optional<Point> upper;

  std::size_t dimension() const;
  void validate() const;
};

/// Finite subset of Z^d with a stable lexicographic index. Immutable after
/// construction; iteration order is part of the contract so indices are
/// reproducible across runs.
class LatticePointSet {
 public:
  LatticePointSet() = default;
  LatticePointSet(std::size_t dimension, std::vector<Point> points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const Point& point(std::size_t index) const { return points_[index]; }
  const std::vector<Point>& points() const { return points_; }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  /// Componentwise bounding box; only valid for nonempty sets.
  const Point& coordinate_min() const;
  const Point& coordinate_max() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
  Point min_, max_;
};

/// All u in N^d with A u = b, lexicographically ordered. Throws
/// UnboundedFiber when some coordinate of the real relaxation
/// {x >= 0, Ax = b} has no finite bound.
LatticePointSet enumerate_fiber(const IntegerMatrix& A, const Point& b);

/// All integer points of the spec'd region, lexicographically ordered.
LatticePointSet enumerate_polytope(const PolytopeSpec& spec);

/// Integer points of the factor-fold dilation: b, h, l, u scale, A and G
/// do not.
LatticePointSet dilate(const PolytopeSpec& spec, Coord factor);

}  // namespace fiberwalk
