#pragma once

#include <cstddef>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/ratmat.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk {

/// Partition of F into maximal move-line sections. Rays are ordered by
/// their lexicographically smallest point; points inside a ray follow the
/// line parameter.
std::vector<std::vector<std::size_t>> ray_decomposition(
    const LatticePointSet& points, const Point& move);

/// Integer matrix |R cap V| with rows the rays along the moves of the
/// selected subset (subset order, then smallest-point order within a move)
/// and columns the connected components of the plain graph on the remaining
/// moves (smallest-point order).
struct RayMatrix {
  IntegerMatrix counts;
  std::vector<std::size_t> row_move;                  // subset position per row
  std::vector<std::size_t> subset;                    // move indices of M'
  std::vector<std::vector<std::size_t>> rays;         // row -> point indices
  std::vector<std::vector<std::size_t>> components;   // col -> point indices
};

RayMatrix ray_matrix(const LatticePointSet& points, const MoveSet& moves,
                     const std::vector<std::size_t>& subset_indices);

struct KernelSummary {
  std::size_t rank;
  std::size_t kernel_dimension;
  std::vector<std::vector<Rat>> kernel_basis;
};

KernelSummary ray_matrix_kernel(const RayMatrix& matrix);

/// Ray-compatibility condition making the two single-move kernels commute:
/// for all ray pairs R1,R2 along m and R1',R2' along m' with R1 cap R1',
/// R2 cap R2' and R1 cap R2' nonempty, R1' cap R2 is nonempty and
/// |R1| * |R2'| = |R2| * |R1'|. Throws CollinearMoves.
bool intersecting_ray_property(const LatticePointSet& points, const Point& m,
                               const Point& mprime);

/// Whole-set version: every non-collinear pair of moves has the property.
bool has_intersecting_ray_property(const LatticePointSet& points,
                                   const MoveSet& moves);

}  // namespace fiberwalk
