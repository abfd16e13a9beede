#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"

namespace fiberwalk {

struct AugmentingStep {
  std::size_t move;  // move index, used at most once per path
  Coord lambda;      // nonzero integer coefficient
};

/// Shortest path in the compressed graph between u and v whose edges use
/// pairwise distinct moves; nullopt when no such path exists.
std::optional<std::vector<AugmentingStep>> minimal_augmenting_path(
    const LatticePointSet& points, const MoveSet& moves, const Point& u,
    const Point& v);

struct LongestRayReport {
  std::vector<std::size_t> per_move;      // r_i in move order
  std::vector<std::size_t> sorted_desc;   // copy sorted descending
  std::size_t overall = 0;
};

/// Longest ray |R_m(u, F)| per move and overall.
LongestRayReport longest_ray(const LatticePointSet& points,
                             const MoveSet& moves);

struct AugmentationReport {
  bool augmenting = false;
  std::size_t auglen = 0;  // max over pairs of minimal augmenting path length
  std::pair<std::size_t, std::size_t> witness_pair{0, 0};
  std::vector<AugmentingStep> witness_path;  // for the maximizing pair
  LongestRayReport longest_rays;
};

/// BFS over (point, set of used moves) states. When not augmenting, the
/// witness pair is one with no augmenting path. Throws ResourceLimit when
/// |F| * 2^|M| exceeds the cap.
AugmentationReport augmentation_length(const LatticePointSet& points,
                                       const MoveSet& moves,
                                       std::size_t state_cap = 10000000);

}  // namespace fiberwalk
