#pragma once

#include <cstddef>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/ratmat.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk {

/// Target distribution on a lattice point set, indexed like the set.
/// Weights are strictly positive; unnormalized input is normalized on
/// construction.
class TargetDistribution {
 public:
  static TargetDistribution uniform(std::size_t size);
  static TargetDistribution explicit_weights(std::vector<Rat> unnormalized);

  bool is_uniform() const { return uniform_; }
  std::size_t size() const { return probabilities_.size(); }
  const Rat& probability(std::size_t index) const {
    return probabilities_[index];
  }
  const std::vector<Rat>& probabilities() const { return probabilities_; }

 private:
  TargetDistribution() = default;
  bool uniform_ = false;
  std::vector<Rat> probabilities_;
};

enum class WalkKind { Simple, HeatBathMove, HeatBath };

const char* walk_kind_name(WalkKind kind);

/// Row-stochastic rational matrix over a lattice point set, together with
/// its target distribution. Row/column order is the set's lexicographic
/// index.
class TransitionMatrix {
 public:
  TransitionMatrix(LatticePointSet domain, RatMatrix matrix,
                   TargetDistribution target, WalkKind kind);

  const LatticePointSet& domain() const { return domain_; }
  const RatMatrix& matrix() const { return matrix_; }
  const TargetDistribution& target() const { return target_; }
  WalkKind kind() const { return kind_; }
  std::size_t size() const { return matrix_.rows(); }

  const Rat& entry(std::size_t row, std::size_t col) const {
    return matrix_.at(row, col);
  }

 private:
  LatticePointSet domain_;
  RatMatrix matrix_;
  TargetDistribution target_;
  WalkKind kind_;
};

/// Propose a uniform move from +-M; move if the target stays in F, else
/// hold. P(u,v) = 1/|+-M| per realizing move, P(u,u) counts the moves
/// leaving F.
TransitionMatrix simple_walk_matrix(const LatticePointSet& points,
                                    const MoveSet& moves);

/// The ray (u + Z*m) intersect F, ordered by the line parameter along m.
/// Always contains u. Throws PointNotInSet / ZeroMove.
std::vector<Point> ray(const Point& u, const Point& move,
                       const LatticePointSet& points);

/// Single-move heat-bath kernel: H(x,y) = pi(y) / pi(ray of x) for y on the
/// ray of x along the move, 0 otherwise.
TransitionMatrix heat_bath_move_matrix(const LatticePointSet& points,
                                       const Point& move,
                                       const TargetDistribution& target);

/// Mixture sum_m f(m) * H_m of the single-move kernels.
TransitionMatrix heat_bath_matrix(const LatticePointSet& points,
                                  const MoveDistribution& moves,
                                  const TargetDistribution& target);

/// Exact detailed-balance check against the matrix's own target.
bool check_reversibility(const TransitionMatrix& matrix);

/// Exact stationarity check: pi^T P = pi^T.
bool check_stationarity(const TransitionMatrix& matrix);

}  // namespace fiberwalk
