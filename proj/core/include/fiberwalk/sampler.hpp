#pragma once

#include <cstdint>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/walk.hpp"

namespace fiberwalk {

/// splitmix64; used to expand seeds into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** with splitmix64 seeding. The generator identity is part of
/// the external contract: trajectories are bit-identical across platforms
/// for a fixed seed. Streams give independent chains from one master seed.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  static Xoshiro256StarStar stream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next();

  /// Unbiased uniform draw in [0, n) by rejection. n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t s_[4];
};

struct TrajectoryStep {
  std::size_t move;  // move index sampled at this step
  Point point;       // state after the step
};

struct Trajectory {
  Point start;
  std::uint64_t seed = 0;
  std::vector<TrajectoryStep> steps;
};

/// One transition: sample a move from f, then resample the point from the
/// target restricted to the current ray. Inverse-CDF over exact rational
/// weights, so the draw matches the heat-bath matrix row exactly.
Point heat_bath_step(const Point& current, const LatticePointSet& points,
                     const MoveDistribution& moves,
                     const TargetDistribution& target,
                     Xoshiro256StarStar& rng);

/// Runs the heat-bath walk for the given number of steps. Deterministic in
/// (seed, start).
Trajectory run_chain(const LatticePointSet& points, const MoveDistribution& moves,
                     const TargetDistribution& target, const Point& start,
                     std::size_t steps, std::uint64_t seed);

/// (1/2) sum_x |empirical(x) - pi(x)|. Throws EmptySample.
double empirical_tv(const LatticePointSet& points,
                    const std::vector<Point>& samples,
                    const TargetDistribution& target);

/// Same, from per-index visit counts.
double empirical_tv_counts(const std::vector<std::uint64_t>& counts,
                           const TargetDistribution& target);

}  // namespace fiberwalk
