#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberwalk/augment.hpp"
#include "fiberwalk/basis.hpp"
#include "fiberwalk/graph.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/rays.hpp"
#include "fiberwalk/sampler.hpp"
#include "fiberwalk/spectral.hpp"
#include "fiberwalk/walk.hpp"

namespace fiberwalk {

struct ExperimentSpec {
  std::vector<Point> b_grid;
  std::vector<Coord> dilation_grid;
  std::vector<Rat> mu_grid;
  std::vector<std::uint64_t> seeds;
  std::size_t steps = 0;
};

/// Parsed instance file (schema version 1). Ties a lattice set source,
/// moves, weights, and target together into reproducible experiments.
struct InstanceSpec {
  enum class LatticeKind { Points, Fiber, Polytope, Dilation };

  int version = 1;
  LatticeKind lattice_kind = LatticeKind::Points;

  std::vector<Point> explicit_points;   // Points
  IntegerMatrix fiber_matrix;           // Fiber (also feeds the graver command)
  std::optional<Point> fiber_rhs;
  PolytopeSpec polytope;                // Polytope / Dilation
  Coord dilation_factor = 1;

  std::vector<Point> moves;
  std::vector<Rat> move_weights;        // empty: uniform over moves
  bool target_uniform = true;
  std::vector<Rat> target_weights;      // aligned with the points as given
  std::vector<Point> ray_matrix_subset; // optional M' for the ray matrix
  std::optional<Point> start;           // sampler start point

  ExperimentSpec experiment;

  static InstanceSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  LatticePointSet build_lattice() const;
  MoveSet build_moves() const;
  MoveDistribution build_move_distribution() const;
  TargetDistribution build_target(const LatticePointSet& points) const;
  /// Indices of ray_matrix_subset inside the move list; SubsetViolation when
  /// a vector is not a move.
  std::vector<std::size_t> subset_indices() const;
};

// -- serialization helpers ---------------------------------------------------

nlohmann::json point_set_to_json(const LatticePointSet& points);
std::string point_set_to_csv(const LatticePointSet& points);

nlohmann::json graph_to_json(const FiberGraph& graph);
/// DOT output, capped at 200 nodes (TooLarge beyond).
std::string graph_to_dot(const FiberGraph& graph);

nlohmann::json matrix_to_json(const RatMatrix& matrix);
std::string matrix_to_csv(const RatMatrix& matrix, int precision = 12);

nlohmann::json moves_to_json(const std::vector<Point>& moves);

nlohmann::json spectral_report_to_json(const SpectralReport& report);

struct AnalyzeOptions {
  bool include_matrices = false;
  std::size_t edge_expansion_max_nodes = 24;
  std::size_t augmentation_state_cap = 10000000;
};

/// Full structural + spectral report for one instance: connectivity,
/// diameters, ray-matrix kernel, augmentation, spectra of the heat-bath and
/// simple walks, and every applicable bound.
nlohmann::json analyze_instance(const InstanceSpec& spec,
                                const AnalyzeOptions& options = {});

/// Grid sweep driven by the instance's experiment block; returns CSV with a
/// header row. Exactly one of b_grid / dilation_grid / mu_grid must be set.
std::string sweep_instance(const InstanceSpec& spec);

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t steps = 1000;
  std::size_t burnin = 0;
  std::size_t thin = 1;
  std::size_t checkpoints = 20;
};

struct SampleResult {
  Trajectory trajectory;           // after burn-in / thinning
  nlohmann::json diagnostics;      // TV curve at checkpoints
};

SampleResult sample_instance(const InstanceSpec& spec, const SampleOptions& options);

std::string trajectory_to_csv(const Trajectory& trajectory);
nlohmann::json trajectory_to_json(const Trajectory& trajectory);

}  // namespace fiberwalk
