#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/walk.hpp"

namespace fiberwalk {

/// Eigenvalues of a reversible transition matrix, sorted descending.
/// slem = max(lambda_2, -lambda_n); gap = 1 - slem.
struct SpectralReport {
  std::vector<double> eigenvalues;
  double slem = 0.0;
  double gap = 1.0;
  double residual = 0.0;  // max |P v - lambda v|_inf over eigenpairs
  std::string method;
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors of P, row i
};

/// Dense symmetric eigensolver: cyclic Jacobi rotations, off-diagonal
/// Frobenius threshold 1e-12, at most 100 sweeps. Exposed for reuse by
/// benchmarks and diagnostics.
struct JacobiResult {
  std::vector<double> eigenvalues;                // descending
  std::vector<std::vector<double>> eigenvectors;  // row i pairs eigenvalue i
  std::size_t sweeps = 0;
};
JacobiResult jacobi_symmetric_eig(std::vector<std::vector<double>> a);

/// Solves D^{1/2} P D^{-1/2} (D = diag pi) and reports the spectrum of P.
/// Throws NotReversible when detailed balance fails.
SpectralReport spectrum(const TransitionMatrix& matrix);

struct SlemCurvePoint {
  std::vector<Rat> weights;
  double slem;
};

struct SlemCurve {
  std::vector<SlemCurvePoint> points;
  std::size_t argmin = 0;
};

/// slem of the heat-bath walk for every weight vector in the grid, plus the
/// grid argmin.
SlemCurve slem_curve(const LatticePointSet& points, const MoveSet& moves,
                     const TargetDistribution& target,
                     const std::vector<std::vector<Rat>>& weight_grid);

/// 1 - sum of the subset's weights when the ray matrix along the subset has
/// a nontrivial kernel; nullopt otherwise. Valid as a slem lower bound for
/// the uniform target.
std::optional<double> kernel_lower_bound(const LatticePointSet& points,
                                         const MoveDistribution& moves,
                                         const std::vector<std::size_t>& subset);

/// 1 - min(f) when the whole move set has the intersecting ray property;
/// nullopt otherwise. Upper bound on the slem for the uniform target.
std::optional<double> irp_upper_bound(const LatticePointSet& points,
                                      const MoveDistribution& moves);

/// Canonical-path bound for an augmenting move set under the uniform
/// target: 1 - |F| min(f) / (l * l! * 3^(l-1) * 2^|M| * r_1 ... r_l) with
/// the ray maxima sorted descending. Throws NotAugmenting for l = 0.
double canonical_path_bound(const LatticePointSet& points,
                            const MoveDistribution& moves,
                            std::size_t augmentation_length,
                            std::vector<std::size_t> ray_maxima);

/// Bound 1 - (|F| / d^2) * prod a_i / b for F = {u in N^d : a^T u <= b}
/// under unit moves and uniform target and f. The set is re-derived from
/// (a, b) and compared; throws SetMismatch when it differs.
double halfspace_box_bound(const Point& a, Coord b,
                           const LatticePointSet& points);

}  // namespace fiberwalk
