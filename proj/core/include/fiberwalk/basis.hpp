#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fiberwalk/lattice.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk {

/// Ordered set of allowed moves. Construction checks dimensions only;
/// use validate_move_set for the structural rules.
class MoveSet {
 public:
  MoveSet() = default;
  MoveSet(std::size_t dimension, std::vector<Point> moves);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  const Point& move(std::size_t index) const { return moves_[index]; }
  const std::vector<Point>& moves() const { return moves_; }

  /// max over moves of the l1 norm (0 for an empty set).
  Coord l1_norm() const;
  Coord linf_norm() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Point> moves_;
};

struct MoveSetViolation {
  enum class Kind { ZeroMove, Duplicate, CollinearPair };
  Kind kind;
  std::size_t first;
  std::size_t second;  // only for Duplicate / CollinearPair
  std::string message;
};

/// Reports zero moves, duplicates, and collinear scalar pairs
/// (lambda * m with lambda outside {-1, 1}). Valid iff empty.
std::vector<MoveSetViolation> validate_move_set(const MoveSet& moves);

/// Rational mass function on a move set; weights are nonnegative and sum
/// to one exactly.
class MoveDistribution {
 public:
  MoveDistribution(MoveSet moves, std::vector<Rat> weights);

  static MoveDistribution uniform(MoveSet moves);

  const MoveSet& moves() const { return moves_; }
  const Rat& weight(std::size_t index) const { return weights_[index]; }
  const std::vector<Rat>& weights() const { return weights_; }
  const std::vector<std::size_t>& support() const { return support_; }

  Rat min_weight() const;

 private:
  MoveSet moves_;
  std::vector<Rat> weights_;
  std::vector<std::size_t> support_;
};

/// Lattice basis of ker_Z(A) obtained from a column Hermite normal form.
std::vector<Point> integer_kernel_basis(const IntegerMatrix& A);

struct GraverOptions {
  std::size_t max_elements = 100000;
  std::uint64_t max_pair_steps = 20000000;
};

/// Full symmetric Graver basis (one representative per +- pair plus its
/// negation), computed by a Pottier-style completion from a kernel lattice
/// basis. Output sorted lexicographically.
MoveSet graver_basis(const IntegerMatrix& A, const GraverOptions& options = {});

struct ConformalComponent {
  Coord multiplier;  // strictly positive
  Point element;
};

/// Greedy sign-compatible decomposition z = sum multiplier_i * element_i
/// with element_i conformal to z and pairwise distinct. When A is given,
/// z is first checked to lie in its integer kernel.
std::vector<ConformalComponent> conformal_decompose(
    const Point& z, const MoveSet& graver, const IntegerMatrix* A = nullptr);

/// True iff the fiber graph F(M) is connected (empty and singleton sets
/// count as connected).
bool is_markov_basis(const LatticePointSet& points, const MoveSet& moves);

}  // namespace fiberwalk
