#include "fiberwalk/walk.hpp"

#include <algorithm>

#include "fiberwalk/errors.hpp"

namespace fiberwalk {

TargetDistribution TargetDistribution::uniform(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::EmptyInput, "uniform target on no points");
  TargetDistribution t;
  t.uniform_ = true;
  t.probabilities_.assign(size, make_rat(1, static_cast<long>(size)));
  return t;
}

TargetDistribution TargetDistribution::explicit_weights(
    std::vector<Rat> unnormalized) {
  if (unnormalized.empty())
    throw Error(ErrorCode::EmptyInput, "explicit target with no weights");
  Rat total = 0;
  for (const Rat& w : unnormalized) {
    if (w <= 0)
      throw Error(ErrorCode::InvalidInstance,
                  "target weights must be strictly positive");
    total += w;
  }
  TargetDistribution t;
  t.probabilities_.reserve(unnormalized.size());
  bool all_equal = true;
  for (const Rat& w : unnormalized) {
    t.probabilities_.push_back(w / total);
    all_equal = all_equal && w == unnormalized.front();
  }
  t.uniform_ = all_equal;
  return t;
}

const char* walk_kind_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::Simple: return "simple";
    case WalkKind::HeatBathMove: return "heat-bath-move";
    case WalkKind::HeatBath: return "heat-bath";
  }
  return "unknown";
}

TransitionMatrix::TransitionMatrix(LatticePointSet domain, RatMatrix matrix,
                                   TargetDistribution target, WalkKind kind)
    : domain_(std::move(domain)), matrix_(std::move(matrix)),
      target_(std::move(target)), kind_(kind) {
  std::size_t n = domain_.size();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix size vs point set");
  if (target_.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "target size vs point set");
  for (std::size_t i = 0; i < n; ++i) {
    Rat row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_.at(i, j) < 0)
        throw Error(ErrorCode::InvalidInstance, "negative transition entry");
      row_sum += matrix_.at(i, j);
    }
    if (row_sum != 1)
      throw Error(ErrorCode::InvalidInstance,
                  "row " + std::to_string(i) + " sums to " +
                      rat_to_string(row_sum));
  }
}

TransitionMatrix simple_walk_matrix(const LatticePointSet& points,
                                    const MoveSet& moves) {
  if (moves.empty())
    throw Error(ErrorCode::EmptyMoveSet, "simple walk needs moves");
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "simple walk on an empty set");
  if (moves.dimension() != points.dimension())
    throw Error(ErrorCode::DimensionMismatch, "move dimension vs point set");

  // +-M as a set; m and -m are distinct members unless m = -m.
  std::vector<Point> signed_moves = moves.moves();
  for (const Point& m : moves.moves()) signed_moves.push_back(negate(m));
  std::sort(signed_moves.begin(), signed_moves.end());
  signed_moves.erase(std::unique(signed_moves.begin(), signed_moves.end()),
                     signed_moves.end());

  std::size_t n = points.size();
  Rat step = make_rat(1, static_cast<long>(signed_moves.size()));
  RatMatrix P(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Point& m : signed_moves) {
      Point target = add(points.point(i), m);
      if (auto j = points.index_of(target))
        P.at(i, *j) += step;
      else
        P.at(i, i) += step;  // blocked moves hold, counted per move
    }
  }
  return TransitionMatrix(points, std::move(P),
                          TargetDistribution::uniform(n), WalkKind::Simple);
}

std::vector<Point> ray(const Point& u, const Point& move,
                       const LatticePointSet& points) {
  if (u.size() != points.dimension())
    throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (!points.contains(u))
    throw Error(ErrorCode::PointNotInSet, point_to_string(u));
  if (is_zero(move)) throw Error(ErrorCode::ZeroMove, "ray along zero move");

  // The whole integer line, not just the contiguous run: the set may have
  // gaps along the move direction.
  const Point& lo = points.coordinate_min();
  const Point& hi = points.coordinate_max();
  Coord lambda_min = 0, lambda_max = 0;
  bool first = true;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (move[j] == 0) continue;
    // lambda range keeping coordinate j inside [lo, hi]
    Coord a = lo[j] - u[j], b = hi[j] - u[j];
    Coord m = move[j];
    Coord cand_lo, cand_hi;
    if (m > 0) {
      cand_lo = a >= 0 ? (a + m - 1) / m : -((-a) / m);
      cand_hi = b >= 0 ? b / m : -((-b + m - 1) / m);
    } else {
      Coord mm = -m;
      cand_lo = b >= 0 ? -(b / mm) : ((-b) + mm - 1) / mm;
      cand_hi = a >= 0 ? -((a + mm - 1) / mm) : (-a) / mm;
    }
    if (first) {
      lambda_min = cand_lo;
      lambda_max = cand_hi;
      first = false;
    } else {
      lambda_min = std::max(lambda_min, cand_lo);
      lambda_max = std::min(lambda_max, cand_hi);
    }
  }
  std::vector<Point> out;
  for (Coord lambda = lambda_min; lambda <= lambda_max; ++lambda) {
    Point p = add(u, scale(move, lambda));
    if (points.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

TransitionMatrix heat_bath_move_matrix(const LatticePointSet& points,
                                       const Point& move,
                                       const TargetDistribution& target) {
  if (is_zero(move)) throw Error(ErrorCode::ZeroMove, "zero heat-bath move");
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "heat bath on an empty set");
  if (target.size() != points.size())
    throw Error(ErrorCode::DimensionMismatch, "target size vs point set");

  std::size_t n = points.size();
  RatMatrix H(n, n);
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> indices;
    Rat mass = 0;
    for (const Point& p : ray(points.point(i), move, points)) {
      std::size_t idx = *points.index_of(p);
      indices.push_back(idx);
      mass += target.probability(idx);
    }
    for (std::size_t a : indices) {
      done[a] = true;
      for (std::size_t b : indices)
        H.at(a, b) = target.probability(b) / mass;
    }
  }
  return TransitionMatrix(points, std::move(H), target, WalkKind::HeatBathMove);
}

TransitionMatrix heat_bath_matrix(const LatticePointSet& points,
                                  const MoveDistribution& moves,
                                  const TargetDistribution& target) {
  if (moves.moves().empty())
    throw Error(ErrorCode::EmptyMoveSet, "heat bath needs moves");
  std::size_t n = points.size();
  RatMatrix H(n, n);
  for (std::size_t k = 0; k < moves.moves().size(); ++k) {
    if (moves.weight(k) == 0) continue;
    TransitionMatrix Hk =
        heat_bath_move_matrix(points, moves.moves().move(k), target);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rat& e = Hk.entry(i, j);
        if (e != 0) H.at(i, j) += moves.weight(k) * e;
      }
  }
  return TransitionMatrix(points, std::move(H), target, WalkKind::HeatBath);
}

bool check_reversibility(const TransitionMatrix& matrix) {
  std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix.target().probability(i) * matrix.entry(i, j) !=
          matrix.target().probability(j) * matrix.entry(j, i))
        return false;
  return true;
}

bool check_stationarity(const TransitionMatrix& matrix) {
  std::size_t n = matrix.size();
  for (std::size_t j = 0; j < n; ++j) {
    Rat column = 0;
    for (std::size_t i = 0; i < n; ++i)
      column += matrix.target().probability(i) * matrix.entry(i, j);
    if (column != matrix.target().probability(j)) return false;
  }
  return true;
}

}  // namespace fiberwalk
