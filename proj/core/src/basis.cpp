#include "fiberwalk/basis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/graph.hpp"

namespace fiberwalk {

MoveSet::MoveSet(std::size_t dimension, std::vector<Point> moves)
    : dimension_(dimension), moves_(std::move(moves)) {
  for (const Point& m : moves_)
    if (m.size() != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "move dimension mismatch");
}

Coord MoveSet::l1_norm() const {
  Coord best = 0;
  for (const Point& m : moves_) best = std::max(best, fiberwalk::l1_norm(m));
  return best;
}

Coord MoveSet::linf_norm() const {
  Coord best = 0;
  for (const Point& m : moves_) best = std::max(best, fiberwalk::linf_norm(m));
  return best;
}

std::vector<MoveSetViolation> validate_move_set(const MoveSet& moves) {
  std::vector<MoveSetViolation> out;
  const auto& ms = moves.moves();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (is_zero(ms[i]))
      out.push_back({MoveSetViolation::Kind::ZeroMove, i, i,
                     "move " + std::to_string(i) + " is zero"});
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i] == ms[j]) {
        out.push_back({MoveSetViolation::Kind::Duplicate, i, j,
                       "moves " + std::to_string(i) + " and " +
                           std::to_string(j) + " are equal"});
        continue;
      }
      if (is_zero(ms[i]) || is_zero(ms[j])) continue;
      if (!collinear(ms[i], ms[j])) continue;
      // lambda * m bans every scalar multiple except the negation
      if (ms[j] != negate(ms[i]))
        out.push_back({MoveSetViolation::Kind::CollinearPair, i, j,
                       "move " + std::to_string(j) +
                           " is a scalar multiple of move " +
                           std::to_string(i)});
    }
  }
  return out;
}

MoveDistribution::MoveDistribution(MoveSet moves, std::vector<Rat> weights)
    : moves_(std::move(moves)), weights_(std::move(weights)) {
  if (weights_.size() != moves_.size())
    throw Error(ErrorCode::DimensionMismatch, "one weight per move required");
  Rat total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0)
      throw Error(ErrorCode::InvalidInstance, "negative move weight");
    if (weights_[i] > 0) support_.push_back(i);
    total += weights_[i];
  }
  if (total != 1)
    throw Error(ErrorCode::InvalidInstance,
                "move weights sum to " + rat_to_string(total) + ", not 1");
}

MoveDistribution MoveDistribution::uniform(MoveSet moves) {
  if (moves.empty())
    throw Error(ErrorCode::EmptyMoveSet, "uniform distribution on no moves");
  std::vector<Rat> w(moves.size(), make_rat(1, static_cast<long>(moves.size())));
  return MoveDistribution(std::move(moves), std::move(w));
}

Rat MoveDistribution::min_weight() const {
  if (weights_.empty())
    throw Error(ErrorCode::EmptyMoveSet, "no weights");
  return *std::min_element(weights_.begin(), weights_.end());
}

// -- integer kernel via column Hermite reduction ------------------------------

std::vector<Point> integer_kernel_basis(const IntegerMatrix& A) {
  std::size_t m = A.rows(), d = A.cols();
  std::vector<std::vector<mpz_class>> W(m, std::vector<mpz_class>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) W[i][j] = static_cast<long>(A.at(i, j));
  std::vector<std::vector<mpz_class>> U(d, std::vector<mpz_class>(d));
  for (std::size_t j = 0; j < d; ++j) U[j][j] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m; ++i) std::swap(W[i][a], W[i][b]);
    for (std::size_t i = 0; i < d; ++i) std::swap(U[i][a], U[i][b]);
  };
  // unimodular 2x2 update on columns (a, b)
  auto combine = [&](std::size_t a, std::size_t b, const mpz_class& s,
                     const mpz_class& t, const mpz_class& u,
                     const mpz_class& v) {
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class ca = s * W[i][a] + t * W[i][b];
      mpz_class cb = u * W[i][a] + v * W[i][b];
      W[i][a] = ca;
      W[i][b] = cb;
    }
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class ca = s * U[i][a] + t * U[i][b];
      mpz_class cb = u * U[i][a] + v * U[i][b];
      U[i][a] = ca;
      U[i][b] = cb;
    }
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < d; ++row) {
    std::size_t pivot = col;
    while (pivot < d && W[row][pivot] == 0) ++pivot;
    if (pivot == d) continue;
    if (pivot != col) swap_cols(pivot, col);
    for (std::size_t j = col + 1; j < d; ++j) {
      if (W[row][j] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 W[row][col].get_mpz_t(), W[row][j].get_mpz_t());
      mpz_class u = -W[row][j] / g;
      mpz_class v = W[row][col] / g;
      combine(col, j, s, t, u, v);
    }
    ++col;
  }

  std::vector<Point> basis;
  for (std::size_t j = col; j < d; ++j) {
    Point v(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!U[i][j].fits_slong_p())
        throw Error(ErrorCode::ResourceLimit, "kernel basis entry overflow");
      v[i] = U[i][j].get_si();
    }
    if (!is_zero(v)) basis.push_back(std::move(v));
  }
  return basis;
}

// -- Graver basis by completion -----------------------------------------------

namespace {

// Subtract the largest conformal multiple of each applicable element.
Point normal_form(Point r, const std::vector<Point>& generators) {
  bool reduced = true;
  while (reduced && !is_zero(r)) {
    reduced = false;
    for (const Point& g : generators) {
      if (!conformal_leq(g, r)) continue;
      Coord multiple = 0;
      bool first = true;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        Coord q = r[j] / g[j];  // same sign, |g[j]| <= |r[j]|, so q >= 1
        if (first || q < multiple) multiple = q;
        first = false;
      }
      if (multiple <= 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) r[j] -= multiple * g[j];
      reduced = true;
      if (is_zero(r)) return r;
    }
  }
  return r;
}

}  // namespace

MoveSet graver_basis(const IntegerMatrix& A, const GraverOptions& options) {
  if (A.is_zero() || A.cols() == 0)
    throw Error(ErrorCode::EmptyInput, "Graver basis of a zero matrix");
  std::size_t d = A.cols();

  std::vector<Point> generators;
  std::set<Point> seen;
  auto add_generator = [&](const Point& v) {
    if (seen.insert(v).second) generators.push_back(v);
  };
  for (const Point& v : integer_kernel_basis(A)) {
    add_generator(v);
    add_generator(negate(v));
  }
  if (generators.empty()) return MoveSet(d, {});

  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j) pending.emplace_back(i, j);

  std::uint64_t steps = 0;
  while (!pending.empty()) {
    if (++steps > options.max_pair_steps)
      throw Error(ErrorCode::ResourceLimit, "Graver completion step cap hit");
    auto [i, j] = pending.front();
    pending.pop_front();
    Point s = add(generators[i], generators[j]);
    if (is_zero(s)) continue;
    Point r = normal_form(std::move(s), generators);
    if (is_zero(r)) continue;
    for (int sign = 0; sign < 2; ++sign) {
      Point candidate = sign == 0 ? r : negate(r);
      if (!seen.insert(candidate).second) continue;
      generators.push_back(candidate);
      std::size_t index = generators.size() - 1;
      if (generators.size() > options.max_elements)
        throw Error(ErrorCode::ResourceLimit, "Graver completion element cap hit");
      for (std::size_t k = 0; k < index; ++k) pending.emplace_back(k, index);
      pending.emplace_back(index, index);
    }
  }

  // Keep only the conformally minimal elements.
  std::vector<Point> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size() && !dominated; ++j) {
      if (i == j) continue;
      if (conformal_leq(generators[j], generators[i])) dominated = true;
    }
    if (!dominated) minimal.push_back(generators[i]);
  }
  std::sort(minimal.begin(), minimal.end());
  return MoveSet(d, std::move(minimal));
}

std::vector<ConformalComponent> conformal_decompose(const Point& z,
                                                    const MoveSet& graver,
                                                    const IntegerMatrix* A) {
  if (z.size() != graver.dimension())
    throw Error(ErrorCode::DimensionMismatch, "vector vs basis dimension");
  if (A) {
    if (A->cols() != z.size())
      throw Error(ErrorCode::DimensionMismatch, "vector vs matrix columns");
    if (!is_zero(A->apply(z)))
      throw Error(ErrorCode::NotInKernel,
                  point_to_string(z) + " is not in the integer kernel");
  }

  std::vector<ConformalComponent> parts;
  Point r = z;
  while (!is_zero(r)) {
    // choose a conformal element of maximal l1 norm (first index on ties)
    const Point* best = nullptr;
    Coord best_norm = -1;
    for (const Point& g : graver.moves()) {
      if (!conformal_leq(g, r)) continue;
      Coord norm = l1_norm(g);
      if (norm > best_norm) {
        best_norm = norm;
        best = &g;
      }
    }
    if (!best)
      throw Error(ErrorCode::DecompositionFailure,
                  "no conformal element for residual " + point_to_string(r));
    Coord multiple = 0;
    bool first = true;
    for (std::size_t j = 0; j < best->size(); ++j) {
      if ((*best)[j] == 0) continue;
      Coord q = r[j] / (*best)[j];
      if (first || q < multiple) multiple = q;
      first = false;
    }
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= multiple * (*best)[j];
    parts.push_back({multiple, *best});
  }
  return parts;
}

bool is_markov_basis(const LatticePointSet& points, const MoveSet& moves) {
  if (points.size() <= 1) return true;
  return is_connected(build_fiber_graph(points, moves));
}

}  // namespace fiberwalk
