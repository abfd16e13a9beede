#include "fiberwalk/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fiberwalk {

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<Coord>>& rows) {
  if (rows.empty()) return {};
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Point IntegerMatrix::apply(const Point& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  Point out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Coord c) { return c == 0; });
}

std::size_t PolytopeSpec::dimension() const {
  if (equalities) return equalities->first.cols();
  if (inequalities) return inequalities->first.cols();
  if (lower) return lower->size();
  if (upper) return upper->size();
  return 0;
}

void PolytopeSpec::validate() const {
  if (!equalities && !inequalities && !lower && !upper)
    throw Error(ErrorCode::EmptyInput, "polytope spec has no blocks");
  std::size_t d = dimension();
  if (d == 0) throw Error(ErrorCode::EmptyInput, "zero-dimensional spec");
  if (equalities) {
    if (equalities->first.cols() != d ||
        equalities->second.size() != equalities->first.rows())
      throw Error(ErrorCode::DimensionMismatch, "equality block shape");
  }
  if (inequalities) {
    if (inequalities->first.cols() != d ||
        inequalities->second.size() != inequalities->first.rows())
      throw Error(ErrorCode::DimensionMismatch, "inequality block shape");
  }
  if (lower && lower->size() != d)
    throw Error(ErrorCode::DimensionMismatch, "lower bound length");
  if (upper && upper->size() != d)
    throw Error(ErrorCode::DimensionMismatch, "upper bound length");
}

LatticePointSet::LatticePointSet(std::size_t dimension,
                                 std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
  for (const Point& p : points_)
    if (p.size() != dimension_)
      throw Error(ErrorCode::DimensionMismatch,
                  "point dimension " + std::to_string(p.size()) +
                      " in a set of dimension " + std::to_string(dimension_));
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (!points_.empty()) {
    min_ = max_ = points_.front();
    for (const Point& p : points_)
      for (std::size_t j = 0; j < dimension_; ++j) {
        min_[j] = std::min(min_[j], p[j]);
        max_[j] = std::max(max_[j], p[j]);
      }
  }
}

std::optional<std::size_t> LatticePointSet::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

const Point& LatticePointSet::coordinate_min() const {
  if (points_.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
  return min_;
}

const Point& LatticePointSet::coordinate_max() const {
  if (points_.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
  return max_;
}

namespace {

// One inequality sum_j a[j] x_j <= rhs with primitive integer coefficients.
struct LinRow {
  std::vector<mpz_class> a;
  Rat rhs;
};

void normalize_row(LinRow& row) {
  mpz_class g = 0;
  for (const auto& c : row.a) {
    mpz_class abs_c = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), abs_c.get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : row.a) c /= g;
    row.rhs /= Rat(g);
  }
}

bool is_constant(const LinRow& row) {
  return std::all_of(row.a.begin(), row.a.end(),
                     [](const mpz_class& c) { return c == 0; });
}

std::vector<LinRow> dedupe_rows(std::vector<LinRow> rows) {
  std::map<std::vector<mpz_class>, Rat> best;
  for (auto& row : rows) {
    auto it = best.find(row.a);
    if (it == best.end())
      best.emplace(std::move(row.a), std::move(row.rhs));
    else if (row.rhs < it->second)
      it->second = row.rhs;
  }
  std::vector<LinRow> out;
  out.reserve(best.size());
  for (auto& [a, rhs] : best) out.push_back(LinRow{a, rhs});
  return out;
}

// Projections of the relaxed system onto the leading coordinates.
// chain[k] holds rows supported on x_0..x_k; eliminating x_k fills
// chain[k-1]. Constant rows are checked for feasibility and dropped.
struct ProjectionChain {
  std::size_t dim;
  std::vector<std::vector<LinRow>> systems;
  bool infeasible = false;
};

ProjectionChain build_chain(std::size_t dim, std::vector<LinRow> rows) {
  ProjectionChain chain;
  chain.dim = dim;
  chain.systems.resize(dim);
  std::vector<LinRow> current;
  for (auto& row : rows) {
    normalize_row(row);
    if (is_constant(row)) {
      if (row.rhs < 0) chain.infeasible = true;
    } else {
      current.push_back(std::move(row));
    }
  }
  current = dedupe_rows(std::move(current));

  for (std::size_t k = dim; k-- > 0;) {
    std::vector<LinRow> with_k, without_k;
    for (auto& row : current) {
      if (row.a[k] != 0)
        with_k.push_back(std::move(row));
      else
        without_k.push_back(std::move(row));
    }
    chain.systems[k] = with_k;
    for (auto& row : without_k) chain.systems[k].push_back(row);
    if (k == 0) break;

    std::vector<LinRow> next = std::move(without_k);
    for (const auto& p : with_k) {
      if (p.a[k] <= 0) continue;
      for (const auto& n : with_k) {
        if (n.a[k] >= 0) continue;
        LinRow combined;
        combined.a.resize(dim);
        for (std::size_t j = 0; j < dim; ++j)
          combined.a[j] = p.a[k] * n.a[j] - n.a[k] * p.a[j];
        combined.rhs = Rat(p.a[k]) * n.rhs - Rat(n.a[k]) * p.rhs;
        normalize_row(combined);
        if (is_constant(combined)) {
          if (combined.rhs < 0) chain.infeasible = true;
        } else {
          next.push_back(std::move(combined));
        }
      }
    }
    current = dedupe_rows(std::move(next));
  }
  return chain;
}

// Every coordinate must have an upper and a lower bounding row in its
// projected system, otherwise the relaxation is unbounded along it.
std::optional<std::pair<std::size_t, bool>> unbounded_direction(
    const ProjectionChain& chain) {
  for (std::size_t k = 0; k < chain.dim; ++k) {
    bool has_upper = false, has_lower = false;
    for (const auto& row : chain.systems[k]) {
      if (row.a[k] > 0) has_upper = true;
      if (row.a[k] < 0) has_lower = true;
    }
    if (!has_upper) return std::make_pair(k, true);
    if (!has_lower) return std::make_pair(k, false);
  }
  return std::nullopt;
}

constexpr Coord kSpanGuard = 100000000;

std::vector<Point> enumerate_chain(const ProjectionChain& chain) {
  std::vector<Point> out;
  Point x(chain.dim, 0);
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    bool has_lo = false, has_hi = false;
    mpz_class lo, hi;
    for (const auto& row : chain.systems[k]) {
      if (row.a[k] == 0) continue;
      Rat slack = row.rhs;
      for (std::size_t j = 0; j < k; ++j)
        if (row.a[j] != 0) slack -= Rat(row.a[j]) * Rat(static_cast<long>(x[j]));
      Rat bound = slack / Rat(row.a[k]);
      mpz_class value;
      if (row.a[k] > 0) {
        mpz_fdiv_q(value.get_mpz_t(), bound.get_num_mpz_t(),
                   bound.get_den_mpz_t());
        if (!has_hi || value < hi) hi = value;
        has_hi = true;
      } else {
        mpz_cdiv_q(value.get_mpz_t(), bound.get_num_mpz_t(),
                   bound.get_den_mpz_t());
        if (!has_lo || value > lo) lo = value;
        has_lo = true;
      }
    }
    // Both bounds exist for every coordinate (checked before the descent);
    // an empty interval just means this prefix has no integer extension.
    if (!has_lo || !has_hi)
      throw Error(ErrorCode::Internal, "missing bound during enumeration");
    if (lo > hi) return;
    if (!lo.fits_slong_p() || !hi.fits_slong_p() ||
        hi.get_si() - lo.get_si() > kSpanGuard)
      throw Error(ErrorCode::ResourceLimit, "enumeration span too large");
    for (Coord v = lo.get_si(); v <= hi.get_si(); ++v) {
      x[k] = v;
      if (k + 1 == chain.dim)
        out.push_back(x);
      else
        descend(k + 1);
    }
  };
  descend(0);
  return out;
}

struct BuiltSystem {
  std::size_t dim;
  std::vector<LinRow> rows;
};

LinRow row_from_ints(const std::vector<Coord>& coeffs, Coord rhs) {
  LinRow row;
  row.a.reserve(coeffs.size());
  for (Coord c : coeffs) row.a.emplace_back(static_cast<long>(c));
  row.rhs = Rat(static_cast<long>(rhs));
  return row;
}

BuiltSystem build_polytope_system(const PolytopeSpec& spec, Coord factor) {
  spec.validate();
  std::size_t d = spec.dimension();
  BuiltSystem sys;
  sys.dim = d;
  if (spec.equalities) {
    const auto& [A, b] = *spec.equalities;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      std::vector<Coord> coeffs(d), neg(d);
      for (std::size_t j = 0; j < d; ++j) {
        coeffs[j] = A.at(i, j);
        neg[j] = -A.at(i, j);
      }
      sys.rows.push_back(row_from_ints(coeffs, b[i] * factor));
      sys.rows.push_back(row_from_ints(neg, -b[i] * factor));
    }
  }
  if (spec.inequalities) {
    const auto& [G, h] = *spec.inequalities;
    for (std::size_t i = 0; i < G.rows(); ++i) {
      std::vector<Coord> coeffs(d);
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = G.at(i, j);
      sys.rows.push_back(row_from_ints(coeffs, h[i] * factor));
    }
  }
  if (spec.lower) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Coord> coeffs(d, 0);
      coeffs[j] = -1;
      sys.rows.push_back(row_from_ints(coeffs, -(*spec.lower)[j] * factor));
    }
  }
  if (spec.upper) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Coord> coeffs(d, 0);
      coeffs[j] = 1;
      sys.rows.push_back(row_from_ints(coeffs, (*spec.upper)[j] * factor));
    }
  }
  return sys;
}

LatticePointSet enumerate_system(const BuiltSystem& sys, ErrorCode unbounded_code,
                                 const PolytopeSpec* equality_check) {
  ProjectionChain chain = build_chain(sys.dim, sys.rows);
  if (chain.infeasible) return LatticePointSet(sys.dim, {});
  if (auto dir = unbounded_direction(chain)) {
    throw Error(unbounded_code,
                "coordinate " + std::to_string(dir->first + 1) + " has no " +
                    (dir->second ? "upper" : "lower") +
                    " bound on the relaxation");
  }
  std::vector<Point> points = enumerate_chain(chain);
  if (equality_check && equality_check->equalities) {
    const auto& [A, b] = *equality_check->equalities;
    for (const Point& p : points)
      if (A.apply(p) != b)
        throw Error(ErrorCode::Internal, "enumerated point violates equalities");
  }
  return LatticePointSet(sys.dim, std::move(points));
}

}  // namespace

LatticePointSet enumerate_fiber(const IntegerMatrix& A, const Point& b) {
  if (b.size() != A.rows())
    throw Error(ErrorCode::DimensionMismatch, "rhs length vs matrix rows");
  if (A.cols() == 0) throw Error(ErrorCode::EmptyInput, "matrix with no columns");
  PolytopeSpec spec;
  spec.equalities = {A, b};
  spec.lower = Point(A.cols(), 0);
  BuiltSystem sys = build_polytope_system(spec, 1);
  return enumerate_system(sys, ErrorCode::UnboundedFiber, &spec);
}

LatticePointSet enumerate_polytope(const PolytopeSpec& spec) {
  BuiltSystem sys = build_polytope_system(spec, 1);
  return enumerate_system(sys, ErrorCode::UnboundedRegion, &spec);
}

LatticePointSet dilate(const PolytopeSpec& spec, Coord factor) {
  if (factor < 1)
    throw Error(ErrorCode::EmptyInput, "dilation factor must be >= 1");
  BuiltSystem sys = build_polytope_system(spec, factor);
  return enumerate_system(sys, ErrorCode::UnboundedRegion, nullptr);
}

}  // namespace fiberwalk
