#include "fiberwalk/rays.hpp"

#include <algorithm>
#include <set>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/graph.hpp"
#include "fiberwalk/walk.hpp"

namespace fiberwalk {

std::vector<std::vector<std::size_t>> ray_decomposition(
    const LatticePointSet& points, const Point& move) {
  if (is_zero(move)) throw Error(ErrorCode::ZeroMove, "ray decomposition");
  std::vector<std::vector<std::size_t>> rays_out;
  std::vector<bool> done(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> indices;
    for (const Point& p : ray(points.point(i), move, points)) {
      std::size_t idx = *points.index_of(p);
      done[idx] = true;
      indices.push_back(idx);
    }
    rays_out.push_back(std::move(indices));
  }
  // Points are indexed lexicographically, so the smallest index is the
  // lexicographically smallest point of the ray.
  std::sort(rays_out.begin(), rays_out.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });
  return rays_out;
}

RayMatrix ray_matrix(const LatticePointSet& points, const MoveSet& moves,
                     const std::vector<std::size_t>& subset_indices) {
  if (subset_indices.empty())
    throw Error(ErrorCode::SubsetViolation, "empty move subset");
  std::set<std::size_t> seen;
  for (std::size_t idx : subset_indices) {
    if (idx >= moves.size())
      throw Error(ErrorCode::SubsetViolation,
                  "subset index " + std::to_string(idx) + " out of range");
    if (!seen.insert(idx).second)
      throw Error(ErrorCode::SubsetViolation,
                  "duplicate subset index " + std::to_string(idx));
  }

  std::vector<Point> rest;
  for (std::size_t k = 0; k < moves.size(); ++k)
    if (!seen.count(k)) rest.push_back(moves.move(k));
  // Components are taken in the plain graph on the remaining moves.
  FiberGraph remainder =
      build_fiber_graph(points, MoveSet(points.dimension(), rest));
  auto components = connected_components(remainder);

  RayMatrix out;
  out.subset = subset_indices;
  out.components = components;
  for (std::size_t s = 0; s < subset_indices.size(); ++s) {
    for (auto& r : ray_decomposition(points, moves.move(subset_indices[s]))) {
      out.row_move.push_back(s);
      out.rays.push_back(std::move(r));
    }
  }

  std::vector<std::size_t> component_of(points.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t idx : components[c]) component_of[idx] = c;

  out.counts = IntegerMatrix(out.rays.size(), components.size());
  for (std::size_t r = 0; r < out.rays.size(); ++r)
    for (std::size_t idx : out.rays[r])
      out.counts.at(r, component_of[idx]) += 1;
  return out;
}

KernelSummary ray_matrix_kernel(const RayMatrix& matrix) {
  RatMatrix m(matrix.counts.rows(), matrix.counts.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = Rat(static_cast<long>(matrix.counts.at(i, j)));
  KernelSummary summary;
  summary.rank = rank(m);
  summary.kernel_basis = nullspace_basis(m);
  summary.kernel_dimension = summary.kernel_basis.size();
  return summary;
}

bool intersecting_ray_property(const LatticePointSet& points, const Point& m,
                               const Point& mprime) {
  if (collinear(m, mprime))
    throw Error(ErrorCode::CollinearMoves,
                "intersecting ray property needs non-collinear moves");
  auto rays_m = ray_decomposition(points, m);
  auto rays_mp = ray_decomposition(points, mprime);

  std::size_t n = points.size();
  std::vector<std::size_t> ray_of_m(n), ray_of_mp(n);
  for (std::size_t r = 0; r < rays_m.size(); ++r)
    for (std::size_t idx : rays_m[r]) ray_of_m[idx] = r;
  for (std::size_t r = 0; r < rays_mp.size(); ++r)
    for (std::size_t idx : rays_mp[r]) ray_of_mp[idx] = r;

  // meets[r][r'] = 1 when ray r of m intersects ray r' of m'
  std::vector<std::vector<char>> meets(
      rays_m.size(), std::vector<char>(rays_mp.size(), 0));
  for (std::size_t idx = 0; idx < n; ++idx)
    meets[ray_of_m[idx]][ray_of_mp[idx]] = 1;

  for (std::size_t r1 = 0; r1 < rays_m.size(); ++r1)
    for (std::size_t r1p = 0; r1p < rays_mp.size(); ++r1p) {
      if (!meets[r1][r1p]) continue;
      for (std::size_t r2 = 0; r2 < rays_m.size(); ++r2)
        for (std::size_t r2p = 0; r2p < rays_mp.size(); ++r2p) {
          if (!meets[r2][r2p]) continue;
          if (!meets[r1][r2p]) continue;
          if (!meets[r2][r1p]) return false;
          // |R1| / |R1'| = |R2| / |R2'| cross-multiplied in integers
          if (rays_m[r1].size() * rays_mp[r2p].size() !=
              rays_m[r2].size() * rays_mp[r1p].size())
            return false;
        }
    }
  return true;
}

bool has_intersecting_ray_property(const LatticePointSet& points,
                                   const MoveSet& moves) {
  for (std::size_t i = 0; i < moves.size(); ++i)
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      if (collinear(moves.move(i), moves.move(j)))
        continue;  // +-m pairs share their rays and commute trivially
      if (!intersecting_ray_property(points, moves.move(i), moves.move(j)))
        return false;
    }
  return true;
}

}  // namespace fiberwalk
