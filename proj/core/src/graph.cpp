#include "fiberwalk/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "fiberwalk/errors.hpp"

namespace fiberwalk {

FiberGraph::FiberGraph(LatticePointSet nodes, std::vector<Edge> edges,
                       bool compressed)
    : nodes_(std::move(nodes)), edges_(std::move(edges)),
      compressed_(compressed) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  adjacency_.resize(nodes_.size());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

namespace {

void check_dimensions(const LatticePointSet& points, const MoveSet& moves) {
  if (!moves.empty() && moves.dimension() != points.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "moves and point set live in different dimensions");
}

// Smallest positive lambda (over moves, ties to the smaller move index) with
// diff = lambda * m or -lambda * m; returns the signed lambda for the first
// orientation.
std::optional<EdgeLabel> compressed_label(const Point& diff,
                                          const MoveSet& moves) {
  std::optional<EdgeLabel> best;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Point& m = moves.move(k);
    if (is_zero(m) || !collinear(diff, m)) continue;
    std::size_t pivot = 0;
    while (m[pivot] == 0) ++pivot;
    if (diff[pivot] % m[pivot] != 0) continue;
    Coord lambda = diff[pivot] / m[pivot];
    if (scale(m, lambda) != diff) continue;
    Coord mag = lambda < 0 ? -lambda : lambda;
    Coord best_mag = best ? (best->lambda < 0 ? -best->lambda : best->lambda) : 0;
    if (!best || mag < best_mag) best = EdgeLabel{k, lambda};
  }
  return best;
}

}  // namespace

FiberGraph build_fiber_graph(const LatticePointSet& points,
                             const MoveSet& moves) {
  check_dimensions(points, moves);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const Point& m = moves.move(k);
      if (is_zero(m)) continue;
      for (int sign : {1, -1}) {
        Point target = sign > 0 ? add(points.point(i), m)
                                : sub(points.point(i), m);
        auto j = points.index_of(target);
        if (!j || *j <= i) continue;
        // keep one label per node pair, smallest move index first
        bool duplicate = false;
        for (auto it = edges.rbegin(); it != edges.rend() && it->u == i; ++it)
          if (it->v == *j) {
            duplicate = true;
            break;
          }
        if (!duplicate)
          edges.push_back({i, *j, {k, static_cast<Coord>(sign)}});
      }
    }
  }
  return FiberGraph(points, std::move(edges), false);
}

FiberGraph build_compressed_graph(const LatticePointSet& points,
                                  const MoveSet& moves) {
  check_dimensions(points, moves);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Point diff = sub(points.point(j), points.point(i));
      if (auto label = compressed_label(diff, moves))
        edges.push_back({i, j, *label});
    }
  return FiberGraph(points, std::move(edges), true);
}

std::vector<std::size_t> bfs_distances(const FiberGraph& graph,
                                       std::size_t source) {
  std::vector<std::size_t> dist(graph.node_count(), kUnreachable);
  std::deque<std::size_t> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : graph.adjacency()[u]) {
      if (dist[v] != kUnreachable) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::size_t distance(const FiberGraph& graph, const Point& u, const Point& v) {
  auto iu = graph.nodes().index_of(u);
  auto iv = graph.nodes().index_of(v);
  if (!iu || !iv)
    throw Error(ErrorCode::PointNotInSet,
                point_to_string(!iu ? u : v) + " is not a node");
  if (*iu == *iv) return 0;
  return bfs_distances(graph, *iu)[*iv];
}

std::size_t diameter(const FiberGraph& graph) {
  std::size_t n = graph.node_count();
  if (n <= 1) return 0;
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    auto dist = bfs_distances(graph, s);
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] == kUnreachable) return kUnreachable;
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

bool is_connected(const FiberGraph& graph) {
  if (graph.node_count() <= 1) return true;
  auto dist = bfs_distances(graph, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreachable; });
}

std::vector<std::vector<std::size_t>> connected_components(
    const FiberGraph& graph) {
  std::size_t n = graph.node_count();
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> visited(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::vector<std::size_t> component;
    std::deque<std::size_t> queue{s};
    visited[s] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (std::size_t v : graph.adjacency()[u])
        if (!visited[v]) {
          visited[v] = true;
          queue.push_back(v);
        }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  // Nodes are in lexicographic order, so sorting by the first index orders
  // components by their smallest point.
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Rat diameter_lower_bound(const LatticePointSet& points, const MoveSet& moves,
                         Norm norm) {
  if (points.size() < 2)
    throw Error(ErrorCode::EmptyInput, "need at least two points");
  if (moves.empty()) throw Error(ErrorCode::EmptyInput, "empty move set");
  auto point_norm = [&](const Point& p) {
    return norm == Norm::L1 ? l1_norm(p) : linf_norm(p);
  };
  Coord spread = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      spread = std::max(spread,
                        point_norm(sub(points.point(i), points.point(j))));
  Coord move_norm = norm == Norm::L1 ? moves.l1_norm() : moves.linf_norm();
  if (move_norm == 0) throw Error(ErrorCode::EmptyInput, "all moves are zero");
  return make_rat(static_cast<long>(spread), static_cast<long>(move_norm));
}

Rat edge_expansion(const FiberGraph& graph) {
  std::size_t n = graph.node_count();
  if (n > 24)
    throw Error(ErrorCode::TooLarge,
                "edge expansion is exhaustive; 24 nodes max");
  if (n < 2)
    throw Error(ErrorCode::EmptyInput, "edge expansion needs two nodes");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : graph.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  Rat best;
  bool first = true;
  std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                               : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t s = 1; s < full; ++s) {
    int size = std::popcount(s);
    if (size > static_cast<int>(n / 2)) continue;
    long boundary = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) boundary += std::popcount(adj[v] & ~s);
    Rat ratio = make_rat(boundary, size);
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  return best;
}

}  // namespace fiberwalk
