#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fiberwalk/basis.hpp"
#include "fiberwalk/lattice.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct EdgeLabel {
  std::size_t move;  // index into the move set
  Coord lambda;      // point(v) = point(u) + lambda * move, lambda != 0
};

struct Edge {
  std::size_t u;
  std::size_t v;  // u < v
  EdgeLabel label;
};

/// Undirected graph on the indices of a lattice point set. Edges carry the
/// move realizing them; plain graphs have |lambda| = 1, compressed graphs
/// store the label with the smallest |lambda|. No self-loops.
class FiberGraph {
 public:
  FiberGraph() = default;
  FiberGraph(LatticePointSet nodes, std::vector<Edge> edges, bool compressed);

  const LatticePointSet& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool compressed() const { return compressed_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::vector<std::size_t>>& adjacency() const {
    return adjacency_;
  }

  std::size_t degree(std::size_t node) const { return adjacency_[node].size(); }

 private:
  LatticePointSet nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  bool compressed_ = false;
};

/// u ~ v iff u - v in +-M.
FiberGraph build_fiber_graph(const LatticePointSet& points, const MoveSet& moves);

/// u ~ v iff u - v = lambda * m for some m in M and integer lambda != 0.
FiberGraph build_compressed_graph(const LatticePointSet& points,
                                  const MoveSet& moves);

/// BFS distances from one node to all nodes (kUnreachable when disconnected).
std::vector<std::size_t> bfs_distances(const FiberGraph& graph,
                                       std::size_t source);

/// Graph distance between two points of the node set; kUnreachable when they
/// are disconnected. Throws PointNotInSet.
std::size_t distance(const FiberGraph& graph, const Point& u, const Point& v);

/// Max pairwise distance; kUnreachable iff disconnected, 0 for <= 1 node.
std::size_t diameter(const FiberGraph& graph);

bool is_connected(const FiberGraph& graph);

/// Components sorted by their lexicographically smallest point; node indices
/// inside each component ascend.
std::vector<std::vector<std::size_t>> connected_components(const FiberGraph& graph);

enum class Norm { L1, Linf };

/// max pairwise ||u - v|| / ||M||, a lower bound for the plain graph's
/// diameter. Throws EmptyInput for |F| < 2 or empty M.
Rat diameter_lower_bound(const LatticePointSet& points, const MoveSet& moves,
                         Norm norm = Norm::L1);

/// Exact edge expansion h(G) = min over subsets S with 0 < |S| <= |V|/2 of
/// |boundary(S)| / |S|. Exhaustive; throws TooLarge for more than 24 nodes.
Rat edge_expansion(const FiberGraph& graph);

}  // namespace fiberwalk
