#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbal/error.hpp"

namespace dbal {

using Edge = std::pair<int, int>;

inline constexpr int kUnreachable = -1;

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are sorted ascending, loop-free and duplicate-free.
class Graph {
public:
  Graph() = default;

  /// Builds from an unordered edge list. Duplicate edges collapse silently;
  /// self-loops and out-of-range endpoints throw.
  Graph(int vertex_count, const std::vector<Edge> &edges);

  int vertex_count() const { return n_; }
  const std::vector<int> &neighbors(int u) const;
  int degree(int u) const;
  bool adjacent(int u, int v) const;
  int edge_count() const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  void check_vertex(int u) const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// All-pairs hop distances, row-major. kUnreachable marks separated pairs.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> cells;
  bool connected = false;

  int at(int u, int v) const { return cells[static_cast<size_t>(u) * n + v]; }
  const int *row(int u) const { return cells.data() + static_cast<size_t>(u) * n; }

  /// Largest finite entry (the diameter when connected).
  int max_finite() const;
};

/// The unique 2-coloring: the smallest vertex of each component sits in side_x.
struct Bipartition {
  std::vector<int> side_x;
  std::vector<int> side_y;
};

std::vector<int> bfs_distances(const Graph &g, int source);
DistanceMatrix all_pairs_distances(const Graph &g, int threads = 1);
bool is_connected(const Graph &g);
int diameter(const Graph &g);

/// Vertices at hop distance exactly `radius` from u (sorted ascending).
std::vector<int> distance_shell(const Graph &g, const DistanceMatrix &dm, int u, int radius);

/// Present iff the graph has no odd cycle.
std::optional<Bipartition> bipartition(const Graph &g);

Graph complement(const Graph &g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph &g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new; // length n of the source graph; -1 = dropped
};
InducedSubgraph induced_subgraph(const Graph &g, const std::vector<int> &keep);

std::vector<int> degree_sequence(const Graph &g);
bool is_regular(const Graph &g);

// Edge-list text format: '#' comment lines, then "n", then one "u v" per line.
// The writer emits edges with u < v in lexicographic order.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);
Graph load_edge_list(const std::string &path);

} // namespace dbal
