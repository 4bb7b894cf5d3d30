#include "dbal/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "dbal/parallel.hpp"

namespace dbal {

Graph::Graph(int vertex_count, const std::vector<Edge> &edges) : n_(vertex_count) {
  if (vertex_count < 0)
    fail(errc::bad_params, "vertex count must be nonnegative");
  adj_.resize(static_cast<size_t>(n_));
  for (const auto &[u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(errc::vertex_out_of_range,
           "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n=" +
               std::to_string(n_));
    if (u == v)
      fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto &nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    fail(errc::vertex_out_of_range,
         "vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
}

const std::vector<int> &Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[static_cast<size_t>(u)];
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

bool Graph::adjacent(int u, int v) const {
  const auto &nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_count() const {
  size_t total = 0;
  for (const auto &nbrs : adj_)
    total += nbrs.size();
  return static_cast<int>(total / 2);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

int DistanceMatrix::max_finite() const {
  int best = 0;
  for (int d : cells)
    best = std::max(best, d);
  return best;
}

std::vector<int> bfs_distances(const Graph &g, int source) {
  g.check_vertex(source);
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<size_t>(n), kUnreachable);
  dist[static_cast<size_t>(source)] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<size_t>(v)] == kUnreachable) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph &g, int threads) {
  const int n = g.vertex_count();
  DistanceMatrix dm;
  dm.n = n;
  dm.cells.assign(static_cast<size_t>(n) * n, kUnreachable);
  parallel_for(n, threads, [&](int u) {
    auto row = bfs_distances(g, u);
    std::copy(row.begin(), row.end(), dm.cells.begin() + static_cast<size_t>(u) * n);
  });
  dm.connected = std::none_of(dm.cells.begin(), dm.cells.end(),
                              [](int d) { return d == kUnreachable; });
  if (n == 0)
    dm.connected = true;
  return dm;
}

bool is_connected(const Graph &g) {
  const int n = g.vertex_count();
  if (n == 0)
    return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int diameter(const Graph &g) {
  if (!is_connected(g))
    fail(errc::disconnected, "diameter is undefined for disconnected graphs");
  if (g.vertex_count() <= 1)
    return 0;
  int best = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_distances(g, u);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<int> distance_shell(const Graph &g, const DistanceMatrix &dm, int u, int radius) {
  g.check_vertex(u);
  if (radius < 0)
    fail(errc::bad_params, "shell radius must be nonnegative");
  std::vector<int> shell;
  for (int w = 0; w < dm.n; ++w)
    if (dm.at(u, w) == radius)
      shell.push_back(w);
  return shell;
}

std::optional<Bipartition> bipartition(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != -1)
      continue;
    color[static_cast<size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition sides;
  for (int u = 0; u < n; ++u)
    (color[static_cast<size_t>(u)] == 0 ? sides.side_x : sides.side_y).push_back(u);
  return sides;
}

Graph complement(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    const auto &nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (int v = u + 1; v < n; ++v) {
      while (it != nbrs.end() && *it < v)
        ++it;
      if (it == nbrs.end() || *it != v)
        edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<std::vector<int>> connected_components(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<size_t>(root)])
      continue;
    std::vector<int> comp;
    std::deque<int> queue{root};
    seen[static_cast<size_t>(root)] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedSubgraph induced_subgraph(const Graph &g, const std::vector<int> &keep) {
  const int n = g.vertex_count();
  std::vector<int> old_to_new(static_cast<size_t>(n), -1);
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int next = 0;
  for (int u : sorted) {
    g.check_vertex(u);
    old_to_new[static_cast<size_t>(u)] = next++;
  }
  std::vector<Edge> edges;
  for (int u : sorted)
    for (int v : g.neighbors(u))
      if (u < v && old_to_new[static_cast<size_t>(v)] != -1)
        edges.emplace_back(old_to_new[static_cast<size_t>(u)], old_to_new[static_cast<size_t>(v)]);
  return InducedSubgraph{Graph(next, edges), std::move(old_to_new)};
}

std::vector<int> degree_sequence(const Graph &g) {
  std::vector<int> degs(static_cast<size_t>(g.vertex_count()));
  for (int u = 0; u < g.vertex_count(); ++u)
    degs[static_cast<size_t>(u)] = g.degree(u);
  return degs;
}

bool is_regular(const Graph &g) {
  auto degs = degree_sequence(g);
  return std::adjacent_find(degs.begin(), degs.end(), std::not_equal_to<>()) == degs.end();
}

Graph read_edge_list(std::istream &in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0)
        fail(errc::bad_params, "edge list line " + std::to_string(lineno) +
                                   ": expected vertex count");
    } else {
      int u = 0, v = 0;
      if (!(fields >> u >> v))
        fail(errc::bad_params,
             "edge list line " + std::to_string(lineno) + ": expected \"u v\"");
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (fields >> extra)
      fail(errc::bad_params,
           "edge list line " + std::to_string(lineno) + ": trailing token \"" + extra + "\"");
  }
  if (n < 0)
    fail(errc::bad_params, "edge list is empty: missing vertex count");
  return Graph(n, edges);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.vertex_count() << "\n";
  for (const auto &[u, v] : g.edges())
    out << u << " " << v << "\n";
}

Graph load_edge_list(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(errc::bad_params, "cannot open edge list file: " + path);
  return read_edge_list(in);
}

} // namespace dbal
