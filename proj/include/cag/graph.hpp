#ifndef CAG_GRAPH_HPP
#define CAG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cag {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph on vertices 1..n, adjacency stored as sets.
/// Symmetric and irreflexive by construction.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  int order() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].count(v) != 0;
  }

  const std::set<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 1; v <= n_; ++v) twice += static_cast<int>(adj_[v].size());
    return twice / 2;
  }

  // Edges with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  std::vector<std::set<int>> adj_;
};

/// BFS shortest-path distances; kUnreachable marks disconnected pairs.
struct DistanceMatrix {
  static constexpr int kUnreachable = -1;

  int n = 0;
  std::vector<std::vector<int>> d;  // (n+1) x (n+1), index 0 unused

  int at(int u, int v) const { return d[u][v]; }
};

// Sentinel for "infinite" diameter (disconnected graph).
constexpr int kInfiniteDiameter = -1;

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(n + 1, std::vector<int>(n + 1, DistanceMatrix::kUnreachable));
  for (int s = 1; s <= n; ++s) {
    dm.d[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dm.d[s][w] == DistanceMatrix::kUnreachable) {
          dm.d[s][w] = dm.d[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return dm;
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(n + 1, false);
  std::queue<int> q;
  q.push(1);
  seen[1] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

/// Largest finite distance; kInfiniteDiameter when disconnected (n >= 2).
inline int diameter(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  if (!is_connected(g)) return kInfiniteDiameter;
  DistanceMatrix dm = all_pairs_distances(g);
  int best = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) best = std::max(best, dm.at(u, v));
  return best;
}

/// k-th power: edge uv iff d_G(u,v) <= k. Never joins components.
inline Graph power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  const int n = g.order();
  DistanceMatrix dm = all_pairs_distances(g);
  Graph h(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      int dist = dm.at(u, v);
      if (dist != DistanceMatrix::kUnreachable && dist <= k) h.add_edge(u, v);
    }
  return h;
}

// ---------------------------------------------------------------------------
// File format: "p edge <n> <m>" header, then m lines "e <u> <v>" with u < v.
// '#' comment lines ignored. Duplicate edge lines are idempotent.
// ---------------------------------------------------------------------------

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<Graph> g;
  int declared_edges = 0;
  int seen_edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "p") {
      if (g)
        throw parse_error("duplicate header (line " + std::to_string(lineno) + ")");
      std::string fmt;
      int n, m;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw parse_error("malformed header (line " + std::to_string(lineno) + ")");
      g.emplace(n);
      declared_edges = m;
    } else if (tag == "e") {
      if (!g)
        throw parse_error("edge before header (line " + std::to_string(lineno) + ")");
      int u, v;
      if (!(ls >> u >> v))
        throw parse_error("malformed edge line (line " + std::to_string(lineno) + ")");
      if (u < 1 || u > g->order())
        throw parse_error("vertex " + std::to_string(u) + " out of range (line " +
                          std::to_string(lineno) + ")");
      if (v < 1 || v > g->order())
        throw parse_error("vertex " + std::to_string(v) + " out of range (line " +
                          std::to_string(lineno) + ")");
      if (u == v)
        throw parse_error("self-loop at vertex " + std::to_string(u) + " (line " +
                          std::to_string(lineno) + ")");
      g->add_edge(u, v);
      ++seen_edges;
    } else {
      throw parse_error("unrecognized line tag '" + tag + "' (line " +
                        std::to_string(lineno) + ")");
    }
  }
  if (!g) throw parse_error("missing header line");
  if (seen_edges != declared_edges)
    throw parse_error("header declares " + std::to_string(declared_edges) +
                      " edges, found " + std::to_string(seen_edges));
  return *g;
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << "p edge " << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

/// G(n,p) with mt19937_64; identical (n, p, seed) gives identical graphs
/// on every platform (raw generator output, no library distributions).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937_64 gen(seed);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      // top 53 bits -> uniform double in [0,1)
      double x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(u, v);
    }
  return g;
}

/// Streams every labeled graph on 1..n exactly once, edge set read off a
/// binary counter over the pair list (1,2),(1,3),...,(n-1,n).
class GraphEnumerator {
 public:
  GraphEnumerator(int n, bool connected_only, int cap = 6)
      : n_(n), connected_only_(connected_only), code_(0) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > cap)
      throw cap_exceeded("enumeration cap exceeded: n=" + std::to_string(n) +
                         " > cap=" + std::to_string(cap));
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs_.emplace_back(u, v);
    total_ = std::uint64_t{1} << pairs_.size();
  }

  std::optional<Graph> next() {
    while (code_ < total_) {
      Graph g(n_);
      for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (code_ & (std::uint64_t{1} << i))
          g.add_edge(pairs_[i].first, pairs_[i].second);
      ++code_;
      if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
  }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t code_;
  std::uint64_t total_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace cag

#endif  // CAG_GRAPH_HPP
