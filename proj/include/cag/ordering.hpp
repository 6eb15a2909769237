#ifndef CAG_ORDERING_HPP
#define CAG_ORDERING_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Which betweenness the circle condition uses: linear treats positions as
/// plain integers (no wrap), cyclic lets the interval wrap around the circle.
enum class Reading { linear, cyclic };

inline const char* to_string(Reading r) {
  return r == Reading::linear ? "linear" : "cyclic";
}

/// Clockwise placement of vertices on the host circle.
/// seq[p-1] is the vertex at clockwise position p.
struct Ordering {
  std::vector<int> seq;

  int size() const { return static_cast<int>(seq.size()); }
  int vertex_at(int pos) const { return seq[pos - 1]; }

  bool operator==(const Ordering&) const = default;
};

inline Ordering parse_ordering(const std::string& text) {
  std::istringstream in(text);
  Ordering o;
  int v;
  while (in >> v) o.seq.push_back(v);
  return o;
}

inline std::string serialize_ordering(const Ordering& o) {
  std::ostringstream out;
  for (int i = 0; i < o.size(); ++i) {
    if (i) out << ' ';
    out << o.seq[i];
  }
  return out.str();
}

inline Ordering reverse(const Ordering& o) {
  Ordering r = o;
  std::reverse(r.seq.begin(), r.seq.end());
  return r;
}

// positions[v] = clockwise position of vertex v; throws unless o is a
// permutation of 1..n.
inline std::vector<int> positions_of(const Ordering& o, int n) {
  if (o.size() != n)
    throw std::invalid_argument("ordering has " + std::to_string(o.size()) +
                                " entries, expected " + std::to_string(n));
  std::vector<int> pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    int v = o.vertex_at(p);
    if (v < 1 || v > n || pos[v] != 0)
      throw std::invalid_argument("ordering is not a permutation of 1.." +
                                  std::to_string(n));
    pos[v] = p;
  }
  return pos;
}

/// Vertices strictly between a and b, in clockwise order.
inline std::vector<int> between(const Ordering& o, Reading r, int a, int b) {
  if (a == b) throw std::invalid_argument("between requires distinct vertices");
  const int n = o.size();
  std::vector<int> pos = positions_of(o, n);
  std::vector<int> out;
  if (r == Reading::linear) {
    if (pos[a] >= pos[b]) return out;
    for (int p = pos[a] + 1; p < pos[b]; ++p) out.push_back(o.vertex_at(p));
  } else {
    for (int p = pos[a] % n + 1; p != pos[b]; p = p % n + 1)
      out.push_back(o.vertex_at(p));
  }
  return out;
}

/// Which implication of the ordering condition failed.
enum class MissingEdge { lj, li };

struct Violation {
  int i = 0, l = 0, j = 0;
  MissingEdge missing = MissingEdge::lj;
  Reading reading = Reading::cyclic;

  bool operator==(const Violation&) const = default;
};

inline std::string violation_line(const Violation& v) {
  std::ostringstream out;
  out << "violation i=" << v.i << " l=" << v.l << " j=" << v.j
      << " missing=" << (v.missing == MissingEdge::lj ? "lj" : "li");
  return out.str();
}

namespace detail {

// Shared scan: ordered pairs by position of i, then j, then l clockwise.
// First failing triple wins. Flat adjacency matrix keeps the inner loop cheap
// for the exhaustive oracles.
inline std::optional<Violation> scan_ordering(const Graph& g, const Ordering& o,
                                              Reading r, bool proper) {
  const int n = g.order();
  std::vector<int> pos = positions_of(o, n);
  (void)pos;
  std::vector<char> adj(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int u = 1; u <= n; ++u)
    for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u) * (n + 1) + v] = 1;
  auto edge = [&](int u, int v) {
    return adj[static_cast<std::size_t>(u) * (n + 1) + v] != 0;
  };
  for (int pi = 1; pi <= n; ++pi) {
    int i = o.vertex_at(pi);
    for (int pj = 1; pj <= n; ++pj) {
      if (pj == pi) continue;
      int j = o.vertex_at(pj);
      if (!edge(i, j)) continue;
      if (r == Reading::linear && pi >= pj) continue;
      for (int p = pi % n + 1; p != pj; p = p % n + 1) {
        // linear mode never wraps: pi < pj, so p runs pi+1..pj-1
        int l = o.vertex_at(p);
        if (!edge(l, j)) return Violation{i, l, j, MissingEdge::lj, r};
        if (proper && !edge(l, i)) return Violation{i, l, j, MissingEdge::li, r};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// nullopt = the ordering satisfies the circular-ordering condition.
inline std::optional<Violation> check_circular(const Graph& g, const Ordering& o,
                                               Reading r) {
  return detail::scan_ordering(g, o, r, false);
}

inline std::optional<Violation> check_proper_circular(const Graph& g,
                                                      const Ordering& o,
                                                      Reading r) {
  return detail::scan_ordering(g, o, r, true);
}

// Interval checks are the linear-mode checks under their classical names.
inline std::optional<Violation> check_interval(const Graph& g, const Ordering& o) {
  return check_circular(g, o, Reading::linear);
}

inline std::optional<Violation> check_proper_interval(const Graph& g,
                                                      const Ordering& o) {
  return check_proper_circular(g, o, Reading::linear);
}

}  // namespace cag

#endif  // CAG_ORDERING_HPP
