#ifndef CAG_ARC_MODEL_HPP
#define CAG_ARC_MODEL_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cag/graph.hpp"
#include "cag/ordering.hpp"

namespace cag {

/// Closed arc on a discrete m-position clock, running clockwise from s to e
/// inclusive. s == e is a point arc; s == e+1 (cyclically) is the full circle.
struct ClockArc {
  int vertex = 0;
  int s = 0;
  int e = 0;

  bool operator==(const ClockArc&) const = default;
};

/// One arc per vertex 1..n on an m-hour clock.
struct ArcModel {
  int m = 0;
  std::vector<ClockArc> arcs;  // arcs[v-1].vertex == v

  int order() const { return static_cast<int>(arcs.size()); }
  const ClockArc& arc(int v) const { return arcs[v - 1]; }

  bool operator==(const ArcModel&) const = default;
};

inline int covered_size(const ClockArc& a, int m) {
  return ((a.e - a.s) % m + m) % m + 1;
}

inline bool arc_covers(const ClockArc& a, int m, int pos) {
  (void)m;
  if (a.s <= a.e) return a.s <= pos && pos <= a.e;
  return pos >= a.s || pos <= a.e;  // wrap
}

inline std::set<int> covered(const ClockArc& a, int m) {
  std::set<int> out;
  int p = a.s;
  for (int c = covered_size(a, m); c > 0; --c) {
    out.insert(p);
    p = p % m + 1;
  }
  return out;
}

// Two closed arcs meet iff one contains an endpoint of the other.
inline bool arcs_intersect(const ClockArc& a, const ClockArc& b, int m) {
  return arc_covers(a, m, b.s) || arc_covers(a, m, b.e) ||
         arc_covers(b, m, a.s) || arc_covers(b, m, a.e);
}

inline Graph intersection_graph(const ArcModel& model) {
  const int n = model.order();
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (arcs_intersect(model.arc(u), model.arc(v), model.m)) g.add_edge(u, v);
  return g;
}

/// The ordering-to-arcs construction: vertex v gets the arc ending at its
/// clockwise position and starting at the last consecutive anticlockwise
/// neighbor. No anticlockwise neighbor gives a point arc; a walk that
/// consumes all other vertices gives the full circle.
/// Always produces a model; callers compare intersection_graph to g.
inline ArcModel build_model(const Graph& g, const Ordering& o) {
  const int n = g.order();
  std::vector<int> pos = positions_of(o, n);
  (void)pos;
  ArcModel model;
  model.m = n;
  model.arcs.resize(n);
  for (int p = 1; p <= n; ++p) {
    int v = o.vertex_at(p);
    int q = p;
    int consumed = 0;
    while (consumed < n - 1) {
      int qprev = (q == 1) ? n : q - 1;
      if (!g.has_edge(v, o.vertex_at(qprev))) break;
      q = qprev;
      ++consumed;
    }
    ClockArc a;
    a.vertex = v;
    a.e = p;
    if (consumed == n - 1 && n > 1)
      a.s = p % n + 1;  // full circle
    else
      a.s = q;
    model.arcs[v - 1] = a;
  }
  return model;
}

struct ContainmentWitness {
  int contained = 0;  // arc properly inside
  int container = 0;

  bool operator==(const ContainmentWitness&) const = default;
};

/// nullopt = proper (no arc properly contained in another; equal arcs allowed).
inline std::optional<ContainmentWitness> is_proper(const ArcModel& model) {
  const int n = model.order();
  std::vector<std::set<int>> cov(n);
  for (int v = 1; v <= n; ++v) cov[v - 1] = covered(model.arc(v), model.m);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (cov[u - 1].size() < cov[v - 1].size() &&
          std::includes(cov[v - 1].begin(), cov[v - 1].end(), cov[u - 1].begin(),
                        cov[u - 1].end()))
        return ContainmentWitness{u, v};
    }
  return std::nullopt;
}

/// Vertices sorted by clockwise end position, ties by vertex id.
inline Ordering extract_ordering(const ArcModel& model) {
  std::vector<int> verts(model.order());
  for (int v = 1; v <= model.order(); ++v) verts[v - 1] = v;
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (model.arc(a).e != model.arc(b).e) return model.arc(a).e < model.arc(b).e;
    return a < b;
  });
  return Ordering{verts};
}

// ---------------------------------------------------------------------------
// File format: "clock <m>" header, then one line per vertex "a <v> <s> <e>".
// ---------------------------------------------------------------------------

inline ArcModel parse_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<ClockArc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "clock") {
      if (m >= 0)
        throw parse_error("duplicate clock header (line " + std::to_string(lineno) + ")");
      if (!(ls >> m) || m < 1)
        throw parse_error("malformed clock header (line " + std::to_string(lineno) + ")");
    } else if (tag == "a") {
      if (m < 0)
        throw parse_error("arc before clock header (line " + std::to_string(lineno) + ")");
      ClockArc a;
      if (!(ls >> a.vertex >> a.s >> a.e))
        throw parse_error("malformed arc line (line " + std::to_string(lineno) + ")");
      if (a.s < 1 || a.s > m || a.e < 1 || a.e > m)
        throw parse_error("arc position out of range 1.." + std::to_string(m) +
                          " (line " + std::to_string(lineno) + ")");
      if (a.vertex < 1)
        throw parse_error("bad vertex id (line " + std::to_string(lineno) + ")");
      arcs.push_back(a);
    } else {
      throw parse_error("unrecognized line tag '" + tag + "' (line " +
                        std::to_string(lineno) + ")");
    }
  }
  if (m < 0) throw parse_error("missing clock header");
  int n = 0;
  for (const auto& a : arcs) n = std::max(n, a.vertex);
  ArcModel model;
  model.m = m;
  model.arcs.assign(n, ClockArc{});
  for (const auto& a : arcs) {
    if (model.arcs[a.vertex - 1].vertex != 0)
      throw parse_error("duplicate arc for vertex " + std::to_string(a.vertex));
    model.arcs[a.vertex - 1] = a;
  }
  for (int v = 1; v <= n; ++v)
    if (model.arcs[v - 1].vertex == 0)
      throw parse_error("missing arc for vertex " + std::to_string(v));
  return model;
}

inline std::string serialize_model(const ArcModel& model) {
  std::ostringstream out;
  out << "clock " << model.m << '\n';
  for (const auto& a : model.arcs)
    out << "a " << a.vertex << ' ' << a.s << ' ' << a.e << '\n';
  return out.str();
}

}  // namespace cag

#endif  // CAG_ARC_MODEL_HPP
