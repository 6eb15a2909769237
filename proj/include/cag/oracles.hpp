#ifndef CAG_ORACLES_HPP
#define CAG_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cag/arc_model.hpp"
#include "cag/graph.hpp"
#include "cag/ordering.hpp"

namespace cag {

constexpr int kDefaultOrderingCap = 9;
constexpr int kDefaultModelCap = 6;

struct OrderingSearchResult {
  bool found = false;
  std::optional<Ordering> witness;
  std::uint64_t searched = 0;  // candidates examined
};

struct ModelSearchResult {
  bool found = false;
  std::optional<ArcModel> witness;
  std::uint64_t searched = 0;  // complete arrangements examined
};

/// Exhaustive ordering search. Cyclic reading pins vertex 1 at position 1
/// (rotations preserve cyclic betweenness); linear reading enumerates all n!
/// orderings since rotations change the linear condition. First witness in
/// lexicographic enumeration order.
inline OrderingSearchResult find_circular_ordering(const Graph& g, Reading r,
                                                   bool proper,
                                                   int cap = kDefaultOrderingCap) {
  const int n = g.order();
  if (n > cap)
    throw cap_exceeded("ordering search cap exceeded: n=" + std::to_string(n) +
                       " > cap=" + std::to_string(cap));
  OrderingSearchResult result;
  auto accepts = [&](const Ordering& o) {
    return proper ? !check_proper_circular(g, o, r) : !check_circular(g, o, r);
  };
  if (r == Reading::cyclic) {
    std::vector<int> rest(std::max(n - 1, 0));
    std::iota(rest.begin(), rest.end(), 2);
    do {
      Ordering o;
      o.seq.reserve(n);
      o.seq.push_back(1);
      o.seq.insert(o.seq.end(), rest.begin(), rest.end());
      ++result.searched;
      if (accepts(o)) {
        result.found = true;
        result.witness = o;
        return result;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      Ordering o{perm};
      ++result.searched;
      if (accepts(o)) {
        result.found = true;
        result.witness = o;
        return result;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

namespace detail {

// Endpoint symbols: 2(v-1) = start of v, 2(v-1)+1 = end of v. Symbol index
// order is the lexicographic order of arrangements.
struct ModelSearchState {
  const Graph* g = nullptr;
  int n = 0;
  int m = 0;  // 2n
  bool proper = false;
  bool prune = true;
  std::vector<int> pos_of_symbol;  // clock position, 0 = unplaced
  std::vector<bool> used;
  std::vector<bool> complete;  // per vertex
  std::uint64_t searched = 0;
  std::optional<ArcModel> witness;
};

inline ClockArc arc_of(const ModelSearchState& st, int v) {
  return ClockArc{v, st.pos_of_symbol[2 * (v - 1)], st.pos_of_symbol[2 * (v - 1) + 1]};
}

inline bool model_search_rec(ModelSearchState& st, int next_pos) {
  if (next_pos > st.m) {
    ++st.searched;
    ArcModel model;
    model.m = st.m;
    model.arcs.resize(st.n);
    for (int v = 1; v <= st.n; ++v) model.arcs[v - 1] = arc_of(st, v);
    if (intersection_graph(model) != *st.g) return false;
    if (st.proper && is_proper(model)) return false;
    st.witness = std::move(model);
    return true;
  }
  for (int sym = 0; sym < st.m; ++sym) {
    if (st.used[sym]) continue;
    st.used[sym] = true;
    st.pos_of_symbol[sym] = next_pos;
    int v = sym / 2 + 1;
    bool completes = st.pos_of_symbol[2 * (v - 1)] != 0 &&
                     st.pos_of_symbol[2 * (v - 1) + 1] != 0;
    bool ok = true;
    if (completes) {
      st.complete[v - 1] = true;
      if (st.prune) {
        ClockArc av = arc_of(st, v);
        for (int u = 1; u <= st.n && ok; ++u) {
          if (u == v || !st.complete[u - 1]) continue;
          if (arcs_intersect(av, arc_of(st, u), st.m) != st.g->has_edge(u, v))
            ok = false;
        }
      }
    }
    if (ok && model_search_rec(st, next_pos + 1)) return true;
    if (completes) st.complete[v - 1] = false;
    st.pos_of_symbol[sym] = 0;
    st.used[sym] = false;
  }
  return false;
}

}  // namespace detail

/// Exhaustive arc-model search over circular arrangements of the 2n distinct
/// endpoint symbols on a 2n clock, start of vertex 1 pinned at position 1.
/// Assumes the standard fact that any realizable graph has a model with all
/// endpoints distinct. Pruning drops partial arrangements whose completed
/// arcs already contradict the adjacency; it never changes found/not-found.
inline ModelSearchResult find_arc_model(const Graph& g, bool proper,
                                        int cap = kDefaultModelCap,
                                        bool prune = true) {
  const int n = g.order();
  if (n > cap)
    throw cap_exceeded("model search cap exceeded: n=" + std::to_string(n) +
                       " > cap=" + std::to_string(cap));
  detail::ModelSearchState st;
  st.g = &g;
  st.n = n;
  st.m = 2 * n;
  st.proper = proper;
  st.prune = prune;
  st.pos_of_symbol.assign(st.m, 0);
  st.used.assign(st.m, false);
  st.complete.assign(n, false);
  st.used[0] = true;
  st.pos_of_symbol[0] = 1;  // pin start_1
  bool found = detail::model_search_rec(st, 2);
  ModelSearchResult result;
  result.found = found;
  result.witness = std::move(st.witness);
  result.searched = st.searched;
  return result;
}

struct CrossAuditResult {
  OrderingSearchResult ordering;
  ModelSearchResult model;
};

/// Runs both oracles; verdict comparison is left to the caller.
inline CrossAuditResult cross_audit(const Graph& g, Reading r, bool proper,
                                    int ordering_cap = kDefaultOrderingCap,
                                    int model_cap = kDefaultModelCap) {
  CrossAuditResult out;
  out.ordering = find_circular_ordering(g, r, proper, ordering_cap);
  out.model = find_arc_model(g, proper, model_cap);
  return out;
}

}  // namespace cag

#endif  // CAG_ORACLES_HPP
