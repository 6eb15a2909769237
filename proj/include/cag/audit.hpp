#ifndef CAG_AUDIT_HPP
#define CAG_AUDIT_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cag/arc_model.hpp"
#include "cag/graph.hpp"
#include "cag/oracles.hpp"
#include "cag/ordering.hpp"

namespace cag {

enum class Theorem {
  t1_forward,
  t1_converse,
  t2_lemma,
  t3_forward,
  t3_converse,
  t4_lemma,
  closure_observation,
};

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::t1_forward: return "T1-forward";
    case Theorem::t1_converse: return "T1-converse";
    case Theorem::t2_lemma: return "T2-lemma";
    case Theorem::t3_forward: return "T3-forward";
    case Theorem::t3_converse: return "T3-converse";
    case Theorem::t4_lemma: return "T4-lemma";
    case Theorem::closure_observation: return "closure-observation";
  }
  return "?";
}

enum class Outcome { holds, fails, vacuous, skipped_cap };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::vacuous: return "vacuous";
    case Outcome::skipped_cap: return "skipped-cap";
  }
  return "?";
}

struct TrialRecord {
  std::string graph_text;  // serialized graph the trial ran on
  Theorem theorem = Theorem::t1_forward;
  int k = 0;  // 0 when the trial has no power parameter
  Reading reading = Reading::cyclic;
  Outcome outcome = Outcome::holds;
  std::string certificate;  // non-empty exactly for "fails"
};

struct AuditConfig {
  int exhaustive_max_n = 5;
  int random_trials = 100;
  std::uint64_t seed = 1;
  int ordering_cap = kDefaultOrderingCap;
  int model_cap = kDefaultModelCap;
  int max_power = 4;
  std::vector<Reading> readings = {Reading::cyclic, Reading::linear};
  int threads = 1;  // not part of the report; output is thread-count invariant
};

struct AuditReport {
  AuditConfig config;
  std::size_t corpus_size = 0;
  std::vector<TrialRecord> records;  // sorted (graph, theorem, k, reading)
};

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string graph_hash(const std::string& graph_text) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(graph_text);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single trials
// ---------------------------------------------------------------------------

namespace detail {

inline TrialRecord make_record(const Graph& g, Theorem t, int k, Reading r) {
  TrialRecord rec;
  rec.graph_text = serialize_graph(g);
  rec.theorem = t;
  rec.k = k;
  rec.reading = r;
  return rec;
}

// forward: model found => ordering found
inline TrialRecord trial_forward(const Graph& g, Reading r, bool proper,
                                 const AuditConfig& cfg) {
  Theorem th = proper ? Theorem::t3_forward : Theorem::t1_forward;
  TrialRecord rec = make_record(g, th, 0, r);
  if (g.order() > cfg.model_cap || g.order() > cfg.ordering_cap) {
    rec.outcome = Outcome::skipped_cap;
    return rec;
  }
  ModelSearchResult model = find_arc_model(g, proper, cfg.model_cap);
  if (!model.found) {
    rec.outcome = Outcome::vacuous;
    return rec;
  }
  OrderingSearchResult ord = find_circular_ordering(g, r, proper, cfg.ordering_cap);
  if (ord.found) {
    rec.outcome = Outcome::holds;
  } else {
    rec.outcome = Outcome::fails;
    std::ostringstream cert;
    cert << "model-found ordering-not-found searched=" << ord.searched << '\n'
         << serialize_model(*model.witness);
    rec.certificate = cert.str();
  }
  return rec;
}

// converse: the found ordering realizes g through the arc construction
// (and yields a proper model, for the proper variant)
inline TrialRecord trial_converse(const Graph& g, Reading r, bool proper,
                                  const AuditConfig& cfg) {
  Theorem th = proper ? Theorem::t3_converse : Theorem::t1_converse;
  TrialRecord rec = make_record(g, th, 0, r);
  if (g.order() > cfg.ordering_cap) {
    rec.outcome = Outcome::skipped_cap;
    return rec;
  }
  OrderingSearchResult ord = find_circular_ordering(g, r, proper, cfg.ordering_cap);
  if (!ord.found) {
    rec.outcome = Outcome::vacuous;
    return rec;
  }
  const Ordering& sigma = *ord.witness;
  ArcModel model = build_model(g, sigma);
  Graph realized = intersection_graph(model);
  if (realized != g) {
    rec.outcome = Outcome::fails;
    std::ostringstream cert;
    cert << "ordering " << serialize_ordering(sigma) << '\n'
         << "realized\n"
         << serialize_graph(realized);
    rec.certificate = cert.str();
    return rec;
  }
  if (proper) {
    if (auto w = is_proper(model)) {
      rec.outcome = Outcome::fails;
      std::ostringstream cert;
      cert << "ordering " << serialize_ordering(sigma) << '\n'
           << "improper contained=" << w->contained << " container=" << w->container
           << '\n';
      rec.certificate = cert.str();
      return rec;
    }
  }
  rec.outcome = Outcome::holds;
  return rec;
}

// persistence: an ordering accepted for power(g,k) stays accepted for
// power(g,k+1); "closure" checks an ordering accepted for g against power(g,k)
inline TrialRecord trial_persistence(const Graph& g, int k, Reading r,
                                     Theorem th, const AuditConfig& cfg) {
  TrialRecord rec = make_record(g, th, k, r);
  if (g.order() > cfg.ordering_cap) {
    rec.outcome = Outcome::skipped_cap;
    return rec;
  }
  bool proper = th == Theorem::t4_lemma;
  Graph base = th == Theorem::closure_observation ? g : power(g, k);
  Graph target = th == Theorem::closure_observation ? power(g, k) : power(g, k + 1);
  OrderingSearchResult ord = find_circular_ordering(base, r, proper, cfg.ordering_cap);
  if (!ord.found) {
    rec.outcome = Outcome::vacuous;
    return rec;
  }
  const Ordering& sigma = *ord.witness;
  auto viol = proper ? check_proper_circular(target, sigma, r)
                     : check_circular(target, sigma, r);
  if (!viol) {
    rec.outcome = Outcome::holds;
  } else {
    rec.outcome = Outcome::fails;
    std::ostringstream cert;
    cert << "ordering " << serialize_ordering(sigma) << '\n'
         << violation_line(*viol) << '\n';
    rec.certificate = cert.str();
  }
  return rec;
}

}  // namespace detail

inline TrialRecord run_trial(const Graph& g, Theorem th, int k, Reading r,
                             const AuditConfig& cfg = {}) {
  switch (th) {
    case Theorem::t1_forward: return detail::trial_forward(g, r, false, cfg);
    case Theorem::t3_forward: return detail::trial_forward(g, r, true, cfg);
    case Theorem::t1_converse: return detail::trial_converse(g, r, false, cfg);
    case Theorem::t3_converse: return detail::trial_converse(g, r, true, cfg);
    case Theorem::t2_lemma:
    case Theorem::t4_lemma:
    case Theorem::closure_observation:
      return detail::trial_persistence(g, k, r, th, cfg);
  }
  throw std::invalid_argument("unknown theorem");
}

// Both directions of Theorem 1 / Theorem 3 as separate records.
inline std::vector<TrialRecord> trial_theorem1(const Graph& g, Reading r,
                                               const AuditConfig& cfg = {}) {
  return {detail::trial_forward(g, r, false, cfg),
          detail::trial_converse(g, r, false, cfg)};
}

inline TrialRecord trial_theorem2(const Graph& g, int k, Reading r,
                                  const AuditConfig& cfg = {}) {
  return detail::trial_persistence(g, k, r, Theorem::t2_lemma, cfg);
}

inline std::vector<TrialRecord> trial_theorem3(const Graph& g, Reading r,
                                               const AuditConfig& cfg = {}) {
  return {detail::trial_forward(g, r, true, cfg),
          detail::trial_converse(g, r, true, cfg)};
}

inline TrialRecord trial_theorem4(const Graph& g, int k, Reading r,
                                  const AuditConfig& cfg = {}) {
  return detail::trial_persistence(g, k, r, Theorem::t4_lemma, cfg);
}

// ---------------------------------------------------------------------------
// Audit campaign
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<TrialRecord> trials_for_graph(const Graph& g,
                                                 const AuditConfig& cfg) {
  std::vector<TrialRecord> out;
  int d = diameter(g);
  int kmax = d == kInfiniteDiameter ? cfg.max_power : std::min(d, cfg.max_power);
  for (Reading r : cfg.readings) {
    out.push_back(trial_forward(g, r, false, cfg));
    out.push_back(trial_converse(g, r, false, cfg));
    out.push_back(trial_forward(g, r, true, cfg));
    out.push_back(trial_converse(g, r, true, cfg));
    for (int k = 1; k <= kmax; ++k) {
      out.push_back(trial_persistence(g, k, r, Theorem::t2_lemma, cfg));
      out.push_back(trial_persistence(g, k, r, Theorem::t4_lemma, cfg));
      out.push_back(trial_persistence(g, k, r, Theorem::closure_observation, cfg));
    }
  }
  return out;
}

inline void sort_records(std::vector<TrialRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::tuple(a.graph_text, static_cast<int>(a.theorem), a.k,
                                std::string(to_string(a.reading))) <
                     std::tuple(b.graph_text, static_cast<int>(b.theorem), b.k,
                                std::string(to_string(b.reading)));
            });
}

}  // namespace detail

/// Corpus: every connected labeled graph with n <= exhaustive_max_n, plus
/// random_trials seeded G(n,p) graphs with n in 2..9, deduplicated by
/// serialization. Trials are independent; the record list is sorted so the
/// report does not depend on thread count.
inline AuditReport run_audit(const AuditConfig& cfg = {}) {
  std::vector<Graph> corpus;
  std::set<std::string> seen;
  auto add = [&](const Graph& g) {
    if (seen.insert(serialize_graph(g)).second) corpus.push_back(g);
  };
  for (int n = 1; n <= cfg.exhaustive_max_n; ++n) {
    GraphEnumerator en(n, /*connected_only=*/true, /*cap=*/cfg.exhaustive_max_n);
    while (auto g = en.next()) add(*g);
  }
  std::mt19937_64 gen(cfg.seed);
  for (int t = 0; t < cfg.random_trials; ++t) {
    int n = 2 + static_cast<int>(gen() % 8);  // 2..9
    double p = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    std::uint64_t gseed = gen();
    add(random_graph(n, p, gseed));
  }

  std::vector<std::vector<TrialRecord>> per_graph(corpus.size());
  int nthreads = std::max(1, cfg.threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) break;
      per_graph[i] = detail::trials_for_graph(corpus[i], cfg);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  AuditReport report;
  report.config = cfg;
  report.corpus_size = corpus.size();
  for (auto& recs : per_graph)
    report.records.insert(report.records.end(), recs.begin(), recs.end());
  detail::sort_records(report.records);
  return report;
}

struct TallyKey {
  Theorem theorem;
  Reading reading;
};

inline std::string serialize_report(const AuditReport& report) {
  const AuditConfig& cfg = report.config;
  std::ostringstream out;
  out << "audit-version 1\n";
  // cfg lines sorted by key; thread count deliberately not echoed
  out << "cfg corpus-graphs " << report.corpus_size << '\n';
  out << "cfg exhaustive-max-n " << cfg.exhaustive_max_n << '\n';
  out << "cfg max-power " << cfg.max_power << '\n';
  out << "cfg model-cap " << cfg.model_cap << '\n';
  out << "cfg ordering-cap " << cfg.ordering_cap << '\n';
  out << "cfg random-trials " << cfg.random_trials << '\n';
  out << "cfg readings ";
  for (std::size_t i = 0; i < cfg.readings.size(); ++i) {
    if (i) out << ',';
    out << to_string(cfg.readings[i]);
  }
  out << '\n';
  out << "cfg seed " << cfg.seed << '\n';

  for (const TrialRecord& rec : report.records)
    out << "t " << graph_hash(rec.graph_text) << ' ' << to_string(rec.theorem)
        << ' ' << rec.k << ' ' << to_string(rec.reading) << ' '
        << to_string(rec.outcome) << '\n';

  // per-theorem, per-reading tallies, over the whole corpus ("tally") and
  // restricted to the exhaustive connected slice ("tally-exhaustive")
  std::vector<Reading> readings = cfg.readings;
  std::sort(readings.begin(), readings.end(), [](Reading a, Reading b) {
    return std::string(to_string(a)) < std::string(to_string(b));
  });
  readings.erase(std::unique(readings.begin(), readings.end()), readings.end());
  std::set<std::string> exhaustive_texts;
  for (const TrialRecord& rec : report.records) {
    if (exhaustive_texts.count(rec.graph_text)) continue;
    Graph g = parse_graph(rec.graph_text);
    if (g.order() <= cfg.exhaustive_max_n && is_connected(g))
      exhaustive_texts.insert(rec.graph_text);
  }
  auto emit_tallies = [&](const char* label, bool exhaustive_only) {
    for (int ti = 0; ti <= static_cast<int>(Theorem::closure_observation); ++ti) {
      for (Reading r : readings) {
        int holds = 0, fails = 0, vacuous = 0, skipped = 0;
        for (const TrialRecord& rec : report.records) {
          if (static_cast<int>(rec.theorem) != ti || rec.reading != r) continue;
          if (exhaustive_only && !exhaustive_texts.count(rec.graph_text)) continue;
          switch (rec.outcome) {
            case Outcome::holds: ++holds; break;
            case Outcome::fails: ++fails; break;
            case Outcome::vacuous: ++vacuous; break;
            case Outcome::skipped_cap: ++skipped; break;
          }
        }
        out << label << ' ' << to_string(static_cast<Theorem>(ti)) << ' '
            << to_string(r) << " holds=" << holds << " fails=" << fails
            << " vacuous=" << vacuous << " skipped=" << skipped << '\n';
      }
    }
  };
  emit_tallies("tally", false);
  emit_tallies("tally-exhaustive", true);

  for (const TrialRecord& rec : report.records) {
    if (rec.outcome != Outcome::fails) continue;
    out << "fail " << graph_hash(rec.graph_text) << ' ' << to_string(rec.theorem)
        << ' ' << rec.k << ' ' << to_string(rec.reading) << '\n';
    std::istringstream block(rec.graph_text + rec.certificate);
    std::string line;
    while (std::getline(block, line)) out << "  " << line << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Counterexample minimization
// ---------------------------------------------------------------------------

inline Graph remove_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (v < 1 || v > n) throw std::out_of_range("vertex out of range");
  Graph h(n - 1);
  auto remap = [&](int u) { return u < v ? u : u - 1; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) h.add_edge(remap(a), remap(b));
  return h;
}

/// Greedy vertex deletion, highest id first, while the trial keeps failing.
inline Graph minimize_counterexample(Graph g, Theorem th, int k, Reading r,
                                     const AuditConfig& cfg = {}) {
  auto fails = [&](const Graph& h) {
    return run_trial(h, th, k, r, cfg).outcome == Outcome::fails;
  };
  if (!fails(g))
    throw std::invalid_argument("minimize_counterexample: trial does not fail");
  bool improved = true;
  while (improved && g.order() > 1) {
    improved = false;
    for (int v = g.order(); v >= 1; --v) {
      Graph h = remove_vertex(g, v);
      if (h.order() >= 1 && fails(h)) {
        g = h;
        improved = true;
        break;
      }
    }
  }
  return g;
}

}  // namespace cag

#endif  // CAG_AUDIT_HPP
