#ifndef CAG_CLI_HPP
#define CAG_CLI_HPP

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cag/arc_model.hpp"
#include "cag/audit.hpp"
#include "cag/graph.hpp"
#include "cag/oracles.hpp"
#include "cag/ordering.hpp"

namespace cag::cli {

// Exit codes: 0 success/holds/found, 1 check failed/not found,
// 2 usage or parse error, 3 cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

inline const char* usage_text() {
  return
      "usage: cag <subcommand> [options] <args>\n"
      "\n"
      "subcommands:\n"
      "  power -k K <graph>                       print the K-th power as a graph file\n"
      "  distances <graph>                        print the all-pairs distance matrix\n"
      "  check-ordering [--proper] [--reading=R] <graph> <ordering>\n"
      "                                           test the circular-ordering condition\n"
      "  build-model <graph> <ordering>           arc construction from an ordering\n"
      "  model-graph <model>                      intersection graph of an arc model\n"
      "  check-model-proper <model>               test for proper arc containment\n"
      "  extract-ordering <model>                 order vertices by clockwise endpoints\n"
      "  find-ordering [--proper] [--reading=R] [--max-n=N] <graph>\n"
      "                                           exhaustive ordering search\n"
      "  find-model [--proper] [--max-n=N] <graph> exhaustive arc-model search\n"
      "  audit [--n0=N] [--trials=R] [--seed=S] [--threads=T] [--out=path]\n"
      "                                           run the full trial campaign\n"
      "  generate --random n p seed | --enumerate n\n"
      "                                           emit graph files\n"
      "\n"
      "R is 'linear' or 'cyclic' (default cyclic). The two readings are distinct\n"
      "interpretations of betweenness on the circle: 'cyclic' lets the interval\n"
      "from i to j wrap past position 1, 'linear' compares positions as plain\n"
      "integers (equivalent to the interval-ordering condition).\n"
      "<ordering> may be a file or an inline permutation like \"1 2 3\".\n"
      "exit codes: 0 ok/found, 1 check failed/not found, 2 usage/parse error,\n"
      "3 search cap exceeded\n";
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) return read_file(arg);
  return arg;
}

inline bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

inline long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer for " + what + ": " + s);
  return v;
}

inline double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number for " + what + ": " + s);
  }
}

inline Reading parse_reading(const std::string& s) {
  if (s == "linear") return Reading::linear;
  if (s == "cyclic") return Reading::cyclic;
  throw std::invalid_argument("reading must be 'linear' or 'cyclic', got: " + s);
}

struct Options {
  bool proper = false;
  Reading reading = Reading::cyclic;
  int max_n = -1;  // -1 = module default
  std::vector<std::string> positional;
  // audit
  int n0 = 5;
  int trials = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_path;
  // generate
  bool random_mode = false;
  bool enumerate_mode = false;
};

inline Options parse_options(const std::vector<std::string>& args, std::size_t from) {
  Options opt;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--proper") opt.proper = true;
    else if (starts_with(a, "--reading=")) opt.reading = parse_reading(a.substr(10));
    else if (starts_with(a, "--max-n=")) opt.max_n = static_cast<int>(parse_int(a.substr(8), "--max-n"));
    else if (starts_with(a, "--n0=")) opt.n0 = static_cast<int>(parse_int(a.substr(5), "--n0"));
    else if (starts_with(a, "--trials=")) opt.trials = static_cast<int>(parse_int(a.substr(9), "--trials"));
    else if (starts_with(a, "--seed=")) opt.seed = static_cast<std::uint64_t>(parse_int(a.substr(7), "--seed"));
    else if (starts_with(a, "--threads=")) opt.threads = static_cast<int>(parse_int(a.substr(10), "--threads"));
    else if (starts_with(a, "--out=")) opt.out_path = a.substr(6);
    else if (a == "--random") opt.random_mode = true;
    else if (a == "--enumerate") opt.enumerate_mode = true;
    else if (starts_with(a, "--")) throw std::invalid_argument("unknown flag: " + a);
    else opt.positional.push_back(a);
  }
  return opt;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using namespace detail;
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      (args.empty() ? err : out) << usage_text();
      return args.empty() ? kExitUsage : kExitOk;
    }
    const std::string& cmd = args[0];

    if (cmd == "power") {
      int k = -1;
      std::vector<std::string> rest;
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "-k") {
          if (i + 1 >= args.size()) throw std::invalid_argument("-k needs a value");
          k = static_cast<int>(parse_int(args[++i], "-k"));
        } else {
          rest.push_back(args[i]);
        }
      }
      if (k < 1 || rest.size() != 1)
        throw std::invalid_argument("usage: power -k K <graph> (K >= 1)");
      Graph g = parse_graph(read_file(rest[0]));
      out << serialize_graph(power(g, k));
      return kExitOk;
    }

    if (cmd == "distances") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: distances <graph>");
      Graph g = parse_graph(read_file(opt.positional[0]));
      DistanceMatrix dm = all_pairs_distances(g);
      for (int u = 1; u <= g.order(); ++u) {
        for (int v = 1; v <= g.order(); ++v) {
          if (v > 1) out << ' ';
          int d = dm.at(u, v);
          if (d == DistanceMatrix::kUnreachable) out << "inf";
          else out << d;
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (cmd == "check-ordering") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 2)
        throw std::invalid_argument("usage: check-ordering [--proper] [--reading=R] <graph> <ordering>");
      Graph g = parse_graph(read_file(opt.positional[0]));
      Ordering o = parse_ordering(file_or_inline(opt.positional[1]));
      auto viol = opt.proper ? check_proper_circular(g, o, opt.reading)
                             : check_circular(g, o, opt.reading);
      if (viol) {
        out << violation_line(*viol) << '\n';
        return kExitNotFound;
      }
      out << "ok\n";
      return kExitOk;
    }

    if (cmd == "build-model") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 2)
        throw std::invalid_argument("usage: build-model <graph> <ordering>");
      Graph g = parse_graph(read_file(opt.positional[0]));
      Ordering o = parse_ordering(file_or_inline(opt.positional[1]));
      out << serialize_model(build_model(g, o));
      return kExitOk;
    }

    if (cmd == "model-graph") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: model-graph <model>");
      out << serialize_graph(intersection_graph(parse_model(read_file(opt.positional[0]))));
      return kExitOk;
    }

    if (cmd == "check-model-proper") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: check-model-proper <model>");
      ArcModel model = parse_model(read_file(opt.positional[0]));
      if (auto w = is_proper(model)) {
        out << "improper contained=" << w->contained << " container=" << w->container
            << '\n';
        return kExitNotFound;
      }
      out << "proper\n";
      return kExitOk;
    }

    if (cmd == "extract-ordering") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: extract-ordering <model>");
      ArcModel model = parse_model(read_file(opt.positional[0]));
      out << serialize_ordering(extract_ordering(model)) << '\n';
      return kExitOk;
    }

    if (cmd == "find-ordering") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: find-ordering [--proper] [--reading=R] [--max-n=N] <graph>");
      Graph g = parse_graph(read_file(opt.positional[0]));
      int cap = opt.max_n > 0 ? opt.max_n : kDefaultOrderingCap;
      OrderingSearchResult res = find_circular_ordering(g, opt.reading, opt.proper, cap);
      if (!res.found) {
        out << "not-found searched=" << res.searched << '\n';
        return kExitNotFound;
      }
      out << "found searched=" << res.searched << '\n'
          << serialize_ordering(*res.witness) << '\n';
      return kExitOk;
    }

    if (cmd == "find-model") {
      Options opt = parse_options(args, 1);
      if (opt.positional.size() != 1)
        throw std::invalid_argument("usage: find-model [--proper] [--max-n=N] <graph>");
      Graph g = parse_graph(read_file(opt.positional[0]));
      int cap = opt.max_n > 0 ? opt.max_n : kDefaultModelCap;
      ModelSearchResult res = find_arc_model(g, opt.proper, cap);
      if (!res.found) {
        out << "not-found searched=" << res.searched << '\n';
        return kExitNotFound;
      }
      out << "found searched=" << res.searched << '\n'
          << serialize_model(*res.witness);
      return kExitOk;
    }

    if (cmd == "audit") {
      Options opt = parse_options(args, 1);
      if (!opt.positional.empty())
        throw std::invalid_argument("audit takes no positional arguments");
      AuditConfig cfg;
      cfg.exhaustive_max_n = opt.n0;
      cfg.random_trials = opt.trials;
      cfg.seed = opt.seed;
      cfg.threads = opt.threads;
      AuditReport report = run_audit(cfg);
      std::string text = serialize_report(report);
      if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw parse_error("cannot write file: " + opt.out_path);
        f << text;
      } else {
        out << text;
      }
      return kExitOk;
    }

    if (cmd == "generate") {
      Options opt = parse_options(args, 1);
      if (opt.random_mode == opt.enumerate_mode)
        throw std::invalid_argument("generate needs exactly one of --random, --enumerate");
      if (opt.random_mode) {
        if (opt.positional.size() != 3)
          throw std::invalid_argument("usage: generate --random n p seed");
        int n = static_cast<int>(parse_int(opt.positional[0], "n"));
        double p = parse_double(opt.positional[1], "p");
        std::uint64_t seed = static_cast<std::uint64_t>(parse_int(opt.positional[2], "seed"));
        out << serialize_graph(random_graph(n, p, seed));
      } else {
        if (opt.positional.size() != 1)
          throw std::invalid_argument("usage: generate --enumerate n");
        int n = static_cast<int>(parse_int(opt.positional[0], "n"));
        GraphEnumerator en(n, /*connected_only=*/false);
        bool first = true;
        while (auto g = en.next()) {
          if (!first) out << '\n';
          out << serialize_graph(*g);
          first = false;
        }
      }
      return kExitOk;
    }

    throw std::invalid_argument("unknown subcommand: " + cmd);
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    err << usage_text();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cag::cli

#endif  // CAG_CLI_HPP
