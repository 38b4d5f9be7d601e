#pragma once

// Command-line front end. All subcommands are pure functions of their
// arguments; --json output is the stable machine contract, exit codes are
// 0 = success, 2 = invalid input, 3 = resource limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bnk/braid.hpp"
#include "bnk/chain.hpp"
#include "bnk/counting.hpp"
#include "bnk/json_io.hpp"

namespace bnk::cli {

struct CommonOptions {
  bool json = false;
  std::string cache_path;  // empty = no cache
  std::uint64_t limit = 1'000'000;
  bool force = false;
  int threads = 1;
};

namespace detail {

inline std::string effective_cache_path(const CommonOptions& opt) {
  if (!opt.cache_path.empty()) return opt.cache_path;
  if (const char* env = std::getenv("BNK_CACHE")) return env;
  return {};
}

inline MemoCache open_cache(const std::string& path, int k) {
  if (!path.empty() && std::filesystem::exists(path)) {
    MemoCache cache = cache_load(path);
    if (cache.k() != k)
      throw std::invalid_argument("cache at " + path + " was built for k = " +
                                  std::to_string(cache.k()));
    return cache;
  }
  return MemoCache(k);
}

inline void maybe_save(const MemoCache& cache, const std::string& path) {
  if (!path.empty()) cache_save(cache, path);
}

inline Json window_json(const AffineWindow& w) {
  return Json{{"k", w.k()}, {"window", w.values()}};
}

}  // namespace detail

inline int run_n(const SplittingType& e, const CommonOptions& opt, std::ostream& out) {
  std::string path = detail::effective_cache_path(opt);
  MemoCache cache = detail::open_cache(path, e.k());
  BigCount n = n_of_splitting(e, cache, opt.threads);
  detail::maybe_save(cache, path);
  if (opt.json) {
    Json doc{{"e", e.parts()}, {"k", e.k()}, {"u", imbalance_u(e)}, {"n", n.str()}};
    out << doc.dump() << '\n';
  } else {
    out << n.str() << '\n';
  }
  return 0;
}

inline int run_staircase(const SplittingType& e, const CommonOptions& opt, std::ostream& out) {
  Diagram rows = staircase(e);
  AffineWindow w = w_of_splitting(e);
  if (opt.json) {
    Json doc{{"e", e.parts()},
             {"k", e.k()},
             {"rows", rows.rows()},
             {"u", imbalance_u(e)},
             {"window", w.values()}};
    out << doc.dump() << '\n';
  } else {
    out << "rows: " << join(rows.rows()) << '\n'
        << "u: " << imbalance_u(e) << '\n'
        << "window: " << join(w.values()) << '\n';
  }
  return 0;
}

inline int run_word(const SplittingType& e, const CommonOptions& opt, std::ostream& out) {
  AffineWindow w = w_of_splitting(e);
  if (opt.json) {
    Json doc = detail::window_json(w);
    doc["e"] = e.parts();
    out << doc.dump() << '\n';
  } else {
    out << join(w.values()) << '\n';
  }
  return 0;
}

inline int run_fillings(const Diagram& rows, int k, const CommonOptions& opt,
                        std::ostream& out) {
  std::vector<Filling> fillings = enumerate_efficient_fillings(rows, k, opt.limit, opt.force);
  if (opt.json) {
    Json list = Json::array();
    for (const Filling& f : fillings) list.push_back(to_json(f));
    Json doc{{"k", k},
             {"rows", rows.rows()},
             {"count", std::to_string(fillings.size())},
             {"fillings", list}};
    out << doc.dump() << '\n';
  } else {
    out << "count: " << fillings.size() << '\n';
    for (const Filling& f : fillings) {
      out << "word:";
      for (int j : f.word()) out << ' ' << j;
      out << '\n';
    }
  }
  return 0;
}

inline int run_count(const Diagram& rows, int k, const CommonOptions& opt, std::ostream& out) {
  std::string path = detail::effective_cache_path(opt);
  MemoCache cache = detail::open_cache(path, k);
  BigCount r = count_reduced_words(rows, k, cache, opt.threads);
  detail::maybe_save(cache, path);
  if (opt.json) {
    Json doc{{"k", k}, {"rows", rows.rows()}, {"r", r.str()}};
    out << doc.dump() << '\n';
  } else {
    out << r.str() << '\n';
  }
  return 0;
}

inline int run_braid(const SplittingType& e, const CommonOptions& opt, std::ostream& out) {
  BraidGraph graph = braid_graph(staircase(e), e.k(), opt.limit, opt.force);
  if (opt.json) {
    Json doc = to_json(graph);
    doc["e"] = e.parts();
    out << doc.dump() << '\n';
  } else {
    out << "nodes: " << graph.nodes.size() << '\n'
        << "edges: " << graph.edges.size() << '\n'
        << "connected: " << (graph.connected ? "yes" : "no") << '\n';
  }
  return 0;
}

inline int run_oracle(const SplittingType& e, const CommonOptions& opt, std::ostream& out) {
  long long u = imbalance_u(e);
  int g = static_cast<int>(u);
  std::vector<ChainModel> positive = enumerate_positive(e, opt.limit, opt.force);
  std::vector<Filling> fillings = enumerate_efficient_fillings(staircase(e), e.k(), opt.limit,
                                                               opt.force);
  std::vector<ChainModel> expected;
  for (const Filling& f : fillings) expected.push_back(model_from_filling(f, e, g));
  std::sort(expected.begin(), expected.end());
  std::vector<ChainModel> found = positive;
  std::sort(found.begin(), found.end());
  bool match = found == expected;
  if (opt.json) {
    Json pos = Json::array(), exp = Json::array();
    for (const ChainModel& m : found) pos.push_back(to_json(m));
    for (const ChainModel& m : expected) exp.push_back(to_json(m));
    Json doc{{"e", e.parts()},     {"k", e.k()},
             {"g", g},             {"d", g - 1 + cohomology(e, 0).chi},
             {"positive", pos},    {"from_fillings", exp},
             {"match", match}};
    out << doc.dump() << '\n';
  } else {
    out << "positive: " << positive.size() << '\n'
        << "fillings: " << fillings.size() << '\n'
        << "match: " << (match ? "yes" : "no") << '\n';
  }
  return 0;
}

inline int run_bn(long long g, long long r, long long d, int k, const CommonOptions& opt,
                  std::ostream& out) {
  std::string path = detail::effective_cache_path(opt);
  MemoCache cache = detail::open_cache(path, k);
  long long rho_v = rho(g, r, d);
  long long rho_k_v = rho_k(g, r, d, k);
  std::vector<SplittingType> types = enumerate_splitting_types(g, r, d, k);

  Json type_list = Json::array();
  std::ostringstream text;
  for (const SplittingType& e : types) {
    long long u = imbalance_u(e);
    BigCount n = n_of_splitting(e, cache, opt.threads);
    BigInt ufact = factorial(u);
    type_list.push_back({{"e", e.parts()},
                         {"u", u},
                         {"dim", g - u},
                         {"n", n.str()},
                         {"u_factorial", ufact.str()}});
    text << "e=" << join(e.parts()) << " u=" << u << " dim=" << (g - u) << " n=" << n.str()
         << '\n';
  }
  detail::maybe_save(cache, path);
  if (opt.json) {
    Json doc{{"g", g},           {"r", r},           {"d", d},
             {"k", k},           {"rho", rho_v},     {"rho_k", rho_k_v},
             {"types", type_list}};
    if (g - d + r >= 0) {
      ClassCoefficient c = bn_class_coefficient(g, r, d);
      doc["class"] = Json{{"numerator", numerator(c.value).str()},
                          {"denominator", denominator(c.value).str()},
                          {"exponent", c.exponent}};
    }
    out << doc.dump() << '\n';
  } else {
    out << "rho: " << rho_v << '\n' << "rho_k: " << rho_k_v << '\n';
    out << text.str();
  }
  return 0;
}

/// Parses argv (without the program name) and dispatches. Streams are
/// injectable so the whole surface is testable in-process.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Brill-Noether invariants of splitting loci for k-gonal curves"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string e_text, rows_text;
  int k = 0;
  long long g = 0, r = 0, d = 0;

  auto add_common = [&](CLI::App* cmd, bool with_limit = false, bool with_cache = false) {
    cmd->add_flag("--json", opt.json, "emit JSON");
    cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    if (with_limit) {
      cmd->add_option("--limit", opt.limit, "resource limit");
      cmd->add_flag("--force", opt.force, "ignore the resource limit");
    }
    if (with_cache) cmd->add_option("--cache", opt.cache_path, "word-count cache file");
  };

  CLI::App* c_n = app.add_subcommand("n", "N(e) in full decimal");
  c_n->add_option("--e", e_text, "splitting type")->required();
  add_common(c_n, false, true);

  CLI::App* c_stair = app.add_subcommand("staircase", "staircase rows, u and window of e");
  c_stair->add_option("--e", e_text, "splitting type")->required();
  add_common(c_stair);

  CLI::App* c_word = app.add_subcommand("word", "window of w(e)");
  c_word->add_option("--e", e_text, "splitting type")->required();
  add_common(c_word);

  CLI::App* c_fill = app.add_subcommand("fillings", "enumerate efficient fillings");
  c_fill->add_option("--e", e_text, "splitting type");
  c_fill->add_option("--rows", rows_text, "diagram row lengths");
  c_fill->add_option("--k", k, "gonality for --rows");
  add_common(c_fill, true);

  CLI::App* c_count = app.add_subcommand("count", "R(w) for the coset of a k-core");
  c_count->add_option("--rows", rows_text, "diagram row lengths")->required();
  c_count->add_option("--k", k, "gonality")->required();
  add_common(c_count, false, true);

  CLI::App* c_braid = app.add_subcommand("braid", "braid-move graph and connectivity");
  c_braid->add_option("--e", e_text, "splitting type")->required();
  add_common(c_braid, true);

  CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force positivity check at g = u");
  c_oracle->add_option("--e", e_text, "splitting type")->required();
  add_common(c_oracle, true);

  CLI::App* c_bn = app.add_subcommand("bn", "rho, rho_k and the splitting-type decomposition");
  c_bn->add_option("--g", g, "genus")->required();
  c_bn->add_option("--r", r, "rank")->required();
  c_bn->add_option("--d", d, "degree")->required();
  c_bn->add_option("--k", k, "gonality")->required();
  add_common(c_bn, false, true);

  // Fuse value options with their argument ("--e -2,0,0,2" -> "--e=-2,0,0,2")
  // so negative leading values are never mistaken for flags.
  static const std::set<std::string> value_options = {
      "--e", "--rows", "--k", "--g", "--r", "--d", "--cache", "--limit", "--threads"};
  std::vector<std::string> fused;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (value_options.count(args[i]) && i + 1 < args.size()) {
      fused.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      fused.push_back(args[i]);
    }
  }
  std::vector<const char*> argv{"bnk"};
  for (const std::string& s : fused) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(c_n)) return run_n(parse_splitting(e_text), opt, out);
    if (app.got_subcommand(c_stair)) return run_staircase(parse_splitting(e_text), opt, out);
    if (app.got_subcommand(c_word)) return run_word(parse_splitting(e_text), opt, out);
    if (app.got_subcommand(c_fill)) {
      if (!e_text.empty() == !rows_text.empty())
        throw std::invalid_argument("fillings needs exactly one of --e or --rows/--k");
      if (!e_text.empty()) {
        SplittingType e = parse_splitting(e_text);
        return run_fillings(staircase(e), e.k(), opt, out);
      }
      if (k < 2) throw std::invalid_argument("--rows needs --k >= 2");
      return run_fillings(parse_rows(rows_text), k, opt, out);
    }
    if (app.got_subcommand(c_count)) return run_count(parse_rows(rows_text), k, opt, out);
    if (app.got_subcommand(c_braid)) return run_braid(parse_splitting(e_text), opt, out);
    if (app.got_subcommand(c_oracle)) return run_oracle(parse_splitting(e_text), opt, out);
    if (app.got_subcommand(c_bn)) return run_bn(g, r, d, k, opt, out);
    err << "no subcommand\n";
    return 2;
  } catch (const limit_error& ex) {
    err << "limit exceeded: " << ex.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace bnk::cli
