#include "reachpairs_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "reachpairs/approx.hpp"
#include "reachpairs/checks.hpp"
#include "reachpairs/errors.hpp"
#include "reachpairs/graph_io.hpp"
#include "reachpairs/oracle.hpp"
#include "reachpairs/structure.hpp"
#include "reachpairs/tables.hpp"
#include "reachpairs/witness.hpp"
#include "reachpairs_cli/cache.hpp"

namespace reachpairs::cli {
namespace {

constexpr const char* kCacheEnv = "REACHPAIRS_CACHE";

std::string intervals_json(const WeightSet& set) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& iv : set.intervals()) j.push_back({iv.lo, iv.hi});
  return j.dump();
}

void print_set(std::ostream& out, const WeightSet& set, bool json) {
  out << (json ? intervals_json(set) : to_string(set)) << '\n';
}

void require_vertices(std::uint64_t n) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (n > kMaxVertices) throw PreconditionError("n exceeds the supported maximum 2^31");
}

struct Options {
  std::string cache;
  std::uint64_t n = 0;
  std::uint64_t z = 0;
  Weight k = 0;
  bool json = false;
  bool with_wsize = false;
  bool dot = false;
  bool trace = false;
  std::string file;
  std::optional<Weight> expected_weight;
  std::uint64_t max_n = 200;
  std::string suite = "all";
  unsigned threads = 0;
  std::uint64_t seed = CheckOptions{}.seed;
  std::size_t cases = CheckOptions{}.random_cases;
};

int run_check(WeightTables& tables, const Options& opt, std::ostream& out) {
  CheckOptions options;
  options.max_n = opt.max_n;
  options.threads = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  options.seed = opt.seed;
  options.random_cases = opt.cases;

  std::vector<CheckResult> results;
  auto add = [&](std::vector<CheckResult> more) {
    for (auto& r : more) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
      results.push_back(std::move(r));
    }
  };
  const bool all = opt.suite == "all";
  if (all || opt.suite == "table") add(check_table(tables, options));
  if (all || opt.suite == "bounds") add(check_bounds(tables, options));
  if (all || opt.suite == "witness") add(check_witness(tables, options));
  if (all || opt.suite == "oracle") add(check_oracle(tables, options));

  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;
  out << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int run_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Digraph g = [&] {
    if (opt.file == "-") return parse_digraph(in);
    std::ifstream file(opt.file);
    if (!file) throw PreconditionError("cannot open " + opt.file);
    return parse_digraph(file);
  }();
  const Weight w = weight(g);
  const bool transitive = is_transitive(g);
  out << "vertices " << g.vertex_count() << '\n'
      << "weight " << w << '\n'
      << "transitive " << (transitive ? "yes" : "no") << '\n';
  if (!opt.expected_weight) return kExitOk;
  if (verify_witness(g.vertex_count(), *opt.expected_weight, g)) {
    out << "ok\n";
    return kExitOk;
  }
  err << "verification failed: expected a transitive digraph of weight " << *opt.expected_weight
      << ", got weight " << w << (transitive ? "" : " (not transitive)") << '\n';
  return kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reachable pairs and weight sets of digraphs", "reachpairs"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv(kCacheEnv)) opt.cache = env;
  app.add_option("--cache", opt.cache, "Table cache file (default: $REACHPAIRS_CACHE)");

  auto* b = app.add_subcommand("b", "End of the initial interval of W(n)");
  b->add_option("n", opt.n)->required();
  auto* ell = app.add_subcommand("ell", "Threshold l(z) = b(z) - z + 3");
  ell->add_option("z", opt.z)->required();
  auto* zeta = app.add_subcommand("zeta", "Recursion index of n (n >= 3)");
  zeta->add_option("n", opt.n)->required();
  auto* wset = app.add_subcommand("wset", "Achievable weights on n vertices");
  wset->add_option("n", opt.n)->required();
  wset->add_flag("--json", opt.json, "Print [[lo, hi], ...]");
  auto* wsize = app.add_subcommand("wsize", "Number of achievable weights on n vertices");
  wsize->add_option("n", opt.n)->required();
  auto* gaps = app.add_subcommand("gaps", "Weights in [n, n^2] that are not achievable");
  gaps->add_option("n", opt.n)->required();
  gaps->add_flag("--json", opt.json, "Print [[lo, hi], ...]");
  auto* approx = app.add_subcommand("approx", "Estimators and their error bounds as JSON");
  approx->add_option("n", opt.n)->required();
  approx->add_flag("--with-wsize", opt.with_wsize, "Also compare |W(n)| with its estimates");
  auto* witness = app.add_subcommand("witness", "Transitive digraph on n vertices of weight k");
  witness->add_option("n", opt.n)->required();
  witness->add_option("k", opt.k)->required();
  auto* dot = witness->add_flag("--dot", opt.dot, "Emit Graphviz DOT");
  witness->add_flag("--trace", opt.trace, "Emit the construction trace as JSON")->excludes(dot);
  auto* verify = app.add_subcommand("verify", "Weight and transitivity of a digraph file");
  verify->add_option("file", opt.file, "Digraph file, or - for standard input")->required();
  verify->add_option("--weight", opt.expected_weight, "Fail unless transitive with this weight");
  auto* oracle = app.add_subcommand("oracle", "Weight set by brute force (n <= 8)");
  oracle->add_option("n", opt.n)->required();
  oracle->add_flag("--json", opt.json, "Print [[lo, hi], ...]");
  auto* check = app.add_subcommand("check", "Run verification sweeps");
  check->add_option("--max-n", opt.max_n, "Largest n to sweep")->required();
  check->add_option("--suite", opt.suite, "Which sweeps to run")
      ->check(CLI::IsMember({"bounds", "table", "witness", "oracle", "all"}));
  check->add_option("--threads", opt.threads, "Worker threads (default: all cores)");
  check->add_option("--seed", opt.seed, "Seed for randomized cases");
  check->add_option("--cases", opt.cases, "Randomized cases per property");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  WeightTables tables;
  if (!opt.cache.empty()) load_cache(opt.cache, tables, err);

  int code = kExitOk;
  try {
    if (b->parsed()) {
      require_vertices(opt.n);
      out << tables.initial_interval_end(opt.n) << '\n';
    } else if (ell->parsed()) {
      require_vertices(opt.z);
      out << tables.threshold(opt.z) << '\n';
    } else if (zeta->parsed()) {
      require_vertices(opt.n);
      out << tables.recursion_index(opt.n) << '\n';
    } else if (wset->parsed()) {
      require_vertices(opt.n);
      print_set(out, tables.weight_set(opt.n), opt.json);
    } else if (wsize->parsed()) {
      require_vertices(opt.n);
      out << tables.weight_count(opt.n) << '\n';
    } else if (gaps->parsed()) {
      require_vertices(opt.n);
      print_set(out, tables.gaps(opt.n), opt.json);
    } else if (approx->parsed()) {
      require_vertices(opt.n);
      out << to_json(bound_report(tables, opt.n, opt.with_wsize)) << '\n';
    } else if (witness->parsed()) {
      require_vertices(opt.n);
      const Witness w = build_witness(tables, opt.n, opt.k);
      if (opt.trace) {
        out << to_json(w.trace) << '\n';
      } else if (opt.dot) {
        out << to_dot(w.graph);
      } else {
        out << format_digraph(w.graph);
      }
    } else if (verify->parsed()) {
      code = run_verify(opt, in, out, err);
    } else if (oracle->parsed()) {
      print_set(out, oracle_weight_set(opt.n), opt.json);
    } else if (check->parsed()) {
      code = run_check(tables, opt, out);
    }
  } catch (const NotAchievable& e) {
    err << "error: " << e.what() << '\n';
    code = kExitFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kExitFailure;
  }

  if (!opt.cache.empty()) save_cache(opt.cache, tables, err);
  return code;
}

}  // namespace reachpairs::cli
