#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcsgc/bounded_range.hpp"
#include "lcsgc/generate.hpp"
#include "lcsgc/io.hpp"
#include "lcsgc/oracle.hpp"
#include "lcsgc/solve.hpp"

namespace lcsgc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kInputError = 2;

struct SolveFlags {
  std::string input;
  std::string algorithm = "auto";
  bool witness = false;
  bool json_output = false;
  bool stats = false;
  bool approx = false;
  unsigned threads = 1;
};

struct GenFlags {
  std::uint64_t seed = 1;
  Index m = 8;
  Index n = 8;
  Letter sigma = 2;
  std::string variant = "mc";
  Bound max_bound = 4;
  Index range = 0;
  int classes = 3;
};

struct BenchFlags {
  std::string variant = "1c";
  std::string algorithm = "auto";
  std::vector<Index> sizes;
  Index from = 256;
  Index to = 2048;
  std::uint64_t seed = 1;
  Letter sigma = 4;
  Bound max_bound = 4;
  Index range = 0;
  int classes = 3;
  int repeat = 3;
};

ProblemInstance read_instance(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
  }
  return validate_instance(instance_from_json(doc));
}

Index oracle_cap() {
  const char* value = std::getenv("LCSGC_ORACLE_CAP");
  if (value == nullptr || *value == '\0') return kDefaultOracleCap;
  try {
    return std::stol(value);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadInput, "LCSGC_ORACLE_CAP must be an integer");
  }
}

json word_json(const ProblemInstance& inst, const Word& word) {
  if (inst.alphabet.empty()) return std::vector<Letter>(word.symbols().begin(), word.symbols().end());
  std::string text;
  for (Letter a : word.symbols()) text.push_back(inst.alphabet[static_cast<std::size_t>(a - 1)]);
  return text;
}

std::optional<int> class_count(const ProblemInstance& inst) {
  if (!inst.gaps) return std::nullopt;
  return label_tuple(*inst.gaps).h();
}

json make_report(const ProblemInstance& inst, std::string_view algorithm, const SolveResult& result,
                 std::chrono::nanoseconds elapsed, bool with_stats, const std::optional<RangeBounds>& bounds) {
  json report;
  report["variant"] = std::string(to_string(inst.variant));
  report["m"] = inst.v.size();
  report["n"] = inst.w.size();
  report["sigma"] = inst.sigma;
  if (const auto h = class_count(inst)) report["h"] = *h;
  if (inst.range_bound) report["B"] = *inst.range_bound;
  report["algorithm"] = std::string(algorithm);
  report["length"] = result.length;
  if (result.witness) {
    report["witness"] = {{"subsequence", word_json(inst, result.witness->subsequence)},
                         {"in_v", result.witness->in_v.positions},
                         {"in_w", result.witness->in_w.positions}};
  }
  if (bounds) report["bounds"] = {{"lower", bounds->lower}, {"upper", bounds->upper}};
  report["duration_ns"] = elapsed.count();
  report["notes"] = inst.notes;
  if (with_stats) {
    const SolveStats& s = result.stats;
    report["stats"] = {{"deque_pushes", s.deque_pushes}, {"deque_pops", s.deque_pops},
                       {"tree_nodes", s.tree_nodes},     {"rmq_cells", s.rmq_cells},
                       {"layers", s.layers},             {"block_pairs", s.block_pairs}};
  }
  return report;
}

void print_report(const json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump() << '\n';
    return;
  }
  out << "variant    " << report["variant"].get<std::string>() << '\n'
      << "size       " << report["m"] << " x " << report["n"] << ", sigma " << report["sigma"] << '\n';
  if (report.contains("h")) out << "classes    " << report["h"] << '\n';
  if (report.contains("B")) out << "B          " << report["B"] << '\n';
  out << "algorithm  " << report["algorithm"].get<std::string>() << '\n'
      << "length     " << report["length"] << '\n';
  if (report.contains("witness")) {
    const json& w = report["witness"];
    out << "witness    " << (w["subsequence"].is_string() ? w["subsequence"].get<std::string>()
                                                           : w["subsequence"].dump())
        << "  v@" << w["in_v"].dump() << "  w@" << w["in_w"].dump() << '\n';
  }
  if (report.contains("bounds")) {
    out << "bounds     [" << report["bounds"]["lower"] << ", " << report["bounds"]["upper"] << "]\n";
  }
  out << "time       " << report["duration_ns"] << " ns\n";
  for (const auto& note : report["notes"]) out << "note       " << note.get<std::string>() << '\n';
  if (report.contains("stats")) {
    for (const auto& [key, value] : report["stats"].items()) out << "stat       " << key << ' ' << value << '\n';
  }
}

int cmd_solve(const SolveFlags& flags, std::ostream& out) {
  const ProblemInstance inst = read_instance(flags.input);
  SolveOptions options;
  options.algorithm = resolve_algorithm(inst, parse_algorithm(flags.algorithm));
  options.want_witness = flags.witness;
  options.threads = std::max(1U, flags.threads);

  const auto start = Clock::now();
  const SolveResult result = solve(inst, options);
  const auto elapsed = Clock::now() - start;

  std::optional<RangeBounds> bounds;
  if (flags.approx) {
    if (inst.variant != Variant::BR) throw Error(ErrorCode::UnsupportedAlgorithm, "--approx applies to br only");
    bounds = lcs_br_approx(inst.v, inst.w, inst.range_bound.value_or(1));
  }
  print_report(make_report(inst, to_string(options.algorithm), result, elapsed, flags.stats, bounds),
               flags.json_output, out);
  return 0;
}

int cmd_oracle(const SolveFlags& flags, std::ostream& out) {
  const ProblemInstance inst = read_instance(flags.input);
  const auto start = Clock::now();
  const SolveResult result = oracle_solve(inst, oracle_cap());
  const auto elapsed = Clock::now() - start;
  print_report(make_report(inst, "oracle", result, elapsed, false, std::nullopt), flags.json_output, out);
  return 0;
}

GenOptions gen_options(std::uint64_t seed, Index m, Index n, Letter sigma, const std::string& variant,
                       Bound max_bound, Index range, int classes) {
  GenOptions options;
  options.seed = seed;
  options.m = m;
  options.n = n;
  options.sigma = sigma;
  options.variant = parse_variant(variant);
  options.max_bound = max_bound;
  options.range = range;
  options.classes = classes;
  return options;
}

int cmd_gen(const GenFlags& flags, std::ostream& out) {
  const ProblemInstance inst = generate_instance(
      gen_options(flags.seed, flags.m, flags.n, flags.sigma, flags.variant, flags.max_bound, flags.range, flags.classes));
  out << instance_to_json(inst).dump() << '\n';
  return 0;
}

Index bench_param(const ProblemInstance& inst) {
  if (inst.variant == Variant::BR) return *inst.range_bound;
  if (const auto h = class_count(inst)) return *h;
  return inst.sigma;
}

int cmd_bench(const BenchFlags& flags, std::ostream& out) {
  std::vector<Index> sizes = flags.sizes;
  if (sizes.empty()) {
    for (Index size = std::max<Index>(flags.from, 1); size <= flags.to; size *= 2) sizes.push_back(size);
  }
  const Algorithm requested = parse_algorithm(flags.algorithm);

  out << "variant,algorithm,m,n,param,nanoseconds\n";
  for (Index size : sizes) {
    const ProblemInstance inst = validate_instance(generate_instance(gen_options(
        flags.seed, size, size, flags.sigma, flags.variant, flags.max_bound, flags.range, flags.classes)));
    SolveOptions options;
    options.algorithm = resolve_algorithm(inst, requested);
    auto best = std::chrono::nanoseconds::max();
    for (int r = 0; r < std::max(flags.repeat, 1); ++r) {
      const auto start = Clock::now();
      const SolveResult result = solve(inst, options);
      best = std::min(best, std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start));
      (void)result;
    }
    out << to_string(inst.variant) << ',' << to_string(options.algorithm) << ',' << size << ',' << size << ','
        << bench_param(inst) << ',' << best.count() << '\n';
  }
  return 0;
}

void report_error(std::string_view code, std::string_view message, bool to_out, std::ostream& out,
                  std::ostream& err) {
  const json error = {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
  (to_out ? out : err) << error.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest common subsequence under gap constraints", "lcsgc"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("-i,--input", solve_flags.input, "Instance JSON file, '-' for stdin")->required();
  solve_cmd->add_option("-a,--algorithm", solve_flags.algorithm,
                        "auto, layered, segtree, deque, rmq, naive, blocked or classic");
  solve_cmd->add_flag("--witness", solve_flags.witness, "Report one optimal subsequence where supported");
  solve_cmd->add_flag("--json", solve_flags.json_output, "Emit the report as JSON");
  solve_cmd->add_flag("--stats", solve_flags.stats, "Include structure counters");
  solve_cmd->add_flag("--approx", solve_flags.approx, "Also report the block bounds (br only)");
  solve_cmd->add_option("--threads", solve_flags.threads, "Worker threads for br block pairs");

  SolveFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve a small instance by exhaustive search");
  oracle_cmd->add_option("-i,--input", oracle_flags.input, "Instance JSON file, '-' for stdin")->required();
  oracle_cmd->add_flag("--json", oracle_flags.json_output, "Emit the report as JSON");

  GenFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--seed", gen_flags.seed, "Random seed");
  gen_cmd->add_option("-m", gen_flags.m, "Length of v")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("-n", gen_flags.n, "Length of w")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--sigma", gen_flags.sigma, "Alphabet size")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--variant", gen_flags.variant, "Problem variant");
  gen_cmd->add_option("--max-bound", gen_flags.max_bound, "Largest sampled gap bound")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("-B,--range", gen_flags.range, "B for br; 0 draws it at random")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--classes", gen_flags.classes, "Distinct constraints for o1c-sync")->check(CLI::PositiveNumber);

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time a solver on random instances (CSV)");
  bench_cmd->add_option("--variant", bench_flags.variant, "Problem variant");
  bench_cmd->add_option("-a,--algorithm", bench_flags.algorithm, "Algorithm, as for solve");
  bench_cmd->add_option("--sizes", bench_flags.sizes, "Word lengths, comma separated")->delimiter(',');
  bench_cmd->add_option("--from", bench_flags.from, "Smallest length when --sizes is absent");
  bench_cmd->add_option("--to", bench_flags.to, "Largest length; lengths double from --from");
  bench_cmd->add_option("--seed", bench_flags.seed, "Random seed");
  bench_cmd->add_option("--sigma", bench_flags.sigma, "Alphabet size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-bound", bench_flags.max_bound, "Largest sampled gap bound")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("-B,--range", bench_flags.range, "B for br; 0 draws it at random")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--classes", bench_flags.classes, "Distinct constraints for o1c-sync")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", bench_flags.repeat, "Runs per size; the minimum is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    report_error("BadArguments", e.what(), false, out, err);
    return kInputError;
  }

  const bool json_errors = (solve_cmd->parsed() && solve_flags.json_output) ||
                           (oracle_cmd->parsed() && oracle_flags.json_output);
  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_flags, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_flags, out);
    if (gen_cmd->parsed()) return cmd_gen(gen_flags, out);
    return cmd_bench(bench_flags, out);
  } catch (const Error& e) {
    report_error(to_string(e.code()), e.what(), json_errors, out, err);
  } catch (const json::exception& e) {
    report_error(to_string(ErrorCode::BadInput), e.what(), json_errors, out, err);
  }
  return kInputError;
}

}  // namespace lcsgc::cli
