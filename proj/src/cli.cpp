#include "invmaxian/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invmaxian/cheb.hpp"
#include "invmaxian/error.hpp"
#include "invmaxian/hamming.hpp"
#include "invmaxian/io.hpp"
#include "invmaxian/lp_l1.hpp"
#include "invmaxian/oracle.hpp"
#include "invmaxian/pmaxian.hpp"
#include "invmaxian/random_instance.hpp"

namespace invmaxian {

std::vector<ScalingPoint> run_scaling(Objective objective, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                      int repeat) {
  std::vector<ScalingPoint> points;
  for (std::size_t n : sizes) {
    GeneratorOptions opt;
    opt.n = n;
    opt.max_len = 100;
    opt.max_cost = 10;
    opt.max_bound = 100;
    opt.objective = objective;
    InverseInstance inst = random_instance(opt, seed + n);
    for (auto& d : inst.dec_bound) d = 100;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repeat); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SolveReport report = solve_pair(inst, inst.targets[0], inst.targets[1]);
      const auto stop = std::chrono::steady_clock::now();
      if (report.status != Status::Optimal) throw Error(ErrorCode::Internal, "scaling instance came out infeasible");
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    points.push_back({n, best});
  }
  return points;
}

ScalingFit fit_n_log_n(const std::vector<ScalingPoint>& points) {
  double num = 0;
  double den = 0;
  for (const auto& p : points) {
    const double f = static_cast<double>(p.n) * std::log(static_cast<double>(p.n));
    num += p.seconds * f;
    den += f * f;
  }
  ScalingFit fit;
  fit.coefficient = den > 0 ? num / den : 0;
  for (const auto& p : points) {
    const double model = fit.coefficient * static_cast<double>(p.n) * std::log(static_cast<double>(p.n));
    const double ratio = std::max(p.seconds / model, model / p.seconds);
    fit.worst_ratio = std::max(fit.worst_ratio, ratio);
  }
  return fit;
}

namespace {

VertexId vertex_by_name(const InverseInstance& inst, const std::string& name) {
  for (VertexId v = 0; v < inst.tree.vertex_count(); ++v) {
    if (inst.vertex_name(v) == name) return v;
  }
  throw Error(ErrorCode::InvalidVertex, "unknown vertex " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::map<std::string, Objective> kObjectives{{"l1", Objective::L1},
                                                   {"chebyshev", Objective::Chebyshev},
                                                   {"hamming-bottleneck", Objective::HammingBottleneck},
                                                   {"hamming-sum", Objective::HammingSum}};

struct SolveArgs {
  std::string instance;
  std::string objective;
  std::vector<std::string> pair;
  std::string dump_lp;
  bool json = false;
  bool parallel = false;
  std::size_t size_limit = kDefaultHammingSumLimit;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  InverseInstance inst = parse_instance(args.instance);
  if (!args.objective.empty()) inst.objective = kObjectives.at(args.objective);
  SolveOptions options;
  options.parallel = args.parallel;
  options.hamming_sum_limit = args.size_limit;

  SolveReport report;
  if (!args.pair.empty()) {
    const VertexId a = vertex_by_name(inst, args.pair[0]);
    const VertexId b = vertex_by_name(inst, args.pair[1]);
    report = solve_pair(inst, a, b, options);
    report.pairs.push_back({report.a, report.b, report.status, report.cost});
  } else {
    report = solve_inverse_pmaxian(inst, options);
  }
  if (!args.dump_lp.empty()) {
    const NormalizedInstance norm = normalize(inst, report.a, report.b);
    if (args.dump_lp == "-") {
      write_lp_format(out, inst, norm);
    } else {
      std::ofstream lp(args.dump_lp);
      if (!lp) throw Error(ErrorCode::Parse, "cannot write " + args.dump_lp);
      write_lp_format(lp, inst, norm);
    }
  }
  if (args.json) out << report_to_json(inst, report);
  else write_text_report(out, inst, report);
  return report.status == Status::Optimal ? kExitOk : kExitInfeasible;
}

int cmd_maxian(const std::string& path, std::size_t p, bool as_json, std::ostream& out) {
  const InverseInstance inst = parse_instance(path);
  const Tree& tree = inst.tree;
  if (p < 2 || p > tree.vertex_count()) throw Error(ErrorCode::InvalidInstance, "p must lie in [2, n]");
  const LongestPathResult lp = longest_path(tree);
  // Any superset of a diameter pair is a p-maxian; fill with the lowest ids.
  std::vector<VertexId> centers{std::min(lp.s, lp.t), std::max(lp.s, lp.t)};
  for (VertexId v = 0; v < tree.vertex_count() && centers.size() < p; ++v) {
    if (v != lp.s && v != lp.t) centers.push_back(v);
  }
  const Rational value = maxian_value(tree, centers);

  // Do the given targets already contain a 2-maxian pair?
  bool targets_ok = false;
  for (std::size_t i = 0; i < inst.targets.size() && !targets_ok; ++i) {
    for (std::size_t j = i + 1; j < inst.targets.size() && !targets_ok; ++j) {
      targets_ok = is_weakly_longest(tree, inst.targets[i], inst.targets[j]).holds;
    }
  }
  if (as_json) {
    nlohmann::json doc;
    doc["longest_path"] = {{"endpoints", {inst.vertex_name(lp.s), inst.vertex_name(lp.t)}},
                           {"length", to_string(lp.length)}};
    doc["maxian"] = nlohmann::json::array();
    for (VertexId c : centers) doc["maxian"].push_back(inst.vertex_name(c));
    doc["value"] = to_string(value);
    doc["targets_are_maxian"] = targets_ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "longest path: " << inst.vertex_name(lp.s) << " - " << inst.vertex_name(lp.t) << ", length "
        << exact_and_decimal(lp.length) << "\n";
    out << p << "-maxian:";
    for (VertexId c : centers) out << " " << inst.vertex_name(c);
    out << "\nvalue: " << exact_and_decimal(value) << "\n";
    out << "targets contain a 2-maxian pair: " << (targets_ok ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& instance_path, const std::string& report_path, std::ostream& out) {
  const InverseInstance inst = parse_instance(instance_path);
  const SolveReport report = parse_report(inst, read_file(report_path));
  const Verification v = verify_solution(inst, report);
  if (v.ok) {
    out << "ok\n";
    return kExitOk;
  }
  for (const auto& r : v.reasons) out << "FAIL: " << r << "\n";
  return kExitError;
}

int cmd_oracle(const std::string& path, const std::string& objective, const std::vector<std::string>& pair,
               std::size_t maxian_p, std::ostream& out) {
  InverseInstance inst = parse_instance(path);
  if (maxian_p > 0) {
    const auto res = oracle::maxian(inst.tree, maxian_p);
    out << "oracle " << maxian_p << "-maxian:";
    for (VertexId v : res.best) out << " " << inst.vertex_name(v);
    out << "\nvalue: " << exact_and_decimal(res.value) << "\n";
    return kExitOk;
  }
  if (!objective.empty()) inst.objective = kObjectives.at(objective);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (!pair.empty()) {
    pairs.emplace_back(vertex_by_name(inst, pair[0]), vertex_by_name(inst, pair[1]));
  } else {
    auto t = inst.targets;
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) pairs.emplace_back(t[i], t[j]);
    }
  }
  std::optional<Rational> best;
  for (const auto& [a, b] : pairs) {
    const NormalizedInstance norm = normalize(inst, a, b);
    std::optional<Rational> cost;
    switch (inst.objective) {
      case Objective::L1: cost = oracle::l1_integer(norm); break;
      case Objective::Chebyshev: cost = oracle::chebyshev(norm); break;
      case Objective::HammingBottleneck: cost = oracle::hamming(norm, oracle::HammingVariant::Bottleneck).cost; break;
      case Objective::HammingSum: cost = oracle::hamming(norm, oracle::HammingVariant::Sum).cost; break;
    }
    out << "pair " << inst.vertex_name(a) << " " << inst.vertex_name(b) << ": "
        << (cost ? exact_and_decimal(*cost) : std::string("INFEASIBLE")) << "\n";
    if (cost && (!best || *cost < *best)) best = cost;
  }
  out << "oracle " << to_string(inst.objective) << ": " << (best ? exact_and_decimal(*best) : "INFEASIBLE") << "\n";
  return best ? kExitOk : kExitInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse p-maxian solver for trees with variable edge lengths", "invmaxian"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an inverse p-maxian instance");
  solve->add_option("instance", solve_args.instance, "Instance file (JSON)")->required();
  solve->add_option("--objective", solve_args.objective, "Override the instance objective")
      ->check(CLI::IsMember({"l1", "chebyshev", "hamming-bottleneck", "hamming-sum"}));
  solve->add_option("--pair", solve_args.pair, "Solve only this target pair")->expected(2);
  solve->add_option("--dump-lp", solve_args.dump_lp, "Write the l1 LP of the reported pair ('-' for stdout)");
  solve->add_flag("--json", solve_args.json, "Machine-readable report");
  solve->add_flag("--parallel", solve_args.parallel, "Solve target pairs on separate threads");
  solve->add_option("--size-limit", solve_args.size_limit, "Candidate-edge limit of the exact Hamming-sum solver");

  std::string maxian_path;
  std::size_t maxian_p = 2;
  bool maxian_json = false;
  auto* maxian = app.add_subcommand("maxian", "Forward p-maxian via the longest path");
  maxian->add_option("instance", maxian_path, "Instance file (JSON)")->required();
  maxian->add_option("--p", maxian_p, "Number of facilities")->check(CLI::PositiveNumber);
  maxian->add_flag("--json", maxian_json, "Machine-readable output");

  std::string check_instance;
  std::string check_report;
  auto* check = app.add_subcommand("check", "Verify a JSON report against its instance");
  check->add_option("instance", check_instance, "Instance file (JSON)")->required();
  check->add_option("report", check_report, "Report file from `solve --json`")->required();

  std::string oracle_path;
  std::string oracle_objective;
  std::vector<std::string> oracle_pair;
  std::size_t oracle_maxian = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference answer (small instances only)");
  oracle_cmd->add_option("instance", oracle_path, "Instance file (JSON)")->required();
  oracle_cmd->add_option("--objective", oracle_objective, "Override the instance objective")
      ->check(CLI::IsMember({"l1", "chebyshev", "hamming-bottleneck", "hamming-sum"}));
  oracle_cmd->add_option("--pair", oracle_pair, "Only this target pair")->expected(2);
  oracle_cmd->add_option("--maxian", oracle_maxian, "Exhaustive forward p-maxian instead (p <= 3)");

  GeneratorOptions gen_opt;
  std::uint64_t gen_seed = 1;
  std::string gen_shape = "recursive";
  std::string gen_objective = "l1";
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_opt.n, "Vertex count")->check(CLI::Range(2, 10000000));
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--max-len", gen_opt.max_len, "Lengths drawn from [1, max-len]")->check(CLI::PositiveNumber);
  gen->add_option("--max-cost", gen_opt.max_cost, "Costs drawn from [1, max-cost]")->check(CLI::PositiveNumber);
  gen->add_option("--max-bound", gen_opt.max_bound, "Bounds drawn from [0, max-bound]")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-weight", gen_opt.max_weight, "Weights drawn from [1, max-weight]")->check(CLI::PositiveNumber);
  gen->add_option("--targets", gen_opt.targets, "Number of target leaves");
  gen->add_option("--denominator", gen_opt.denominator, "Largest denominator of generated rationals");
  gen->add_option("--zero-cost-percent", gen_opt.zero_cost_percent, "Share of zero-cost edges")->check(CLI::Range(0, 100));
  gen->add_option("--shape", gen_shape, "Tree shape")->check(CLI::IsMember({"recursive", "star", "caterpillar"}));
  gen->add_option("--objective", gen_objective, "Objective written into the file")
      ->check(CLI::IsMember({"l1", "chebyshev", "hamming-bottleneck", "hamming-sum"}));

  std::string bench_objective = "chebyshev";
  std::vector<std::size_t> bench_sizes{10000, 20000, 40000, 80000};
  std::uint64_t bench_seed = 7;
  int bench_repeat = 3;
  auto* bench = app.add_subcommand("bench", "Time a solver on growing random trees and fit a n log n");
  bench->add_option("--objective", bench_objective, "Solver to time")
      ->check(CLI::IsMember({"l1", "chebyshev", "hamming-bottleneck", "hamming-sum"}));
  bench->add_option("--sizes", bench_sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--repeat", bench_repeat, "Runs per size (minimum is reported)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return cmd_solve(solve_args, out);
    if (*maxian) return cmd_maxian(maxian_path, maxian_p, maxian_json, out);
    if (*check) return cmd_check(check_instance, check_report, out);
    if (*oracle_cmd) return cmd_oracle(oracle_path, oracle_objective, oracle_pair, oracle_maxian, out);
    if (*gen) {
      gen_opt.shape = gen_shape == "star" ? TreeShape::Star
                      : gen_shape == "caterpillar" ? TreeShape::Caterpillar
                                                   : TreeShape::Recursive;
      gen_opt.objective = kObjectives.at(gen_objective);
      out << serialize_instance(random_instance(gen_opt, gen_seed));
      return kExitOk;
    }
    if (*bench) {
      const auto points = run_scaling(kObjectives.at(bench_objective), bench_sizes, bench_seed, bench_repeat);
      const auto fit = fit_n_log_n(points);
      out << "n,seconds,seconds_per_nlogn\n";
      for (const auto& p : points) {
        const double f = static_cast<double>(p.n) * std::log(static_cast<double>(p.n));
        out << p.n << "," << p.seconds << "," << p.seconds / f << "\n";
      }
      out << "fit a=" << fit.coefficient << " worst_ratio=" << fit.worst_ratio << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace invmaxian
