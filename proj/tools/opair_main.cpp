// Command-line surface: analyze a pair file, run verification suites, sweep
// random pairs into a census, or emit the truncated-operator commutation
// table. All output is deterministic JSON; see README for the exit-code and
// reproducibility contracts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opair/analysis.hpp"
#include "opair/rng.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OPAIR_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      // fall through to the built-in default
    }
  }
  return 42;
}

int emit(const opair::Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(out_path);
  out << text;
  if (!out.good()) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::invalid_argument("empty dimension list");
  for (int n : out)
    if (n < 1 || n > 16) throw std::invalid_argument("dimensions must be in 1..16");
  return out;
}

int cmd_analyze(const std::string& pair_path, const std::string& out_path) {
  std::ifstream in(pair_path);
  if (!in.good()) {
    std::cerr << "cannot read " << pair_path << "\n";
    return kExitUsage;
  }
  opair::Json doc;
  opair::MatrixPair pair;
  try {
    doc = opair::Json::parse(in);
    pair = opair::parse_pair_document(doc);
  } catch (const std::exception& e) {
    std::cerr << "malformed pair document: " << e.what() << "\n";
    return kExitUsage;
  }
  const opair::AnalysisResult res = opair::analyze_pair(pair);
  const int io = emit(res.json, out_path);
  if (io != kExitPass) return io;
  return res.all_pass ? kExitPass : kExitViolation;
}

int cmd_verify(const std::string& suites_arg, const std::string& n_arg, int samples,
               std::uint64_t seed, const std::string& out_path) {
  std::vector<std::string> suites;
  std::stringstream ss(suites_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) suites.push_back(tok);
  std::vector<int> ns;
  try {
    ns = parse_n_list(n_arg);
  } catch (const std::exception& e) {
    std::cerr << "bad dimension list: " << e.what() << "\n";
    return kExitUsage;
  }
  const opair::SuiteRun run = opair::run_suites(suites, ns, samples, seed);
  if (run.unknown_suite) {
    std::cerr << run.json["error"].get<std::string>() << "\n";
    return kExitUsage;
  }
  const int io = emit(run.json, out_path);
  if (io != kExitPass) return io;
  return run.all_pass ? kExitPass : kExitViolation;
}

int cmd_sweep(int n, int count, std::uint64_t seed, long range, const std::string& out_path) {
  if (count < 1) {
    std::cerr << "count must be at least 1\n";
    return kExitUsage;
  }
  if (n < 1 || n > 16) {
    std::cerr << "dimension must be in 1..16\n";
    return kExitUsage;
  }
  if (range < 1) {
    std::cerr << "range must be at least 1\n";
    return kExitUsage;
  }
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file.good()) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out = &file;
  }
  bool all_pass = true;
  std::map<std::string, int> distribution;  // ordered by key for determinism
  for (int i = 0; i < count; ++i) {
    opair::SplitMix64 g = opair::substream(seed, static_cast<std::uint64_t>(i));
    const std::uint64_t item_seed = g.next();
    const opair::MatrixPair p(opair::random_matrix(g, n, range),
                              opair::random_matrix(g, n, range));
    opair::AnalysisOptions opts;
    opts.seed = item_seed;
    opts.samples = 6;
    const opair::AnalysisResult res = opair::analyze_pair(p, opts);
    opair::Json line = opair::Json::object();
    line["index"] = i;
    line["seed"] = item_seed;
    for (const auto& [k, v] : res.json.items()) line[k] = v;
    (*out) << line.dump() << "\n";
    all_pass = all_pass && res.all_pass;
    const std::string key = "a=" + std::to_string(res.json["a"].get<int>()) +
                            ",a0=" + std::to_string(res.json["a0"].get<int>()) + "," +
                            res.json["classification"].get<std::string>();
    ++distribution[key];
  }
  opair::Json summary = opair::Json::object();
  summary["schema"] = opair::kSchema;
  opair::Json dist = opair::Json::object();
  for (const auto& [k, v] : distribution) dist[k] = v;
  summary["summary"] = opair::Json::object();
  summary["summary"]["count"] = count;
  summary["summary"]["distribution"] = std::move(dist);
  (*out) << summary.dump() << "\n";
  if (!out->good()) {
    std::cerr << "write failure\n";
    return kExitUsage;
  }
  return all_pass ? kExitPass : kExitViolation;
}

int cmd_difftable(int max_index, int degree, const std::string& out_path) {
  opair::CommutationTable t;
  try {
    t = opair::commutation_table(max_index, degree);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  const int io = emit(opair::commutation_table_to_json(t), out_path);
  if (io != kExitPass) return io;
  const bool structural = t.verdict.zero_iff_even_sum && t.verdict.unit_coefficients &&
                          t.verdict.antisymmetric && t.verdict.shifts_ok;
  return structural ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and identity checks for pairs of matrices"};
  app.require_subcommand(1);

  std::string pair_path, out_path;
  auto* analyze = app.add_subcommand("analyze", "analyze one pair from a JSON file");
  analyze->add_option("--pair", pair_path, "pair document (JSON)")->required();
  analyze->add_option("--out", out_path, "output file (default stdout)");

  std::string suites = "all", n_list = "2,3";
  int samples = 100;
  std::uint64_t seed = default_seed();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "suite name list or 'all'");
  verify->add_option("--n", n_list, "comma-separated dimensions");
  verify->add_option("--samples", samples, "samples per suite");
  verify->add_option("--seed", seed, "PRNG seed");
  std::string verify_out;
  verify->add_option("--out", verify_out, "output file (default stdout)");

  int sweep_n = 2, sweep_count = 10;
  long sweep_range = 9;
  std::uint64_t sweep_seed = default_seed();
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "census of random pairs (JSON lines)");
  sweep->add_option("--n", sweep_n, "matrix dimension");
  sweep->add_option("--count", sweep_count, "number of pairs")->required();
  sweep->add_option("--seed", sweep_seed, "PRNG seed");
  sweep->add_option("--range", sweep_range, "entries uniform in [-range, range]");
  sweep->add_option("--out", sweep_out, "output file (default stdout)");

  int dt_max = 6, dt_degree = 20;
  std::string dt_out;
  auto* difftable = app.add_subcommand("difftable", "commutation table of the operator basis");
  difftable->add_option("--max", dt_max, "largest basis index");
  difftable->add_option("--degree", dt_degree, "truncation degree (at least 2*max+2)");
  difftable->add_option("--out", dt_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(pair_path, out_path);
    if (verify->parsed()) return cmd_verify(suites, n_list, samples, seed, verify_out);
    if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_count, sweep_seed, sweep_range, sweep_out);
    if (difftable->parsed()) return cmd_difftable(dt_max, dt_degree, dt_out);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
