#ifndef OPAIR_ANALYSIS_HPP
#define OPAIR_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "opair/check.hpp"
#include "opair/diffop.hpp"
#include "opair/isotopic.hpp"

namespace opair {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kAnalysisSeed = 0xA11CEULL;
inline constexpr const char* kSchema = "opair-1";

/// Parses {"n": ..., "A": [[...]], "B": [[...]]} with integer or "p/q"
/// entries. Throws std::invalid_argument on malformed input.
MatrixPair parse_pair_document(const Json& doc);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

struct AnalysisOptions {
  std::uint64_t seed = kAnalysisSeed;
  int samples = 12;  // budget for the sampled identity checks
};

struct AnalysisResult {
  Json json;
  bool all_pass = true;
};

/// Full report for one pair: invariants, bases, hybrid data, form kernel,
/// orbit decomposition, convention verdicts, and one pass/fail entry per
/// verified identity. Deterministic for fixed options.
AnalysisResult analyze_pair(const MatrixPair& p, const AnalysisOptions& opts = {});

/// Point-local closure and coupling identities for the tau fields, with
/// sampled arguments.
Report verify_pseudo_at_point(const MatrixPair& p, int samples, std::uint64_t seed);

struct SuiteRun {
  Json json;
  bool all_pass = true;
  bool unknown_suite = false;
};

/// Known suites: pair_axioms, hybrid, contragredience, kernel, kirillov,
/// pseudo, decomposition, connection, diffop, or "all".
SuiteRun run_suites(const std::vector<std::string>& suites, const std::vector<int>& ns,
                    int samples, std::uint64_t seed);

Json commutation_table_to_json(const CommutationTable& t);

Json report_to_json(const Report& rep);

}  // namespace opair

#endif
