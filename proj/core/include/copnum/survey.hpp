#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "copnum/report.hpp"
#include "copnum/solver.hpp"

namespace copnum {

enum class SurveyMode { Full, Pruned, Audit };

const char* to_string(SurveyMode m);
std::optional<SurveyMode> survey_mode_from_string(const std::string& s);

/// Cop number with statistics; throws ExceedsKMax like cop_number().
using CopNumberFn = std::function<int(const Graph&, int k_max, SolveStats*)>;

struct SurveySummary {
  int n = 0;
  SurveyMode mode = SurveyMode::Full;
  int threshold = 3;
  std::uint64_t classes = 0;
  std::map<int, std::uint64_t> by_cop_number;
  std::map<std::string, std::uint64_t> by_certificate;
  /// Canonical graph6 of classes with cop_number >= threshold, in stream order.
  std::vector<std::string> at_or_above_threshold;
  /// Solved classes whose cop number fell below the structural lower bound.
  std::uint64_t lower_bound_violations = 0;
  std::uint64_t audited = 0;
  /// Pruned graph6 strings the audit found to need more than two cops.
  std::vector<std::string> audit_contradictions;
  double seconds = 0;
  std::string spec;  // echo of the options that define the run

  std::uint64_t solved() const;
  std::uint64_t pruned() const;
  /// Solved classes with cop number >= 3.
  std::uint64_t c3plus() const;
  /// Same counts, lists and spec; timing ignored.
  bool same_result(const SurveySummary& o) const;
};

nlohmann::json to_json(const SurveySummary& s);
SurveySummary summary_from_json(const nlohmann::json& j);

/// Header "n,mode,classes,c1,c2,c3plus,pruned,seconds" and one row.
void write_summary_csv(std::ostream& out, const SurveySummary& s);

struct SurveyOptions {
  int n = 0;
  SurveyMode mode = SurveyMode::Full;
  int jobs = 1;
  int k_max = 4;
  int threshold = 3;
  /// Newline-delimited graph6 to survey instead of the built-in generator.
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> out;         // JSONL records
  std::optional<std::filesystem::path> summary;     // CSV
  std::optional<std::filesystem::path> checkpoint;  // resume state
  std::size_t sample = 10000;                       // audit sample size
  std::uint64_t seed = 1;
  bool stable_output = false;
  std::size_t checkpoint_every = 10000;
  double checkpoint_seconds = 5.0;
  /// Replaces the solver (tests inject faulty solvers through this).
  CopNumberFn solver;
  /// Set asynchronously to stop at the next batch boundary.
  const std::atomic<bool>* stop = nullptr;
  /// Test hook: stop after this many batches have been written.
  std::optional<std::size_t> stop_after_batches;
};

struct SurveyResult {
  SurveySummary summary;
  bool complete = false;  // false when stopped early; the checkpoint holds the rest
  bool resumed = false;
};

/// Processes every connected class of order n (or every graph of the input
/// stream): solves or prunes per mode, writes records in stream order, and
/// checkpoints at batch boundaries. Throws Error on I/O, input, or option
/// problems.
SurveyResult run_survey(const SurveyOptions& options);

/// Record for one graph under the given mode (no timing, no audit).
SurveyRecord survey_graph(const Graph& g, SurveyMode mode, int k_max, const CopNumberFn& solver,
                          bool* lower_bound_violated = nullptr);

struct VerifyOptions {
  SurveyMode mode = SurveyMode::Pruned;  // Full or Pruned
  int jobs = 1;
  int max_n = 10;
  CopNumberFn solver;
  std::ostream* log = nullptr;
  const std::atomic<bool>* stop = nullptr;
};

struct VerifyResult {
  bool ok = false;
  std::string message;
  /// graph6 that broke an assertion, if any.
  std::string offending;
  std::vector<SurveySummary> surveys;
  /// Canonical graph6 of the unique class needing three cops at the top order.
  std::string three_cop_graph;
};

/// Surveys n = 1..max_n and checks: no class with cop number >= 3 below 10
/// vertices; at 10 vertices exactly one, which has cop number 3, satisfies the
/// Petersen neighborhood-complement property, and is canonically equal to the
/// Petersen graph.
VerifyResult verify_m3(const VerifyOptions& options);

/// Worker count from COPNUM_JOBS, else hardware concurrency (at least 1).
int default_jobs();

}  // namespace copnum
