#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rcurves::jobs {

/// Outcome of running a job document: the exit code the process should
/// report and the JSON output text (newline-terminated).
///   0 - every job succeeded
///   2 - at least one job had malformed input
///   3 - no malformed input, but a mathematical precondition failed
struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Process-level defaults that individual jobs may override.
struct RunOptions {
  std::optional<std::string> field;  // default field descriptor, "Q" or "Fp:<prime>"
  std::optional<std::uint64_t> seed; // default seed for randomized jobs
  int parallel = 1;                  // worker threads for batches and shardable jobs
};

/// Runs a single job object or an array of jobs (results in input order).
/// Never throws: problems are reported as {"error": {...}} documents and
/// the exit code. Identical input, options and seed give identical bytes.
RunResult run_jobs_text(const std::string& input, const RunOptions& options = {});

}  // namespace rcurves::jobs
