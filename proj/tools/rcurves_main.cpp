#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rcurves/jobs.hpp"

// JSON-in, JSON-out frontend. The input is one job object or an array of
// jobs; results come back in input order. Exit codes: 0 all jobs succeeded,
// 2 malformed input somewhere, 3 a mathematical precondition failed.
int main(int argc, char** argv) {
  CLI::App app{
      "rcurves: exact splitting types of pulled-back tangent bundles on rational curves,\n"
      "line enumeration over finite fields, dimension formulas, Hirzebruch class arithmetic"};

  std::string jobs_path = "-";
  std::string field;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int parallel = 1;

  app.add_option("--jobs", jobs_path, "job document path, or '-' for stdin")
      ->capture_default_str();
  app.add_option("--field", field, "default coefficient field: \"Q\" or \"Fp:<prime>\"");
  app.add_option("--seed", seed, "default seed for randomized jobs")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--parallel", parallel, "worker threads for batches and shardable jobs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string input;
  if (jobs_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    input = buf.str();
  } else {
    std::ifstream in(jobs_path, std::ios::binary);
    if (!in) {
      std::cout << "{\"error\":{\"kind\":\"BadFile\",\"message\":\"cannot read " << jobs_path
                << "\"}}\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    input = buf.str();
  }

  rcurves::jobs::RunOptions options;
  if (!field.empty()) options.field = field;
  if (seed_given) options.seed = seed;
  options.parallel = parallel;

  auto result = rcurves::jobs::run_jobs_text(input, options);
  std::cout << result.output;
  return result.exit_code;
}
