#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hallar/options.hpp"

namespace hallar::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  enum class Mode { Solve, RunTests, Gen } mode = Mode::Solve;
  io::OptionSet options;               // provenance Cli
  std::vector<std::string> gen_args;   // tokens after "gen"
};

// argv without the program name. Short flags -i/-p/-d/-c/-w/-o plus long
// flags for every registry key; --run_tests is a bare boolean flag.
// Throws UsageError naming the offending token.
Invocation parse_args(const std::vector<std::string>& argv);

// Full pipeline: parse → config → merge → read input → solve → write →
// report. Returns 0 on Optimal, 2 on iteration/time limits, 1 on usage or
// parse failures.
int run_main(const std::vector<std::string>& argv);

// Built-in check on the embedded example instances; 0 iff all pass.
int run_tests(const io::OptionSet& cli_options);

int gen_main(const std::vector<std::string>& args);

// "_primal"/"_dual" inserted before the extension of an -o path.
std::string derive_output_path(const std::string& base, const std::string& tag);

}  // namespace hallar::cli
