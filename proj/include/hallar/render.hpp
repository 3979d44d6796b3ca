#pragma once

#include <string>

#include "hallar/options.hpp"
#include "hallar/solver.hpp"
#include "hallar/types.hpp"

namespace hallar::cli {

// Settings echo printed before solving; `basic_only` selects the
// verbosity-1 subset.
std::string render_settings(const io::OptionSet& opts, bool basic_only);

std::string render_problem_header(const std::string& path, bool sdpa, const SdpInstance& inst);

std::string table_rule();
std::string table_header();

// One row of the iteration table. Verbosity 0 renders nothing. gap prints
// "-" at iteration 0 and "NaN" while no dual value exists.
std::string render_iteration(const solver::IterRecord& rec, long long verbosity);

// Final-results block including counters, the unscaled value, and the
// output-file notice.
std::string render_final(const solver::SolveResult& res, const std::string& primal_path,
                         const std::string& dual_path);

}  // namespace hallar::cli
