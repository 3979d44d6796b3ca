#include "hallar/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include "hallar/builtin_instances.hpp"
#include "hallar/generators.hpp"
#include "hallar/hslr.hpp"
#include "hallar/kernels.hpp"
#include "hallar/numfmt.hpp"
#include "hallar/render.hpp"
#include "hallar/sdpa.hpp"
#include "hallar/solution_io.hpp"
#include "hallar/solver.hpp"

namespace hallar::cli {

namespace {

const char* short_flag_key(const std::string& tok) {
  if (tok == "-i") return "input_path";
  if (tok == "-p") return "primal_output_path";
  if (tok == "-d") return "dual_output_path";
  if (tok == "-c") return "config";
  if (tok == "-w") return "initial_solution";
  if (tok == "-o") return "output_path";
  return nullptr;
}

[[noreturn]] void usage_fail(const std::string& msg) { throw UsageError(msg); }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string derive_output_path(const std::string& base, const std::string& tag) {
  const std::size_t slash = base.find_last_of('/');
  const std::size_t dot = base.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return base + tag;
  return base.substr(0, dot) + tag + base.substr(dot);
}

Invocation parse_args(const std::vector<std::string>& argv) {
  Invocation inv;
  if (!argv.empty() && argv[0] == "gen") {
    inv.mode = Invocation::Mode::Gen;
    inv.gen_args.assign(argv.begin() + 1, argv.end());
    return inv;
  }
  std::size_t k = 0;
  auto next_value = [&](const std::string& flag) -> std::string {
    if (k + 1 >= argv.size()) usage_fail("missing value after " + flag);
    return argv[++k];
  };
  for (; k < argv.size(); ++k) {
    const std::string& tok = argv[k];
    if (const char* key = short_flag_key(tok)) {
      inv.options.set_from_text(key, next_value(tok), io::Provenance::Cli);
      continue;
    }
    if (tok.rfind("--", 0) == 0) {
      std::string key = tok.substr(2);
      std::string value;
      bool has_value = false;
      const std::size_t eq = key.find('=');
      if (eq != std::string::npos) {
        value = key.substr(eq + 1);
        key.erase(eq);
        has_value = true;
      }
      const io::OptionInfo* info = io::find_option(key);
      if (!info) usage_fail("unrecognized option " + tok);
      if (info->type == io::OptType::Bool) {
        inv.options.set_from_text(key, has_value ? value : "true", io::Provenance::Cli);
      } else {
        if (!has_value) value = next_value(tok);
        try {
          inv.options.set_from_text(key, value, io::Provenance::Cli);
        } catch (const std::invalid_argument& e) {
          usage_fail(e.what());
        }
      }
      continue;
    }
    usage_fail("unrecognized option " + tok);
  }
  if (inv.options.get_bool("run_tests")) inv.mode = Invocation::Mode::RunTests;
  return inv;
}

namespace {

struct LoadedProblem {
  SdpInstance inst;
  bool sdpa = false;
  io::ParseDiagnostics diag;
};

LoadedProblem load_problem(const io::OptionSet& merged) {
  const std::string& path = merged.get_str("input_path");
  if (path.empty()) usage_fail("an input file is required (-i <path>)");
  const std::string& fmt = merged.get_str("format");
  bool sdpa;
  if (fmt == "sdpa")
    sdpa = true;
  else if (fmt == "hslr")
    sdpa = false;
  else if (fmt == "auto")
    sdpa = ends_with(path, ".dat-s");
  else
    usage_fail("unknown format '" + fmt + "' (expected auto, hslr, or sdpa)");

  const std::string text = io::read_file(path);
  LoadedProblem out;
  out.sdpa = sdpa;
  if (sdpa) {
    io::SdpaProblem prob = io::parse_sdpa(text);
    if (!merged.has("trace_bound"))
      usage_fail(
          "SDPA input carries no trace bound; specify --trace_bound on the "
          "command line or in the config file");
    out.inst = io::with_trace_bound(std::move(prob), merged.get_real("trace_bound"));
  } else {
    out.inst = io::parse_hslr(text, &out.diag);
    if (merged.has("trace_bound"))
      out.diag.warnings.push_back("trace_bound option ignored; HSLR files carry their own");
  }
  return out;
}

int solve_pipeline(const io::OptionSet& cli_options) {
  io::OptionSet cfg;
  if (cli_options.has("config") && !cli_options.get_str("config").empty())
    cfg = io::parse_config(io::read_file(cli_options.get_str("config")));
  io::OptionSet merged = io::merge_options(cli_options, cfg, io::OptionSet::defaults());

  std::string primal_path = merged.get_str("primal_output_path");
  std::string dual_path = merged.get_str("dual_output_path");
  if (!merged.get_str("output_path").empty()) {
    const std::string& base = merged.get_str("output_path");
    if (merged.provenance("primal_output_path") == io::Provenance::Default)
      primal_path = derive_output_path(base, "_primal");
    if (merged.provenance("dual_output_path") == io::Provenance::Default)
      dual_path = derive_output_path(base, "_dual");
  }

  const io::SolverOptions opts = io::to_solver_options(merged);
  const long long v = opts.verbosity;

  if (v >= 1) std::cout << render_settings(merged, v < 2);
  const LoadedProblem prob = load_problem(merged);
  if (v >= 1) {
    std::cout << render_problem_header(merged.get_str("input_path"), prob.sdpa, prob.inst);
    for (const std::string& w : prob.diag.warnings) std::cout << "warning: " << w << "\n";
  }

  std::optional<Matrix> warm;
  if (!merged.get_str("initial_solution").empty()) {
    io::ParseDiagnostics wdiag;
    warm = io::read_warm_start(merged.get_str("initial_solution"), prob.inst, &wdiag);
    if (v >= 1)
      for (const std::string& w : wdiag.warnings) std::cout << "warning: " << w << "\n";
  }

  if (v >= 1) {
    std::cout << "\nSolving SDP problem...\n\n";
    std::cout << table_rule() << "\n" << table_header() << "\n";
  }
  solver::SolveCallbacks cb;
  if (v >= 1)
    cb.on_iteration = [v](const solver::IterRecord& rec) {
      std::cout << render_iteration(rec, v) << "\n";
    };
  cb.log = [v](int level, const std::string& line) {
    if (v >= level) std::cout << line << "\n";
  };

  const solver::SolveResult res =
      solver::solve(prob.inst, opts, warm ? &*warm : nullptr, cb);

  io::write_primal(res.Y, primal_path);
  io::write_dual(res.theta, res.p, dual_path);
  if (v >= 1) std::cout << render_final(res, primal_path, dual_path);

  return res.status == solver::SolveStatus::Optimal ? 0 : 2;
}

}  // namespace

int run_tests(const io::OptionSet& cli_options) {
  io::OptionSet merged =
      io::merge_options(cli_options, io::OptionSet(), io::OptionSet::defaults());
  io::SolverOptions opts = io::to_solver_options(merged);
  if (opts.verbosity <= 1) opts.verbosity = 0;  // per-case summary lines only

  struct Case {
    const char* name;
    const char* text;
    double expected;
    double tol;
  };
  const Case cases[] = {
      {"hybrid-example", builtin::kSimpleExampleHslr, builtin::kSimpleExampleOptimum, 1e-2},
      {"stable-set-c4", builtin::kStableSetC4Hslr, builtin::kStableSetC4Optimum, 1e-3},
      {"matrix-completion", builtin::kMatCompHslr, builtin::kMatCompOptimum, 1e-2},
  };

  bool all_ok = true;
  for (const Case& c : cases) {
    bool ok = false;
    std::string detail;
    try {
      const SdpInstance inst = io::parse_hslr(c.text);
      const solver::SolveResult res = solver::solve(inst, opts);
      ok = res.status == solver::SolveStatus::Optimal && std::abs(res.value - c.expected) <= c.tol;
      detail = "value=" + numfmt::shortest(res.value) +
               " expected=" + numfmt::shortest(c.expected) +
               " status=" + solver::status_name(res.status);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    std::cout << (ok ? "[pass] " : "[FAIL] ") << c.name << ": " << detail << "\n";
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "All built-in tests passed.\n" : "Built-in tests FAILED.\n");
  return all_ok ? 0 : 3;
}

int gen_main(const std::vector<std::string>& args) {
  if (args.empty())
    usage_fail("gen requires a subcommand: matcomp or stableset");
  const std::string& sub = args[0];
  std::string out_path;
  std::string obs_path, edges_path;
  long long n1 = 0, n2 = 0, rank = 1, cycle = 0;
  double fraction = 1.0;
  long long seed = 0;

  std::size_t k = 1;
  auto next_value = [&](const std::string& flag) -> std::string {
    if (k + 1 >= args.size()) usage_fail("missing value after " + flag);
    return args[++k];
  };
  auto next_int = [&](const std::string& flag) -> long long {
    const std::string v = next_value(flag);
    try {
      return std::stoll(v);
    } catch (...) {
      usage_fail(flag + " expects an integer, got '" + v + "'");
    }
  };
  for (; k < args.size(); ++k) {
    const std::string& tok = args[k];
    if (tok == "-o" || tok == "--output") out_path = next_value(tok);
    else if (tok == "--obs") obs_path = next_value(tok);
    else if (tok == "--edges") edges_path = next_value(tok);
    else if (tok == "--cycle") cycle = next_int(tok);
    else if (tok == "--n1") n1 = next_int(tok);
    else if (tok == "--n2") n2 = next_int(tok);
    else if (tok == "--rank") rank = next_int(tok);
    else if (tok == "--seed") seed = next_int(tok);
    else if (tok == "--fraction") {
      const std::string v = next_value(tok);
      try {
        fraction = std::stod(v);
      } catch (...) {
        usage_fail("--fraction expects a number, got '" + v + "'");
      }
    } else {
      usage_fail("unrecognized option " + tok);
    }
  }
  if (out_path.empty()) usage_fail("gen requires an output path (-o <file>)");

  SdpInstance inst;
  if (sub == "matcomp") {
    gen::MatCompSpec spec;
    if (!obs_path.empty()) {
      spec = gen::parse_observations(io::read_file(obs_path));
    } else {
      if (n1 < 1 || n2 < 1) usage_fail("gen matcomp needs --n1/--n2 (or --obs <file>)");
      spec = gen::gen_random_matcomp(n1, n2, rank, fraction, static_cast<std::uint64_t>(seed)).first;
    }
    inst = gen::gen_matcomp(spec);
  } else if (sub == "stableset") {
    gen::GraphSpec g;
    if (cycle > 0)
      g = gen::gen_cycle(cycle);
    else if (!edges_path.empty())
      g = gen::parse_edge_list(io::read_file(edges_path));
    else
      usage_fail("gen stableset needs --cycle <n> or --edges <file>");
    inst = gen::gen_stableset(g);
  } else {
    usage_fail("unknown gen subcommand '" + sub + "' (expected matcomp or stableset)");
  }
  io::write_file(out_path, io::write_hslr(inst));
  std::cout << "Output written to " << out_path << ".\n";
  return 0;
}

int run_main(const std::vector<std::string>& argv) {
  try {
    const Invocation inv = parse_args(argv);
    switch (inv.mode) {
      case Invocation::Mode::Gen:
        return gen_main(inv.gen_args);
      case Invocation::Mode::RunTests:
        return run_tests(inv.options);
      case Invocation::Mode::Solve:
        return solve_pipeline(inv.options);
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hallar::cli
