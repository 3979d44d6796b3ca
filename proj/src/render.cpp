#include "hallar/render.hpp"

#include <cstdio>
#include <sstream>

#include "hallar/numfmt.hpp"

namespace hallar::cli {

namespace {

std::string pad_left(const std::string& s, int width) {
  if (static_cast<int>(s.size()) >= width) return s;
  return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
}

}  // namespace

std::string render_settings(const io::OptionSet& opts, bool basic_only) {
  std::ostringstream os;
  os << "---------- Basic Settings ------------------\n";
  for (const io::OptionInfo& info : io::option_registry()) {
    if (basic_only && !info.basic) continue;
    if (!opts.has(info.key)) continue;
    if (info.key == "output_path" && opts.text(info.key).empty()) continue;
    if (info.key == "config" && opts.text(info.key).empty()) continue;
    os << info.key << " = " << opts.text(info.key) << "\n";
  }
  if (basic_only) os << "...\n";
  return os.str();
}

std::string render_problem_header(const std::string& path, bool sdpa, const SdpInstance& inst) {
  std::ostringstream os;
  os << "Reading " << (sdpa ? "SDPA" : "HSLR") << " file: " << path << "\n";
  os << "Problem dimensions:\n";
  os << "  - Matrix size: " << inst.n << " x " << inst.n << "\n";
  os << "  - Number of constraints: " << inst.m << "\n";
  os << "  - Trace bound: " << numfmt::decimal(inst.tau) << "\n";
  return os.str();
}

std::string table_rule() { return std::string(74, '#'); }

std::string table_header() {
  return "  #   rank        gap    feas    pval    dval    pnlty   steps";
}

std::string render_iteration(const solver::IterRecord& rec, long long verbosity) {
  if (verbosity < 1) return "";
  std::string gap;
  if (rec.iter == 0)
    gap = "-";
  else if (rec.dval && rec.gap)
    gap = numfmt::sci1(*rec.gap);
  else
    gap = "NaN";
  const std::string dval = rec.dval ? numfmt::sci3(*rec.dval) : "NaN";

  std::ostringstream os;
  os << pad_left(std::to_string(rec.iter), 3) << pad_left(std::to_string(rec.rank), 5) << "  "
     << pad_left(gap, 9) << "  " << pad_left(numfmt::sci1(rec.feas), 7) << "  "
     << pad_left(numfmt::sci3(rec.pval), 10) << "  " << pad_left(dval, 10) << "  "
     << pad_left(numfmt::sci1(rec.pnlty), 7);
  if (!rec.steps.empty()) os << " " << rec.steps;
  return os.str();
}

std::string render_final(const solver::SolveResult& res, const std::string& primal_path,
                         const std::string& dual_path) {
  std::ostringstream os;
  os << "Final Results\n";
  os << "Primal Obj              = " << numfmt::shortest(res.pval) << "\n";
  os << "Dual Obj                = " << (res.dval ? numfmt::shortest(*res.dval) : "NaN") << "\n";
  os << "PD Gap                  = " << (res.gap ? numfmt::shortest(*res.gap) : "NaN") << "\n";
  os << "Primal infeasibility      = " << numfmt::shortest(res.feas) << "\n";
  os << "\n";
  os << "#ADAP FISTA Calls: " << res.counters.fista_calls << "\n";
  os << "#ACG Iterations: " << res.counters.acg_iterations << "\n";
  os << "#FW Calls: " << res.counters.fw_calls << "\n";
  os << "Primal val unscaled = " << numfmt::shortest(res.value) << "\n";
  char rt[64];
  std::snprintf(rt, sizeof(rt), "Run time = %.6f seconds\n", res.wall_seconds);
  os << rt;
  os << "Writing output\n";
  os << "Output written to " << primal_path << " and " << dual_path << ".\n";
  return os.str();
}

}  // namespace hallar::cli
