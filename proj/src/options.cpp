#include "hallar/options.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hallar/numfmt.hpp"

namespace hallar::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view text, double& out) {
  std::string buf(text);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && !buf.empty();
}

}  // namespace

const std::vector<OptionInfo>& option_registry() {
  static const std::vector<OptionInfo> registry = {
      // I/O
      {"input_path", OptType::Str, "", true},
      {"primal_output_path", OptType::Str, "primal_out.txt", true},
      {"dual_output_path", OptType::Str, "dual_out.txt", true},
      {"output_path", OptType::Str, "", true},
      {"config", OptType::Str, "", true},
      {"initial_solution", OptType::Str, "", false},
      {"format", OptType::Str, "auto", false},
      {"run_tests", OptType::Bool, "false", false},
      // FISTA
      {"maxiter_fista", OptType::PosInt, "10000", false},
      {"mu_fista", OptType::PosReal, "0.5", false},
      {"chi_fista", OptType::PosReal, "1e-4", false},
      {"L0_fista", OptType::PosReal, "1.0", false},
      {"L_inc_fista", OptType::PosReal, "2.0", false},
      {"sigma_fista", OptType::PosReal, "0.3", false},
      {"err_tol_fista", OptType::PosReal, "1e-8", false},
      // AIPP
      {"maxiter_aipp", OptType::PosInt, "5", false},
      {"lam0_aipp", OptType::PosReal, "0.1", false},
      // Hybrid low-rank and outer loop
      {"maxiter_hlr", OptType::PosInt, "10", false},
      {"maxiter_hallar", OptType::PosInt, "10000", true},
      // Stopping criteria
      {"eps_pfeas", OptType::PosReal, "1e-5", true},
      {"eps_gap", OptType::PosReal, "1e-5", true},
      // Penalty schedule
      {"beta0", OptType::PosReal, "10.0", false},
      {"beta_inc", OptType::PosReal, "1.1", false},
      {"beta_min", OptType::PosReal, "10.0", false},
      {"beta_max", OptType::PosReal, "1e11", false},
      // Scaling
      {"scale_A", OptType::PosReal, "1.0", false},
      {"scale_C", OptType::PosReal, "1.0", false},
      // Misc
      {"verbosity", OptType::NonNegInt, "1", true},
      {"time_limit", OptType::PosReal, "3600.0", true},
      {"trace_bound", OptType::PosReal, "", false},
      {"eps_eig", OptType::PosReal, "1e-8", false},
      {"err_tol_eig", OptType::PosReal, "1e-6", false},
      {"seed", OptType::NonNegInt, "0", false},
  };
  return registry;
}

const OptionInfo* find_option(std::string_view key) {
  for (const OptionInfo& info : option_registry())
    if (info.key == key) return &info;
  return nullptr;
}

OptionSet OptionSet::defaults() {
  OptionSet out;
  for (const OptionInfo& info : option_registry())
    if (!info.default_text.empty() || info.type == OptType::Str)
      out.set_from_text(info.key, info.default_text, Provenance::Default);
  return out;
}

void OptionSet::set_from_text(std::string_view key, std::string_view text, Provenance prov) {
  const OptionInfo* info = find_option(key);
  if (!info) fail("unrecognized option " + std::string(key));
  const std::string k(key);
  switch (info->type) {
    case OptType::PosInt:
    case OptType::NonNegInt: {
      double d;
      if (!parse_double(trim(text), d) || !std::isfinite(d) || d != std::floor(d))
        fail("option " + k + " expects an integer, got '" + std::string(text) + "'");
      const long long v = static_cast<long long>(d);
      if (info->type == OptType::PosInt && v < 1)
        fail("option " + k + " must be a positive integer, got '" + std::string(text) + "'");
      if (info->type == OptType::NonNegInt && v < 0)
        fail("option " + k + " must be nonnegative, got '" + std::string(text) + "'");
      entries_[k] = {v, prov};
      break;
    }
    case OptType::PosReal: {
      double d;
      if (!parse_double(trim(text), d) || !std::isfinite(d))
        fail("option " + k + " expects a number, got '" + std::string(text) + "'");
      if (!(d > 0.0))
        fail("option " + k + " must be positive, got '" + std::string(text) + "'");
      entries_[k] = {d, prov};
      break;
    }
    case OptType::Bool: {
      const std::string_view t = trim(text);
      bool v;
      if (t == "true" || t == "1" || t.empty())
        v = true;
      else if (t == "false" || t == "0")
        v = false;
      else
        fail("option " + k + " expects true/false, got '" + std::string(text) + "'");
      entries_[k] = {v, prov};
      break;
    }
    case OptType::Str:
      entries_[k] = {std::string(trim(text)), prov};
      break;
  }
}

void OptionSet::set(std::string_view key, OptionValue value, Provenance prov) {
  if (!find_option(key)) fail("unrecognized option " + std::string(key));
  entries_[std::string(key)] = {std::move(value), prov};
}

bool OptionSet::has(std::string_view key) const { return entries_.count(key) > 0; }

Provenance OptionSet::provenance(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) fail("option " + std::string(key) + " is unset");
  return it->second.second;
}

long long OptionSet::get_int(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) fail("option " + std::string(key) + " is unset");
  return std::get<long long>(it->second.first);
}

double OptionSet::get_real(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) fail("option " + std::string(key) + " is unset");
  return std::get<double>(it->second.first);
}

bool OptionSet::get_bool(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  return std::get<bool>(it->second.first);
}

const std::string& OptionSet::get_str(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) fail("option " + std::string(key) + " is unset");
  return std::get<std::string>(it->second.first);
}

std::string OptionSet::text(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return "";
  const OptionValue& v = it->second.first;
  if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
  if (std::holds_alternative<double>(v)) return numfmt::decimal(std::get<double>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

OptionSet parse_config(std::string_view text) {
  OptionSet out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::string_view key, value;
    const std::size_t eq = line.find('=');
    if (eq != std::string_view::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      std::size_t sp = line.find_first_of(" \t");
      if (sp == std::string_view::npos) {
        key = line;  // bare key; only sensible for flags
        value = "";
      } else {
        key = trim(line.substr(0, sp));
        value = trim(line.substr(sp + 1));
      }
    }
    try {
      out.set_from_text(key, value, Provenance::Config);
    } catch (const std::invalid_argument& e) {
      fail("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

OptionSet merge_options(const OptionSet& cli, const OptionSet& cfg, const OptionSet& defaults) {
  OptionSet out;
  for (const OptionInfo& info : option_registry()) {
    if (cli.has(info.key))
      out.set(info.key, cli.entries().find(info.key)->second.first, Provenance::Cli);
    else if (cfg.has(info.key))
      out.set(info.key, cfg.entries().find(info.key)->second.first, Provenance::Config);
    else if (defaults.has(info.key))
      out.set(info.key, defaults.entries().find(info.key)->second.first, Provenance::Default);
  }
  return out;
}

void SolverOptions::validate() const {
  if (!(beta_min <= beta0 && beta0 <= beta_max))
    fail("penalty bounds must satisfy beta_min ≤ beta0 ≤ beta_max");
  if (!(beta_inc >= 1.0)) fail("beta_inc must be ≥ 1");
  if (!(sigma_fista > 0.0 && sigma_fista < 1.0)) fail("sigma_fista must lie in (0, 1)");
  if (!(mu_fista > 0.0)) fail("mu_fista must be positive");
  if (maxiter_fista < 1 || maxiter_aipp < 1 || maxiter_hlr < 1 || maxiter_hallar < 1)
    fail("iteration limits must be ≥ 1");
  if (!(time_limit > 0.0)) fail("time_limit must be positive");
  if (!(eps_pfeas > 0.0 && eps_gap > 0.0)) fail("tolerances must be positive");
  if (!(L0_fista > 0.0 && L_inc_fista > 1.0)) fail("Lipschitz controls must be positive (L_inc > 1)");
  if (!(lam0_aipp > 0.0 && chi_fista > 0.0 && err_tol_fista > 0.0)) fail("inner tolerances must be positive");
  if (!(eps_eig > 0.0 && err_tol_eig > 0.0)) fail("eigensolver tolerances must be positive");
  if (!(scale_A > 0.0 && scale_C > 0.0)) fail("scaling factors must be positive");
}

SolverOptions to_solver_options(const OptionSet& merged) {
  SolverOptions o;
  o.maxiter_fista = merged.get_int("maxiter_fista");
  o.mu_fista = merged.get_real("mu_fista");
  o.chi_fista = merged.get_real("chi_fista");
  o.L0_fista = merged.get_real("L0_fista");
  o.L_inc_fista = merged.get_real("L_inc_fista");
  o.sigma_fista = merged.get_real("sigma_fista");
  o.err_tol_fista = merged.get_real("err_tol_fista");
  o.maxiter_aipp = merged.get_int("maxiter_aipp");
  o.lam0_aipp = merged.get_real("lam0_aipp");
  o.maxiter_hlr = merged.get_int("maxiter_hlr");
  o.maxiter_hallar = merged.get_int("maxiter_hallar");
  o.eps_pfeas = merged.get_real("eps_pfeas");
  o.eps_gap = merged.get_real("eps_gap");
  o.beta0 = merged.get_real("beta0");
  o.beta_inc = merged.get_real("beta_inc");
  o.beta_min = merged.get_real("beta_min");
  o.beta_max = merged.get_real("beta_max");
  o.scale_A = merged.get_real("scale_A");
  o.scale_C = merged.get_real("scale_C");
  o.verbosity = merged.get_int("verbosity");
  o.time_limit = merged.get_real("time_limit");
  o.eps_eig = merged.get_real("eps_eig");
  o.err_tol_eig = merged.get_real("err_tol_eig");
  o.seed = static_cast<std::uint64_t>(merged.get_int("seed"));
  o.validate();
  return o;
}

}  // namespace hallar::io
