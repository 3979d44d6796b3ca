#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hallar::io {

enum class Provenance { Default, Config, Cli };

enum class OptType {
  PosInt,     // positive integer; integral float literals like 1e4 accepted
  NonNegInt,  // verbosity, seed
  PosReal,    // tolerances, penalty and Lipschitz parameters
  Bool,       // flag
  Str,        // paths, format override
};

struct OptionInfo {
  std::string_view key;
  OptType type;
  std::string_view default_text;  // empty: no default entry (e.g. trace_bound)
  bool basic = false;             // echoed in the settings header at verbosity 1
};

// Every recognized option key, in display order.
const std::vector<OptionInfo>& option_registry();
const OptionInfo* find_option(std::string_view key);

using OptionValue = std::variant<long long, double, bool, std::string>;

// A partial assignment of option keys, each value tagged with where it came
// from. Defaults are a fully populated set.
class OptionSet {
 public:
  static OptionSet defaults();

  // Parses and validates `text` against the key's type. Throws
  // std::invalid_argument naming the key on unknown keys or bad values.
  void set_from_text(std::string_view key, std::string_view text, Provenance prov);
  void set(std::string_view key, OptionValue value, Provenance prov);

  bool has(std::string_view key) const;
  Provenance provenance(std::string_view key) const;

  long long get_int(std::string_view key) const;
  double get_real(std::string_view key) const;
  bool get_bool(std::string_view key) const;
  const std::string& get_str(std::string_view key) const;

  // Display form of the stored value (used by the settings echo).
  std::string text(std::string_view key) const;

  const std::map<std::string, std::pair<OptionValue, Provenance>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::pair<OptionValue, Provenance>, std::less<>> entries_;
};

// key = value / key value lines, # comments, blank lines ignored.
// Unknown keys and type mismatches throw with the offending line number.
OptionSet parse_config(std::string_view text);

// Per-key precedence: cli ≻ cfg ≻ defaults.
OptionSet merge_options(const OptionSet& cli, const OptionSet& cfg, const OptionSet& defaults);

// The solver-facing parameter surface (Table-style keys plus eigensolver
// tolerances and the seed).
struct SolverOptions {
  long long maxiter_fista = 10000;
  double mu_fista = 0.5;
  double chi_fista = 1e-4;
  double L0_fista = 1.0;
  double L_inc_fista = 2.0;
  double sigma_fista = 0.3;
  double err_tol_fista = 1e-8;
  long long maxiter_aipp = 5;
  double lam0_aipp = 0.1;
  long long maxiter_hlr = 10;
  long long maxiter_hallar = 10000;
  double eps_pfeas = 1e-5;
  double eps_gap = 1e-5;
  double beta0 = 10.0;
  double beta_inc = 1.1;
  double beta_min = 10.0;
  double beta_max = 1e11;
  double scale_A = 1.0;
  double scale_C = 1.0;
  long long verbosity = 1;
  double time_limit = 3600.0;
  double eps_eig = 1e-8;
  double err_tol_eig = 1e-6;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when a constraint is violated
  // (beta_min ≤ beta0 ≤ beta_max, beta_inc ≥ 1, 0 < sigma < 1, …).
  void validate() const;
};

SolverOptions to_solver_options(const OptionSet& merged);

}  // namespace hallar::io
