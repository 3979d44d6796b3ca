#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hallar/types.hpp"

namespace hallar::io {

struct ParseDiagnostics {
  std::vector<std::string> warnings;
};

// Parse error carrying the offending line number in the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hybrid sparse low-rank problem file.
//   line 1: m n          (integers)
//   line 2: b₁ … b_m     (floats; absent when m = 0)
//   line 3: τ            (float > 0)
//   blocks: "ℓ SP" with triplet lines "i j val" (1-based, i ≤ j), and/or
//           "ℓ LR" with one line per column: n values of P_ℓ, ';',
//           r values of D_ℓ. For one ℓ, SP must precede LR.
// '#' lines are comments, blank lines are ignored.
SdpInstance parse_hslr(std::string_view text, ParseDiagnostics* diag = nullptr);

std::string write_hslr(const SdpInstance& inst);

}  // namespace hallar::io
