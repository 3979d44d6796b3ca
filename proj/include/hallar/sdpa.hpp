#pragma once

#include <string_view>

#include "hallar/hslr.hpp"
#include "hallar/types.hpp"

namespace hallar::io {

// Sparse SDPA .dat-s content: m, block count, block sizes (negative means
// diagonal), the m-vector, then "matno blkno i j val" entries with matno 0
// the objective. Blocks are embedded as a direct sum into one n×n matrix.
// The format carries no trace bound, so the caller must supply one before
// the problem can be solved.
struct SdpaProblem {
  Index m = 0;
  Index n = 0;
  Vector b;
  std::vector<HybridMatrix> mats;  // sparse-only, size m + 1
};

SdpaProblem parse_sdpa(std::string_view text);

SdpInstance with_trace_bound(SdpaProblem prob, double trace_bound);

}  // namespace hallar::io
