#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hallar/types.hpp"

namespace hallar::gen {

// Observed entries of an n1×n2 matrix, 1-based index pairs.
struct MatCompSpec {
  Index n1 = 0;
  Index n2 = 0;
  std::vector<std::pair<Index, Index>> omega;
  std::vector<double> values;
};

struct GraphSpec {
  Index n = 0;
  std::vector<std::pair<Index, Index>> edges;  // canonicalized to i < j
};

// Nuclear-norm relaxation: n = n1+n2, C = 0.5 I, one constraint per observed
// entry with value 0.5 at (i, n1+j), b_ℓ = M_ij, τ = 2√n1 ‖Ŷ‖_F.
SdpInstance gen_matcomp(const MatCompSpec& spec);

// Stable-set relaxation: C = −eeᵀ stored low-rank (P = e, D = [−1]), one
// constraint per edge with value 0.5 at (i, j), b = 0, τ = 1.
SdpInstance gen_stableset(const GraphSpec& spec);

// Random rank-r matrix M = U Vᵀ with a uniform sample of observed entries.
// Returns the spec plus the ground-truth M for recovery checks.
std::pair<MatCompSpec, Matrix> gen_random_matcomp(Index n1, Index n2, Index rank,
                                                  double sample_fraction, std::uint64_t seed);

GraphSpec gen_cycle(Index n);

// "i j" pairs, one per line, '#' comments. Vertex count = max index seen.
GraphSpec parse_edge_list(std::string_view text);

// "i j value" lines for explicit matrix-completion observations.
MatCompSpec parse_observations(std::string_view text);

}  // namespace hallar::gen
