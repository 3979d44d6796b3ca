#pragma once

#include <cstdint>

#include "hallar/types.hpp"

namespace hallar {

// Deterministic unit vector with N(0,1) entries from a fixed-seed engine.
Vector seeded_unit_vector(Index n, std::uint64_t seed);

}  // namespace hallar
