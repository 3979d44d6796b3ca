#pragma once

#include "hallar/builtin_instances.hpp"
#include "hallar/hslr.hpp"
#include "hallar/types.hpp"

// Hand-densified matrices of the embedded 4×4 hybrid example, built directly
// from the displayed data (independent of the HybridMatrix code paths).
namespace hallar::fixtures {

inline SdpInstance simple_example() { return io::parse_hslr(builtin::kSimpleExampleHslr); }
inline SdpInstance stable_set_c4() { return io::parse_hslr(builtin::kStableSetC4Hslr); }
inline SdpInstance matcomp_small() { return io::parse_hslr(builtin::kMatCompHslr); }

inline Matrix dense_C() {  // I + eeᵀ
  return Matrix::Identity(4, 4) + Matrix::Ones(4, 4);
}

inline Matrix dense_A1() { return 0.5 * Matrix::Identity(4, 4); }

inline Matrix dense_A2() { return Matrix::Ones(4, 4); }

inline Matrix dense_A3() {
  Matrix sp(4, 4);
  sp << 0, 0, 0.7, 0,
        0, 1, 0, -0.5,
        0.7, 0, 0, 0,
        0, -0.5, 0, -1;
  Matrix P(4, 2);
  P << 1, 2,
       2, 1,
       1, 1,
       2, 1;
  Matrix D(2, 2);
  D << 1, -0.5,
       -0.5, -2;
  return sp + P * D * P.transpose();
}

}  // namespace hallar::fixtures
