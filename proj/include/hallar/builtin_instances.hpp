#pragma once

namespace hallar::builtin {

// 4×4 problem with all hybrid block kinds:
// min ⟨I+eeᵀ, X⟩ s.t. ⟨0.5I, X⟩=2, ⟨eeᵀ, X⟩=4, ⟨A₃, X⟩=7, Tr(X)≤5, X⪰0.
inline constexpr const char* kSimpleExampleHslr = R"(# m n
3 4
# b vector
2.0 4.0 7.0
# Trace bound
5.0

# Matrix 0: C = I + ee^T
0 SP
1 1 1.0
2 2 1.0
3 3 1.0
4 4 1.0
0 LR
1.0 1.0 1.0 1.0 ; 1.0

# Matrix 1: 0.5 * I
1 SP
1 1 0.5
2 2 0.5
3 3 0.5
4 4 0.5

# Matrix 2: ee^T
2 LR
1.0 1.0 1.0 1.0 ; 1.0

# Matrix 3: A3_sp + A3_lr
3 SP
1 3  0.7
2 2  1.0
2 4 -0.5
4 4 -1.0
3 LR
1.0 2.0 1.0 2.0 ;  1.0   -0.5
2.0 1.0 1.0 1.0 ; -0.5   -2.0
)";
// C = 2A₁ + A₂, so C•X = 2b₁ + b₂ on the feasible set.
inline constexpr double kSimpleExampleOptimum = 8.0;

// Nuclear-norm completion of a 2×2 matrix with M₁₁ = 5, M₂₂ = 3.
inline constexpr const char* kMatCompHslr = R"(# m n
2 4
# b vector
5.0 3.0
# Trace bound
16.50

# Matrix 0: C = 0.5*I
0 SP
1 1 0.5
2 2 0.5
3 3 0.5
4 4 0.5

# Matrix 1: A1_sp
1 SP
1 3 0.5

# Matrix 2: A2_sp
2 SP
2 4 0.5
)";
// ½Tr(X) at the optimum equals the nuclear norm |5 + 3| = 8.
inline constexpr double kMatCompOptimum = 8.0;

// Stable-set relaxation of the 4-cycle; the optimum is −ϑ(C₄) = −2.
inline constexpr const char* kStableSetC4Hslr = R"(# m n
4 4
# b vector
0.0 0.0 0.0 0.0
# Trace bound
1.0

# Matrix 0: C = -J (Low Rank)
0 LR
1.0 1.0 1.0 1.0 ; -1.0

# Matrix 1: Edge (1,2)
1 SP
1 2 0.5

# Matrix 2: Edge (2,3)
2 SP
2 3 0.5

# Matrix 3: Edge (3,4)
3 SP
3 4 0.5

# Matrix 4: Edge (1,4)
4 SP
1 4 0.5
)";
inline constexpr double kStableSetC4Optimum = -2.0;

}  // namespace hallar::builtin
