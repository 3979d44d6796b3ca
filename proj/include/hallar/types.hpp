#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace hallar {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tall factor Y of the primal iterate X = Y Yᵀ. The spectraplex membership
// Tr(X) ≤ τ is exactly ‖Y‖_F² ≤ τ, so no dense X is ever formed.
using FactoredPrimal = Matrix;

struct DualPoint {
  Vector p;
  double theta = 0.0;  // ≥ 0; the slack S = C + A*(p) + θI stays implicit
};

// One entry of the upper triangle, 0-based indices with i ≤ j.
struct Triplet {
  Index i = 0;
  Index j = 0;
  double value = 0.0;
};

// Symmetric sparse matrix storing only the upper triangle in a compressed
// column layout. Matvec and quadratic forms mirror off-diagonal entries on
// the fly.
class SparseSym {
 public:
  SparseSym() = default;
  // Validates 0 ≤ i ≤ j < n and rejects duplicate (i, j) pairs.
  SparseSym(Index n, std::vector<Triplet> entries);

  Index dim() const { return n_; }
  Index nnz() const { return static_cast<Index>(values_.size()); }

  // out += s * A v  (A densified symmetrically)
  void matvec_add(const Vector& v, Vector& out, double s = 1.0) const;
  // out += s * A Y, column by column
  void apply_add(const Matrix& Y, Matrix& out, double s = 1.0) const;
  // A • (Y Yᵀ) = Σ v_(i,j) (2 - [i=j]) ⟨Y_i., Y_j.⟩
  double quadform(const Matrix& Y) const;

  void scale_values(double c);
  double max_abs() const;

  template <typename F>
  void for_each(F&& f) const {
    for (Index j = 0; j < n_; ++j)
      for (Index k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k)
        f(rows_[k], j, values_[k]);
  }

 private:
  Index n_ = 0;
  std::vector<Index> col_ptr_;  // size n_ + 1
  std::vector<Index> rows_;
  std::vector<double> values_;
};

// Low-rank part P D Pᵀ with P n×r column-major and D r×r symmetric.
class LowRankFactor {
 public:
  LowRankFactor() = default;
  LowRankFactor(Matrix P, Matrix D);  // checks shapes and symmetry of D

  Index dim() const { return P_.rows(); }
  Index rank() const { return P_.cols(); }
  const Matrix& P() const { return P_; }
  const Matrix& D() const { return D_; }

  void matvec_add(const Vector& v, Vector& out, double s = 1.0) const;
  void apply_add(const Matrix& Y, Matrix& out, double s = 1.0) const;
  double quadform(const Matrix& Y) const;

  void scale_d(double c) { D_ *= c; }
  double max_abs() const;

 private:
  Matrix P_;
  Matrix D_;
};

// A data matrix written as sparse + low-rank. Either part may be absent;
// with both absent the matrix is zero.
class HybridMatrix {
 public:
  HybridMatrix() = default;
  explicit HybridMatrix(Index n) : n_(n) {}
  HybridMatrix(Index n, std::optional<SparseSym> sp, std::optional<LowRankFactor> lr);

  Index dim() const { return n_; }
  bool is_zero() const { return !sparse_ && !lowrank_; }
  const std::optional<SparseSym>& sparse() const { return sparse_; }
  const std::optional<LowRankFactor>& lowrank() const { return lowrank_; }

  void matvec_add(const Vector& v, Vector& out, double s = 1.0) const;
  void apply_add(const Matrix& Y, Matrix& out, double s = 1.0) const;
  double quadform(const Matrix& Y) const;

  // Uniform scaling c·A, applied to sparse values and to D (P untouched).
  HybridMatrix scaled(double c) const;

  double max_abs() const;

 private:
  Index n_ = 0;
  std::optional<SparseSym> sparse_;
  std::optional<LowRankFactor> lowrank_;
};

// min C•X  s.t.  A_ℓ•X = b_ℓ (ℓ=1..m), Tr(X) ≤ τ, X ⪰ 0.
// mats[0] is the cost matrix C, mats[ℓ] the ℓ-th constraint matrix.
struct SdpInstance {
  Index m = 0;
  Index n = 0;
  Vector b;
  double tau = 0.0;
  std::vector<HybridMatrix> mats;  // size m + 1

  const HybridMatrix& cost() const { return mats[0]; }
  const HybridMatrix& constraint(Index l) const { return mats[static_cast<std::size_t>(l) + 1]; }

  // Throws std::invalid_argument when the invariants fail.
  void validate() const;
};

}  // namespace hallar
