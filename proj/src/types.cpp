#include "hallar/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hallar {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

SparseSym::SparseSym(Index n, std::vector<Triplet> entries) : n_(n) {
  if (n < 0) fail("sparse matrix dimension must be nonnegative");
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  col_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  rows_.reserve(entries.size());
  values_.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Triplet& t = entries[k];
    if (t.i < 0 || t.j >= n || t.i > t.j)
      fail("sparse entry (" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) +
           ") outside the upper triangle of a " + std::to_string(n) + "-dim matrix");
    if (k > 0 && entries[k - 1].i == t.i && entries[k - 1].j == t.j)
      fail("duplicate sparse entry (" + std::to_string(t.i + 1) + "," +
           std::to_string(t.j + 1) + ")");
    ++col_ptr_[static_cast<std::size_t>(t.j) + 1];
    rows_.push_back(t.i);
    values_.push_back(t.value);
  }
  for (Index j = 0; j < n; ++j)
    col_ptr_[static_cast<std::size_t>(j) + 1] += col_ptr_[static_cast<std::size_t>(j)];
}

void SparseSym::matvec_add(const Vector& v, Vector& out, double s) const {
  for_each([&](Index i, Index j, double val) {
    out[i] += s * val * v[j];
    if (i != j) out[j] += s * val * v[i];
  });
}

void SparseSym::apply_add(const Matrix& Y, Matrix& out, double s) const {
  for_each([&](Index i, Index j, double val) {
    out.row(i) += s * val * Y.row(j);
    if (i != j) out.row(j) += s * val * Y.row(i);
  });
}

double SparseSym::quadform(const Matrix& Y) const {
  double acc = 0.0;
  for_each([&](Index i, Index j, double val) {
    const double dot = Y.row(i).dot(Y.row(j));
    acc += (i == j ? val : 2.0 * val) * dot;
  });
  return acc;
}

void SparseSym::scale_values(double c) {
  for (double& v : values_) v *= c;
}

double SparseSym::max_abs() const {
  double mx = 0.0;
  for (double v : values_) mx = std::max(mx, std::abs(v));
  return mx;
}

LowRankFactor::LowRankFactor(Matrix P, Matrix D) : P_(std::move(P)), D_(std::move(D)) {
  if (D_.rows() != D_.cols()) fail("low-rank factor D must be square");
  if (P_.cols() != D_.rows()) fail("low-rank factor P/D column counts differ");
  if (P_.cols() == 0) fail("low-rank factor must have rank at least 1");
  const double scale = std::max(1.0, D_.cwiseAbs().maxCoeff());
  if ((D_ - D_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail("low-rank factor D is not symmetric");
}

void LowRankFactor::matvec_add(const Vector& v, Vector& out, double s) const {
  out.noalias() += s * (P_ * (D_ * (P_.transpose() * v)));
}

void LowRankFactor::apply_add(const Matrix& Y, Matrix& out, double s) const {
  out.noalias() += s * (P_ * (D_ * (P_.transpose() * Y)));
}

double LowRankFactor::quadform(const Matrix& Y) const {
  const Matrix M = P_.transpose() * Y;  // r × rank(Y)
  return (D_ * M).cwiseProduct(M).sum();
}

double LowRankFactor::max_abs() const {
  double mx = 0.0;
  if (P_.size()) mx = std::max(mx, P_.cwiseAbs().maxCoeff());
  if (D_.size()) mx = std::max(mx, D_.cwiseAbs().maxCoeff());
  return mx;
}

HybridMatrix::HybridMatrix(Index n, std::optional<SparseSym> sp, std::optional<LowRankFactor> lr)
    : n_(n), sparse_(std::move(sp)), lowrank_(std::move(lr)) {
  if (sparse_ && sparse_->dim() != n_) fail("sparse part dimension mismatch");
  if (lowrank_ && lowrank_->dim() != n_) fail("low-rank part dimension mismatch");
}

void HybridMatrix::matvec_add(const Vector& v, Vector& out, double s) const {
  if (sparse_) sparse_->matvec_add(v, out, s);
  if (lowrank_) lowrank_->matvec_add(v, out, s);
}

void HybridMatrix::apply_add(const Matrix& Y, Matrix& out, double s) const {
  if (sparse_) sparse_->apply_add(Y, out, s);
  if (lowrank_) lowrank_->apply_add(Y, out, s);
}

double HybridMatrix::quadform(const Matrix& Y) const {
  double acc = 0.0;
  if (sparse_) acc += sparse_->quadform(Y);
  if (lowrank_) acc += lowrank_->quadform(Y);
  return acc;
}

HybridMatrix HybridMatrix::scaled(double c) const {
  HybridMatrix out = *this;
  if (out.sparse_) out.sparse_->scale_values(c);
  if (out.lowrank_) out.lowrank_->scale_d(c);
  return out;
}

double HybridMatrix::max_abs() const {
  double mx = 0.0;
  if (sparse_) mx = std::max(mx, sparse_->max_abs());
  if (lowrank_) mx = std::max(mx, lowrank_->max_abs());
  return mx;
}

void SdpInstance::validate() const {
  if (n < 1) fail("matrix dimension must be positive");
  if (m < 0) fail("constraint count must be nonnegative");
  if (!(tau > 0.0)) fail("trace bound must be positive");
  if (b.size() != m) fail("right-hand side length does not match constraint count");
  if (mats.size() != static_cast<std::size_t>(m) + 1)
    fail("expected m + 1 data matrices");
  for (const HybridMatrix& A : mats)
    if (A.dim() != n) fail("data matrix dimension mismatch");
}

}  // namespace hallar
