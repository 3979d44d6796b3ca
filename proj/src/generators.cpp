#include "hallar/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hallar/hslr.hpp"

namespace hallar::gen {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

SdpInstance gen_matcomp(const MatCompSpec& spec) {
  if (spec.n1 < 1 || spec.n2 < spec.n1) fail("matrix completion requires n2 ≥ n1 ≥ 1");
  if (spec.omega.size() != spec.values.size()) fail("observation index/value lengths differ");
  std::set<std::pair<Index, Index>> seen;
  double fro_sq = 0.0;
  for (std::size_t k = 0; k < spec.omega.size(); ++k) {
    const auto [i, j] = spec.omega[k];
    if (i < 1 || i > spec.n1 || j < 1 || j > spec.n2)
      fail("observation index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (!seen.insert({i, j}).second)
      fail("duplicate observation (" + std::to_string(i) + "," + std::to_string(j) + ")");
    fro_sq += spec.values[k] * spec.values[k];
  }

  const Index n = spec.n1 + spec.n2;
  const Index m = static_cast<Index>(spec.omega.size());
  const double tau = 2.0 * std::sqrt(static_cast<double>(spec.n1)) * std::sqrt(fro_sq);
  if (!(tau > 0.0)) fail("trace bound 2√n1‖Ŷ‖_F is zero; nothing to recover");

  SdpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.tau = tau;
  inst.b = Vector(m);

  std::vector<Triplet> ctrips;
  ctrips.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) ctrips.push_back({k, k, 0.5});
  inst.mats.emplace_back(n, SparseSym(n, std::move(ctrips)), std::nullopt);

  for (Index l = 0; l < m; ++l) {
    const auto [i, j] = spec.omega[static_cast<std::size_t>(l)];
    inst.b[l] = spec.values[static_cast<std::size_t>(l)];
    std::vector<Triplet> t{{i - 1, spec.n1 + j - 1, 0.5}};
    inst.mats.emplace_back(n, SparseSym(n, std::move(t)), std::nullopt);
  }
  inst.validate();
  return inst;
}

SdpInstance gen_stableset(const GraphSpec& spec) {
  if (spec.n < 1) fail("graph needs at least one vertex");
  std::set<std::pair<Index, Index>> seen;
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(spec.edges.size());
  for (auto [i, j] : spec.edges) {
    if (i == j) fail("self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 1 || j > spec.n)
      fail("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (!seen.insert({i, j}).second)
      fail("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    edges.emplace_back(i, j);
  }

  const Index n = spec.n;
  const Index m = static_cast<Index>(edges.size());
  SdpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.tau = 1.0;
  inst.b = Vector::Zero(m);

  Matrix P = Matrix::Ones(n, 1);
  Matrix D(1, 1);
  D(0, 0) = -1.0;
  inst.mats.emplace_back(n, std::nullopt, LowRankFactor(std::move(P), std::move(D)));

  for (Index l = 0; l < m; ++l) {
    const auto [i, j] = edges[static_cast<std::size_t>(l)];
    std::vector<Triplet> t{{i - 1, j - 1, 0.5}};
    inst.mats.emplace_back(n, SparseSym(n, std::move(t)), std::nullopt);
  }
  inst.validate();
  return inst;
}

std::pair<MatCompSpec, Matrix> gen_random_matcomp(Index n1, Index n2, Index rank,
                                                  double sample_fraction, std::uint64_t seed) {
  if (n1 < 1 || n2 < n1) fail("matrix completion requires n2 ≥ n1 ≥ 1");
  if (rank < 1 || rank > n1) fail("rank must lie in [1, n1]");
  if (!(sample_fraction > 0.0 && sample_fraction <= 1.0)) fail("sample fraction must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix U(n1, rank), V(n2, rank);
  for (Index i = 0; i < n1; ++i)
    for (Index k = 0; k < rank; ++k) U(i, k) = dist(rng);
  for (Index j = 0; j < n2; ++j)
    for (Index k = 0; k < rank; ++k) V(j, k) = dist(rng);
  const Matrix M = U * V.transpose() / std::sqrt(static_cast<double>(rank));

  std::vector<std::pair<Index, Index>> all;
  all.reserve(static_cast<std::size_t>(n1 * n2));
  for (Index i = 1; i <= n1; ++i)
    for (Index j = 1; j <= n2; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(sample_fraction * static_cast<double>(all.size()))));
  all.resize(std::min(count, all.size()));
  std::sort(all.begin(), all.end());

  MatCompSpec spec;
  spec.n1 = n1;
  spec.n2 = n2;
  for (const auto& [i, j] : all) {
    spec.omega.emplace_back(i, j);
    spec.values.push_back(M(i - 1, j - 1));
  }
  return {std::move(spec), M};
}

GraphSpec gen_cycle(Index n) {
  if (n < 3) fail("a cycle needs at least 3 vertices");
  GraphSpec g;
  g.n = n;
  for (Index i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(1, n);
  return g;
}

GraphSpec parse_edge_list(std::string_view text) {
  GraphSpec g;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Index max_vertex = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long i, j;
    if (!(ls >> i)) continue;  // blank
    std::string rest;
    if (!(ls >> j) || (ls >> rest))
      fail("edge list line " + std::to_string(line_no) + ": expected 'i j'");
    if (i < 1 || j < 1) fail("edge list line " + std::to_string(line_no) + ": vertices are 1-based");
    g.edges.emplace_back(i, j);
    max_vertex = std::max<Index>(max_vertex, std::max<long long>(i, j));
  }
  g.n = max_vertex;
  return g;
}

MatCompSpec parse_observations(std::string_view text) {
  MatCompSpec spec;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Index max_i = 0, max_j = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long i, j;
    double v;
    if (!(ls >> i)) continue;
    std::string rest;
    if (!(ls >> j >> v) || (ls >> rest))
      fail("observation line " + std::to_string(line_no) + ": expected 'i j value'");
    if (i < 1 || j < 1) fail("observation line " + std::to_string(line_no) + ": indices are 1-based");
    spec.omega.emplace_back(i, j);
    spec.values.push_back(v);
    max_i = std::max<Index>(max_i, i);
    max_j = std::max<Index>(max_j, j);
  }
  spec.n1 = max_i;
  spec.n2 = std::max(max_i, max_j);
  return spec;
}

}  // namespace hallar::gen
