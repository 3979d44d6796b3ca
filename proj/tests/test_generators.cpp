#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hallar/generators.hpp"
#include "hallar/kernels.hpp"
#include "hallar/solver.hpp"
#include "oracle.hpp"

using namespace hallar;
using namespace hallar::gen;

namespace {

Matrix random_sym(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix B(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) B(i, j) = g(rng);
  return 0.5 * (B + B.transpose());
}

}  // namespace

TEST_CASE("gen_matcomp reproduces the worked 2x2 example") {
  MatCompSpec spec;
  spec.n1 = spec.n2 = 2;
  spec.omega = {{1, 1}, {2, 2}};
  spec.values = {5.0, 3.0};
  const SdpInstance inst = gen_matcomp(spec);
  CHECK(inst.m == 2);
  CHECK(inst.n == 4);
  CHECK(inst.b[0] == 5.0);
  CHECK(inst.b[1] == 3.0);
  // τ = 2√2·√34, exact rather than the display rounding 16.50
  CHECK(inst.tau == doctest::Approx(2.0 * std::sqrt(2.0) * std::sqrt(34.0)).epsilon(1e-15));
  CHECK(inst.tau == doctest::Approx(16.4924).epsilon(1e-4));

  Matrix A1 = Matrix::Zero(4, 4);
  A1(0, 2) = A1(2, 0) = 0.5;
  Matrix A2 = Matrix::Zero(4, 4);
  A2(1, 3) = A2(3, 1) = 0.5;
  CHECK((dense(inst.constraint(0)) - A1).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((dense(inst.constraint(1)) - A2).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((dense(inst.cost()) - 0.5 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-15);

  // the paper's rounded file and the generated instance densify identically
  // except for τ, and the generated file parses back bit-for-bit
  const SdpInstance reparsed = io::parse_hslr(io::write_hslr(inst));
  for (Index l = 0; l <= inst.m; ++l)
    CHECK((dense(reparsed.mats[static_cast<std::size_t>(l)]) -
           dense(inst.mats[static_cast<std::size_t>(l)]))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  CHECK(reparsed.tau == inst.tau);
}

TEST_CASE("gen_matcomp rejects degenerate specs") {
  MatCompSpec empty;
  empty.n1 = empty.n2 = 2;
  CHECK_THROWS_AS(gen_matcomp(empty), std::invalid_argument);  // τ would be 0

  MatCompSpec dup;
  dup.n1 = dup.n2 = 2;
  dup.omega = {{1, 1}, {1, 1}};
  dup.values = {1.0, 2.0};
  CHECK_THROWS_AS(gen_matcomp(dup), std::invalid_argument);

  MatCompSpec oob;
  oob.n1 = oob.n2 = 2;
  oob.omega = {{3, 1}};
  oob.values = {1.0};
  CHECK_THROWS_AS(gen_matcomp(oob), std::invalid_argument);
}

TEST_CASE("matcomp constraints read the Y-block entry") {
  MatCompSpec spec;
  spec.n1 = 2;
  spec.n2 = 3;
  spec.omega = {{1, 2}, {2, 3}, {2, 1}};
  spec.values = {1.0, -2.0, 0.5};
  const SdpInstance inst = gen_matcomp(spec);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix X = random_sym(inst.n, 4000 + trial);
    for (Index l = 0; l < inst.m; ++l) {
      const auto [i, j] = spec.omega[static_cast<std::size_t>(l)];
      const double got = dense(inst.constraint(l)).cwiseProduct(X).sum();
      CHECK(got == doctest::Approx(X(i - 1, spec.n1 + j - 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("gen_stableset reproduces the C4 data file") {
  const SdpInstance inst = gen_stableset(gen_cycle(4));
  CHECK(inst.m == 4);
  CHECK(inst.n == 4);
  CHECK(inst.tau == 1.0);
  CHECK(inst.b.norm() == 0.0);

  const SdpInstance want = fixtures::stable_set_c4();
  for (Index l = 0; l <= 4; ++l)
    CHECK((dense(inst.mats[static_cast<std::size_t>(l)]) -
           dense(want.mats[static_cast<std::size_t>(l)]))
              .cwiseAbs()
              .maxCoeff() <= 1e-15);

  // content lines match the reference file modulo comments and blanks
  auto content_lines = [](const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
      std::size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos || line[start] == '#') continue;
      // collapse runs of spaces
      std::string norm;
      bool prev_space = false;
      for (char c : line.substr(start)) {
        const bool space = c == ' ' || c == '\t';
        if (space && prev_space) continue;
        norm.push_back(space ? ' ' : c);
        prev_space = space;
      }
      out.push_back(norm);
    }
    return out;
  };
  CHECK(content_lines(io::write_hslr(inst)) ==
        content_lines(builtin::kStableSetC4Hslr));
}

TEST_CASE("gen_stableset validates the graph") {
  GraphSpec loop;
  loop.n = 3;
  loop.edges = {{1, 1}};
  CHECK_THROWS_AS(gen_stableset(loop), std::invalid_argument);

  GraphSpec dup;
  dup.n = 3;
  dup.edges = {{1, 2}, {2, 1}};
  CHECK_THROWS_AS(gen_stableset(dup), std::invalid_argument);
}

TEST_CASE("stable-set constraints read X_ij") {
  const SdpInstance inst = gen_stableset(gen_cycle(5));
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix X = random_sym(5, 4100 + trial);
    for (Index l = 0; l < inst.m; ++l) {
      const Matrix A = dense(inst.constraint(l));
      Index ei = -1, ej = -1;
      for (Index i = 0; i < 5; ++i)
        for (Index j = i + 1; j < 5; ++j)
          if (A(i, j) != 0.0) { ei = i; ej = j; }
      CHECK(A.cwiseProduct(X).sum() == doctest::Approx(X(ei, ej)).epsilon(1e-12));
    }
  }
}

TEST_CASE("the edgeless graph's optimum is n") {
  GraphSpec g;
  g.n = 4;
  const SdpInstance inst = gen_stableset(g);
  CHECK(inst.m == 0);
  const auto od = oracle::dense_solve(inst);
  CHECK(od.value == doctest::Approx(-4.0).epsilon(1e-5));
  const auto res = solver::solve(inst, io::SolverOptions{});
  REQUIRE(res.status == solver::SolveStatus::Optimal);
  CHECK(std::abs(res.value - (-4.0)) <= 1e-3);
}

TEST_CASE("a single edge on two vertices has theta-number 1") {
  GraphSpec g;
  g.n = 2;
  g.edges = {{1, 2}};
  const SdpInstance inst = gen_stableset(g);
  const auto od = oracle::dense_solve(inst);
  CHECK(od.value == doctest::Approx(-1.0).epsilon(1e-5));
  const auto res = solver::solve(inst, io::SolverOptions{});
  REQUIRE(res.status == solver::SolveStatus::Optimal);
  CHECK(std::abs(res.value - (-1.0)) <= 1e-3);
}

TEST_CASE("gen_random_matcomp") {
  SUBCASE("full sampling observes every entry") {
    const auto [spec, M] = gen_random_matcomp(2, 3, 1, 1.0, 0);
    CHECK(spec.omega.size() == 6);
    CHECK(M.rows() == 2);
    CHECK(M.cols() == 3);
  }
  SUBCASE("seeded generation is deterministic") {
    const auto a = gen_random_matcomp(3, 4, 2, 0.5, 11);
    const auto b = gen_random_matcomp(3, 4, 2, 0.5, 11);
    CHECK(a.first.omega == b.first.omega);
    CHECK(a.first.values == b.first.values);
    CHECK((a.second - b.second).norm() == 0.0);
    const auto c = gen_random_matcomp(3, 4, 2, 0.5, 12);
    CHECK((a.second - c.second).norm() > 0.0);
  }
  SUBCASE("fully observed recovery reaches the nuclear norm") {
    const auto [spec, M] = gen_random_matcomp(3, 3, 2, 1.0, 3);
    const SdpInstance inst = gen_matcomp(spec);
    const auto res = solver::solve(inst, io::SolverOptions{});
    REQUIRE(res.status == solver::SolveStatus::Optimal);
    const double nuclear = Eigen::JacobiSVD<Matrix>(M).singularValues().sum();
    CHECK(std::abs(res.value - nuclear) <= 1e-2 * std::max(1.0, nuclear));
  }
  SUBCASE("degenerate arguments are rejected") {
    CHECK_THROWS_AS(gen_random_matcomp(0, 2, 1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_matcomp(2, 2, 3, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_matcomp(2, 2, 1, 0.0, 0), std::invalid_argument);
  }
}

TEST_CASE("gen_cycle") {
  const GraphSpec c4 = gen_cycle(4);
  CHECK(c4.n == 4);
  const std::vector<std::pair<Index, Index>> want = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  CHECK(c4.edges == want);
  CHECK(gen_cycle(3).edges.size() == 3);
  for (Index n = 3; n < 10; ++n) CHECK(gen_cycle(n).edges.size() == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("edge-list and observation parsing") {
  const GraphSpec g = parse_edge_list("# a square\n1 2\n2 3\n3 4\n1 4\n");
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 4);
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), std::invalid_argument);

  const MatCompSpec m = parse_observations("1 1 5.0\n2 2 3.0\n");
  CHECK(m.n1 == 2);
  CHECK(m.n2 == 2);
  CHECK(m.values[0] == 5.0);
  const SdpInstance inst = gen_matcomp(m);
  CHECK((dense(inst.cost()) - dense(fixtures::matcomp_small().cost())).cwiseAbs().maxCoeff() <=
        1e-15);
}

TEST_CASE("generated instances parse back through the writer") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto [spec, M] = gen_random_matcomp(2 + trial % 2, 3 + trial % 2, 1, 0.7, 100 + trial);
    const SdpInstance inst = gen_matcomp(spec);
    const SdpInstance back = io::parse_hslr(io::write_hslr(inst));
    CHECK(back.tau == inst.tau);
    for (Index l = 0; l <= inst.m; ++l)
      CHECK((dense(back.mats[static_cast<std::size_t>(l)]) -
             dense(inst.mats[static_cast<std::size_t>(l)]))
                .cwiseAbs()
                .maxCoeff() == 0.0);
  }
}
