#include "hallar/rng.hpp"

#include <random>

namespace hallar {

Vector seeded_unit_vector(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = dist(rng);
  const double nrm = v.norm();
  if (nrm == 0.0) return Vector::Unit(n, 0);
  return v / nrm;
}

}  // namespace hallar
