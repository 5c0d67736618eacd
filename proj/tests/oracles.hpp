#pragma once

// Test-only oracles. None of these share code paths with the library's
// elimination routines or BFS.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "helm/graph.hpp"
#include "helm/matrix.hpp"

namespace helm::oracle {

// Cofactor expansion along the first row. Exponential; keep to n <= 8.
inline Rational laplace_det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    RatMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = a(r, c);
    const Rational term = a(0, j) * laplace_det(sub);
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

// Floyd-Warshall on the adjacency structure.
inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const std::size_t m = g.vertex_count();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(m, std::vector<long>(m, inf));
  for (std::size_t i = 0; i < m; ++i) {
    d[i][i] = 0;
    for (std::size_t j : g.neighbors(i)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Small random rationals p/q with |p| <= 6 and 1 <= q <= 4.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return frac(num(rng_), den(rng_));
  }
  RatVec vec(std::size_t n) {
    RatVec v(n);
    for (auto& x : v) x = next();
    return v;
  }
  RatMatrix matrix(std::size_t r, std::size_t c) {
    RatMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = next();
    return a;
  }
  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace helm::oracle
