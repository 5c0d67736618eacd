#include "helm/circulant.hpp"

#include <string>

namespace helm {

RatMatrix CircSpec::materialize() const { return circ(first_row); }

RatMatrix circ(const RatVec& first_row) {
  const std::size_t mu = first_row.size();
  if (mu == 0) throw DimensionError("circulant needs a nonempty generating vector");
  RatMatrix out(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) out(i, j) = first_row[(j + mu - i) % mu];
  return out;
}

RatVec c_vector(int k, int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("c_vector requires even n >= 4, got " + std::to_string(n));
  if (k < 1 || k > n / 2 - 1)
    throw std::invalid_argument("c_vector index k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(n / 2 - 1));
  RatVec c(static_cast<std::size_t>(n - 1), Rational(0));
  // 1-based positions k+1 and n-k
  c[static_cast<std::size_t>(k)] = 1;
  c[static_cast<std::size_t>(n - k - 1)] = 1;
  return c;
}

bool circ_mul_identity_check(const RatVec& s, const CircSpec& c) {
  if (s.size() != c.size()) throw DimensionError("circ_mul_identity_check: length mismatch");
  const RatMatrix cm = c.materialize();
  return circ(s) * cm == circ(row_times(s, cm));
}

bool is_circulant(const RatMatrix& a) {
  if (!a.square() || a.rows() == 0) return false;
  const std::size_t mu = a.rows();
  for (std::size_t i = 1; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      if (a(i, j) != a(i - 1, (j + mu - 1) % mu)) return false;
  return true;
}

}  // namespace helm
