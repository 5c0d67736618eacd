#pragma once

#include "helm/matrix.hpp"

namespace helm {

// Circulant generated by its first row. Row r is the first row cyclically
// shifted right r places, so entry (i, j) = first_row[(j - i) mod len].
struct CircSpec {
  RatVec first_row;

  std::size_t size() const { return first_row.size(); }
  RatMatrix materialize() const;
};

RatMatrix circ(const RatVec& first_row);

// Indicator vector of length n-1 with ones at 1-based positions k+1 and n-k.
// Requires n even and 1 <= k <= n/2 - 1.
RatVec c_vector(int k, int n);

// Checks Circ(s') C == Circ(s' C) by materializing both sides.
bool circ_mul_identity_check(const RatVec& s, const CircSpec& c);

// True iff every row of a is the previous row shifted right by one.
bool is_circulant(const RatMatrix& a);

}  // namespace helm
