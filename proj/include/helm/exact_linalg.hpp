#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "helm/matrix.hpp"

namespace helm {

class SingularMatrixError : public std::runtime_error {
 public:
  // pivot_column is 0-based; the message reports it 1-based.
  explicit SingularMatrixError(std::size_t pivot_column)
      : std::runtime_error("matrix is singular: no pivot in column " + std::to_string(pivot_column + 1)),
        column_(pivot_column) {}
  std::size_t pivot_column() const { return column_; }

 private:
  std::size_t column_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact determinant. Gaussian elimination taking the first nonzero entry of
// each column as pivot.
Rational det(const RatMatrix& a);
Rational det(const IntMatrix& a);

// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& a);

// A22 - A21 A11^{-1} A12 where A11 is the leading block_size x block_size block.
RatMatrix schur_complement(const RatMatrix& a, std::size_t block_size);

// det(a + u v'), evaluated directly on the updated matrix.
Rational adjugate_quadratic_form(const RatMatrix& a, const RatVec& u, const RatVec& v);

// Delete row i and column j.
RatMatrix minor_matrix(const RatMatrix& a, std::size_t i, std::size_t j);

// Signed minors (-1)^(i+j) det(minor(i, j)); the adjugate is its transpose.
RatMatrix cofactor_matrix(const RatMatrix& a);
RatMatrix adjugate(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

// Moore-Penrose inverse of a symmetric matrix with null space span(1), via
// (l + J/m)^{-1} - J/m. Preconditions are checked and the four Penrose
// identities are verified on the result before returning.
RatMatrix laplacian_pseudo_inverse(const RatMatrix& l);

// Penrose identities for candidate x of a:
//   [0] a x a = a, [1] x a x = x, [2] (a x)' = a x, [3] (x a)' = x a.
std::array<bool, 4> penrose_axioms(const RatMatrix& a, const RatMatrix& x);

// Exact PSD test for a symmetric matrix whose rows sum to zero: l is PSD iff
// l with its last row and column removed is PSD, which is settled by
// symmetric elimination with nonnegative pivots.
bool psd_certificate(const RatMatrix& l);

}  // namespace helm
