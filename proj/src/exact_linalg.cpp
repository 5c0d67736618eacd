#include "helm/exact_linalg.hpp"

#include <optional>
#include <utility>

namespace helm {

namespace {

void require_square(const RatMatrix& a, const char* what) {
  if (!a.square()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

std::optional<std::size_t> first_nonzero_in_column(const RatMatrix& a, std::size_t col,
                                                   std::size_t from_row) {
  for (std::size_t r = from_row; r < a.rows(); ++r)
    if (a(r, col) != 0) return r;
  return std::nullopt;
}

void swap_rows(RatMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

bool row_sums_vanish(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

Rational det(const RatMatrix& input) {
  require_square(input, "det");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational result = 1;
  Rational factor;
  for (std::size_t c = 0; c < n; ++c) {
    const auto pivot = first_nonzero_in_column(a, c, c);
    if (!pivot) return 0;
    if (*pivot != c) {
      swap_rows(a, *pivot, c);
      result = -result;
    }
    const Rational& p = a(c, c);
    result *= p;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      factor = a(r, c) / p;
      for (std::size_t j = c + 1; j < n; ++j) a(r, j) -= factor * a(c, j);
      a(r, c) = 0;
    }
  }
  return result;
}

Rational det(const IntMatrix& a) { return det(to_rational(a)); }

RatMatrix inverse(const RatMatrix& input) {
  require_square(input, "inverse");
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  Rational factor;
  for (std::size_t c = 0; c < n; ++c) {
    const auto pivot = first_nonzero_in_column(a, c, c);
    if (!pivot) throw SingularMatrixError(c);
    swap_rows(a, *pivot, c);
    swap_rows(inv, *pivot, c);
    const Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(c, j);
        inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix schur_complement(const RatMatrix& a, std::size_t block_size) {
  require_square(a, "schur_complement");
  if (block_size == 0 || block_size >= a.rows())
    throw DimensionError("schur_complement: block size must lie strictly between 0 and the matrix order");
  const std::size_t rest = a.rows() - block_size;
  const RatMatrix a11 = a.block(0, 0, block_size, block_size);
  const RatMatrix a12 = a.block(0, block_size, block_size, rest);
  const RatMatrix a21 = a.block(block_size, 0, rest, block_size);
  const RatMatrix a22 = a.block(block_size, block_size, rest, rest);
  return a22 - a21 * (inverse(a11) * a12);
}

Rational adjugate_quadratic_form(const RatMatrix& a, const RatVec& u, const RatVec& v) {
  require_square(a, "adjugate_quadratic_form");
  if (u.size() != a.rows() || v.size() != a.rows())
    throw DimensionError("adjugate_quadratic_form: vector length does not match matrix order");
  return det(a + outer(u, v));
}

RatMatrix minor_matrix(const RatMatrix& a, std::size_t i, std::size_t j) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("minor of an empty matrix");
  RatMatrix out(a.rows() - 1, a.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
      if (c == j) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

RatMatrix cofactor_matrix(const RatMatrix& a) {
  require_square(a, "cofactor_matrix");
  const std::size_t n = a.rows();
  RatMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational m = det(minor_matrix(a, i, j));
      out(i, j) = ((i + j) % 2 == 0) ? m : Rational(-m);
    }
  }
  return out;
}

RatMatrix adjugate(const RatMatrix& a) { return cofactor_matrix(a).transpose(); }

std::size_t rank(const RatMatrix& input) {
  RatMatrix a = input;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const auto pivot = first_nonzero_in_column(a, c, r);
    if (!pivot) continue;
    swap_rows(a, *pivot, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      factor = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

std::array<bool, 4> penrose_axioms(const RatMatrix& a, const RatMatrix& x) {
  const RatMatrix ax = a * x;
  const RatMatrix xa = x * a;
  return {ax * a == a, xa * x == x, ax.transpose() == ax, xa.transpose() == xa};
}

RatMatrix laplacian_pseudo_inverse(const RatMatrix& l) {
  require_square(l, "laplacian_pseudo_inverse");
  const std::size_t m = l.rows();
  if (!l.symmetric()) throw PreconditionError("laplacian_pseudo_inverse: matrix is not symmetric");
  if (!row_sums_vanish(l)) throw PreconditionError("laplacian_pseudo_inverse: row sums are not zero");
  if (rank(l) != m - 1)
    throw PreconditionError("laplacian_pseudo_inverse: rank is not " + std::to_string(m - 1));

  const RatMatrix j_over_m = RatMatrix::ones(m, m) * frac(1, static_cast<unsigned long>(m));
  RatMatrix pinv = inverse(l + j_over_m) - j_over_m;
  const auto axioms = penrose_axioms(l, pinv);
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    if (!axioms[k])
      throw std::logic_error("laplacian_pseudo_inverse: Penrose identity " + std::to_string(k + 1) + " failed");
  }
  return pinv;
}

bool psd_certificate(const RatMatrix& l) {
  require_square(l, "psd_certificate");
  if (!l.symmetric()) throw PreconditionError("psd_certificate: matrix is not symmetric");
  if (!row_sums_vanish(l)) throw PreconditionError("psd_certificate: row sums are not zero");
  if (l.rows() <= 1) return true;
  const std::size_t k = l.rows() - 1;
  RatMatrix a = l.block(0, 0, k, k);
  Rational factor;
  for (std::size_t c = 0; c < k; ++c) {
    const Rational& p = a(c, c);
    if (p < 0) return false;
    if (p == 0) {
      // A zero pivot of a PSD matrix forces the rest of its row to vanish.
      for (std::size_t j = c + 1; j < k; ++j)
        if (a(c, j) != 0) return false;
      continue;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a(r, c) == 0) continue;
      factor = a(r, c) / p;
      for (std::size_t j = c; j < k; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return true;
}

}  // namespace helm
