#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "helm/matrix.hpp"
#include "helm/report.hpp"

namespace helm {

// Raised when a closed form is requested for an order it does not cover.
class OddOrderError : public std::invalid_argument {
 public:
  explicit OddOrderError(int n);
};

// Integer vector with a fixed factor 1/4 in front.
struct QuarterVec {
  std::vector<BigInt> numerators;

  std::size_t size() const { return numerators.size(); }
  RatVec values() const;
};

// Shared data for the helm graph of even order n: m = 2n - 1 vertices, the
// rim generator v = (0, 1, 2, ..., 2, 1), and the vectors
//   u = 1/4 (5-n, -1 x (n-1), 2 x (n-1))   (length m)
//   w = 1/4 (5-n, 1 x (n-1))               (length n)
class HelmContext {
 public:
  // Throws OddOrderError unless n is even and at least 4.
  explicit HelmContext(int n);

  int n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t rim() const { return static_cast<std::size_t>(n_) - 1; }

  const RatVec& v() const { return v_; }
  const QuarterVec& u_quarters() const { return u_; }
  const QuarterVec& w_quarters() const { return w_; }
  RatVec u() const { return u_.values(); }
  RatVec w() const { return w_.values(); }

  // Weight (-1)^k (n-1-2k)/2 of C_k in both Laplacians.
  Rational circulant_weight(int k) const;

 private:
  int n_;
  std::size_t m_;
  RatVec v_;
  QuarterVec u_;
  QuarterVec w_;
};

// Rim block Circ(v').
RatMatrix rim_block(const HelmContext& ctx);

// Block form [[0, 1', 2*1'], [1, R, R+J], [2*1, R+J, R+2(J-I)]], R = Circ(v').
IntMatrix closed_form_D(const HelmContext& ctx);

// Leading n x n block [[0, 1'], [1, R]]: the wheel distance matrix.
IntMatrix wheel_distance(const HelmContext& ctx);

RatMatrix special_laplacian(const HelmContext& ctx);

// The n x n wheel counterpart of the special Laplacian.
RatMatrix wheel_laplacian(const HelmContext& ctx);

// Sum_k weight_k * c^k' R, accumulated term by term.
RatVec f_vector_direct(const HelmContext& ctx);
// (-1, (3-n)/2, 2-n, ..., 2-n, (3-n)/2).
RatVec f_vector_closed_form(const HelmContext& ctx);
// Direct sum; throws IdentityViolation if it disagrees with the closed form.
RatVec f_vector(const HelmContext& ctx);

// Circ((n-1)/2 v' - 3/2 1' + f) built from the direct f.
RatMatrix b_matrix_direct(const HelmContext& ctx);
// Direct B; throws IdentityViolation unless it equals -2I - J/2.
RatMatrix b_matrix(const HelmContext& ctx);

// Sum_{k=1}^{n/2-1} (-1)^k (n-1-2k).
Rational alternating_sum(int n);
// alternating_sum(n); throws IdentityViolation unless it equals (2-n)/2.
Rational alternating_sum_identity(int n);

// -L~/2 + 4/(n-1) w w'; throws IdentityViolation unless M * result = I.
RatMatrix wheel_inverse_closed_form(const HelmContext& ctx);

// 3(n-1) 2^(n-1).
BigInt closed_form_det(const HelmContext& ctx);

// -L/2 + 4/(3(n-1)) u u'; throws IdentityViolation unless D * result = I.
RatMatrix closed_form_inverse(const HelmContext& ctx);

// Expected block form of L*D for n >= 8 (with B = -2I - J/2).
RatMatrix ld_block_form(const HelmContext& ctx);

VerificationReport minverse_lemma_checks(const HelmContext& ctx);
VerificationReport schur_lemma_check(const HelmContext& ctx);
VerificationReport ld_identity_check(const HelmContext& ctx);

struct LaplacianCheckOptions {
  int cofactor_limit = 16;     // cofactor sweep only for n <= this
  bool exact_psd = false;      // add the exact elimination PSD certificate
};

VerificationReport laplacian_property_checks(const HelmContext& ctx, const LaplacianCheckOptions& opts = {});

}  // namespace helm
