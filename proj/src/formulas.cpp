#include "helm/formulas.hpp"

#include <optional>
#include <string>

#include "helm/circulant.hpp"
#include "helm/exact_linalg.hpp"

namespace helm {

OddOrderError::OddOrderError(int n)
    : std::invalid_argument("closed forms require an even order n >= 4 (got n=" + std::to_string(n) + ")") {}

RatVec QuarterVec::values() const {
  RatVec out;
  out.reserve(numerators.size());
  for (const auto& z : numerators) out.push_back(frac(z, 4));
  return out;
}

HelmContext::HelmContext(int n) : n_(n) {
  if (n < 4 || n % 2 != 0) throw OddOrderError(n);
  const std::size_t r = static_cast<std::size_t>(n) - 1;
  m_ = 2 * r + 1;

  v_.assign(r, Rational(2));
  v_[0] = 0;
  v_[1] = 1;
  v_[r - 1] = 1;

  u_.numerators.reserve(m_);
  u_.numerators.emplace_back(5 - n);
  u_.numerators.insert(u_.numerators.end(), r, BigInt(-1));
  u_.numerators.insert(u_.numerators.end(), r, BigInt(2));

  w_.numerators.reserve(r + 1);
  w_.numerators.emplace_back(5 - n);
  w_.numerators.insert(w_.numerators.end(), r, BigInt(1));
}

Rational HelmContext::circulant_weight(int k) const {
  const int sign = (k % 2 == 0) ? 1 : -1;
  return frac(sign * (n_ - 1 - 2 * k), 2);
}

namespace {

RatMatrix identity(std::size_t k) { return RatMatrix::identity(k); }
RatMatrix ones(std::size_t r, std::size_t c) { return RatMatrix::ones(r, c); }

// Sum_k weight_k C_k.
RatMatrix weighted_circulant_sum(const HelmContext& ctx) {
  RatMatrix acc(ctx.rim(), ctx.rim());
  for (int k = 1; k <= ctx.n() / 2 - 1; ++k) acc += ctx.circulant_weight(k) * circ(c_vector(k, ctx.n()));
  return acc;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw std::logic_error("non-integral entry " + to_string(a(i, j)));
      out(i, j) = a(i, j).get_num();
    }
  }
  return out;
}

// Z = [[2*1'], [R + J]], n x (n-1).
RatMatrix z_block(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  RatMatrix z(r + 1, r);
  z.set_block(0, 0, ones(1, r) * Rational(2));
  z.set_block(1, 0, rim_block(ctx) + ones(r, r));
  return z;
}

}  // namespace

RatMatrix rim_block(const HelmContext& ctx) { return circ(ctx.v()); }

IntMatrix closed_form_D(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  const RatMatrix rb = rim_block(ctx);
  const RatMatrix j = ones(r, r);
  RatMatrix d(ctx.m(), ctx.m());
  d.set_block(0, 1, ones(1, r));
  d.set_block(0, 1 + r, ones(1, r) * Rational(2));
  d.set_block(1, 0, ones(r, 1));
  d.set_block(1 + r, 0, ones(r, 1) * Rational(2));
  d.set_block(1, 1, rb);
  d.set_block(1, 1 + r, rb + j);
  d.set_block(1 + r, 1, rb + j);
  d.set_block(1 + r, 1 + r, rb + Rational(2) * (j - identity(r)));
  return to_integer(d);
}

IntMatrix wheel_distance(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  RatMatrix m(r + 1, r + 1);
  m.set_block(0, 1, ones(1, r));
  m.set_block(1, 0, ones(r, 1));
  m.set_block(1, 1, rim_block(ctx));
  return to_integer(m);
}

RatMatrix special_laplacian(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  const int n = ctx.n();
  RatMatrix skeleton(ctx.m(), ctx.m());
  skeleton(0, 0) = n - 1;
  skeleton.set_block(0, 1, -ones(1, r));
  skeleton.set_block(1, 0, -ones(r, 1));
  skeleton.set_block(1, 1, identity(r) * Rational(n + 1));
  skeleton.set_block(1, 1 + r, identity(r) * Rational(-2));
  skeleton.set_block(1 + r, 1, identity(r) * Rational(-2));
  skeleton.set_block(1 + r, 1 + r, identity(r) * Rational(2));

  RatMatrix l = skeleton * frac(1, 2);
  RatMatrix correction(ctx.m(), ctx.m());
  correction.set_block(1, 1, weighted_circulant_sum(ctx));
  return l + correction;
}

RatMatrix wheel_laplacian(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  RatMatrix spokes(r + 1, r + 1);
  spokes.set_block(0, 1, ones(1, r));
  spokes.set_block(1, 0, ones(r, 1));
  RatMatrix correction(r + 1, r + 1);
  correction.set_block(1, 1, weighted_circulant_sum(ctx));
  return identity(r + 1) * frac(ctx.n() - 1, 2) - spokes * frac(1, 2) + correction;
}

RatVec f_vector_direct(const HelmContext& ctx) {
  const RatMatrix rb = rim_block(ctx);
  RatVec f(ctx.rim(), Rational(0));
  for (int k = 1; k <= ctx.n() / 2 - 1; ++k) {
    const RatVec q = row_times(c_vector(k, ctx.n()), rb);
    const Rational weight = ctx.circulant_weight(k);
    for (std::size_t j = 0; j < f.size(); ++j) f[j] += weight * q[j];
  }
  return f;
}

RatVec f_vector_closed_form(const HelmContext& ctx) {
  const int n = ctx.n();
  const std::size_t r = ctx.rim();
  RatVec f(r, Rational(2 - n));
  f[0] = -1;
  f[1] = frac(3 - n, 2);
  f[r - 1] = frac(3 - n, 2);
  return f;
}

RatVec f_vector(const HelmContext& ctx) {
  RatVec direct = f_vector_direct(ctx);
  if (auto w = first_mismatch(f_vector_closed_form(ctx), direct)) throw IdentityViolation("f-vector", *w);
  return direct;
}

RatMatrix b_matrix_direct(const HelmContext& ctx) {
  const RatVec f = f_vector_direct(ctx);
  const Rational half_rim = frac(ctx.n() - 1, 2);
  const Rational three_halves = frac(3, 2);
  RatVec gen(ctx.rim());
  for (std::size_t j = 0; j < gen.size(); ++j) gen[j] = half_rim * ctx.v()[j] - three_halves + f[j];
  return circ(gen);
}

RatMatrix b_matrix(const HelmContext& ctx) {
  RatMatrix b = b_matrix_direct(ctx);
  const std::size_t r = ctx.rim();
  const RatMatrix expected = identity(r) * Rational(-2) - ones(r, r) * frac(1, 2);
  if (auto w = first_mismatch(expected, b)) throw IdentityViolation("B = -2I - J/2", *w);
  return b;
}

Rational alternating_sum(int n) {
  if (n < 4 || n % 2 != 0) throw OddOrderError(n);
  Rational s = 0;
  for (int k = 1; k <= n / 2 - 1; ++k) s += (k % 2 == 0 ? 1 : -1) * (n - 1 - 2 * k);
  return s;
}

Rational alternating_sum_identity(int n) {
  Rational s = alternating_sum(n);
  if (auto w = scalar_mismatch(frac(2 - n, 2), s)) throw IdentityViolation("alternating sum", *w);
  return s;
}

RatMatrix wheel_inverse_closed_form(const HelmContext& ctx) {
  const RatVec w = ctx.w();
  RatMatrix x = wheel_laplacian(ctx) * frac(-1, 2) + outer(w, w) * frac(4, ctx.n() - 1);
  const RatMatrix m = to_rational(wheel_distance(ctx));
  if (auto wit = first_mismatch(identity(m.rows()), m * x)) throw IdentityViolation("M * M^{-1} = I", *wit);
  return x;
}

BigInt closed_form_det(const HelmContext& ctx) {
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(ctx.n() - 1));
  return BigInt(3 * (ctx.n() - 1)) * pow2;
}

RatMatrix closed_form_inverse(const HelmContext& ctx) {
  const RatVec u = ctx.u();
  RatMatrix x = special_laplacian(ctx) * frac(-1, 2) + outer(u, u) * frac(4, 3 * (ctx.n() - 1));
  const RatMatrix d = to_rational(closed_form_D(ctx));
  if (auto wit = first_mismatch(identity(d.rows()), d * x)) throw IdentityViolation("D * D^{-1} = I", *wit);
  return x;
}

RatMatrix ld_block_form(const HelmContext& ctx) {
  const std::size_t r = ctx.rim();
  const int n = ctx.n();
  const RatMatrix i = identity(r);
  const RatMatrix j = ones(r, r);
  const RatMatrix b = i * Rational(-2) - j * frac(1, 2);
  RatMatrix out(ctx.m(), ctx.m());
  out(0, 0) = frac(1 - n, 2);
  out.set_block(0, 1, ones(1, r) * frac(5 - n, 2));
  out.set_block(0, 1 + r, ones(1, r) * frac(5 - n, 2));
  out.set_block(1, 0, ones(r, 1) * frac(-1, 2));
  out.set_block(1, 1, b);
  out.set_block(1, 1 + r, i * Rational(2) + b);
  out.set_block(1 + r, 0, ones(r, 1));
  out.set_block(1 + r, 1, j);
  out.set_block(1 + r, 1 + r, j - i * Rational(2));
  return out;
}

VerificationReport minverse_lemma_checks(const HelmContext& ctx) {
  VerificationReport report;
  const int n = ctx.n();
  const std::size_t r = ctx.rim();
  const RatMatrix z = z_block(ctx);
  const RatVec w = ctx.w();
  const RatMatrix m = to_rational(wheel_distance(ctx));
  const RatMatrix i = identity(r);
  const RatMatrix j = ones(r, r);

  // Independent route for M^{-1}: elimination, not the closed form.
  std::optional<RatMatrix> m_inv;
  try {
    m_inv = inverse(m);
  } catch (const SingularMatrixError&) {
  }

  report.run("w'Z = (n+3)/4 1'", "Lemma Minverse (i)", n, [&]() -> std::optional<Witness> {
    const RatVec expected(r, frac(n + 3, 4));
    return first_mismatch(expected, row_times(w, z));
  });

  report.run("L~Z = [(5-n)/2 1'; -2I + J/2]", "Lemma Minverse (ii)", n, [&]() -> std::optional<Witness> {
    RatMatrix expected(r + 1, r);
    expected.set_block(0, 0, ones(1, r) * frac(5 - n, 2));
    expected.set_block(1, 0, i * Rational(-2) + j * frac(1, 2));
    return first_mismatch(expected, wheel_laplacian(ctx) * z);
  });

  report.run("M^{-1}Z = [(n-5)/4 1'; I - J/4] + (n+3)/(n-1) w 1'", "Lemma Minverse (iii)", n,
             [&]() -> std::optional<Witness> {
               if (!m_inv) return Witness{0, 0, "invertible M", "singular M"};
               RatMatrix expected(r + 1, r);
               expected.set_block(0, 0, ones(1, r) * frac(n - 5, 4));
               expected.set_block(1, 0, i - j * frac(1, 4));
               expected += outer(w, ones_vec(r)) * frac(n + 3, n - 1);
               return first_mismatch(expected, *m_inv * z);
             });

  report.run("Z'M^{-1}Z = R + 2(n+1)/(n-1) J", "Lemma Minverse (iv)", n, [&]() -> std::optional<Witness> {
    if (!m_inv) return Witness{0, 0, "invertible M", "singular M"};
    const RatMatrix expected = rim_block(ctx) + j * frac(2 * (n + 1), n - 1);
    return first_mismatch(expected, z.transpose() * (*m_inv * z));
  });

  return report;
}

VerificationReport schur_lemma_check(const HelmContext& ctx) {
  VerificationReport report;
  const int n = ctx.n();
  const std::size_t r = ctx.rim();
  const RatMatrix d = to_rational(closed_form_D(ctx));

  std::optional<RatMatrix> schur;
  report.run("Schur complement of M in D = -2I - 4/(n-1) J", "Lemma Mschurcom (i)", n,
             [&]() -> std::optional<Witness> {
               schur = schur_complement(d, static_cast<std::size_t>(n));
               const RatMatrix expected = identity(r) * Rational(-2) - ones(r, r) * frac(4, n - 1);
               return first_mismatch(expected, *schur);
             });

  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  report.run("det(Schur complement) = (-3) 2^(n-1)", "Lemma Mschurcom (ii)", n, [&]() -> std::optional<Witness> {
    if (!schur) return Witness{0, 0, "Schur complement", "not computed"};
    return scalar_mismatch(Rational(BigInt(-3) * pow2), det(*schur));
  });

  report.run("det(M) = 1 - n", "Eq. detwheeldist", n, [&]() -> std::optional<Witness> {
    return scalar_mismatch(Rational(1 - n), det(wheel_distance(ctx)));
  });

  report.run("det(D) = det(M) det(Schur complement)", "(P6)", n, [&]() -> std::optional<Witness> {
    if (!schur) return Witness{0, 0, "Schur complement", "not computed"};
    return scalar_mismatch(det(d), det(wheel_distance(ctx)) * det(*schur));
  });

  return report;
}

VerificationReport ld_identity_check(const HelmContext& ctx) {
  VerificationReport report;
  const int n = ctx.n();
  const std::size_t m = ctx.m();
  const RatMatrix l = special_laplacian(ctx);
  const RatMatrix d = to_rational(closed_form_D(ctx));
  const RatVec u = ctx.u();
  const RatMatrix ld = l * d;

  if (n >= 8) {
    report.run("L D block form", "Lemma T,LD", n,
               [&]() -> std::optional<Witness> { return first_mismatch(ld_block_form(ctx), ld); });
  } else {
    report.skip("L D block form", "Lemma T,LD", n, "lemma stated for n >= 8");
  }

  report.run("L D + 2I = 2 u 1'", "Eq. ld2", n, [&]() -> std::optional<Witness> {
    return first_mismatch(outer(u, ones_vec(m)) * Rational(2), ld + identity(m) * Rational(2));
  });

  report.run("D u = 3(n-1)/4 1", "Eq. Du", n, [&]() -> std::optional<Witness> {
    return first_mismatch(RatVec(m, frac(3 * (n - 1), 4)), d * u);
  });

  return report;
}

VerificationReport laplacian_property_checks(const HelmContext& ctx, const LaplacianCheckOptions& opts) {
  VerificationReport report;
  const int n = ctx.n();
  const std::size_t m = ctx.m();
  const RatMatrix l = special_laplacian(ctx);
  const RatVec one = ones_vec(m);

  report.run("L symmetric", "Eq. D,Lap", n, [&]() -> std::optional<Witness> {
    return first_mismatch(l.transpose(), l);
  });
  report.run("L 1 = 0", "Theorem rowsums", n, [&]() -> std::optional<Witness> {
    return first_mismatch(RatVec(m, Rational(0)), l * one);
  });
  report.run("1' L = 0", "Theorem rowsums", n, [&]() -> std::optional<Witness> {
    return first_mismatch(RatVec(m, Rational(0)), row_times(one, l));
  });
  report.run("rank(L) = m - 1", "Theorem rowsums", n, [&]() -> std::optional<Witness> {
    return scalar_mismatch(Rational(static_cast<unsigned long>(m - 1)),
                           Rational(static_cast<unsigned long>(rank(l))));
  });

  if (n <= opts.cofactor_limit) {
    report.run("all cofactors of L = 2^(n-3)", "Theorem cofactors", n, [&]() -> std::optional<Witness> {
      BigInt pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 3));
      return first_mismatch(RatMatrix(m, m, Rational(pow2)), cofactor_matrix(l));
    });
  } else {
    report.skip("all cofactors of L = 2^(n-3)", "Theorem cofactors", n,
                "n exceeds cofactor limit " + std::to_string(opts.cofactor_limit));
  }

  report.run("1' u = 1", "Theorem rowsums", n, [&]() -> std::optional<Witness> {
    return scalar_mismatch(Rational(1), dot(one, ctx.u()));
  });

  // laplacian_pseudo_inverse asserts the Penrose identities itself; they are
  // recomputed here so each one gets its own record.
  std::optional<RatMatrix> pinv;
  report.run("pseudo-inverse of L", "Theorem PSD", n, [&]() -> std::optional<Witness> {
    pinv = laplacian_pseudo_inverse(l);
    return std::nullopt;
  });
  static const char* kAxioms[] = {"L X L = L", "X L X = X", "(L X)' = L X", "(X L)' = X L"};
  for (std::size_t k = 0; k < 4; ++k) {
    report.run(std::string("Penrose: ") + kAxioms[k], "Theorem PSD", n, [&]() -> std::optional<Witness> {
      if (!pinv) return Witness{0, 0, "pseudo-inverse", "not computed"};
      if (penrose_axioms(l, *pinv)[k]) return std::nullopt;
      return Witness{0, 0, "true", "false"};
    });
  }

  const RatMatrix p = identity(m) - ones(m, m) * frac(1, static_cast<unsigned long>(m));
  report
      .run("L L^+ = I - J/m (divisor m)", "Theorem PSD", n,
           [&]() -> std::optional<Witness> {
             if (!pinv) return Witness{0, 0, "pseudo-inverse", "not computed"};
             return first_mismatch(p, l * *pinv);
           })
      .detail = "printed form divides J by n; the projector onto 1-perp needs m = 2n-1";

  const RatMatrix d = to_rational(closed_form_D(ctx));
  report.run("P D P = -2 L^+", "Theorem PSD", n, [&]() -> std::optional<Witness> {
    if (!pinv) return Witness{0, 0, "pseudo-inverse", "not computed"};
    return first_mismatch(*pinv * Rational(-2), p * d * p);
  });

  report.run("D = diag(L^+) J + J diag(L^+) - 2 L^+", "Eq. ldj", n, [&]() -> std::optional<Witness> {
    if (!pinv) return Witness{0, 0, "pseudo-inverse", "not computed"};
    RatMatrix rebuilt(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        rebuilt(i, j) = (*pinv)(i, i) + (*pinv)(j, j) - Rational(2) * (*pinv)(i, j);
    return first_mismatch(d, rebuilt);
  });

  if (opts.exact_psd) {
    report.run("L positive semidefinite (exact certificate)", "Theorem PSD", n, [&]() -> std::optional<Witness> {
      if (psd_certificate(l)) return std::nullopt;
      return Witness{0, 0, "nonnegative pivots", "negative pivot"};
    });
  }

  return report;
}

}  // namespace helm
