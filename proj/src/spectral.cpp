#include "helm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

namespace helm {

ConvergenceError::ConvergenceError(int sweeps, double residual)
    : std::runtime_error("Jacobi iteration did not converge after " + std::to_string(sweeps) +
                         " sweeps (off-diagonal residual " + std::to_string(residual) + ")"),
      residual_(residual) {}

DenseMatrix to_dense(const RatMatrix& a) {
  if (!a.square()) throw DimensionError("to_dense: matrix is not square");
  DenseMatrix out{a.rows(), std::vector<double>(a.rows() * a.cols())};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).get_d();
  return out;
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double x : a.a) s += x * x;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

Inertia classify(const std::vector<double>& values, double zero_tol) {
  Inertia in;
  for (double x : values) {
    if (x > zero_tol) ++in.positive;
    else if (x < -zero_tol) ++in.negative;
    else ++in.zero;
  }
  return in;
}

}  // namespace

EigenDecomposition jacobi_eigen(DenseMatrix a) {
  const std::size_t n = a.n;
  DenseMatrix v{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double target = kJacobiOffDiagonalTol * frobenius_norm(a);
  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= target) break;
    if (sweep == kJacobiMaxSweeps) throw ConvergenceError(sweep, off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.reserve(n);
  out.vectors = DenseMatrix{n, std::vector<double>(n * n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

SpectralResult eigen_symmetric(const RatMatrix& a) {
  if (!a.square()) throw DimensionError("eigen_symmetric: matrix is not square");
  if (!a.symmetric()) throw std::invalid_argument("eigen_symmetric: matrix is not symmetric");
  const DenseMatrix dense = to_dense(a);
  const double norm = frobenius_norm(dense);
  EigenDecomposition eig = jacobi_eigen(dense);
  SpectralResult out;
  out.source_dim = a.rows();
  out.inertia = classify(eig.values, kZeroEigenvalueTol * norm);
  out.eigenvalues = std::move(eig.values);
  out.sweeps = eig.sweeps;
  return out;
}

std::vector<double> symmetric_circulant_eigenvalues(const RatVec& first_row) {
  const std::size_t mu = first_row.size();
  std::vector<double> out(mu, 0.0);
  for (std::size_t k = 0; k < mu; ++k) {
    for (std::size_t j = 0; j < mu; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k % mu) / static_cast<double>(mu);
      out[k] += first_row[j].get_d() * std::cos(angle);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EdmResult edm_check(const IntMatrix& d, std::uint64_t seed, std::size_t samples) {
  if (!d.square() || d.rows() == 0) throw std::invalid_argument("edm_check: matrix must be square and nonempty");
  const std::size_t m = d.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (d(i, i) != 0) throw std::invalid_argument("edm_check: nonzero diagonal entry at " + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) {
      if (d(i, j) < 0) throw std::invalid_argument("edm_check: negative entry");
      if (d(i, j) != d(j, i)) throw std::invalid_argument("edm_check: matrix is not symmetric");
    }
  }

  DenseMatrix dd{m, std::vector<double>(m * m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dd(i, j) = d(i, j).get_d();

  EdmResult out;
  out.tolerance = kEdmTol * frobenius_norm(dd);

  // P d P with P = I - J/m, via row and column centering.
  DenseMatrix centered = dd;
  std::vector<double> row_mean(m, 0.0), col_mean(m, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      row_mean[i] += dd(i, j) / static_cast<double>(m);
      col_mean[j] += dd(i, j) / static_cast<double>(m);
      total += dd(i, j);
    }
  const double grand = total / static_cast<double>(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) centered(i, j) = dd(i, j) - row_mean[i] - col_mean[j] + grand;

  const EigenDecomposition eig = jacobi_eigen(centered);
  out.max_projected_eigenvalue = eig.values.front();
  bool ok = out.max_projected_eigenvalue <= out.tolerance;
  if (!ok) {
    std::vector<double> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = eig.vectors(i, 0);
    out.witness = std::move(x);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(m);
  out.max_sampled_form = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples && m > 1; ++s) {
    double mean = 0.0;
    for (auto& xi : x) {
      xi = normal(rng);
      mean += xi;
    }
    mean /= static_cast<double>(m);
    double norm2 = 0.0;
    for (auto& xi : x) {
      xi -= mean;
      norm2 += xi * xi;
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    for (auto& xi : x) xi /= norm;
    double form = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) form += x[i] * dd(i, j) * x[j];
    out.max_sampled_form = std::max(out.max_sampled_form, form);
    if (form > out.tolerance && ok) {
      ok = false;
      out.witness = x;
    }
  }
  if (samples == 0 || m <= 1) out.max_sampled_form = 0.0;
  out.is_edm = ok;
  return out;
}

InterlacingChain interlacing_chain(const IntMatrix& d, const RatMatrix& l) {
  if (d.rows() != l.rows() || !d.square() || !l.square())
    throw std::invalid_argument("interlacing_chain: spectra sizes differ");
  const SpectralResult sd = eigen_symmetric(to_rational(d));
  const SpectralResult sl = eigen_symmetric(l);
  if (sl.inertia.zero != 1)
    throw std::invalid_argument("interlacing_chain: L has " + std::to_string(sl.inertia.zero) +
                                " near-zero eigenvalues, expected exactly one");

  InterlacingChain out;
  out.mu = sd.eigenvalues;
  out.lambda = sl.eigenvalues;
  double max_abs = 0.0;
  for (double x : out.mu) max_abs = std::max(max_abs, std::abs(x));
  out.slack = kInterlacingSlack * max_abs;

  const std::size_t m = out.mu.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    out.chain.push_back({"-2/lambda_" + std::to_string(i + 1), -2.0 / out.lambda[i]});
    out.chain.push_back({"mu_" + std::to_string(i + 2), out.mu[i + 1]});
  }
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i)
    out.margins.push_back(out.chain[i].value - out.chain[i + 1].value);
  return out;
}

VerificationReport interlacing_check(const IntMatrix& d, const RatMatrix& l) {
  VerificationReport report;
  const int n = static_cast<int>((d.rows() + 1) / 2);
  std::optional<InterlacingChain> ic;
  report.run("spectra of D and L", "Theorem interlacing", n, [&]() -> std::optional<Witness> {
    ic = interlacing_chain(d, l);
    return std::nullopt;
  });
  if (!ic) return report;

  report.run("mu_1 > 0", "Theorem interlacing", n, [&]() -> std::optional<Witness> {
    if (ic->mu.front() > 0.0) return std::nullopt;
    return Witness{1, 0, "> 0", std::to_string(ic->mu.front())};
  });
  report.run("0 > -2/lambda_1", "Theorem interlacing", n, [&]() -> std::optional<Witness> {
    const double first = ic->chain.empty() ? 0.0 : ic->chain.front().value;
    if (first < 0.0) return std::nullopt;
    return Witness{1, 0, "< 0", std::to_string(first)};
  });
  report.run("-2/lambda_i >= mu_{i+1} >= -2/lambda_{i+1} (slack 1e-8 max|mu|)", "Theorem interlacing", n,
             [&]() -> std::optional<Witness> {
               for (std::size_t i = 0; i < ic->margins.size(); ++i) {
                 if (ic->margins[i] < -ic->slack) {
                   return Witness{i + 1, i + 2, ic->chain[i].label + " >= " + ic->chain[i + 1].label,
                                  "margin " + std::to_string(ic->margins[i])};
                 }
               }
               return std::nullopt;
             });
  return report;
}

}  // namespace helm
