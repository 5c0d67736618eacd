#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "helm/matrix.hpp"
#include "helm/report.hpp"

namespace helm {

// Tolerances, all relative to the Frobenius norm of the input unless noted.
inline constexpr double kJacobiOffDiagonalTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kZeroEigenvalueTol = 1e-9;
inline constexpr double kEdmTol = 1e-8;
inline constexpr double kInterlacingSlack = 1e-8;  // relative to max |mu|
inline constexpr std::uint64_t kDefaultSeed = 20240229;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct SpectralResult {
  std::vector<double> eigenvalues;  // non-increasing
  Inertia inertia;
  std::size_t source_dim = 0;
  int sweeps = 0;
};

// Dense double matrix used on the floating side.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // row-major n x n

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

DenseMatrix to_dense(const RatMatrix& a);
double frobenius_norm(const DenseMatrix& a);

struct EigenDecomposition {
  std::vector<double> values;   // non-increasing
  DenseMatrix vectors;          // column k pairs with values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a symmetric matrix.
EigenDecomposition jacobi_eigen(DenseMatrix a);

// Requires exact symmetry of the rational input; eigenvalues within
// kZeroEigenvalueTol * ||a||_F of zero count as zero in the inertia.
SpectralResult eigen_symmetric(const RatMatrix& a);

// Eigenvalues of the symmetric circulant Circ(s'): sum_j s_j cos(2 pi j k / len),
// sorted non-increasing. Independent of the Jacobi solver.
std::vector<double> symmetric_circulant_eigenvalues(const RatVec& first_row);

struct EdmResult {
  bool is_edm = false;
  double max_projected_eigenvalue = 0.0;  // largest eigenvalue of P d P
  double max_sampled_form = 0.0;          // largest x'dx over the samples
  double tolerance = 0.0;                 // kEdmTol * ||d||_F
  std::optional<std::vector<double>> witness;  // unit x orthogonal to 1 with x'dx > tolerance
};

// EDM test: no eigenvalue of (I - J/m) d (I - J/m) above tolerance and no
// sampled unit x orthogonal to 1 with x'dx above tolerance.
EdmResult edm_check(const IntMatrix& d, std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

struct ChainLink {
  std::string label;  // "mu_2", "-2/lambda_1", ...
  double value = 0.0;
};

struct InterlacingChain {
  std::vector<double> mu;      // spectrum of D, non-increasing
  std::vector<double> lambda;  // spectrum of L, non-increasing, last ~ 0
  std::vector<ChainLink> chain;    // -2/lambda_1, mu_2, -2/lambda_2, ..., -2/lambda_{m-1}, mu_m
  std::vector<double> margins;     // chain[i] - chain[i+1]
  double slack = 0.0;              // kInterlacingSlack * max |mu|
};

// Throws std::invalid_argument on size mismatch or when L does not have
// exactly one near-zero eigenvalue.
InterlacingChain interlacing_chain(const IntMatrix& d, const RatMatrix& l);

VerificationReport interlacing_check(const IntMatrix& d, const RatMatrix& l);

}  // namespace helm
