#include "helm/matrix.hpp"

namespace helm {

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Rational(a(i, j));
  return out;
}

RatMatrix column(const RatVec& x) {
  RatMatrix out(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) out(i, 0) = x[i];
  return out;
}

RatMatrix outer(const RatVec& x, const RatVec& y) {
  RatMatrix out(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = x[i] * y[j];
  return out;
}

RatVec row_times(const RatVec& x, const RatMatrix& a) {
  if (x.size() != a.rows()) throw DimensionError("row-vector product: dimension mismatch");
  RatVec out(a.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  }
  return out;
}

Rational dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RatVec ones_vec(std::size_t n) { return RatVec(n, Rational(1)); }

Rational frac(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace helm
