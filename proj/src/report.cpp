#include "helm/report.hpp"

#include <algorithm>
#include <chrono>

namespace helm {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

CheckRecord& VerificationReport::run(std::string identity, std::string anchor, int n, const Check& check) {
  CheckRecord rec;
  rec.identity = std::move(identity);
  rec.anchor = std::move(anchor);
  rec.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.witness = check();
  } catch (const std::exception& e) {
    rec.witness = Witness{0, 0, "no exception", e.what()};
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  rec.status = rec.witness ? CheckStatus::fail : CheckStatus::pass;
  records_.push_back(std::move(rec));
  return records_.back();
}

void VerificationReport::skip(std::string identity, std::string anchor, int n, std::string reason) {
  CheckRecord rec;
  rec.identity = std::move(identity);
  rec.anchor = std::move(anchor);
  rec.n = n;
  rec.status = CheckStatus::skipped;
  rec.reason = std::move(reason);
  records_.push_back(std::move(rec));
}

void VerificationReport::append(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

const CheckRecord& VerificationReport::find(const std::string& identity) const {
  for (const auto& r : records_)
    if (r.identity == identity) return r;
  throw std::out_of_range("no check named '" + identity + "'");
}

IdentityViolation::IdentityViolation(const std::string& identity, Witness w)
    : std::logic_error(identity + " violated at (" + std::to_string(w.row) + "," + std::to_string(w.col) +
                       "): expected " + w.expected + ", got " + w.actual),
      witness_(std::move(w)) {}

namespace {

template <typename T>
std::optional<Witness> matrix_mismatch(const Matrix<T>& expected, const Matrix<T>& actual) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    return Witness{0, 0, std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                   std::to_string(actual.rows()) + "x" + std::to_string(actual.cols())};
  }
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (expected(i, j) != actual(i, j))
        return Witness{i + 1, j + 1, to_string(expected(i, j)), to_string(actual(i, j))};
  return std::nullopt;
}

}  // namespace

std::optional<Witness> first_mismatch(const RatMatrix& expected, const RatMatrix& actual) {
  return matrix_mismatch(expected, actual);
}

std::optional<Witness> first_mismatch(const IntMatrix& expected, const IntMatrix& actual) {
  return matrix_mismatch(expected, actual);
}

std::optional<Witness> first_mismatch(const RatVec& expected, const RatVec& actual) {
  if (expected.size() != actual.size())
    return Witness{0, 0, "length " + std::to_string(expected.size()), "length " + std::to_string(actual.size())};
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != actual[i]) return Witness{i + 1, 1, to_string(expected[i]), to_string(actual[i])};
  return std::nullopt;
}

std::optional<Witness> scalar_mismatch(const Rational& expected, const Rational& actual) {
  if (expected == actual) return std::nullopt;
  return Witness{0, 0, to_string(expected), to_string(actual)};
}

}  // namespace helm
