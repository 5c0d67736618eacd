#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "helm/matrix.hpp"

namespace helm {

// Location and values of the first disagreement. Row/col are 1-based; a
// scalar identity uses row = col = 0.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string expected;
  std::string actual;
};

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string identity;
  std::string anchor;
  int n = 0;
  CheckStatus status = CheckStatus::pass;
  std::string reason;              // skipped only
  std::string detail;              // optional computed values, any status
  std::optional<Witness> witness;  // fail only
  long elapsed_ms = 0;
};

class VerificationReport {
 public:
  using Check = std::function<std::optional<Witness>()>;

  // Runs the check, timing it. A returned witness records a failure; an
  // exception escaping the check is recorded as a failure with the message
  // in the witness.
  CheckRecord& run(std::string identity, std::string anchor, int n, const Check& check);
  void skip(std::string identity, std::string anchor, int n, std::string reason);

  void append(const VerificationReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }

  // Looks up a record by identity name; throws std::out_of_range.
  const CheckRecord& find(const std::string& identity) const;

 private:
  std::vector<CheckRecord> records_;
};

// Thrown by operations that assert an identity on their own output.
class IdentityViolation : public std::logic_error {
 public:
  IdentityViolation(const std::string& identity, Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

std::optional<Witness> first_mismatch(const RatMatrix& expected, const RatMatrix& actual);
std::optional<Witness> first_mismatch(const IntMatrix& expected, const IntMatrix& actual);
std::optional<Witness> first_mismatch(const RatVec& expected, const RatVec& actual);
std::optional<Witness> scalar_mismatch(const Rational& expected, const Rational& actual);

}  // namespace helm
