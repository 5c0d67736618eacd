#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "helm/matrix.hpp"
#include "helm/report.hpp"
#include "helm/spectral.hpp"

namespace helm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Suite { all, det, inverse, lemmas, laplacian, spectral };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

struct GenOptions {
  int n = 4;
  std::string object = "dist";  // dist | laplacian | wheel | inverse | pinv
  std::string format = "csv";   // csv | json
};

struct VerifyOptions {
  int n_min = 4;
  int n_max = 24;
  Suite suite = Suite::all;
  std::uint64_t seed = kDefaultSeed;
  int cofactor_limit = 16;
  bool exact_psd = false;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

// Each returns the process exit code. Usage problems are reported on err
// with kExitUsage.
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_spectrum(int n, std::ostream& out, std::ostream& err);

// All checks of one suite for one even n.
VerificationReport run_suite(int n, Suite suite, const VerifyOptions& opts);

// One JSON object per line, no trailing newline.
std::string to_json_line(const CheckRecord& rec);

// CSV with one matrix row per line. Integers are bare, other rationals "p/q".
// Lines starting with '#' are comments.
void write_csv(std::ostream& out, const RatMatrix& a, const std::vector<std::string>& comments = {});
RatMatrix read_csv(std::istream& in);

}  // namespace helm::cli
