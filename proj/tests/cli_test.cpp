#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "helm/cli.hpp"
#include "helm/formulas.hpp"

namespace helm::cli {
namespace {

using nlohmann::json;

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  for (const auto& l : lines(text)) out.push_back(json::parse(l));
  return out;
}

struct Invocation {
  int code;
  std::string out, err;
};

Invocation gen(int n, const std::string& object = "dist", const std::string& format = "csv") {
  std::ostringstream out, err;
  const int code = cmd_gen(GenOptions{n, object, format}, out, err);
  return {code, out.str(), err.str()};
}

Invocation verify(const VerifyOptions& opts) {
  std::ostringstream out, err;
  const int code = cmd_verify(opts, out, err);
  return {code, out.str(), err.str()};
}

TEST(Gen, DistanceCsvOrderFour) {
  const Invocation r = gen(4);
  EXPECT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "0,1,1,1,2,2,2");
  EXPECT_EQ(ls[4], "2,1,2,2,0,3,3");
}

TEST(Gen, InverseCsvOrderSix) {
  const Invocation r = gen(6, "inverse");
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  const RatMatrix x = read_csv(in);
  EXPECT_EQ(x, fixtures::scaled(fixtures::kInverseH6Times30, 30));
  const RatMatrix scaled = x * Rational(30);
  for (const Rational& e : scaled.entries()) EXPECT_EQ(e.get_den(), 1);
  EXPECT_EQ(lines(r.out)[0].substr(0, 14), "-37/30,4/15,4/");
}

TEST(Gen, OddOrderDistanceCarriesNote) {
  const Invocation r = gen(5);
  EXPECT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 10u);
  EXPECT_EQ(ls[0], "# oracle only; no closed form for odd n");
}

TEST(Gen, OddOrderInverseOfSingularMatrix) {
  const Invocation r = gen(5, "inverse");
  EXPECT_EQ(r.code, kExitVerificationFailure);
  EXPECT_NE(r.err.find("singular"), std::string::npos);
}

TEST(Gen, OddOrderInverseUsesElimination) {
  const Invocation r = gen(7, "inverse");
  if (r.code == kExitOk) {
    EXPECT_EQ(lines(r.out)[0].rfind("# oracle only; no closed form for odd n", 0), 0u);
  } else {
    EXPECT_EQ(r.code, kExitVerificationFailure);
  }
}

TEST(Gen, OddOrderClosedFormObjectsAreUsageErrors) {
  for (const char* object : {"laplacian", "wheel", "pinv"}) EXPECT_EQ(gen(5, object).code, kExitUsage) << object;
}

TEST(Gen, RejectsSmallOrderAndUnknownNames) {
  EXPECT_EQ(gen(3).code, kExitUsage);
  EXPECT_EQ(gen(4, "nonsense").code, kExitUsage);
  EXPECT_EQ(gen(4, "dist", "xml").code, kExitUsage);
}

TEST(Gen, JsonOutput) {
  const Invocation r = gen(4, "laplacian", "json");
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["rows"], 7);
  EXPECT_EQ(j["entries"][0][0], "3/2");
  EXPECT_EQ(j["entries"][0][4], 0);
  EXPECT_EQ(j["entries"][1][4], -1);
}

TEST(Gen, PseudoInverseRoundTrip) {
  const Invocation r = gen(6, "pinv");
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  const RatMatrix x = read_csv(in);
  const HelmContext ctx(6);
  const RatMatrix l = special_laplacian(ctx);
  EXPECT_EQ(l * x * l, l);
}

TEST(Csv, RoundTrip) {
  const RatMatrix a{{frac(1, 3), -2}, {0, frac(-7, 4)}};
  std::ostringstream out;
  write_csv(out, a, {"comment"});
  std::istringstream in(out.str());
  EXPECT_EQ(read_csv(in), a);
}

TEST(Csv, RejectsMalformed) {
  std::istringstream bad("1,2\n3\n");
  EXPECT_THROW(read_csv(bad), std::invalid_argument);
  std::istringstream junk("1,x\n");
  EXPECT_THROW(read_csv(junk), std::invalid_argument);
}

TEST(Suite, ParseNames) {
  EXPECT_EQ(parse_suite("det"), Suite::det);
  EXPECT_EQ(parse_suite("all"), Suite::all);
  EXPECT_THROW(parse_suite("bogus"), UsageError);
  EXPECT_STREQ(to_string(Suite::spectral), "spectral");
}

TEST(Verify, DetSuiteSingleRecord) {
  VerifyOptions opts;
  opts.n_min = opts.n_max = 4;
  opts.suite = Suite::det;
  const Invocation r = verify(opts);
  EXPECT_EQ(r.code, kExitOk);
  const auto recs = parse_lines(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["identity"], "det(D) = 3(n-1) 2^(n-1)");
  EXPECT_EQ(recs[0]["anchor"], "Theorem det");
  EXPECT_EQ(recs[0]["status"], "pass");
  EXPECT_EQ(recs[0]["n"], 4);
  EXPECT_NE(recs[0]["detail"].get<std::string>().find("72"), std::string::npos);
}

TEST(Verify, LemmaSuiteSkipsBelowEight) {
  VerifyOptions opts;
  opts.n_min = opts.n_max = 6;
  opts.suite = Suite::lemmas;
  const Invocation r = verify(opts);
  EXPECT_EQ(r.code, kExitOk);
  int skipped = 0;
  for (const auto& rec : parse_lines(r.out)) {
    EXPECT_NE(rec["status"], "fail") << rec.dump();
    if (rec["status"] == "skipped") {
      ++skipped;
      EXPECT_TRUE(rec.contains("reason"));
    }
  }
  EXPECT_EQ(skipped, 3);
}

TEST(Verify, RecordsComeOutInOrderOfN) {
  VerifyOptions opts;
  opts.n_min = 4;
  opts.n_max = 12;
  opts.suite = Suite::inverse;
  opts.jobs = 4;
  const Invocation r = verify(opts);
  EXPECT_EQ(r.code, kExitOk);
  int last = 0;
  for (const auto& rec : parse_lines(r.out)) {
    EXPECT_GE(rec["n"].get<int>(), last);
    last = rec["n"].get<int>();
    EXPECT_EQ(rec["status"], "pass");
  }
  EXPECT_EQ(last, 12);
  EXPECT_NE(r.err.find("all checks passed"), std::string::npos);
}

TEST(Verify, DeterministicApartFromTiming) {
  VerifyOptions opts;
  opts.n_min = 4;
  opts.n_max = 8;
  opts.suite = Suite::spectral;
  auto strip = [](const std::string& text) {
    std::vector<json> recs = parse_lines(text);
    for (auto& r : recs) r.erase("elapsed_ms");
    return recs;
  };
  opts.jobs = 1;
  const auto a = strip(verify(opts).out);
  opts.jobs = 3;
  const auto b = strip(verify(opts).out);
  EXPECT_EQ(a, b);
}

TEST(Verify, UsageErrors) {
  VerifyOptions opts;
  opts.n_min = 3;
  EXPECT_EQ(verify(opts).code, kExitUsage);
  opts.n_min = 10;
  opts.n_max = 8;
  EXPECT_EQ(verify(opts).code, kExitUsage);
  opts.n_min = opts.n_max = 5;
  EXPECT_EQ(verify(opts).code, kExitUsage);
  opts.n_min = 4;
  opts.n_max = 6;
  opts.cofactor_limit = -1;
  EXPECT_EQ(verify(opts).code, kExitUsage);
}

TEST(Verify, AllSuitesSmallRange) {
  VerifyOptions opts;
  opts.n_min = 4;
  opts.n_max = 10;
  opts.exact_psd = true;
  const Invocation r = verify(opts);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  for (const auto& rec : parse_lines(r.out)) EXPECT_NE(rec["status"], "fail") << rec.dump();
}

TEST(Verify, FailureWitnessSerialization) {
  CheckRecord rec;
  rec.identity = "x";
  rec.anchor = "a";
  rec.n = 4;
  rec.status = CheckStatus::fail;
  rec.witness = Witness{2, 3, "1", "1/2"};
  const json j = json::parse(to_json_line(rec));
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["witness"]["row"], 2);
  EXPECT_EQ(j["witness"]["col"], 3);
  EXPECT_EQ(j["witness"]["actual"], "1/2");
  EXPECT_FALSE(j.contains("reason"));
}

json spectrum(int n, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cmd_spectrum(n, out, err);
  if (code) *code = c;
  return c == kExitUsage ? json{} : json::parse(out.str());
}

TEST(Spectrum, OrderFour) {
  int code = -1;
  const json j = spectrum(4, &code);
  EXPECT_EQ(code, kExitOk);
  EXPECT_EQ(j["inertia_D"]["positive"], 1);
  EXPECT_EQ(j["inertia_D"]["zero"], 0);
  EXPECT_EQ(j["inertia_D"]["negative"], 6);
  EXPECT_EQ(j["interlacing_holds"], true);
  EXPECT_EQ(j["mu"].size(), 7u);
}

TEST(Spectrum, OrderSixLaplacianHasOneZero) {
  const json j = spectrum(6);
  EXPECT_EQ(j["inertia_L"]["zero"], 1);
  EXPECT_EQ(j["inertia_L"]["negative"], 0);
}

TEST(Spectrum, OrderSixteenMargins) {
  const json j = spectrum(16);
  const double slack = j["tolerances"]["interlacing_slack_abs"];
  EXPECT_GE(j["min_margin"].get<double>(), -slack);
  EXPECT_EQ(j["chain"].size(), 2u * 30u);
  for (std::size_t i = 0; i + 1 < j["chain"].size(); ++i)
    EXPECT_GE(j["chain"][i]["margin_to_next"].get<double>(), -slack);
}

TEST(Spectrum, UsageErrors) {
  int code = -1;
  spectrum(3, &code);
  EXPECT_EQ(code, kExitUsage);
  spectrum(7, &code);
  EXPECT_EQ(code, kExitUsage);
}

}  // namespace
}  // namespace helm::cli
