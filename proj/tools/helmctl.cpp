#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "helm/cli.hpp"

namespace {

// Returns the stream to write to: the file named by --out, or stdout.
std::ostream& output_stream(const std::string& path, std::unique_ptr<std::ofstream>& file) {
  if (path.empty()) return std::cout;
  file = std::make_unique<std::ofstream>(path);
  if (!*file) throw helm::cli::UsageError("cannot open output file '" + path + "'");
  return *file;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace helm::cli;

  CLI::App app{"Exact distance-matrix identities for helm graphs"};
  app.require_subcommand(1);

  std::string out_path;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a matrix (distance, Laplacian, inverse, ...)");
  gen_cmd->add_option("--n", gen.n, "Wheel order n (>= 4)")->required();
  gen_cmd->add_option("--object", gen.object, "dist | laplacian | wheel | inverse | pinv")
      ->check(CLI::IsMember({"dist", "laplacian", "wheel", "inverse", "pinv"}));
  gen_cmd->add_option("--format", gen.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

  VerifyOptions verify;
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Check every identity for even n in a range");
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest n (default 4)");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (default 24)");
  verify_cmd->add_option("--suite", suite, "all | det | inverse | lemmas | laplacian | spectral")
      ->check(CLI::IsMember({"all", "det", "inverse", "lemmas", "laplacian", "spectral"}));
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random EDM samples");
  verify_cmd->add_option("--cofactor-limit", verify.cofactor_limit, "Cofactor sweep only for n <= this (default 16)");
  verify_cmd->add_flag("--exact-psd", verify.exact_psd, "Add the exact PSD certificate for L");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--out", out_path, "JSON-lines report file (default stdout)");

  int spectrum_n = 4;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectra of D and L with the interlacing chain (floating point)");
  spectrum_cmd->add_option("--n", spectrum_n, "Even wheel order n (>= 4)")->required();
  spectrum_cmd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    std::ostream& out = output_stream(out_path, file);
    if (*gen_cmd) return cmd_gen(gen, out, std::cerr);
    if (*verify_cmd) {
      verify.suite = parse_suite(suite);
      return cmd_verify(verify, out, std::cerr);
    }
    if (*spectrum_cmd) return cmd_spectrum(spectrum_n, out, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
