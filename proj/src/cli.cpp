#include "helm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <limits>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "helm/circulant.hpp"
#include "helm/exact_linalg.hpp"
#include "helm/formulas.hpp"
#include "helm/graph.hpp"

namespace helm::cli {

using nlohmann::json;

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> kSuites = {
      {"all", Suite::all},         {"det", Suite::det},             {"inverse", Suite::inverse},
      {"lemmas", Suite::lemmas},   {"laplacian", Suite::laplacian}, {"spectral", Suite::spectral}};
  const auto it = kSuites.find(name);
  if (it == kSuites.end()) throw UsageError("unknown suite '" + name + "'");
  return it->second;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::det: return "det";
    case Suite::inverse: return "inverse";
    case Suite::lemmas: return "lemmas";
    case Suite::laplacian: return "laplacian";
    case Suite::spectral: return "spectral";
  }
  return "unknown";
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string rational_cell(const Rational& q) { return q.get_str(); }

// Integers become JSON numbers when they fit, everything else a "p/q" string.
json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

void require_order(int n) {
  if (n < 4) throw UsageError("n must be at least 4 (got " + std::to_string(n) + ")");
}

void require_even(int n, const std::string& object) {
  if (n % 2 != 0)
    throw UsageError("object '" + object + "' has a closed form only for even n; got n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Suites

void det_suite(int n, VerificationReport& report) {
  const HelmContext ctx(n);
  auto& rec = report.run("det(D) = 3(n-1) 2^(n-1)", "Theorem det", n, [&]() -> std::optional<Witness> {
    return scalar_mismatch(Rational(closed_form_det(ctx)), det(closed_form_D(ctx)));
  });
  rec.detail = "formula " + closed_form_det(ctx).get_str();
}

void inverse_suite(int n, VerificationReport& report) {
  const HelmContext ctx(n);
  const RatMatrix d = to_rational(closed_form_D(ctx));
  const RatVec u = ctx.u();
  const RatMatrix formula =
      special_laplacian(ctx) * frac(-1, 2) + outer(u, u) * frac(4, 3 * (n - 1));
  report.run("D (-L/2 + 4/(3(n-1)) u u') = I", "Theorem inverse", n, [&]() -> std::optional<Witness> {
    return first_mismatch(RatMatrix::identity(d.rows()), d * formula);
  });
  report.run("closed-form inverse = elimination inverse", "Theorem inverse", n,
             [&]() -> std::optional<Witness> { return first_mismatch(inverse(d), formula); });

  const RatMatrix m = to_rational(wheel_distance(ctx));
  report.run("M (-L~/2 + 4/(n-1) w w') = I", "Theorem inversewheel", n, [&]() -> std::optional<Witness> {
    const RatMatrix x = wheel_laplacian(ctx) * frac(-1, 2) + outer(ctx.w(), ctx.w()) * frac(4, n - 1);
    return first_mismatch(RatMatrix::identity(m.rows()), m * x);
  });
  report.run("wheel closed-form inverse = elimination inverse", "Theorem inversewheel", n,
             [&]() -> std::optional<Witness> { return first_mismatch(inverse(m), wheel_inverse_closed_form(ctx)); });
}

void lemma_suite(int n, VerificationReport& report) {
  const HelmContext ctx(n);
  report.run("BFS distance matrix = block form", "Eq. D,D", n, [&]() -> std::optional<Witness> {
    return first_mismatch(bfs_distance_matrix(build_helm(n)), closed_form_D(ctx));
  });
  report.run("R 1 = 2(n-3) 1", "(P4)", n, [&]() -> std::optional<Witness> {
    return first_mismatch(RatVec(ctx.rim(), Rational(2 * (n - 3))), rim_block(ctx) * ones_vec(ctx.rim()));
  });
  report.run("alternating sum = (2-n)/2", "(P5)", n, [&]() -> std::optional<Witness> {
    return scalar_mismatch(frac(2 - n, 2), alternating_sum(n));
  });
  if (n >= 8) {
    report.run("f-vector closed form", "Lemma f-vector", n, [&]() -> std::optional<Witness> {
      return first_mismatch(f_vector_closed_form(ctx), f_vector_direct(ctx));
    });
    report.run("B = -2I - J/2", "Lemma L,matrixB", n, [&]() -> std::optional<Witness> {
      const std::size_t r = ctx.rim();
      const RatMatrix expected = RatMatrix::identity(r) * Rational(-2) - RatMatrix::ones(r, r) * frac(1, 2);
      return first_mismatch(expected, b_matrix_direct(ctx));
    });
  } else {
    report.skip("f-vector closed form", "Lemma f-vector", n, "lemma stated for n >= 8");
    report.skip("B = -2I - J/2", "Lemma L,matrixB", n, "lemma stated for n >= 8");
  }
  report.append(minverse_lemma_checks(ctx));
  report.append(schur_lemma_check(ctx));
  report.append(ld_identity_check(ctx));
}

void laplacian_suite(int n, const VerifyOptions& opts, VerificationReport& report) {
  const HelmContext ctx(n);
  report.append(laplacian_property_checks(ctx, {opts.cofactor_limit, opts.exact_psd}));
}

void spectral_suite(int n, const VerifyOptions& opts, VerificationReport& report) {
  const HelmContext ctx(n);
  const IntMatrix d = closed_form_D(ctx);
  const RatMatrix l = special_laplacian(ctx);
  const std::size_t m = ctx.m();

  std::optional<SpectralResult> sd, sl;
  report.run("inertia of D = (1, 0, m-1)", "(P8)", n, [&]() -> std::optional<Witness> {
    sd = eigen_symmetric(to_rational(d));
    const Inertia expected{1, 0, m - 1};
    if (sd->inertia == expected) return std::nullopt;
    auto str = [](const Inertia& in) {
      return "(" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," + std::to_string(in.negative) + ")";
    };
    return Witness{0, 0, str(expected), str(sd->inertia)};
  });

  report.run("eigenvalues of L >= -1e-9 ||L||, exactly one near zero", "Theorem PSD", n,
             [&]() -> std::optional<Witness> {
               sl = eigen_symmetric(l);
               const double tol = kZeroEigenvalueTol * frobenius_norm(to_dense(l));
               const double smallest = sl->eigenvalues.back();
               if (smallest < -tol) return Witness{0, 0, ">= " + fmt(-tol), fmt(smallest)};
               if (sl->inertia.zero != 1 || sl->inertia.negative != 0)
                 return Witness{0, 0, "one zero eigenvalue", std::to_string(sl->inertia.zero) + " near-zero"};
               return std::nullopt;
             });

  report.append(interlacing_check(d, l));

  report.run("D is a Euclidean distance matrix", "(P8)", n, [&]() -> std::optional<Witness> {
    const EdmResult r = edm_check(d, opts.seed);
    if (r.is_edm) return std::nullopt;
    return Witness{0, 0, "x'Dx <= " + fmt(r.tolerance),
                   "max eigenvalue of PDP " + fmt(r.max_projected_eigenvalue) + ", max sampled " +
                       fmt(r.max_sampled_form)};
  });

  report.run("sum of eigenvalues of D = trace(D) = 0", "(P8)", n, [&]() -> std::optional<Witness> {
    if (!sd) return Witness{0, 0, "spectrum", "not computed"};
    double sum = 0.0;
    for (double x : sd->eigenvalues) sum += x;
    const double tol = kEdmTol * frobenius_norm(to_dense(to_rational(d)));
    if (std::abs(sum) <= tol) return std::nullopt;
    return Witness{0, 0, "0", fmt(sum)};
  });

  if (n <= 12) {
    report.run("product of eigenvalues of D = 3(n-1) 2^(n-1) (rel 1e-6)", "Theorem det", n,
               [&]() -> std::optional<Witness> {
                 if (!sd) return Witness{0, 0, "spectrum", "not computed"};
                 double prod = 1.0;
                 for (double x : sd->eigenvalues) prod *= x;
                 const double expected = closed_form_det(ctx).get_d();
                 if (std::abs(prod - expected) <= 1e-6 * std::abs(expected)) return std::nullopt;
                 return Witness{0, 0, fmt(expected), fmt(prod)};
               });
    report.run("Jacobi spectrum of R = circulant formula", "(P3)", n, [&]() -> std::optional<Witness> {
      const std::vector<double> analytic = symmetric_circulant_eigenvalues(ctx.v());
      const SpectralResult jac = eigen_symmetric(rim_block(ctx));
      for (std::size_t k = 0; k < analytic.size(); ++k)
        if (std::abs(analytic[k] - jac.eigenvalues[k]) > 1e-8)
          return Witness{k + 1, 0, fmt(analytic[k]), fmt(jac.eigenvalues[k])};
      return std::nullopt;
    });
  } else {
    report.skip("product of eigenvalues of D = 3(n-1) 2^(n-1) (rel 1e-6)", "Theorem det", n, "checked for n <= 12");
    report.skip("Jacobi spectrum of R = circulant formula", "(P3)", n, "checked for n <= 12");
  }
}

}  // namespace

VerificationReport run_suite(int n, Suite suite, const VerifyOptions& opts) {
  VerificationReport report;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::det) det_suite(n, report);
  if (all || suite == Suite::inverse) inverse_suite(n, report);
  if (all || suite == Suite::lemmas) lemma_suite(n, report);
  if (all || suite == Suite::laplacian) laplacian_suite(n, opts, report);
  if (all || suite == Suite::spectral) spectral_suite(n, opts, report);
  return report;
}

std::string to_json_line(const CheckRecord& rec) {
  json j;
  j["identity"] = rec.identity;
  j["anchor"] = rec.anchor;
  j["n"] = rec.n;
  j["status"] = helm::to_string(rec.status);
  if (rec.status == CheckStatus::skipped) j["reason"] = rec.reason;
  if (!rec.detail.empty()) j["detail"] = rec.detail;
  if (rec.witness) {
    j["witness"] = {{"row", rec.witness->row},
                    {"col", rec.witness->col},
                    {"expected", rec.witness->expected},
                    {"actual", rec.witness->actual}};
  }
  j["elapsed_ms"] = rec.elapsed_ms;
  return j.dump();
}

void write_csv(std::ostream& out, const RatMatrix& a, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << rational_cell(a(i, j));
    }
    out << '\n';
  }
}

RatMatrix read_csv(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<Rational> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      Rational q;
      if (q.set_str(cell, 10) != 0) throw std::invalid_argument("malformed rational cell '" + cell + "'");
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator in cell '" + cell + "'");
      q.canonicalize();
      row.push_back(q);
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged CSV matrix");
    rows.push_back(std::move(row));
  }
  RatMatrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
  return out;
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    require_order(opts.n);
    if (opts.format != "csv" && opts.format != "json") throw UsageError("unknown format '" + opts.format + "'");
    const int n = opts.n;
    RatMatrix matrix;
    std::vector<std::string> notes;
    std::string source = "closed form";

    if (opts.object == "dist") {
      if (n % 2 == 0) {
        matrix = to_rational(closed_form_D(HelmContext(n)));
      } else {
        matrix = to_rational(bfs_distance_matrix(build_helm(n)));
        source = "bfs oracle";
        notes.push_back("oracle only; no closed form for odd n");
      }
    } else if (opts.object == "inverse") {
      if (n % 2 == 0) {
        matrix = closed_form_inverse(HelmContext(n));
      } else {
        const RatMatrix d = to_rational(bfs_distance_matrix(build_helm(n)));
        const Rational dd = det(d);
        source = "elimination oracle";
        notes.push_back("oracle only; no closed form for odd n; det(D) = " + dd.get_str());
        if (dd == 0) {
          err << "distance matrix of H_" << n << " is singular (det = 0); no inverse\n";
          return kExitVerificationFailure;
        }
        matrix = inverse(d);
      }
    } else if (opts.object == "laplacian") {
      require_even(n, opts.object);
      matrix = special_laplacian(HelmContext(n));
    } else if (opts.object == "wheel") {
      require_even(n, opts.object);
      matrix = to_rational(wheel_distance(HelmContext(n)));
    } else if (opts.object == "pinv") {
      require_even(n, opts.object);
      matrix = laplacian_pseudo_inverse(special_laplacian(HelmContext(n)));
    } else {
      throw UsageError("unknown object '" + opts.object + "' (dist, laplacian, wheel, inverse, pinv)");
    }

    if (opts.format == "csv") {
      write_csv(out, matrix, notes);
    } else {
      json j;
      j["n"] = n;
      j["object"] = opts.object;
      j["source"] = source;
      if (!notes.empty()) j["note"] = notes.front();
      j["rows"] = matrix.rows();
      j["cols"] = matrix.cols();
      json entries = json::array();
      for (std::size_t i = 0; i < matrix.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(rational_json(matrix(i, c)));
        entries.push_back(std::move(row));
      }
      j["entries"] = std::move(entries);
      out << j.dump() << '\n';
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n_min < 4) {
    err << "usage error: --n-min must be at least 4\n";
    return kExitUsage;
  }
  if (opts.n_min > opts.n_max) {
    err << "usage error: --n-min exceeds --n-max\n";
    return kExitUsage;
  }
  if (opts.cofactor_limit < 0) {
    err << "usage error: --cofactor-limit must be nonnegative\n";
    return kExitUsage;
  }
  std::vector<int> orders;
  for (int n = opts.n_min; n <= opts.n_max; ++n)
    if (n % 2 == 0) orders.push_back(n);
  if (orders.empty()) {
    err << "usage error: no even n in [" << opts.n_min << ", " << opts.n_max << "]\n";
    return kExitUsage;
  }

  // Workers fill per-n slots; the main thread writes them in order of n.
  std::vector<VerificationReport> reports(orders.size());
  std::vector<bool> done(orders.size(), false);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(orders.size()));

  // Largest n first keeps the slowest tasks from trailing at the end.
  std::vector<std::size_t> schedule(orders.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) schedule[i] = schedule.size() - 1 - i;

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < schedule.size();) {
        const std::size_t slot = schedule[k];
        VerificationReport r = run_suite(orders[slot], opts.suite, opts);
        std::lock_guard lock(mu);
        reports[slot] = std::move(r);
        done[slot] = true;
        cv.notify_all();
      }
    });
  }

  std::size_t total_fail = 0;
  err << std::left << std::setw(6) << "n" << std::setw(8) << "pass" << std::setw(8) << "fail" << "skipped\n";
  for (std::size_t slot = 0; slot < orders.size(); ++slot) {
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[slot]; });
    }
    const auto& r = reports[slot];
    for (const auto& rec : r.records()) out << to_json_line(rec) << '\n';
    out.flush();
    total_fail += r.count(CheckStatus::fail);
    err << std::left << std::setw(6) << orders[slot] << std::setw(8) << r.count(CheckStatus::pass) << std::setw(8)
        << r.count(CheckStatus::fail) << r.count(CheckStatus::skipped) << '\n';
  }
  for (auto& th : pool) th.join();

  err << (total_fail == 0 ? "all checks passed" : std::to_string(total_fail) + " check(s) failed") << " (suite "
      << to_string(opts.suite) << ", n = " << orders.front() << ".." << orders.back() << ")\n";
  return total_fail == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_spectrum(int n, std::ostream& out, std::ostream& err) {
  try {
    require_order(n);
    require_even(n, "spectrum");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const HelmContext ctx(n);
  const IntMatrix d = closed_form_D(ctx);
  const RatMatrix l = special_laplacian(ctx);
  const SpectralResult sd = eigen_symmetric(to_rational(d));
  const SpectralResult sl = eigen_symmetric(l);
  const InterlacingChain ic = interlacing_chain(d, l);

  auto inertia_json = [](const Inertia& in) {
    return json{{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}};
  };
  json chain = json::array();
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ic.chain.size(); ++i) {
    json link{{"label", ic.chain[i].label}, {"value", ic.chain[i].value}};
    if (i < ic.margins.size()) {
      link["margin_to_next"] = ic.margins[i];
      min_margin = std::min(min_margin, ic.margins[i]);
    }
    chain.push_back(std::move(link));
  }
  const bool holds = ic.mu.front() > 0.0 && !ic.chain.empty() && ic.chain.front().value < 0.0 &&
                     (ic.margins.empty() || min_margin >= -ic.slack);

  json j;
  j["n"] = n;
  j["m"] = ctx.m();
  j["floating_point"] = true;
  j["tolerances"] = {{"jacobi_off_diagonal_rel", kJacobiOffDiagonalTol},
                     {"zero_eigenvalue_rel", kZeroEigenvalueTol},
                     {"interlacing_slack_rel", kInterlacingSlack},
                     {"interlacing_slack_abs", ic.slack}};
  j["mu"] = sd.eigenvalues;
  j["lambda"] = sl.eigenvalues;
  j["inertia_D"] = inertia_json(sd.inertia);
  j["inertia_L"] = inertia_json(sl.inertia);
  j["chain"] = std::move(chain);
  j["min_margin"] = ic.margins.empty() ? 0.0 : min_margin;
  j["interlacing_holds"] = holds;
  out << j.dump(2) << '\n';
  return holds ? kExitOk : kExitVerificationFailure;
}

}  // namespace helm::cli
