#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "quadrank/construct.hpp"
#include "quadrank/json_io.hpp"
#include "quadrank/scan.hpp"

using namespace quadrank;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kBudget = 3, kIo = 4 };

int fail(Exit code, const std::string& error, const std::string& message, json extra = json::object()) {
  extra["error"] = error;
  extra["message"] = message;
  extra["exit_code"] = static_cast<int>(code);
  std::cerr << extra.dump() << "\n";
  return code;
}

Exit exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::ChecksumMismatch:
      return kIo;
    case ErrorCode::BudgetExhausted:
      return kBudget;
    default:
      return kInvalid;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

struct Options {
  std::string surface;
  std::string out;
  std::string format = "json";
  std::uint64_t max_prime = 0;
  std::uint64_t spot_max = 311;
  bool naive = false;
  bool resume = false;
  int rank = -1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
  std::string t;
};

// Surfaces failing the definition stop here with exit 2 and the failure list.
std::optional<int> reject_invalid(const QuadraticSurface& s) {
  const auto v = validate(s);
  if (v.valid()) return std::nullopt;
  return fail(kInvalid, "InvalidSurface", "surface fails the definition", {{"validation", validation_to_json(v)}});
}

json scan_metadata(const QuadraticSurface& s) {
  const auto m = integral_model(s);
  return {{"integral_scale", m.scale.get_str()}, {"surface_sha256", surface_sha256(s)}};
}

int run_analyze(const Options& o) {
  const auto s = read_surface_file(o.surface);
  if (auto rc = reject_invalid(s)) return *rc;
  emit(rank_report_to_json(analyze(s)).dump(2) + "\n", o.out);
  return kOk;
}

int run_estimate(const Options& o) {
  const auto s = read_surface_file(o.surface);
  if (auto rc = reject_invalid(s)) return *rc;
  ScanRequest req;
  req.max_prime = o.max_prime;
  req.csv_path = o.out.empty() ? "scan.csv" : o.out;
  req.resume = o.resume;
  req.kernel = o.naive ? Kernel::Naive : Kernel::Fast;
  const auto records = scan_to_csv(s, req);
  auto est = estimate(records, o.max_prime);
  est.records_path = req.csv_path;
  if (o.format == "csv") {
    std::cout << read_text_file(req.csv_path);
    return kOk;
  }
  json j = estimate_to_json(est);
  j["metadata"] = scan_metadata(s);
  j["metadata"]["kernel"] = o.naive ? "naive" : "fast";
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_verify(const Options& o) {
  const auto s = read_surface_file(o.surface);
  if (auto rc = reject_invalid(s)) return *rc;
  const ScanModel model(s);
  const auto primes = sieve(o.max_prime).primes;
  const auto records = scan_parallel(model, primes);

  json violations = json::array();
  std::size_t uncertified = 0;
  std::string csv = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    if (std::llabs(r.R) <= kResidualBound) continue;
    if (r.violation.find("uncertified") != std::string::npos) ++uncertified;
    violations.push_back({{"p", r.p}, {"R_p", r.R}, {"certificate", r.violation}});
    csv += format_record(r) + "\n";
  }

  std::vector<std::uint64_t> spot;
  for (auto p : primes)
    if (p <= o.spot_max) spot.push_back(p);
  const auto naive = scan_parallel(model, spot, Kernel::Naive);
  json mismatches = json::array();
  for (std::size_t i = 0; i < spot.size(); ++i)
    if (naive[i].T != records[i].T) mismatches.push_back({{"p", spot[i]}, {"fast", records[i].T}, {"naive", naive[i].T}});

  const bool ok = uncertified == 0 && mismatches.empty();
  if (o.format == "csv") {
    emit(csv, o.out);
  } else {
    json j = {{"max_prime", o.max_prime},
              {"primes_scanned", records.size()},
              {"residual_bound", kResidualBound},
              {"violations", violations.size()},
              {"uncertified", uncertified},
              {"violation_records", violations},
              {"spot_check_max_prime", o.spot_max},
              {"spot_checks", spot.size()},
              {"spot_mismatches", mismatches},
              {"ok", ok},
              {"metadata", scan_metadata(s)}};
    emit(j.dump(2) + "\n", o.out);
  }
  return ok ? kOk : kInvalid;
}

int run_construct(const Options& o) {
  ConstructionParams p;
  p.r = o.rank;
  p.seed = o.seed;
  p.budget = o.budget;
  try {
    const auto res = construct_surface(p);
    emit(surface_file_text(res.surface, {{"certificate", rank_report_to_json(res.certificate)},
                                         {"provenance", res.provenance.to_json()}}),
         o.out);
    return kOk;
  } catch (const BudgetExhaustedError& e) {
    return fail(kBudget, "BudgetExhausted", e.what(),
                {{"target_rank", o.rank},
                 {"best_rank", e.best_rank},
                 {"candidates", e.candidates},
                 {"budget", o.budget},
                 {"seed", e.seed}});
  }
}

int run_specialize(const Options& o) {
  const auto s = read_surface_file(o.surface);
  const Rational t = Rational::parse(o.t);
  const auto sp = specialize(s, t);
  emit(json{{"t", t.to_string()}, {"cubic", poly_to_json(sp.cubic)}, {"singular", sp.singular}}.dump(2) + "\n", o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Mordell-Weil rank bounds and prime averages for quadratic elliptic surfaces"};
  app.require_subcommand(1, 1);
  Options o;

  auto surface_arg = [&](CLI::App* c) { c->add_option("surface", o.surface, "surface JSON file")->required(); };
  auto out_opt = [&](CLI::App* c, const char* what) { c->add_option("--out", o.out, what); };

  auto* analyze_cmd = app.add_subcommand("analyze", "rank bounds from the factorization of B^2 - 4AC");
  surface_arg(analyze_cmd);
  out_opt(analyze_cmd, "write the report here instead of stdout");

  auto* estimate_cmd = app.add_subcommand("estimate", "scan primes up to --max-prime and average");
  surface_arg(estimate_cmd);
  estimate_cmd->add_option("--max-prime", o.max_prime, "largest prime X")->required()->check(CLI::Range(5ULL, 4294967295ULL));
  out_opt(estimate_cmd, "CSV of per-prime records (default scan.csv)");
  estimate_cmd->add_flag("--resume", o.resume, "continue from the checkpoint next to --out");
  estimate_cmd->add_flag("--naive", o.naive, "use the quadratic-time reference kernel");
  estimate_cmd->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "residual audit plus fast/naive spot checks");
  surface_arg(verify_cmd);
  verify_cmd->add_option("--max-prime", o.max_prime, "audit primes up to this bound")
      ->default_val(10000)
      ->check(CLI::Range(5ULL, 4294967295ULL));
  verify_cmd->add_option("--spot-max", o.spot_max, "compare against the naive kernel up to this prime")->default_val(311);
  out_opt(verify_cmd, "write the audit here instead of stdout");
  verify_cmd->add_option("--format", o.format, "json summary or csv of violating records")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* construct_cmd = app.add_subcommand("construct", "build a surface of prescribed exact rank");
  construct_cmd->add_option("--rank", o.rank, "target rank")->required()->check(CLI::Range(0, 6));
  construct_cmd->add_option("--seed", o.seed, "search seed")->default_val(1);
  construct_cmd->add_option("--budget", o.budget, "randomized candidates allowed")->default_val(10000);
  out_opt(construct_cmd, "write the surface file here instead of stdout");

  auto* specialize_cmd = app.add_subcommand("specialize", "fiber cubic at T = t");
  surface_arg(specialize_cmd);
  specialize_cmd->add_option("--t", o.t, "rational t, e.g. 3/2")->required();
  out_opt(specialize_cmd, "write the fiber here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kIo, "UsageError", e.what());
  }

  try {
    if (*analyze_cmd) return run_analyze(o);
    if (*estimate_cmd) return run_estimate(o);
    if (*verify_cmd) return run_verify(o);
    if (*construct_cmd) return run_construct(o);
    return run_specialize(o);
  } catch (const Error& e) {
    return fail(exit_for(e.code()), std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return fail(kIo, "InternalError", e.what());
  }
}
