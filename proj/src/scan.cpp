#include "quadrank/scan.hpp"

#include <omp.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quadrank/error.hpp"
#include "quadrank/json_io.hpp"

namespace quadrank {

namespace {

PrimeScanRecord run_kernel(const ScanModel& m, std::uint64_t p, Kernel kernel) {
  return kernel == Kernel::Fast ? ap_average_fast(m, p) : ap_average_naive_record(m, p);
}

}  // namespace

std::vector<PrimeScanRecord> scan_serial(const ScanModel& m, std::span<const std::uint64_t> primes, Kernel kernel) {
  std::vector<PrimeScanRecord> out;
  out.reserve(primes.size());
  for (auto p : primes) out.push_back(run_kernel(m, p, kernel));
  return out;
}

int default_thread_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("QUADRANK_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

std::vector<PrimeScanRecord> scan_parallel(const ScanModel& m, std::span<const std::uint64_t> primes, Kernel kernel,
                                           int threads) {
  std::vector<PrimeScanRecord> out(primes.size());
  const int n = threads > 0 ? threads : default_thread_count();
  const auto count = static_cast<std::int64_t>(primes.size());
  std::exception_ptr failure;
  // Larger primes cost more; dynamic scheduling keeps the tail short.
#pragma omp parallel for schedule(dynamic, 4) num_threads(n)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_kernel(m, primes[static_cast<std::size_t>(i)], kernel);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string format_record(const PrimeScanRecord& r) {
  std::ostringstream os;
  os << r.p << ',' << r.T << ',' << r.L << ',' << r.M << ',' << r.R << ',' << (r.bad ? 1 : 0) << ','
     << (r.violation.empty() ? "0" : r.violation);
  return os.str();
}

PrimeScanRecord parse_record(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  if (fields.size() != 7) throw Error(ErrorCode::ParseError, "bad CSV row '" + line + "'");
  PrimeScanRecord r;
  try {
    std::size_t pos = 0;
    r.p = std::stoull(fields[0], &pos);
    if (pos != fields[0].size()) throw std::invalid_argument("p");
    auto to_i64 = [](const std::string& s) {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::int64_t>(v);
    };
    r.T = to_i64(fields[1]);
    r.L = to_i64(fields[2]);
    r.M = to_i64(fields[3]);
    r.R = to_i64(fields[4]);
    if (fields[5] != "0" && fields[5] != "1") throw std::invalid_argument("bad");
    r.bad = fields[5] == "1";
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad CSV row '" + line + "'");
  }
  r.violation = fields[6] == "0" ? "" : fields[6];
  if (format_record(r) != line) throw Error(ErrorCode::ParseError, "non-canonical CSV row '" + line + "'");
  return r;
}

std::vector<PrimeScanRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(ErrorCode::ParseError, path + ": missing CSV header");
  std::vector<PrimeScanRecord> out;
  while (std::getline(in, line)) out.push_back(parse_record(line));
  return out;
}

std::string surface_sha256(const QuadraticSurface& s) {
  const std::string text = canonical_surface_json(s);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string checkpoint_path(const std::string& csv_path) { return csv_path + ".ckpt.json"; }

Checkpoint read_checkpoint(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
    return {j.at("surface_sha256").get<std::string>(), j.at("last_p").get<std::uint64_t>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const json j = {{"surface_sha256", c.surface_sha256}, {"last_p", c.last_p}};
  const std::string tmp = path + ".tmp";
  write_text_file(tmp, j.dump() + "\n");
  std::filesystem::rename(tmp, path);
}

namespace {

// Rows of an interrupted CSV that form a valid prefix of `primes` and do not
// pass the checkpoint. A trailing line without newline is a torn write.
std::vector<PrimeScanRecord> recover_prefix(const std::string& csv_path, std::span<const std::uint64_t> primes,
                                            std::uint64_t last_p) {
  const std::string text = read_text_file(csv_path);
  std::vector<PrimeScanRecord> kept;
  std::size_t pos = text.find('\n');
  if (pos == std::string::npos || text.substr(0, pos) != kCsvHeader) return kept;
  ++pos;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) break;
    PrimeScanRecord r;
    try {
      r = parse_record(text.substr(pos, end - pos));
    } catch (const Error&) {
      break;
    }
    if (r.p > last_p || kept.size() >= primes.size() || primes[kept.size()] != r.p) break;
    kept.push_back(r);
    pos = end + 1;
  }
  return kept;
}

}  // namespace

std::vector<PrimeScanRecord> scan_to_csv(const QuadraticSurface& s, const ScanRequest& req,
                                         const std::function<void(std::uint64_t)>& progress) {
  const PrimeList primes = sieve(req.max_prime);
  const std::string hash = surface_sha256(s);
  const std::string ckpt = checkpoint_path(req.csv_path);

  std::vector<PrimeScanRecord> records;
  if (req.resume && std::filesystem::exists(req.csv_path) && std::filesystem::exists(ckpt)) {
    const Checkpoint c = read_checkpoint(ckpt);
    if (c.surface_sha256 != hash)
      throw Error(ErrorCode::ChecksumMismatch, "checkpoint " + ckpt + " was written for a different surface");
    records = recover_prefix(req.csv_path, primes.primes, c.last_p);
  }

  // Rewrite the kept prefix so the file ends on a clean row boundary.
  {
    std::string text = std::string(kCsvHeader) + "\n";
    for (const auto& r : records) text += format_record(r) + "\n";
    write_text_file(req.csv_path, text);
    write_checkpoint(ckpt, {hash, records.empty() ? 0 : records.back().p});
  }

  const ScanModel model(s);
  std::ofstream out(req.csv_path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::IoError, "cannot append to " + req.csv_path);
  const std::size_t batch = std::max<std::size_t>(req.batch, 1);
  for (std::size_t start = records.size(); start < primes.primes.size(); start += batch) {
    const std::size_t n = std::min(batch, primes.primes.size() - start);
    const std::span<const std::uint64_t> chunk(primes.primes.data() + start, n);
    auto done = scan_parallel(model, chunk, req.kernel, req.threads);
    for (const auto& r : done) out << format_record(r) << '\n';
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + req.csv_path);
    records.insert(records.end(), done.begin(), done.end());
    write_checkpoint(ckpt, {hash, records.back().p});
    if (progress) progress(records.back().p);
  }
  return records;
}

}  // namespace quadrank
