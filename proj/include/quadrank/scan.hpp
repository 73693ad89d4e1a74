#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quadrank/prime_average.hpp"

namespace quadrank {

enum class Kernel { Fast, Naive };

/// Reference driver: one prime after another on the calling thread.
std::vector<PrimeScanRecord> scan_serial(const ScanModel& m, std::span<const std::uint64_t> primes,
                                         Kernel kernel = Kernel::Fast);

/// OpenMP driver. Records come back in the order of `primes`, identical to
/// scan_serial. threads <= 0 uses the OpenMP default (capped by
/// QUADRANK_THREADS when set).
std::vector<PrimeScanRecord> scan_parallel(const ScanModel& m, std::span<const std::uint64_t> primes,
                                           Kernel kernel = Kernel::Fast, int threads = 0);

/// Thread count honoring QUADRANK_THREADS.
int default_thread_count();

// CSV: header "p,T_p,L_p,M_p,R_p,bad,violation", one row per prime, the
// violation column is 0 or the certificate tag.
inline constexpr const char* kCsvHeader = "p,T_p,L_p,M_p,R_p,bad,violation";
std::string format_record(const PrimeScanRecord& r);
PrimeScanRecord parse_record(const std::string& line);
std::vector<PrimeScanRecord> read_records_csv(const std::string& path);

/// Hex SHA-256 of the canonical compact surface JSON.
std::string surface_sha256(const QuadraticSurface& s);

struct Checkpoint {
  std::string surface_sha256;
  std::uint64_t last_p = 0;
};

std::string checkpoint_path(const std::string& csv_path);
Checkpoint read_checkpoint(const std::string& path);
void write_checkpoint(const std::string& path, const Checkpoint& c);

struct ScanRequest {
  std::uint64_t max_prime = 0;
  std::string csv_path;
  bool resume = false;
  Kernel kernel = Kernel::Fast;
  int threads = 0;
  std::size_t batch = 512;  ///< primes per persisted batch
};

/// Scans every prime in [5, max_prime], appending rows to the CSV and
/// refreshing the sidecar checkpoint after each batch. With resume, rows up
/// to the checkpoint's last_p are kept and work continues after them; the
/// final bytes do not depend on where the previous run stopped. Throws
/// ChecksumMismatch when the checkpoint belongs to another surface.
/// Returns every record of the finished file.
std::vector<PrimeScanRecord> scan_to_csv(const QuadraticSurface& s, const ScanRequest& req,
                                         const std::function<void(std::uint64_t)>& progress = {});

}  // namespace quadrank
