// Serial vs OpenMP scan drivers, and the O(p) kernel vs the O(p^2) oracle.
// usage: bench_scan [surface.json] [X] [naive_X]
#include <chrono>
#include <cstdio>
#include <string>

#include "quadrank/json_io.hpp"
#include "quadrank/scan.hpp"

using namespace quadrank;

template <typename F>
static double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : QUADRANK_FIXTURE_DIR "/W2.json";
  const std::uint64_t X = argc > 2 ? std::stoull(argv[2]) : 30000;
  const std::uint64_t X_naive = argc > 3 ? std::stoull(argv[3]) : 400;

  const ScanModel model(read_surface_file(path));
  const auto primes = sieve(X).primes;
  const int threads = default_thread_count();

  std::vector<PrimeScanRecord> serial, parallel;
  const double t_serial = seconds([&] { serial = scan_serial(model, primes); });
  const double t_parallel = seconds([&] { parallel = scan_parallel(model, primes, Kernel::Fast, threads); });
  std::printf("fast kernel, %zu primes <= %llu\n", primes.size(), static_cast<unsigned long long>(X));
  std::printf("  serial    %8.3f s\n", t_serial);
  std::printf("  openmp    %8.3f s  (%d threads, speedup %.2fx, identical=%s)\n", t_parallel, threads,
              t_serial / t_parallel, serial == parallel ? "yes" : "NO");

  const auto small = sieve(X_naive).primes;
  std::vector<PrimeScanRecord> fast, naive;
  const double t_fast = seconds([&] { fast = scan_serial(model, small, Kernel::Fast); });
  const double t_naive = seconds([&] { naive = scan_serial(model, small, Kernel::Naive); });
  bool same_T = fast.size() == naive.size();
  for (std::size_t i = 0; same_T && i < fast.size(); ++i) same_T = fast[i].T == naive[i].T;
  std::printf("kernels, %zu primes <= %llu (serial)\n", small.size(), static_cast<unsigned long long>(X_naive));
  std::printf("  fast      %8.3f s\n", t_fast);
  std::printf("  naive     %8.3f s  (ratio %.1fx, same T_p=%s)\n", t_naive, t_naive / t_fast, same_T ? "yes" : "NO");
  return serial == parallel && same_T ? 0 : 1;
}
