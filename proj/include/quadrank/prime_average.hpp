#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadrank/surface.hpp"

namespace quadrank {

/// Integral model of a surface with everything the per-prime kernels need
/// precomputed: integer coefficients and the integer polynomial Delta(T).
class ScanModel {
 public:
  explicit ScanModel(const QuadraticSurface& s);

  const IntegralModel& integral() const { return integral_; }

  /// Coefficients reduced mod p.
  struct Reduced {
    std::uint64_t p;
    std::array<std::array<std::uint64_t, 3>, 4> c;  ///< c[i][j] of x^i T^j
    std::vector<std::uint64_t> delta;              ///< Delta(T) mod p, trimmed
  };
  Reduced reduce(std::uint64_t p) const;

 private:
  IntegralModel integral_;
  std::array<std::array<Integer, 3>, 4> coeff_;
  std::vector<Integer> delta_;
};

/// Exact per-prime data. With T_p = sum_t a_p(E_t) (a_p := 0 on singular
/// fibers), L_p = sum_{D(x)=0} chi(A(x)) and M_p = sum_x chi(A(x)),
/// the residual R_p is defined by -T_p = p L_p - M_p + R_p.
struct PrimeScanRecord {
  std::uint64_t p = 0;
  std::int64_t T = 0;
  std::int64_t L = 0;
  std::int64_t M = 0;
  std::int64_t R = 0;
  bool bad = false;
  /// Empty unless |R| > 12. Otherwise '+'-joined causes: a3disc (a root t0
  /// of a3 whose fiber quadratic has vanishing discriminant), a3sub (a root
  /// t0 of a3 whose fiber has degree < 2), abroot (some x with
  /// A(x) = B(x) = 0), or "uncertified" if none applies.
  std::string violation;

  friend bool operator==(const PrimeScanRecord&, const PrimeScanRecord&) = default;
};

inline constexpr std::int64_t kResidualBound = 12;

struct PrimeList {
  std::vector<std::uint64_t> primes;  ///< primes in [5, X], ascending
  std::uint64_t pi = 0;               ///< pi(X), counting 2 and 3
};

/// Sieve of Eratosthenes. Throws EmptyRange when X < 5.
PrimeList sieve(std::uint64_t X);

struct NaiveAverage {
  std::int64_t T = 0;
  bool bad = false;
  bool hasse_ok = true;          ///< |a_p|^2 <= 4p on every good fiber
  std::int64_t max_abs_ap = 0;
};

/// O(p^2) reference: direct double loop over (t, x), Legendre symbols by
/// Euler's criterion. Oracle only.
NaiveAverage ap_average_naive(const ScanModel& m, std::uint64_t p);

/// O(p) kernel: closed-form quadratic sums in t for every x, then exact
/// corrections on the fibers where Delta(t) = 0 mod p.
PrimeScanRecord ap_average_fast(const ScanModel& m, std::uint64_t p);

/// Record whose T_p comes from the naive oracle and whose L_p, M_p come from
/// direct sweeps.
PrimeScanRecord ap_average_naive_record(const ScanModel& m, std::uint64_t p);

struct PrimeAverageEstimate {
  std::uint64_t X = 0;
  double S_X = 0;         ///< (1/X) sum_{p<=X} -A_p log p over good p >= 5
  double L_bar = 0;       ///< (1/pi(X)) sum L_p
  std::int64_t rank_guess = 0;
  double M_drift = 0;  ///< (1/X) sum (M_p/p) log p, tends to 0
  std::size_t primes_used = 0;
  std::size_t bad_primes = 0;
  std::uint64_t pi_X = 0;
  bool low_confidence = false;  ///< fewer than 10 primes
  std::string records_path;
};

/// Aggregates records with p <= X, in ascending p, with compensated
/// summation. Throws InsufficientScan unless the records cover every prime
/// in [5, X].
PrimeAverageEstimate estimate(std::span<const PrimeScanRecord> records, std::uint64_t X);

}  // namespace quadrank
