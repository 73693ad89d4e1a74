#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadrank/error.hpp"
#include "quadrank/rank.hpp"

namespace quadrank {

struct ConstructionParams {
  int r = 0;                    ///< target rank, 0..6
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000; ///< randomized candidates allowed
  int d_max = 200;              ///< symmetric offsets d in [1, d_max]
  int e_num_max = 8;            ///< node e = n/m, 1 <= n <= e_num_max
  int e_den_max = 4;            ///< 1 <= m <= e_den_max
  int v_height = 40;            ///< asymmetric roots n/m with |n| <= v_height
  int v_den_max = 6;            ///< and 1 <= m <= v_den_max
};

/// Inputs from which a surface was assembled:
///   D = lambda * prod (x - v),  A = a * prod (x - w),
///   B = beta * prod (x - w) + the quadratic through (w_j, s_j),
///   C = (B^2 - D) / (4A), with s_j^2 = D(w_j).
struct Provenance {
  std::string scheme;  ///< "symmetric-base", "symmetric-search" or "asymmetric-search"
  std::vector<Rational> v;
  std::array<Rational, 3> w;
  std::array<Rational, 3> s;
  Rational lambda;
  Rational a;
  Rational beta;
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;  ///< randomized candidates consumed

  nlohmann::json to_json() const;
};

struct ConstructionResult {
  QuadraticSurface surface;
  RankReport certificate;
  Provenance provenance;
};

/// Raised when the randomized search runs out of budget. Carries the best
/// certified rank seen (or -1) and the number of candidates consumed.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(const std::string& msg, int best_rank, std::uint64_t candidates, std::uint64_t seed)
      : Error(ErrorCode::BudgetExhausted, msg), best_rank(best_rank), candidates(candidates), seed(seed) {}
  int best_rank;
  std::uint64_t candidates;
  std::uint64_t seed;
};

/// Assembles the surface described above. Returns false when the pieces do
/// not fit (D(w_j) not a square, C not polynomial, ...).
bool assemble_surface(const std::vector<Rational>& v, const Rational& lambda, const std::array<Rational, 3>& w,
                      const std::array<Rational, 3>& s, const Rational& a, const Rational& beta,
                      QuadraticSurface& out);

/// Rank-targeted construction. r <= 2 succeeds from the bundled base
/// configuration d = (2,3,5), e = 1, beta = 2; r = 3 runs a seeded search in
/// the symmetric scheme; r >= 4 a seeded search with A-roots {-1, 0, 1} and
/// asymmetric D-roots. Every result is validated and certified exact.
ConstructionResult construct_surface(const ConstructionParams& params);

}  // namespace quadrank
