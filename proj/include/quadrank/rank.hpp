#pragma once

#include <vector>

#include "quadrank/qfactor.hpp"
#include "quadrank/surface.hpp"

namespace quadrank {

/// Mordell-Weil rank bounds read off the factorization of D(x).
///
/// S1 holds the rational zeros x0 of D with A(x0) a nonzero rational square,
/// S2 the other rational zeros. delta counts the distinct irreducible factors
/// of D of degree >= 2. When D splits completely the rank is exactly |S1|;
/// otherwise it lies in [|S1|, |S1| + delta].
struct RankReport {
  std::vector<Rational> S1;
  std::vector<Rational> S2;
  int delta = 0;
  bool splits_completely = false;
  int rank_lower = 0;
  int rank_upper = 0;
  bool exact = false;
  FactorizationQ factorization;  ///< of D, kept for reporting
};

/// Throws InvalidSurface when validate(s) fails.
RankReport analyze(const QuadraticSurface& s);

/// Same computation without the validation gate, for callers that already
/// validated or deliberately probe degenerate inputs.
RankReport analyze_unchecked(const QuadraticSurface& s);

}  // namespace quadrank
