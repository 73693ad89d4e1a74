#pragma once

#include <vector>

#include "quadrank/poly.hpp"

namespace quadrank {

struct IrreducibleFactor {
  Poly poly;  ///< monic, irreducible over Q
  int multiplicity;
  friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

/// unit * prod(factor^multiplicity) == input, factors distinct and sorted by
/// (degree, ascending coefficient vector).
struct FactorizationQ {
  Rational unit;
  std::vector<IrreducibleFactor> factors;

  Poly expand() const;
  bool all_linear() const;
};

/// Largest degree accepted by factor_q.
inline constexpr int kMaxFactorDegree = 8;

/// Complete factorization over Q: squarefree decomposition, rational roots
/// for the linear part, then mod-p splitting, Hensel lifting and subset
/// recombination for what remains. Throws ZeroPolynomial / DegreeTooLarge.
FactorizationQ factor_q(const Poly& f);

/// Number of distinct irreducible factors of degree >= 2.
int delta_count(const FactorizationQ& fac);

}  // namespace quadrank
