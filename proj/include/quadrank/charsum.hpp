#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "quadrank/poly.hpp"

namespace quadrank {

/// F_p for an odd prime p >= 5 together with its quadratic character as a
/// lookup table: chi(0) = 0, chi(square) = 1, chi(nonsquare) = -1.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  int chi(std::uint64_t residue) const { return table_[residue]; }
  const std::int8_t* table() const { return table_.data(); }

 private:
  std::uint64_t p_;
  std::vector<std::int8_t> table_;
};

bool is_prime_u64(std::uint64_t n);

/// Quadratic character of a mod p.
int legendre(std::int64_t a, const PrimeField& F);

/// sum_{t in F_p} chi(a t^2 + b t + c) in closed form:
///   a == b == 0         : p chi(c)
///   p | b^2 - 4ac       : (p - 1) chi(a)
///   otherwise           : -chi(a)
std::int64_t quad_char_sum(std::int64_t a, std::int64_t b, std::int64_t c, const PrimeField& F);

enum class CubicKind { Squarefree, DoubleRoot, TripleRoot };

struct CubicSum {
  std::int64_t value;
  CubicKind kind;
};

/// Coefficients c0 + c1 x + c2 x^2 + c3 x^3.
using CubicCoeffs = std::array<std::int64_t, 4>;

/// sum_x chi(f(x)) by table sweep, classified through gcd(f, f') mod p. For
/// repeated roots the closed forms (-chi(a(r - s)) for a(x-r)^2(x-s), 0 for a
/// triple root) are checked against the sweep. Throws NotCubic when c3 == 0
/// mod p.
CubicSum cubic_char_sum(const CubicCoeffs& f, const PrimeField& F);

/// Trace of Frobenius of y^2 = f(x), i.e. -sum_x chi(f(x)). Throws
/// SingularCubic unless f is a squarefree cubic mod p.
std::int64_t ap_fiber(const CubicCoeffs& f, const PrimeField& F);

/// Number of distinct roots of m in F_p. Throws ZeroReduction when m
/// vanishes mod p or has a denominator divisible by p.
int count_roots_mod_p(const Poly& m, const PrimeField& F);

}  // namespace quadrank
