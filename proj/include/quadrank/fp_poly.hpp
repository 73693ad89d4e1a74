#pragma once

#include <cstdint>
#include <vector>

// Small dense polynomials over F_p (p < 2^32), ascending coefficients.
// Internal helpers for cubic classification and factorization mod p.
namespace quadrank::fp {

using Coeffs = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
/// Canonical residue of a signed integer.
inline std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
  const std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

void trim(Coeffs& a);
inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs monic(const Coeffs& a, std::uint64_t p);
/// Remainder and quotient of a by nonzero b.
void divrem(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& quo, Coeffs& rem);
Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs gcd(Coeffs a, Coeffs b, std::uint64_t p);  // monic
Coeffs derivative(const Coeffs& a, std::uint64_t p);
std::uint64_t eval(const Coeffs& a, std::uint64_t x, std::uint64_t p);

/// Monic irreducible factors of a monic squarefree polynomial (Berlekamp).
std::vector<Coeffs> berlekamp(const Coeffs& f, std::uint64_t p);

}  // namespace quadrank::fp
