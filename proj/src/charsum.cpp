#include "quadrank/charsum.hpp"

#include <stdexcept>
#include <string>

#include "quadrank/error.hpp"
#include "quadrank/fp_poly.hpp"

namespace quadrank {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), table_(p, -1) {
  if (p < 5 || p >= (1ull << 32) || !is_prime_u64(p))
    throw Error(ErrorCode::BadPrime, "PrimeField needs a prime 5 <= p < 2^32, got " + std::to_string(p));
  table_[0] = 0;
  // k^2 for k = 1..(p-1)/2 via (k+1)^2 = k^2 + 2k + 1.
  std::uint64_t sq = 0, step = 1;
  for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
    sq += step;
    if (sq >= p) sq -= p;
    step += 2;
    if (step >= p) step -= p;
    table_[sq] = 1;
  }
}

int legendre(std::int64_t a, const PrimeField& F) { return F.chi(fp::reduce(a, F.p())); }

std::int64_t quad_char_sum(std::int64_t a, std::int64_t b, std::int64_t c, const PrimeField& F) {
  const std::uint64_t p = F.p();
  const std::uint64_t ar = fp::reduce(a, p), br = fp::reduce(b, p), cr = fp::reduce(c, p);
  const auto sp = static_cast<std::int64_t>(p);
  if (ar == 0 && br == 0) return sp * F.chi(cr);
  const std::uint64_t disc = fp::submod(fp::mulmod(br, br, p), fp::mulmod(4 % p, fp::mulmod(ar, cr, p), p), p);
  if (disc == 0) return (sp - 1) * F.chi(ar);
  return -F.chi(ar);
}

namespace {

fp::Coeffs reduce_cubic(const CubicCoeffs& f, std::uint64_t p) {
  fp::Coeffs c(4);
  for (std::size_t i = 0; i < 4; ++i) c[i] = fp::reduce(f[i], p);
  return c;
}

std::int64_t sweep(const fp::Coeffs& c, const PrimeField& F) {
  const std::uint64_t p = F.p();
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) sum += F.chi(fp::eval(c, x, p));
  return sum;
}

}  // namespace

CubicSum cubic_char_sum(const CubicCoeffs& f, const PrimeField& F) {
  const std::uint64_t p = F.p();
  const fp::Coeffs c = reduce_cubic(f, p);
  if (c[3] == 0) throw Error(ErrorCode::NotCubic, "leading coefficient vanishes mod " + std::to_string(p));
  const std::int64_t value = sweep(c, F);
  const fp::Coeffs g = fp::gcd(c, fp::derivative(c, p), p);
  if (fp::degree(g) == 0) return {value, CubicKind::Squarefree};

  std::int64_t closed = 0;
  CubicKind kind = CubicKind::TripleRoot;
  if (fp::degree(g) == 1) {
    // f = a (x - r)^2 (x - s) with 2r + s = -c2 / a.
    kind = CubicKind::DoubleRoot;
    const std::uint64_t a = c[3];
    const std::uint64_t r = fp::submod(0, g[0], p);
    const std::uint64_t sum_roots = fp::submod(0, fp::mulmod(c[2], fp::invmod(a, p), p), p);
    const std::uint64_t s = fp::submod(sum_roots, fp::addmod(r, r, p), p);
    closed = -F.chi(fp::mulmod(a, fp::submod(r, s, p), p));
  }
  if (closed != value) throw std::logic_error("cubic_char_sum: closed form disagrees with sweep");
  return {value, kind};
}

std::int64_t ap_fiber(const CubicCoeffs& f, const PrimeField& F) {
  const fp::Coeffs c = reduce_cubic(f, F.p());
  if (c[3] == 0 || fp::degree(fp::gcd(c, fp::derivative(c, F.p()), F.p())) != 0)
    throw Error(ErrorCode::SingularCubic, "fiber is not a squarefree cubic mod " + std::to_string(F.p()));
  return -sweep(c, F);
}

int count_roots_mod_p(const Poly& m, const PrimeField& F) {
  const std::uint64_t p = F.p();
  const Integer P(static_cast<unsigned long>(p));
  fp::Coeffs c;
  for (const auto& q : m.coeffs()) {
    if (mpz_divisible_ui_p(q.den().get_mpz_t(), p))
      throw Error(ErrorCode::ZeroReduction, "denominator divisible by " + std::to_string(p));
    Integer n, d;
    mpz_mod(n.get_mpz_t(), q.num().get_mpz_t(), P.get_mpz_t());
    mpz_mod(d.get_mpz_t(), q.den().get_mpz_t(), P.get_mpz_t());
    c.push_back(fp::mulmod(n.get_ui(), fp::invmod(d.get_ui(), p), p));
  }
  fp::trim(c);
  if (c.empty()) throw Error(ErrorCode::ZeroReduction, "polynomial vanishes mod " + std::to_string(p));
  int count = 0;
  for (std::uint64_t x = 0; x < p; ++x) count += fp::eval(c, x, p) == 0;
  return count;
}

}  // namespace quadrank
