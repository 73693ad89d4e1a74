#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quadrank/charsum.hpp"
#include "quadrank/error.hpp"

using namespace quadrank;

TEST_CASE("prime field and character table") {
  const PrimeField F5(5);
  CHECK(legendre(2, F5) == -1);
  CHECK(legendre(0, F5) == 0);
  CHECK(legendre(4, F5) == 1);
  CHECK(legendre(-1, F5) == 1);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(3), Error);

  std::mt19937_64 g(1);
  for (std::uint64_t p : oracle::primes_between(5, 400)) {
    const PrimeField F(p);
    long total = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
      total += F.chi(a);
      REQUIRE(F.chi(a) == oracle::chi(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)));
    }
    CHECK(total == 0);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t a = g() % p, b = g() % p;
      CHECK(F.chi(a * b % p) == F.chi(a) * F.chi(b));
    }
  }
}

TEST_CASE("quadratic character sums, examples") {
  const PrimeField F(5);
  CHECK(quad_char_sum(1, 0, 0, F) == 4);
  CHECK(quad_char_sum(1, 0, 1, F) == -1);
  CHECK(quad_char_sum(0, 0, 3, F) == -5);
}

TEST_CASE("quadratic character sums match the sweep exhaustively for small p") {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const PrimeField F(static_cast<std::uint64_t>(p));
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c) REQUIRE(quad_char_sum(a, b, c, F) == oracle::quad_sum(a, b, c, p));
    // Representatives outside [0, p) reduce first.
    CHECK(quad_char_sum(-1, p + 2, -3 * p - 1, F) == oracle::quad_sum(p - 1, 2, p - 1, p));
  }
}

TEST_CASE("cubic character sums, examples") {
  const PrimeField F5(5);
  auto s = cubic_char_sum({0, 0, 0, 1}, F5);
  CHECK(s.value == 0);
  CHECK(s.kind == CubicKind::TripleRoot);
  s = cubic_char_sum({0, 0, 1, 1}, F5);
  CHECK(s.value == -1);
  CHECK(s.kind == CubicKind::DoubleRoot);
  s = cubic_char_sum({0, -1, 0, 1}, F5);
  CHECK(s.value == 2);
  CHECK(s.kind == CubicKind::Squarefree);
  CHECK(ap_fiber({0, -1, 0, 1}, F5) == -2);
  CHECK(ap_fiber({1, 0, 0, 1}, F5) == 0);
  CHECK(ap_fiber({0, -1, 0, 1}, PrimeField(7)) == 0);
  CHECK_THROWS_AS(ap_fiber({0, 0, 1, 1}, F5), Error);
  CHECK_THROWS_AS(cubic_char_sum({1, 1, 1, 5}, F5), Error);
}

TEST_CASE("cubic character sums against point counts") {
  auto check_one = [](std::int64_t p, const PrimeField& F, const std::vector<std::int64_t>& c) {
    const auto got = cubic_char_sum({c[0], c[1], c[2], c[3]}, F);
    REQUIRE(got.value == oracle::cubic_sum(c, p));
    const bool repeated = oracle::cubic_disc_mod(c, p) == 0;
    CHECK((got.kind != CubicKind::Squarefree) == repeated);
    if (!repeated) {
      const std::int64_t ap = ap_fiber({c[0], c[1], c[2], c[3]}, F);
      CHECK(ap == p - oracle::affine_points(c, p));
      CHECK(ap * ap <= 4 * p);
    }
  };
  for (std::int64_t p : {5, 7, 11}) {
    const PrimeField F(static_cast<std::uint64_t>(p));
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c) check_one(p, F, {a, b, c, 1});
  }
  std::mt19937_64 g(3);
  for (std::uint64_t up : oracle::primes_between(13, 97)) {
    const auto p = static_cast<std::int64_t>(up);
    const PrimeField F(up);
    for (int i = 0; i < 500; ++i) {
      const std::int64_t lead = 1 + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(p - 1));
      check_one(p, F, {static_cast<std::int64_t>(g() % up), static_cast<std::int64_t>(g() % up),
                       static_cast<std::int64_t>(g() % up), lead});
    }
  }
}

TEST_CASE("double and triple roots follow the closed forms") {
  std::mt19937_64 g(4);
  for (std::uint64_t up : oracle::primes_between(5, 97)) {
    const auto p = static_cast<std::int64_t>(up);
    const PrimeField F(up);
    for (int i = 0; i < 100; ++i) {
      const std::int64_t a = 1 + static_cast<std::int64_t>(g() % (up - 1));
      const std::int64_t r = static_cast<std::int64_t>(g() % up), s = static_cast<std::int64_t>(g() % up);
      // a (x - r)^2 (x - s)
      const std::int64_t c3 = a, c2 = oracle::mod(-a * (2 * r + s), p), c1 = oracle::mod(a * (r * r + 2 * r * s), p),
                         c0 = oracle::mod(-a * r % p * r % p * s, p);
      const auto got = cubic_char_sum({c0, c1, c2, c3}, F);
      if (r == s) {
        CHECK(got.kind == CubicKind::TripleRoot);
        CHECK(got.value == 0);
      } else {
        CHECK(got.kind == CubicKind::DoubleRoot);
        CHECK(got.value == -oracle::chi(a * (r - s), p));
      }
    }
  }
}

TEST_CASE("root counts") {
  const Poly x2p1({1, 0, 1});
  CHECK(count_roots_mod_p(x2p1, PrimeField(5)) == 2);
  CHECK(count_roots_mod_p(x2p1, PrimeField(7)) == 0);
  CHECK(count_roots_mod_p(Poly({900, 0, -361, 0, 38, 0, -1}), PrimeField(11)) == 6);
  CHECK_THROWS_AS(count_roots_mod_p(Poly({5, 10}), PrimeField(5)), Error);
  CHECK_THROWS_AS(count_roots_mod_p(Poly({Rational(1, 5), 1}), PrimeField(5)), Error);
  std::mt19937_64 g(6);
  for (std::uint64_t up : oracle::primes_between(5, 200)) {
    const auto p = static_cast<std::int64_t>(up);
    std::vector<std::int64_t> c(1 + g() % 6);
    for (auto& x : c) x = static_cast<std::int64_t>(g() % 50) - 25;
    c.back() = p + 1;  // never zero mod p
    std::vector<Rational> q(c.begin(), c.end());
    int brute = 0;
    for (std::int64_t x = 0; x < p; ++x) brute += oracle::poly_mod(c, x, p) == 0;
    CHECK(count_roots_mod_p(Poly(q), PrimeField(up)) == brute);
  }
}

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(is_prime_u64(n) == oracle::is_prime(n));
  CHECK(is_prime_u64(4294967291ULL));
  CHECK_FALSE(is_prime_u64(4294967297ULL));
}
