#include "quadrank/poly.hpp"

#include <algorithm>
#include <sstream>

#include "quadrank/error.hpp"
#include "quadrank/integer_factor.hpp"

namespace quadrank {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lead() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rational inv = Rational(1) / lead();
  return r *= inv;
}

Rational Poly::content() const {
  if (is_zero()) return Rational(0);
  Integer g = 0, l = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational c(g, l);
  return lead().sign() < 0 ? -c : c;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Poly r = *this;
  return r *= Rational(1) / content();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    if (!first || c.sign() < 0) c = c.sign() < 0 ? -c : c;
    first = false;
    const bool unit = (c == Rational(1));
    if (!unit || i == 0) os << c;
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivRem poly_divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<Rational> rem = f.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  const Rational inv = Rational(1) / g.lead();
  const auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + dg] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= q * g.coeffs()[j];
  }
  rem.resize(dg);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.primitive();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (f.degree() == 0) return Poly::constant(1);
  const Poly g = poly_gcd(f, f.derivative());
  return poly_divrem(f, g).quotient.primitive();
}

namespace {

// b^n f(a/b) for integer polynomial f of degree n.
Integer homogeneous_eval(const std::vector<Integer>& c, const Integer& a, const Integer& b) {
  Integer acc = 0, bpow = 1;
  // Horner on a with b powers accumulated from the top down.
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a + c[i] * bpow;
    bpow *= b;
  }
  return acc;
}

std::vector<Integer> integer_coeffs(const Poly& f) {
  std::vector<Integer> c;
  const Poly g = f.primitive();
  for (const auto& r : g.coeffs()) c.push_back(r.num());
  return c;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rational roots of zero polynomial");
  std::vector<RationalRoot> roots;
  Poly rest = f.primitive();

  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    rest = poly_divrem(rest, Poly::x()).quotient;
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({Rational(0), zero_mult});

  // Candidates come from the squarefree part so deflation only needs to count.
  if (rest.degree() > 0) {
    const Poly sqf = squarefree_part(rest);
    const auto c = integer_coeffs(sqf);
    const auto nums = positive_divisors(c.front());
    const auto dens = positive_divisors(c.back());
    std::vector<Rational> found;
    for (const auto& d : dens) {
      for (const auto& n : nums) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1) continue;
        for (const Integer& a : {Integer(n), Integer(-n)})
          if (homogeneous_eval(c, a, d) == 0) found.emplace_back(a, d);
      }
    }
    for (const auto& r : found) {
      const Poly lin({-r, 1});
      int mult = 0;
      for (;;) {
        auto dr = poly_divrem(rest, lin);
        if (!dr.remainder.is_zero()) break;
        rest = dr.quotient;
        ++mult;
      }
      roots.push_back({r, mult});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.root < y.root; });
  return roots;
}

Rational disc_cubic(const Poly& f) {
  if (f.degree() != 3) throw Error(ErrorCode::WrongDegree, "disc_cubic needs a cubic, got degree " + std::to_string(f.degree()));
  const Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
         Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
}

}  // namespace quadrank
