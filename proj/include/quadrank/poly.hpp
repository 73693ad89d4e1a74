#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quadrank/rational.hpp"

namespace quadrank {

/// Dense univariate polynomial over Q, coefficients in ascending power.
/// The leading stored coefficient is nonzero; the zero polynomial has no
/// stored coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, int power);
  static Poly x() { return Poly({0, 1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  Poly monic() const;
  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, equal to this one up to a nonzero rational factor.
  Poly primitive() const;
  /// Content c such that *this == c * primitive().
  Rational content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; return r *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned e) const;
  std::string to_string(char var = 'x') const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// f = g*quotient + remainder, deg remainder < deg g. Throws
/// DivisionByZeroPoly when g == 0.
DivRem poly_divrem(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// f / gcd(f, f') made primitive: same roots, all multiplicities one.
Poly squarefree_part(const Poly& f);

struct RationalRoot {
  Rational root;
  int multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Every rational root of f with multiplicity, ascending. Rational root
/// theorem on the primitive integer model, deflating as roots are found.
std::vector<RationalRoot> rational_roots(const Poly& f);

/// Classical discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 of
/// ax^3+bx^2+cx+d. Throws WrongDegree unless deg f == 3.
Rational disc_cubic(const Poly& f);

}  // namespace quadrank
