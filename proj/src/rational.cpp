#include "quadrank/rational.hpp"

#include "quadrank/error.hpp"
#include "quadrank/integer_factor.hpp"

namespace quadrank {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::SingularSurface: return "SingularSurface";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::DegenerateD: return "DegenerateD";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::SingularCubic: return "SingularCubic";
    case ErrorCode::ZeroReduction: return "ZeroReduction";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::InsufficientScan: return "InsufficientScan";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool parse_integer(std::string_view s, bool allow_sign, Integer& out) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), true, num);
  if (ok && slash != std::string_view::npos) ok = parse_integer(text.substr(slash + 1), false, den);
  if (!ok || den == 0)
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  std::string s = value_.get_num().get_str();
  if (value_.get_den() != 1) s += "/" + value_.get_den().get_str();
  return s;
}

bool is_nonzero_square(const Rational& q) {
  if (q.sign() <= 0) return false;
  return mpz_perfect_square_p(q.num().get_mpz_t()) && mpz_perfect_square_p(q.den().get_mpz_t());
}

Rational exact_sqrt(const Rational& q) {
  if (q.is_zero()) return Rational(0);
  if (!is_nonzero_square(q)) throw std::domain_error("not a rational square: " + q.to_string());
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.den().get_mpz_t());
  return Rational(n, d);
}

Integer squarefree_kernel(const Rational& q) {
  if (q.is_zero()) throw std::domain_error("squarefree kernel of zero");
  Integer k = 1;
  for (const Integer& part : {q.num(), q.den()})
    for (const auto& [prime, exp] : factor_integer(part))
      if (exp % 2 == 1) k *= prime;
  return q.sign() < 0 ? Integer(-k) : k;
}

}  // namespace quadrank
