#include "quadrank/prime_average.hpp"

#include <cmath>
#include <cstdlib>

#include "quadrank/charsum.hpp"
#include "quadrank/error.hpp"
#include "quadrank/fp_poly.hpp"

namespace quadrank {

ScanModel::ScanModel(const QuadraticSurface& s) : integral_(integral_model(s)) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) coeff_[i][j] = integral_.surface.coeff[i][j].num();
  const Poly delta = delta_T(integral_.surface);
  for (const auto& c : delta.coeffs()) delta_.push_back(c.num());
}

ScanModel::Reduced ScanModel::reduce(std::uint64_t p) const {
  Reduced r;
  r.p = p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) r.c[i][j] = mpz_fdiv_ui(coeff_[i][j].get_mpz_t(), p);
  for (const auto& d : delta_) r.delta.push_back(mpz_fdiv_ui(d.get_mpz_t(), p));
  fp::trim(r.delta);
  return r;
}

PrimeList sieve(std::uint64_t X) {
  if (X < 5) throw Error(ErrorCode::EmptyRange, "need X >= 5, got " + std::to_string(X));
  std::vector<bool> composite(X + 1, false);
  PrimeList out;
  for (std::uint64_t i = 2; i <= X; ++i) {
    if (composite[i]) continue;
    ++out.pi;
    if (i >= 5) out.primes.push_back(i);
    for (std::uint64_t j = i * i; j <= X; j += i) composite[j] = true;
  }
  return out;
}

namespace {

// Values f(0), f(1), ... mod p by forward differences: Deg additions per
// step, no multiplications.
template <int Deg>
class Stepper {
 public:
  Stepper(const std::uint64_t* coeffs, int count, std::uint64_t p) : p_(p) {
    fp::Coeffs c(coeffs, coeffs + count);
    std::array<std::uint64_t, Deg + 1> v{};
    for (int k = 0; k <= Deg; ++k) v[k] = fp::eval(c, static_cast<std::uint64_t>(k) % p, p);
    for (int j = 0; j <= Deg; ++j) {
      d_[j] = v[0];
      for (int i = 0; i < Deg - j; ++i) v[i] = fp::submod(v[i + 1], v[i], p);
    }
  }
  std::uint64_t value() const { return d_[0]; }
  void step() {
    for (int j = 0; j < Deg; ++j) d_[j] = fp::addmod(d_[j], d_[j + 1], p_);
  }

 private:
  std::array<std::uint64_t, Deg + 1> d_{};
  std::uint64_t p_;
};

struct Columns {
  std::array<std::uint64_t, 4> A, B, C;
};

Columns columns(const ScanModel::Reduced& r) {
  Columns c;
  for (int i = 0; i < 4; ++i) {
    c.A[i] = r.c[i][2];
    c.B[i] = r.c[i][1];
    c.C[i] = r.c[i][0];
  }
  return c;
}

std::array<std::uint64_t, 4> fiber_at(const ScanModel::Reduced& r, std::uint64_t t) {
  const std::uint64_t p = r.p, t2 = fp::mulmod(t, t, p);
  std::array<std::uint64_t, 4> e{};
  for (int i = 0; i < 4; ++i)
    e[i] = fp::addmod(r.c[i][0], fp::addmod(fp::mulmod(r.c[i][1], t, p), fp::mulmod(r.c[i][2], t2, p), p), p);
  return e;
}

std::int64_t fiber_sweep(const std::array<std::uint64_t, 4>& e, const std::int8_t* chi, std::uint64_t p) {
  Stepper<3> s(e.data(), 4, p);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    sum += chi[s.value()];
    s.step();
  }
  return sum;
}

// Residual split into the part the degenerate structures explain and the
// part that honest singular cubic fibers contribute (at most 1 each).
struct ResidualAccount {
  std::int64_t honest = 0;
  bool ab = false;
  bool a3disc = false;
  bool a3sub = false;
};

void classify_a3_root_fiber(const std::array<std::uint64_t, 4>& e, std::uint64_t p, ResidualAccount& acc) {
  if (e[2] == 0) {
    acc.a3sub = true;
    return;
  }
  const std::uint64_t disc = fp::submod(fp::mulmod(e[1], e[1], p), fp::mulmod(4 % p, fp::mulmod(e[2], e[0], p), p), p);
  if (disc == 0) acc.a3disc = true;
}

std::string violation_tag(std::int64_t R, const ResidualAccount& acc) {
  if (std::llabs(R) <= kResidualBound) return {};
  if (std::llabs(acc.honest) > kResidualBound) return "uncertified";
  std::string tag;
  auto add = [&](const char* t) { tag += (tag.empty() ? "" : "+") + std::string(t); };
  if (acc.a3disc) add("a3disc");
  if (acc.a3sub) add("a3sub");
  if (acc.ab) add("abroot");
  return tag.empty() ? "uncertified" : tag;
}

int euler_legendre(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  return fp::powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

PrimeScanRecord ap_average_fast(const ScanModel& m, std::uint64_t p) {
  const PrimeField F(p);
  const ScanModel::Reduced r = m.reduce(p);
  PrimeScanRecord rec;
  rec.p = p;
  if (r.delta.empty()) {
    rec.bad = true;
    return rec;
  }
  const std::int8_t* chi = F.table();
  const auto sp = static_cast<std::int64_t>(p);
  const Columns col = columns(r);

  fp::Coeffs A(col.A.begin(), col.A.end()), B(col.B.begin(), col.B.end()), C(col.C.begin(), col.C.end());
  fp::Coeffs D = fp::sub(fp::mul(B, B, p), fp::mul(fp::Coeffs{4 % p}, fp::mul(A, C, p), p), p);
  D.resize(7, 0);

  // Sum over x of the closed-form sum over t of chi(A t^2 + B t + C).
  Stepper<3> sA(col.A.data(), 4, p), sB(col.B.data(), 4, p);
  Stepper<6> sD(D.data(), 7, p);
  std::int64_t L = 0, M = 0, ab = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t a = sA.value();
    const int ca = chi[a];
    M += ca;
    if (sD.value() == 0) {
      L += ca;
      if (a == 0 && sB.value() == 0) ab += chi[fp::eval(C, x, p)];
    }
    sA.step();
    sB.step();
    sD.step();
  }
  const std::int64_t all_fibers = sp * L - M + sp * ab;

  // Remove the fibers with Delta(t) = 0 mod p.
  fp::Coeffs delta = r.delta;
  delta.resize(13, 0);
  Stepper<12> sDelta(delta.data(), 13, p);
  ResidualAccount acc;
  acc.ab = ab != 0;
  std::int64_t correction = 0;
  for (std::uint64_t t = 0; t < p; ++t) {
    if (sDelta.value() == 0) {
      const auto e = fiber_at(r, t);
      const std::int64_t s = fiber_sweep(e, chi, p);
      correction += s;
      if (e[3] == 0) classify_a3_root_fiber(e, p, acc);
      else acc.honest -= s;
    }
    sDelta.step();
  }

  rec.T = -(all_fibers - correction);
  rec.L = L;
  rec.M = M;
  rec.R = -rec.T - sp * L + M;
  rec.violation = violation_tag(rec.R, acc);
  return rec;
}

NaiveAverage ap_average_naive(const ScanModel& m, std::uint64_t p) {
  const ScanModel::Reduced r = m.reduce(p);
  NaiveAverage out;
  if (r.delta.empty()) {
    out.bad = true;
    return out;
  }
  const auto sp = static_cast<std::int64_t>(p);
  for (std::uint64_t t = 0; t < p; ++t) {
    if (fp::eval(r.delta, t, p) == 0) continue;
    const auto e = fiber_at(r, t);
    const fp::Coeffs cubic(e.begin(), e.end());
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) sum += euler_legendre(fp::eval(cubic, x, p), p);
    const std::int64_t ap = -sum;
    out.T += ap;
    out.max_abs_ap = std::max(out.max_abs_ap, static_cast<std::int64_t>(std::llabs(ap)));
    if (ap * ap > 4 * sp) out.hasse_ok = false;
  }
  return out;
}

PrimeScanRecord ap_average_naive_record(const ScanModel& m, std::uint64_t p) {
  const NaiveAverage naive = ap_average_naive(m, p);
  PrimeScanRecord rec;
  rec.p = p;
  if (naive.bad) {
    rec.bad = true;
    return rec;
  }
  const PrimeField F(p);
  const ScanModel::Reduced r = m.reduce(p);
  const Columns col = columns(r);
  const fp::Coeffs A(col.A.begin(), col.A.end()), B(col.B.begin(), col.B.end()), C(col.C.begin(), col.C.end());
  const auto sp = static_cast<std::int64_t>(p);

  ResidualAccount acc;
  std::int64_t ab = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t a = fp::eval(A, x, p), b = fp::eval(B, x, p), c = fp::eval(C, x, p);
    const std::uint64_t d = fp::submod(fp::mulmod(b, b, p), fp::mulmod(4 % p, fp::mulmod(a, c, p), p), p);
    rec.M += F.chi(a);
    if (d == 0) rec.L += F.chi(a);
    if (a == 0 && b == 0) ab += F.chi(c);
  }
  acc.ab = ab != 0;
  rec.T = naive.T;
  rec.R = -rec.T - sp * rec.L + rec.M;

  // Degenerate part: p*ab minus the fibers over roots of a3.
  std::int64_t degenerate = sp * ab;
  const fp::Coeffs a3 = {r.c[3][0], r.c[3][1], r.c[3][2]};
  for (std::uint64_t t = 0; t < p; ++t) {
    if (fp::eval(a3, t, p) != 0) continue;
    const auto e = fiber_at(r, t);
    degenerate -= fiber_sweep(e, F.table(), p);
    classify_a3_root_fiber(e, p, acc);
  }
  acc.honest = rec.R - degenerate;
  rec.violation = violation_tag(rec.R, acc);
  return rec;
}

PrimeAverageEstimate estimate(std::span<const PrimeScanRecord> records, std::uint64_t X) {
  const PrimeList primes = sieve(X);
  PrimeAverageEstimate est;
  est.X = X;
  est.pi_X = primes.pi;

  // Neumaier compensated sums, accumulated in ascending p.
  struct Sum {
    double s = 0, c = 0;
    void add(double v) {
      const double t = s + v;
      if (std::fabs(s) >= std::fabs(v)) c += (s - t) + v;
      else c += (v - t) + s;
      s = t;
    }
    double value() const { return s + c; }
  } s_sum, l_sum, m_sum;

  std::size_t k = 0;
  for (const auto& rec : records) {
    if (rec.p > X) break;
    if (k >= primes.primes.size() || rec.p != primes.primes[k])
      throw Error(ErrorCode::InsufficientScan, "records out of sequence at p = " + std::to_string(rec.p));
    ++k;
    if (rec.bad) {
      ++est.bad_primes;
      continue;
    }
    const double logp = std::log(static_cast<double>(rec.p));
    const double p = static_cast<double>(rec.p);
    s_sum.add(-static_cast<double>(rec.T) / p * logp);
    l_sum.add(static_cast<double>(rec.L));
    m_sum.add(static_cast<double>(rec.M) / p * logp);
  }
  if (k != primes.primes.size())
    throw Error(ErrorCode::InsufficientScan,
                "scan covers " + std::to_string(k) + " of " + std::to_string(primes.primes.size()) + " primes");
  est.primes_used = k;
  const double x = static_cast<double>(X);
  est.S_X = s_sum.value() / x;
  est.L_bar = l_sum.value() / static_cast<double>(primes.pi);
  est.M_drift = m_sum.value() / x;
  est.rank_guess = std::llround(est.S_X);
  est.low_confidence = k < 10;
  return est;
}

}  // namespace quadrank
