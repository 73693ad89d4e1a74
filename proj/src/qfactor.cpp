#include "quadrank/qfactor.hpp"

#include <algorithm>

#include "quadrank/error.hpp"
#include "quadrank/fp_poly.hpp"

namespace quadrank {
namespace {

using ZPoly = std::vector<Integer>;  // ascending integer coefficients

ZPoly to_zpoly(const Poly& f) {
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(c.num());
  return z;
}

Poly from_zpoly(const ZPoly& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return Poly(std::move(c));
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_nonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

fp::Coeffs reduce_modp(const ZPoly& z, std::uint64_t p) {
  fp::Coeffs c;
  for (const auto& v : z) c.push_back(mod_nonneg(v, Integer(static_cast<unsigned long>(p))).get_ui());
  fp::trim(c);
  return c;
}

ZPoly lift_coeffs(const fp::Coeffs& c) {
  ZPoly z;
  for (auto v : c) z.emplace_back(static_cast<unsigned long>(v));
  return z;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = mod_nonneg(v, m);
  return r;
}

// s*a + t*b == 1 over F_p for coprime a, b.
void ext_gcd(const fp::Coeffs& a, const fp::Coeffs& b, std::uint64_t p, fp::Coeffs& s, fp::Coeffs& t) {
  fp::Coeffs r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    fp::Coeffs q, r;
    fp::divrem(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    fp::Coeffs s2 = fp::sub(s0, fp::mul(q, s1, p), p);
    fp::Coeffs t2 = fp::sub(t0, fp::mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp::degree(r0) != 0) throw std::logic_error("hensel: factors not coprime mod p");
  const std::uint64_t inv = fp::invmod(r0[0], p);
  s = fp::mul(s0, {inv}, p);
  t = fp::mul(t0, {inv}, p);
}

// Lifts f == g*h (mod p), g monic, lc(h) == lc(f), to modulus p^k.
void hensel_two(const ZPoly& f, const fp::Coeffs& g0, const fp::Coeffs& h0, std::uint64_t p,
                unsigned k, ZPoly& g, ZPoly& h) {
  const Integer P(static_cast<unsigned long>(p));
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), P.get_mpz_t(), k);
  fp::Coeffs s, t;
  ext_gcd(g0, h0, p, s, t);
  g = lift_coeffs(g0);
  h = lift_coeffs(h0);
  h.back() = mod_nonneg(f.back(), pk);
  Integer m = P;
  for (unsigned j = 1; j < k; ++j) {
    const Integer next = m * P;
    ZPoly gh = zmul(g, h, next);
    ZPoly e(std::max(f.size(), gh.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer v = (i < f.size() ? f[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0));
      v = mod_nonneg(v, next);
      e[i] = v / m;
    }
    const fp::Coeffs ep = reduce_modp(e, p);
    if (!ep.empty()) {
      fp::Coeffs te = fp::mul(t, ep, p), q, G;
      fp::divrem(te, g0, p, q, G);
      fp::Coeffs H = fp::mul(s, ep, p);
      fp::Coeffs qh = fp::mul(q, h0, p);
      if (qh.size() > H.size()) H.resize(qh.size(), 0);
      for (std::size_t i = 0; i < qh.size(); ++i) H[i] = fp::addmod(H[i], qh[i], p);
      fp::trim(H);
      for (std::size_t i = 0; i < G.size(); ++i) g[i] += m * static_cast<unsigned long>(G[i]);
      if (H.size() > h.size()) throw std::logic_error("hensel: degree growth");
      for (std::size_t i = 0; i < H.size(); ++i) h[i] += m * static_cast<unsigned long>(H[i]);
    }
    m = next;
  }
}

// Factors of a primitive squarefree integer polynomial with no rational roots.
std::vector<Poly> zassenhaus(const Poly& prim) {
  const ZPoly f = to_zpoly(prim);
  const int n = prim.degree();
  const Integer lc = f.back();

  std::uint64_t p = 5;
  fp::Coeffs fbar;
  for (;; p += 2) {
    if (mpz_probab_prime_p(Integer(static_cast<unsigned long>(p)).get_mpz_t(), 25) == 0) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    fbar = reduce_modp(f, p);
    if (fp::degree(fp::gcd(fbar, fp::derivative(fbar, p), p)) == 0) break;
  }
  std::vector<fp::Coeffs> local = fp::berlekamp(fp::monic(fbar, p), p);
  std::sort(local.begin(), local.end());
  if (local.size() == 1) return {prim};

  // Mignotte-style bound on factor coefficients, times |lc| for recombination.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * abs(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound *= 2;
  unsigned k = 1;
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  // Multifactor lift by peeling one monic factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (auto& v : rest) v = mod_nonneg(v, pk);
  const std::uint64_t lc_p = mod_nonneg(lc, Integer(static_cast<unsigned long>(p))).get_ui();
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    fp::Coeffs cof = {lc_p};
    for (std::size_t j = i + 1; j < local.size(); ++j) cof = fp::mul(cof, local[j], p);
    ZPoly g, h;
    hensel_two(rest, local[i], cof, p, k, g, h);
    lifted.push_back(g);
    rest = h;
  }
  {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    for (auto& v : rest) v = mod_nonneg(v * inv, pk);
    lifted.push_back(rest);
  }

  std::vector<Poly> found;
  Poly current = prim;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool progressed = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const Integer cur_lc = current.lead().num();
      ZPoly cand = {mod_nonneg(cur_lc, pk)};
      for (auto i : idx) cand = zmul(cand, pool[i], pk);
      for (auto& v : cand) v = mod_symmetric(v, pk);
      const Poly candidate = from_zpoly(cand).primitive();
      const DivRem dr = poly_divrem(current, candidate);
      if (dr.remainder.is_zero()) {
        found.push_back(candidate);
        current = dr.quotient.primitive();
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(pool[i]);
        pool = std::move(keep);
        progressed = true;
        break;
      }
      // next combination
      bool exhausted = true;
      std::size_t pos = 0;
      for (std::size_t q = s; q-- > 0;) {
        if (idx[q] < pool.size() - s + q) {
          pos = q;
          exhausted = false;
          break;
        }
      }
      if (exhausted) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!progressed) ++s;
  }
  if (current.degree() > 0) found.push_back(current);
  return found;
}

// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& f) {
  std::vector<Poly> out;
  Poly rest = f;
  for (const auto& r : rational_roots(f)) {
    const Poly lin({-r.root, 1});
    out.push_back(lin);
    rest = poly_divrem(rest, lin).quotient;
  }
  if (rest.degree() >= 4) {
    for (const auto& g : zassenhaus(rest.primitive())) out.push_back(g.monic());
  } else if (rest.degree() >= 1) {
    out.push_back(rest.monic());  // no rational root, degree <= 3
  }
  return out;
}

bool factor_less(const IrreducibleFactor& a, const IrreducibleFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  return std::lexicographical_compare(a.poly.coeffs().begin(), a.poly.coeffs().end(),
                                      b.poly.coeffs().begin(), b.poly.coeffs().end());
}

}  // namespace

Poly FactorizationQ::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& f : factors) r *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

bool FactorizationQ::all_linear() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.poly.degree() == 1; });
}

FactorizationQ factor_q(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_q of zero polynomial");
  if (f.degree() > kMaxFactorDegree)
    throw Error(ErrorCode::DegreeTooLarge, "factor_q supports degree <= " + std::to_string(kMaxFactorDegree));
  FactorizationQ out{f.lead(), {}};
  if (f.degree() == 0) return out;

  // Yun's squarefree decomposition.
  Poly a = f.monic();
  Poly b = a.derivative();
  Poly c = poly_gcd(a, b);
  Poly w = poly_divrem(a, c).quotient;
  Poly y = poly_divrem(b, c).quotient;
  Poly z = y - w.derivative();
  for (int mult = 1; w.degree() > 0; ++mult) {
    Poly g = poly_gcd(w, z);
    if (g.degree() > 0)
      for (const auto& irr : factor_squarefree(g)) out.factors.push_back({irr, mult});
    w = poly_divrem(w, g).quotient;
    y = poly_divrem(z, g).quotient;
    z = y - w.derivative();
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  if (out.expand() != f) throw std::logic_error("factor_q: certificate re-expansion failed");
  return out;
}

int delta_count(const FactorizationQ& fac) {
  return static_cast<int>(std::count_if(fac.factors.begin(), fac.factors.end(),
                                        [](const auto& f) { return f.poly.degree() >= 2; }));
}

}  // namespace quadrank
