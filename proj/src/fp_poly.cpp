#include "quadrank/fp_poly.hpp"

#include <stdexcept>

namespace quadrank::fp {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1u) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  trim(r);
  return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
  trim(r);
  return r;
}

Coeffs monic(const Coeffs& a, std::uint64_t p) {
  if (a.empty()) return {};
  const std::uint64_t inv = invmod(a.back(), p);
  Coeffs r = a;
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

void divrem(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& quo, Coeffs& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  rem = a;
  trim(rem);
  if (rem.size() < b.size()) {
    quo.clear();
    return;
  }
  quo.assign(rem.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const std::uint64_t q = mulmod(rem[k + db], inv, p);
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = submod(rem[k + j], mulmod(q, b[j], p), p);
  }
  rem.resize(db);
  trim(rem);
  trim(quo);
}

Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs q, r;
  divrem(a, b, p, q, r);
  return r;
}

Coeffs gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Coeffs derivative(const Coeffs& a, std::uint64_t p) {
  if (a.size() < 2) return {};
  Coeffs d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

std::uint64_t eval(const Coeffs& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), a[i], p);
  return acc;
}

namespace {

// Basis of {v : sum_i v_i * rows[i] == 0} over F_p.
std::vector<Coeffs> left_kernel(const std::vector<Coeffs>& rows, std::size_t n, std::uint64_t p) {
  // Work on the transpose so the kernel is an ordinary right nullspace.
  std::vector<Coeffs> m(n, Coeffs(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[j][i] = j < rows[i].size() ? rows[i][j] : 0;

  std::vector<int> is_pivot(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t sel = r;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[r]);
    const std::uint64_t inv = invmod(m[r][c], p);
    for (auto& v : m[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = submod(m[i][j], mulmod(f, m[r][j], p), p);
    }
    is_pivot[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<Coeffs> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    Coeffs v(n, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (is_pivot[c] >= 0) v[c] = submod(0, m[static_cast<std::size_t>(is_pivot[c])][free], p);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::vector<Coeffs> berlekamp(const Coeffs& f, std::uint64_t p) {
  const std::size_t n = static_cast<std::size_t>(degree(f));
  if (n <= 1) return {f};

  // Row i: x^(i p) mod f minus x^i.
  std::vector<Coeffs> rows(n);
  Coeffs xp = {1};
  Coeffs x_to_p;
  {
    Coeffs base = {0, 1};
    std::uint64_t e = p;
    Coeffs acc = {1};
    while (e) {
      if (e & 1u) acc = rem(mul(acc, base, p), f, p);
      base = rem(mul(base, base, p), f, p);
      e >>= 1u;
    }
    x_to_p = acc;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs row = xp;
    row.resize(n, 0);
    row[i] = submod(row[i], 1, p);
    rows[i] = row;
    xp = rem(mul(xp, x_to_p, p), f, p);
  }
  const auto kernel = left_kernel(rows, n, p);
  const std::size_t k = kernel.size();

  std::vector<Coeffs> factors = {f};
  for (const auto& v_raw : kernel) {
    if (factors.size() == k) break;
    Coeffs v = v_raw;
    trim(v);
    if (degree(v) < 1) continue;
    for (std::uint64_t s = 0; s < p && factors.size() < k; ++s) {
      std::vector<Coeffs> next;
      for (const auto& u : factors) {
        if (degree(u) <= 1) {
          next.push_back(u);
          continue;
        }
        Coeffs vs = v;
        vs[0] = submod(vs[0], s, p);
        trim(vs);
        Coeffs g = gcd(u, vs, p);
        if (degree(g) > 0 && degree(g) < degree(u)) {
          Coeffs q, r;
          divrem(u, g, p, q, r);
          next.push_back(g);
          next.push_back(monic(q, p));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != k) throw std::logic_error("berlekamp: incomplete split");
  return factors;
}

}  // namespace quadrank::fp
