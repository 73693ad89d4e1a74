#include "quadrank/construct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace quadrank {

nlohmann::json Provenance::to_json() const {
  auto list = [](const auto& xs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
  };
  return {{"scheme", scheme}, {"v", list(v)},   {"w", list(w)},         {"s", list(s)},
          {"lambda", lambda.to_string()}, {"a", a.to_string()}, {"beta", beta.to_string()},
          {"seed", seed},     {"candidates", candidates}};
}

bool assemble_surface(const std::vector<Rational>& v, const Rational& lambda, const std::array<Rational, 3>& w,
                      const std::array<Rational, 3>& s, const Rational& a, const Rational& beta,
                      QuadraticSurface& out) {
  if (lambda.is_zero() || a.is_zero()) return false;
  if (std::set<Rational>(w.begin(), w.end()).size() != 3) return false;
  Poly D = Poly::constant(lambda);
  for (const auto& root : v) D *= Poly({-root, 1});
  Poly W = Poly::constant(1), interp;
  for (int j = 0; j < 3; ++j) {
    if (D.eval(w[j]) != s[j] * s[j]) return false;
    W *= Poly({-w[j], 1});
    Poly basis = Poly::constant(s[j]);
    for (int k = 0; k < 3; ++k)
      if (k != j) basis *= Poly({-w[k], 1}) * (Rational(1) / (w[j] - w[k]));
    interp += basis;
  }
  const Poly B = beta * W + interp;
  const Poly A = a * W;
  const DivRem dr = poly_divrem(B * B - D, Rational(4) * A);
  if (!dr.remainder.is_zero() || dr.quotient.degree() > 3) return false;
  out = QuadraticSurface::from_abc(A, B, dr.quotient);
  return true;
}

namespace {

const std::array<long, 7> kBetas = {2, 1, 3, -1, -2, 4, 5};

// Portable uniform draw in [0, n).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

template <typename T>
std::vector<T> sample(std::mt19937_64& rng, std::vector<T> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
  pool.resize(k);
  return pool;
}

// Exact-rank certificate: validated, D has six distinct rational roots, rank
// is exactly r and B does not vanish on S1.
bool certify(const QuadraticSurface& s, int r, RankReport& report, int& best) {
  if (!validate(s).valid()) return false;
  report = analyze_unchecked(s);
  if (!report.exact) return false;
  best = std::max(best, report.rank_lower);
  if (report.factorization.factors.size() != 6) return false;
  if (report.rank_lower != r) return false;
  const Poly B = s.B();
  return std::none_of(report.S1.begin(), report.S1.end(), [&](const Rational& x) { return B.eval(x).is_zero(); });
}

// In the symmetric scheme A is odd, so A(-v) = -A(v) and at most three of
// the six roots can land in S1.
void check_antisymmetric(const QuadraticSurface& s) {
  const Poly A = s.A();
  for (int i = 0; i <= A.degree(); i += 2)
    if (!A.coeff(i).is_zero()) throw std::logic_error("symmetric candidate with non-odd A");
}

bool try_betas(const std::vector<Rational>& v, const Rational& lambda, const std::array<Rational, 3>& w,
               const std::array<Rational, 3>& s, const Rational& a, int r, Provenance prov,
               ConstructionResult& out, int& best) {
  for (long b : kBetas) {
    QuadraticSurface surf;
    if (!assemble_surface(v, lambda, w, s, a, Rational(b), surf)) continue;
    if (prov.scheme != "asymmetric-search") check_antisymmetric(surf);
    RankReport report;
    if (!certify(surf, r, report, best)) continue;
    prov.v = v;
    prov.w = w;
    prov.s = s;
    prov.lambda = lambda;
    prov.a = a;
    prov.beta = Rational(b);
    out = {surf, report, prov};
    return true;
  }
  return false;
}

// Symmetric scheme: v = {+-d1, +-d2, +-d3}, w = {-e, 0, e}, lambda = -1.
// Needs -P(e) = s^2 with P(x) = prod (x^2 - d_i^2).
bool symmetric_nodes(const std::array<Rational, 3>& d, const Rational& e, std::vector<Rational>& v,
                     std::array<Rational, 3>& w, std::array<Rational, 3>& s) {
  Rational P = 1;
  for (const auto& di : d) P *= e * e - di * di;
  if (!is_nonzero_square(-P)) return false;
  const Rational root = exact_sqrt(-P);
  v.clear();
  for (const auto& di : d) {
    v.push_back(-di);
    v.push_back(di);
  }
  std::sort(v.begin(), v.end());
  w = {-e, Rational(0), e};
  s = {-root, d[0] * d[1] * d[2], root};
  return true;
}

// First squarefree integer a, in the order 1, -1, 2, -2, ..., such that
// exactly r of the classes match it.
bool pick_scale(const std::vector<Integer>& classes, int r, Rational& a) {
  std::map<Integer, int> counts;
  for (const auto& k : classes) ++counts[k];
  auto order = [](const Integer& x, const Integer& y) {
    const int c = cmp(abs(x), abs(y));
    return c != 0 ? c < 0 : x > y;
  };
  if (r == 0) {
    for (long n = 1;; ++n)
      for (long sgn : {1L, -1L}) {
        const Integer k = Integer(n * sgn);
        if (squarefree_kernel(Rational(k)) != k) continue;
        if (!counts.count(k)) {
          a = Rational(k);
          return true;
        }
      }
  }
  std::vector<Integer> hits;
  for (const auto& [k, c] : counts)
    if (c == r) hits.push_back(k);
  if (hits.empty()) return false;
  std::sort(hits.begin(), hits.end(), order);
  a = Rational(hits.front());
  return true;
}

bool base_configuration(int r, ConstructionResult& out, int& best) {
  const std::array<Rational, 3> d = {2, 3, 5};
  const Rational e = 1;
  std::vector<Rational> v;
  std::array<Rational, 3> w, s;
  if (!symmetric_nodes(d, e, v, w, s)) return false;
  std::vector<Integer> classes;
  for (const auto& x : v) classes.push_back(squarefree_kernel(x * (x * x - e * e)));
  Rational a;
  if (!pick_scale(classes, r, a)) return false;
  Provenance prov;
  prov.scheme = "symmetric-base";
  for (long b : kBetas) {
    QuadraticSurface surf;
    if (!assemble_surface(v, -1, w, s, a, Rational(b), surf)) continue;
    check_antisymmetric(surf);
    RankReport report;
    if (!certify(surf, r, report, best)) continue;
    prov.v = v;
    prov.w = w;
    prov.s = s;
    prov.lambda = -1;
    prov.a = a;
    prov.beta = Rational(b);
    out = {surf, report, prov};
    return true;
  }
  return false;
}

bool symmetric_search(const ConstructionParams& P, ConstructionResult& out, int& best, std::uint64_t& used) {
  std::mt19937_64 rng(P.seed);
  std::map<Rational, std::map<Integer, std::vector<Rational>>> cache;
  while (used < P.budget) {
    const Rational e(Integer(1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(P.e_num_max)))),
                     Integer(1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(P.e_den_max)))));
    auto [it, fresh] = cache.try_emplace(e);
    if (fresh)
      for (long n = 1; n <= P.d_max; ++n) {
        const Rational d(n);
        if (d == e) continue;
        it->second[abs(squarefree_kernel(d * (d * d - e * e)))].push_back(d);
      }
    std::vector<const std::pair<const Integer, std::vector<Rational>>*> eligible;
    for (const auto& g : it->second)
      if (g.second.size() >= static_cast<std::size_t>(std::max(P.r, 1))) eligible.push_back(&g);
    ++used;
    if (eligible.empty()) continue;
    const auto& group = *eligible[draw(rng, eligible.size())];
    std::vector<Rational> chosen = sample(rng, group.second, static_cast<std::size_t>(P.r));
    if (chosen.size() < 3) {
      std::vector<Rational> rest;
      for (long n = 1; n <= P.d_max; ++n) {
        const Rational d(n);
        if (d != e && abs(squarefree_kernel(d * (d * d - e * e))) != group.first) rest.push_back(d);
      }
      for (auto& x : sample(rng, rest, 3 - chosen.size())) chosen.push_back(x);
    }
    std::sort(chosen.begin(), chosen.end());
    const std::array<Rational, 3> d = {chosen[0], chosen[1], chosen[2]};
    std::vector<Rational> v;
    std::array<Rational, 3> w, s;
    if (!symmetric_nodes(d, e, v, w, s)) continue;
    Provenance prov;
    prov.scheme = "symmetric-search";
    prov.seed = P.seed;
    prov.candidates = used;
    if (try_betas(v, -1, w, s, Rational(group.first), P.r, prov, out, best)) return true;
  }
  return false;
}

bool asymmetric_search(const ConstructionParams& P, ConstructionResult& out, int& best, std::uint64_t& used) {
  std::mt19937_64 rng(P.seed);
  const std::array<Rational, 3> w = {-1, 0, 1};
  std::set<Rational> pool_set;
  for (long m = 1; m <= P.v_den_max; ++m)
    for (long n = -P.v_height; n <= P.v_height; ++n) {
      const Rational v{Integer(n), Integer(m)};
      if (v != w[0] && v != w[1] && v != w[2]) pool_set.insert(v);
    }
  const std::vector<Rational> pool(pool_set.begin(), pool_set.end());
  std::map<Integer, std::vector<Rational>> groups;
  std::map<Rational, Integer> klass;
  for (const auto& v : pool) {
    const Integer k = squarefree_kernel(v * (v * v - 1));
    groups[k].push_back(v);
    klass[v] = k;
  }
  std::vector<const std::pair<const Integer, std::vector<Rational>>*> eligible;
  for (const auto& g : groups)
    if (g.second.size() >= static_cast<std::size_t>(P.r)) eligible.push_back(&g);
  if (eligible.empty()) return false;

  while (used < P.budget) {
    ++used;
    const auto& group = *eligible[draw(rng, eligible.size())];
    std::vector<Rational> v = sample(rng, group.second, static_cast<std::size_t>(P.r));
    std::vector<Rational> rest;
    for (const auto& x : pool)
      if (klass[x] != group.first) rest.push_back(x);
    for (auto& x : sample(rng, rest, static_cast<std::size_t>(6 - P.r))) v.push_back(x);
    std::sort(v.begin(), v.end());

    // lambda from D(w_0) being a square, then D(w_1), D(w_2) must follow.
    Rational prod0 = 1;
    for (const auto& x : v) prod0 *= w[0] - x;
    const Rational lambda(squarefree_kernel(prod0));
    if (lambda == Rational(1)) continue;
    std::array<Rational, 3> s;
    bool squares = true;
    for (int j = 0; j < 3 && squares; ++j) {
      Rational Dw = lambda;
      for (const auto& x : v) Dw *= w[j] - x;
      squares = is_nonzero_square(Dw);
      if (squares) s[j] = exact_sqrt(Dw);
    }
    if (!squares) continue;
    Provenance prov;
    prov.scheme = "asymmetric-search";
    prov.seed = P.seed;
    prov.candidates = used;
    if (try_betas(v, lambda, w, s, Rational(group.first), P.r, prov, out, best)) return true;
  }
  return false;
}

}  // namespace

ConstructionResult construct_surface(const ConstructionParams& params) {
  if (params.r < 0 || params.r > 6) throw std::invalid_argument("target rank must be in 0..6");
  ConstructionResult out;
  int best = -1;
  if (base_configuration(params.r, out, best)) {
    out.provenance.seed = params.seed;
    return out;
  }
  std::uint64_t used = 0;
  const bool ok = params.r <= 3 ? symmetric_search(params, out, best, used) : asymmetric_search(params, out, best, used);
  if (ok) return out;
  throw BudgetExhaustedError("no certified rank-" + std::to_string(params.r) + " surface within " +
                                 std::to_string(params.budget) + " candidates",
                             best, used, params.seed);
}

}  // namespace quadrank
