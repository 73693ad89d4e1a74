#include "quadrank/rank.hpp"

#include "quadrank/error.hpp"

namespace quadrank {

RankReport analyze_unchecked(const QuadraticSurface& s) {
  const Poly D = disc_x(s);
  if (D.is_zero()) throw Error(ErrorCode::DegenerateD, "D(x) = B^2 - 4AC vanishes identically");
  const Poly A = s.A();

  RankReport r;
  for (const auto& root : rational_roots(D)) {
    if (is_nonzero_square(A.eval(root.root))) r.S1.push_back(root.root);
    else r.S2.push_back(root.root);
  }
  r.factorization = factor_q(D);
  r.delta = delta_count(r.factorization);
  r.splits_completely = r.factorization.all_linear();
  r.rank_lower = static_cast<int>(r.S1.size());
  r.rank_upper = r.rank_lower + (r.splits_completely ? 0 : r.delta);
  r.exact = r.splits_completely;
  return r;
}

RankReport analyze(const QuadraticSurface& s) {
  const ValidationReport v = validate(s);
  if (!v.valid()) {
    std::string list;
    for (const auto& f : v.failures) list += (list.empty() ? "" : ",") + f;
    throw Error(ErrorCode::InvalidSurface, list);
  }
  return analyze_unchecked(s);
}

}  // namespace quadrank
