#pragma once

#include <vector>

#include "lvrough/approx.hpp"
#include "lvrough/errors.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

/// Inner product (degree of intersection): ⋁_d (M(d) ⊛ (U(d) → Q(d)))
inline Elem inner_product(const LSubset& m, const LSubset& q) {
  require_same_universe(m.uni(), q.uni());
  const Universe& u = m.uni();
  const Lattice& L = u.lat();
  Elem acc = L.bot();
  for (int d = 0; d < u.n_points(); ++d)
    acc = L.join(acc, L.tensor(m.at(d), L.impl(u.mem(d), q.at(d))));
  return acc;
}

/// Subsethood degree: ⋀_b (U(b) ⊛ (M(b) → Q(b)))
inline Elem subsethood(const LSubset& m, const LSubset& q) {
  require_same_universe(m.uni(), q.uni());
  const Universe& u = m.uni();
  const Lattice& L = u.lat();
  Elem acc = L.top();
  for (int b = 0; b < u.n_points(); ++b)
    acc = L.meet(acc, L.tensor(u.mem(b), L.impl(m.at(b), q.at(b))));
  return acc;
}

/// Outer product: S(¬M, Q)
inline Elem outer_product(const LSubset& m, const LSubset& q) {
  return subsethood(neg(m), q);
}

/// Upper inverse: H⁻¹(Q)(d) = I(U(d) ∧ H(U_d), Q). The per-point subsets
/// U(d) ∧ H(U_d) are materialized once; the result is a lazy operator.
inline Operator upper_inverse(const Operator& h) {
  if (h.direction() != Direction::upper)
    throw DirectionMismatch("upper_inverse needs an upper operator");
  const UniversePtr u = h.uni_ptr();
  const Lattice& L = u->lat();
  auto rows = std::make_shared<std::vector<LSubset>>();
  rows->reserve(u->n_points());
  for (int d = 0; d < u->n_points(); ++d) {
    LSubset hd = h.apply(point_subset(u, d));
    std::vector<Elem> vals(u->n_points());
    for (int x = 0; x < u->n_points(); ++x) vals[x] = L.meet(u->mem(d), hd.at(x));
    rows->emplace_back(u, std::move(vals));
  }
  return Operator::closure(u, Direction::upper, [u, rows](const LSubset& q) {
    std::vector<Elem> out(u->n_points());
    for (int d = 0; d < u->n_points(); ++d) out[d] = inner_product((*rows)[d], q);
    return LSubset(u, std::move(out));
  });
}

/// Lower inverse: L~1(Q)(b) = O(L(U_{X−{b}}), Q). Needs an MV lattice.
inline Operator lower_inverse(const Operator& lop) {
  if (lop.direction() != Direction::lower)
    throw DirectionMismatch("lower_inverse needs a lower operator");
  const UniversePtr u = lop.uni_ptr();
  if (!u->lat().caps().mv_algebra) throw RequiresMV("lower_inverse needs an MV lattice");
  auto rows = std::make_shared<std::vector<LSubset>>();
  rows->reserve(u->n_points());
  for (int b = 0; b < u->n_points(); ++b) rows->push_back(lop.apply(copoint_subset(u, b)));
  return Operator::closure(u, Direction::lower, [u, rows](const LSubset& q) {
    std::vector<Elem> out(u->n_points());
    for (int b = 0; b < u->n_points(); ++b) out[b] = outer_product((*rows)[b], q);
    return LSubset(u, std::move(out));
  });
}

}  // namespace lvrough
