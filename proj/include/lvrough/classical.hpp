#pragma once

#include <vector>

#include "lvrough/lattice.hpp"

namespace lvrough {
namespace classical {

/// Independent implementation of the classical-universe operators (crisp
/// ambient set, membership maps X → L, relation as a plain matrix). Coded
/// from the classical formulas directly, on raw vectors, so the degeneracy
/// comparison does not share code with the main engine.

inline std::vector<Elem> upper(const Lattice& L, const std::vector<Elem>& rel, int n,
                               const std::vector<Elem>& q) {
  std::vector<Elem> out(n);
  for (int o = 0; o < n; ++o) {
    Elem acc = L.bot();
    for (int d = 0; d < n; ++d) acc = L.join(acc, L.tensor(rel[d * n + o], q[d]));
    out[o] = acc;
  }
  return out;
}

inline std::vector<Elem> lower(const Lattice& L, const std::vector<Elem>& rel, int n,
                               const std::vector<Elem>& q) {
  std::vector<Elem> out(n);
  for (int o = 0; o < n; ++o) {
    Elem acc = L.top();
    for (int d = 0; d < n; ++d) acc = L.meet(acc, L.impl(rel[d * n + o], q[d]));
    out[o] = acc;
  }
  return out;
}

inline Elem inner(const Lattice& L, const std::vector<Elem>& m, const std::vector<Elem>& q) {
  Elem acc = L.bot();
  for (std::size_t d = 0; d < m.size(); ++d) acc = L.join(acc, L.tensor(m[d], q[d]));
  return acc;
}

inline Elem subset_degree(const Lattice& L, const std::vector<Elem>& m,
                          const std::vector<Elem>& q) {
  Elem acc = L.top();
  for (std::size_t d = 0; d < m.size(); ++d) acc = L.meet(acc, L.impl(m[d], q[d]));
  return acc;
}

inline Elem outer(const Lattice& L, const std::vector<Elem>& m, const std::vector<Elem>& q) {
  Elem acc = L.top();
  for (std::size_t d = 0; d < m.size(); ++d)
    acc = L.meet(acc, L.impl(L.impl(m[d], L.bot()), q[d]));
  return acc;
}

/// H⁻¹(Q)(d) = I(H(χ_d), Q) for any map h on L^X given extensionally through
/// a callback.
template <typename H>
std::vector<Elem> upper_inverse(const Lattice& L, int n, H h, const std::vector<Elem>& q) {
  std::vector<Elem> out(n);
  for (int d = 0; d < n; ++d) {
    std::vector<Elem> chi(n, L.bot());
    chi[d] = L.top();
    out[d] = inner(L, h(chi), q);
  }
  return out;
}

/// L₋₁(Q)(d) = O(L(χ_{X−{d}}), Q).
template <typename Lo>
std::vector<Elem> lower_inverse(const Lattice& L, int n, Lo lo, const std::vector<Elem>& q) {
  std::vector<Elem> out(n);
  for (int d = 0; d < n; ++d) {
    std::vector<Elem> chi(n, L.top());
    chi[d] = L.bot();
    out[d] = outer(L, lo(chi), q);
  }
  return out;
}

inline bool is_reflexive(const Lattice& L, const std::vector<Elem>& rel, int n) {
  for (int a = 0; a < n; ++a)
    if (rel[a * n + a] != L.top()) return false;
  return true;
}

inline bool is_symmetric(const std::vector<Elem>& rel, int n) {
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d)
      if (rel[a * n + d] != rel[d * n + a]) return false;
  return true;
}

inline bool is_transitive(const Lattice& L, const std::vector<Elem>& rel, int n) {
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d)
      for (int h = 0; h < n; ++h)
        if (!L.leq(L.tensor(rel[a * n + d], rel[d * n + h]), rel[a * n + h])) return false;
  return true;
}

}  // namespace classical
}  // namespace lvrough
