#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lvrough/errors.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

struct RelationProperties {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool euclidean = false;
  bool mediate = false;

  bool tolerance() const { return reflexive && symmetric; }
  bool preorder() const { return reflexive && transitive; }
  bool equivalence() const { return reflexive && symmetric && transitive; }

  /// Mask use: every flag set here must hold on the candidate.
  bool satisfied_by(const RelationProperties& actual) const {
    return (!reflexive || actual.reflexive) && (!symmetric || actual.symmetric) &&
           (!transitive || actual.transitive) && (!euclidean || actual.euclidean) &&
           (!mediate || actual.mediate);
  }
};

/// L-valued relation on a universe: matrix bounded by U(a) ∧ U(d). Property
/// predicates are memoized; a Relation value never changes after construction.
class Relation {
 public:
  Relation(UniversePtr uni, std::vector<Elem> matrix)
      : uni_(std::move(uni)), matrix_(std::move(matrix)) {
    const Universe& u = *uni_;
    const int n = u.n_points();
    if (static_cast<int>(matrix_.size()) != n * n)
      throw ParseError("relation matrix size does not match universe");
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d)
        if (!u.lat().leq(at(a, d), u.lat().meet(u.mem(a), u.mem(d))))
          throw BoundViolation("relation exceeds U(a)∧U(d) at (" + u.point_name(a) + ", " +
                               u.point_name(d) + ")");
  }

  const Universe& uni() const { return *uni_; }
  const UniversePtr& uni_ptr() const { return uni_; }
  Elem at(int a, int d) const { return matrix_[a * uni_->n_points() + d]; }
  const std::vector<Elem>& matrix() const { return matrix_; }

  friend bool operator==(const Relation& a, const Relation& b) {
    require_same_universe(a.uni(), b.uni());
    return a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

  bool is_reflexive() const {
    if (!reflexive_) {
      bool ok = true;
      for (int a = 0; a < n() && ok; ++a) ok = L().leq(uni_->mem(a), at(a, a));
      reflexive_ = ok;
    }
    return *reflexive_;
  }

  bool is_symmetric() const {
    if (!symmetric_) {
      bool ok = true;
      for (int a = 0; a < n() && ok; ++a)
        for (int d = 0; d < n() && ok; ++d) ok = at(a, d) == at(d, a);
      symmetric_ = ok;
    }
    return *symmetric_;
  }

  /// R(a,d) ⊛ (U(d) → R(d,h)) ≤ R(a,h)
  bool is_transitive() const {
    if (!transitive_) {
      bool ok = true;
      for (int a = 0; a < n() && ok; ++a)
        for (int d = 0; d < n() && ok; ++d)
          for (int h = 0; h < n() && ok; ++h)
            ok = L().leq(L().tensor(at(a, d), L().impl(uni_->mem(d), at(d, h))), at(a, h));
      transitive_ = ok;
    }
    return *transitive_;
  }

  /// R(d,a) ⊛ (U(d) → R(d,h)) ≤ R(a,h)
  bool is_euclidean() const {
    if (!euclidean_) {
      bool ok = true;
      for (int d = 0; d < n() && ok; ++d)
        for (int a = 0; a < n() && ok; ++a)
          for (int h = 0; h < n() && ok; ++h)
            ok = L().leq(L().tensor(at(d, a), L().impl(uni_->mem(d), at(d, h))), at(a, h));
      euclidean_ = ok;
    }
    return *euclidean_;
  }

  /// R(d,a) ≤ ⋁_h (R(d,h) ⊛ (U(h) → R(h,a)))
  bool is_mediate() const {
    if (!mediate_) {
      bool ok = true;
      for (int d = 0; d < n() && ok; ++d)
        for (int a = 0; a < n() && ok; ++a) {
          Elem sup = L().bot();
          for (int h = 0; h < n(); ++h)
            sup = L().join(sup, L().tensor(at(d, h), L().impl(uni_->mem(h), at(h, a))));
          ok = L().leq(at(d, a), sup);
        }
      mediate_ = ok;
    }
    return *mediate_;
  }

  RelationProperties properties() const {
    RelationProperties p;
    p.reflexive = is_reflexive();
    p.symmetric = is_symmetric();
    p.transitive = is_transitive();
    p.euclidean = is_euclidean();
    p.mediate = is_mediate();
    return p;
  }

 private:
  int n() const { return uni_->n_points(); }
  const Lattice& L() const { return uni_->lat(); }

  UniversePtr uni_;
  std::vector<Elem> matrix_;
  mutable std::optional<bool> reflexive_, symmetric_, transitive_, euclidean_, mediate_;
};

/// R(a,b) = U_a(b): diagonal relation, the least equivalence.
inline Relation identity_relation(const UniversePtr& u) {
  const int n = u->n_points();
  std::vector<Elem> m(n * n, u->lat().bot());
  for (int a = 0; a < n; ++a) m[a * n + a] = u->mem(a);
  return Relation(u, std::move(m));
}

/// R(a,b) = U(a) ∧ U(b): the largest relation, the largest equivalence.
inline Relation full_relation(const UniversePtr& u) {
  const int n = u->n_points();
  std::vector<Elem> m(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a * n + b] = u->lat().meet(u->mem(a), u->mem(b));
  return Relation(u, std::move(m));
}

inline Relation zero_relation(const UniversePtr& u) {
  const int n = u->n_points();
  return Relation(u, std::vector<Elem>(n * n, u->lat().bot()));
}

inline Relation transpose(const Relation& r) {
  const int n = r.uni().n_points();
  std::vector<Elem> m(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a * n + b] = r.at(b, a);
  return Relation(r.uni_ptr(), std::move(m));
}

inline constexpr std::uint64_t kDefaultRelationCap = 1000000;

/// Canonical order on the relation space: mixed radix over matrix cells in
/// row-major order, per-cell digits over the carrier elements below
/// U(a) ∧ U(d) in carrier-index order.
class RelationIndex {
 public:
  explicit RelationIndex(UniversePtr uni, std::uint64_t cap = kDefaultRelationCap)
      : uni_(std::move(uni)) {
    const Universe& u = *uni_;
    const Lattice& L = u.lat();
    const int n = u.n_points();
    candidates_.resize(n * n);
    size_ = 1;
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d) {
        auto& cand = candidates_[a * n + d];
        Elem bound = L.meet(u.mem(a), u.mem(d));
        for (Elem g = 0; g < L.size(); ++g)
          if (L.leq(g, bound)) cand.push_back(g);
        std::uint64_t radix = cand.size();
        if (size_ > cap / radix)
          throw RelationSpaceTooLarge("relation space exceeds cap " + std::to_string(cap));
        size_ *= radix;
      }
  }

  std::uint64_t size() const { return size_; }

  Relation at(std::uint64_t idx) const {
    std::vector<Elem> m(candidates_.size());
    for (int c = static_cast<int>(candidates_.size()) - 1; c >= 0; --c) {
      std::uint64_t r = candidates_[c].size();
      m[c] = candidates_[c][idx % r];
      idx /= r;
    }
    return Relation(uni_, std::move(m));
  }

 private:
  UniversePtr uni_;
  std::vector<std::vector<Elem>> candidates_;
  std::uint64_t size_ = 1;
};

inline std::vector<Relation> enumerate_relations(const UniversePtr& u,
                                                 const RelationProperties& filter = {},
                                                 std::uint64_t cap = kDefaultRelationCap) {
  RelationIndex idx(u, cap);
  std::vector<Relation> out;
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    Relation r = idx.at(i);
    if (filter.satisfied_by(r.properties())) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lvrough
