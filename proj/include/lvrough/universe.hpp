#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lvrough/errors.hpp"
#include "lvrough/lattice.hpp"

namespace lvrough {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Finite point set X with a fixed membership map into the lattice. Subsets
/// and relations hold a pointer to their universe and are validated against
/// its bounds on construction.
class Universe {
 public:
  static UniversePtr make(LatticePtr lattice, std::vector<std::string> points,
                          std::vector<Elem> membership) {
    if (!lattice) throw ParseError("universe needs a lattice");
    if (points.empty()) throw ParseError("universe needs at least one point");
    if (points.size() != membership.size())
      throw ParseError("membership size does not match point count");
    Universe u;
    u.lattice_ = std::move(lattice);
    u.points_ = std::move(points);
    u.membership_ = std::move(membership);
    for (int i = 0; i < static_cast<int>(u.points_.size()); ++i) {
      if (u.index_.count(u.points_[i])) throw ParseError("duplicate point '" + u.points_[i] + "'");
      u.index_[u.points_[i]] = i;
      if (u.membership_[i] < 0 || u.membership_[i] >= u.lattice_->size())
        throw ParseError("membership value out of carrier range");
    }
    u.is_constant_ = true;
    for (Elem v : u.membership_)
      if (v != u.membership_[0]) u.is_constant_ = false;
    return std::make_shared<Universe>(std::move(u));
  }

  const Lattice& lat() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int n_points() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(int i) const { return points_[i]; }
  Elem mem(int i) const { return membership_[i]; }
  const std::vector<Elem>& membership() const { return membership_; }
  bool is_constant() const { return is_constant_; }

  int point_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownPoint("no point named '" + name + "'");
    return it->second;
  }

  bool same_as(const Universe& other) const {
    return this == &other ||
           (points_ == other.points_ && membership_ == other.membership_ &&
            lattice_->same_as(*other.lattice_));
  }

 private:
  LatticePtr lattice_;
  std::vector<std::string> points_;
  std::vector<Elem> membership_;
  std::map<std::string, int> index_;
  bool is_constant_ = false;
};

inline void require_same_universe(const Universe& a, const Universe& b) {
  if (!a.same_as(b)) throw UniverseMismatch("operands live on different universes");
}

/// Member of P(U): values bounded pointwise by the universe membership.
class LSubset {
 public:
  LSubset(UniversePtr uni, std::vector<Elem> values)
      : uni_(std::move(uni)), values_(std::move(values)) {
    const Universe& u = *uni_;
    if (static_cast<int>(values_.size()) != u.n_points())
      throw ParseError("subset value count does not match universe");
    for (int i = 0; i < u.n_points(); ++i)
      if (!u.lat().leq(values_[i], u.mem(i)))
        throw BoundViolation("subset exceeds universe at point '" + u.point_name(i) + "'");
  }

  const Universe& uni() const { return *uni_; }
  const UniversePtr& uni_ptr() const { return uni_; }
  Elem at(int i) const { return values_[i]; }
  const std::vector<Elem>& values() const { return values_; }

  friend bool operator==(const LSubset& a, const LSubset& b) {
    require_same_universe(a.uni(), b.uni());
    return a.values_ == b.values_;
  }
  friend bool operator!=(const LSubset& a, const LSubset& b) { return !(a == b); }

  /// Pointwise order.
  bool leq(const LSubset& other) const {
    require_same_universe(uni(), other.uni());
    for (int i = 0; i < uni().n_points(); ++i)
      if (!uni().lat().leq(values_[i], other.values_[i])) return false;
    return true;
  }

  std::string str() const {
    std::string out = "{";
    for (int i = 0; i < uni().n_points(); ++i) {
      if (i) out += ", ";
      out += uni().point_name(i) + ": " + uni().lat().label(values_[i]).str();
    }
    return out + "}";
  }

 private:
  UniversePtr uni_;
  std::vector<Elem> values_;
};

inline LSubset zero_subset(const UniversePtr& u) {
  return LSubset(u, std::vector<Elem>(u->n_points(), u->lat().bot()));
}

inline LSubset full_subset(const UniversePtr& u) {
  return LSubset(u, u->membership());
}

namespace detail {
template <typename F>
LSubset pointwise(const LSubset& w, const LSubset& v, F f) {
  require_same_universe(w.uni(), v.uni());
  std::vector<Elem> out(w.uni().n_points());
  for (int i = 0; i < w.uni().n_points(); ++i) out[i] = f(w.at(i), v.at(i));
  return LSubset(w.uni_ptr(), std::move(out));
}
}  // namespace detail

inline LSubset join(const LSubset& w, const LSubset& v) {
  const Lattice& L = w.uni().lat();
  return detail::pointwise(w, v, [&](Elem a, Elem b) { return L.join(a, b); });
}
inline LSubset meet(const LSubset& w, const LSubset& v) {
  const Lattice& L = w.uni().lat();
  return detail::pointwise(w, v, [&](Elem a, Elem b) { return L.meet(a, b); });
}
inline LSubset tensor(const LSubset& w, const LSubset& v) {
  const Lattice& L = w.uni().lat();
  return detail::pointwise(w, v, [&](Elem a, Elem b) { return L.tensor(a, b); });
}

/// ¬W(d) = U(d) ⊛ (W(d) → 0)
inline LSubset neg(const LSubset& w) {
  const Universe& u = w.uni();
  const Lattice& L = u.lat();
  std::vector<Elem> out(u.n_points());
  for (int i = 0; i < u.n_points(); ++i) out[i] = L.tensor(u.mem(i), L.neg(w.at(i)));
  return LSubset(w.uni_ptr(), std::move(out));
}

inline LSubset point_subset(const UniversePtr& u, int d) {
  if (d < 0 || d >= u->n_points()) throw UnknownPoint("point index out of range");
  std::vector<Elem> out(u->n_points(), u->lat().bot());
  out[d] = u->mem(d);
  return LSubset(u, std::move(out));
}

inline LSubset copoint_subset(const UniversePtr& u, int d) {
  if (d < 0 || d >= u->n_points()) throw UnknownPoint("point index out of range");
  std::vector<Elem> out = u->membership();
  out[d] = u->lat().bot();
  return LSubset(u, std::move(out));
}

/// Q = ⋁_b (Q(b) ⊛ (U(b) → U_b)); holds on every GL lattice.
inline bool decompose_join_check(const LSubset& q) {
  const Universe& u = q.uni();
  const Lattice& L = u.lat();
  for (int x = 0; x < u.n_points(); ++x) {
    Elem acc = L.bot();
    for (int b = 0; b < u.n_points(); ++b) {
      Elem pb = b == x ? u.mem(x) : L.bot();
      acc = L.join(acc, L.tensor(q.at(b), L.impl(u.mem(b), pb)));
    }
    if (acc != q.at(x)) return false;
  }
  return true;
}

/// Q = ⋀_h (U ∧ ((Q(h) → 0) → U_{X−{h}})); needs MV and constant U.
inline bool decompose_meet_check(const LSubset& q) {
  const Universe& u = q.uni();
  const Lattice& L = u.lat();
  if (!L.caps().mv_algebra) throw RequiresMV("meet decomposition needs an MV lattice");
  if (!u.is_constant())
    throw RequiresConstantUniverse("meet decomposition needs a constant universe");
  for (int x = 0; x < u.n_points(); ++x) {
    Elem acc = L.top();
    for (int h = 0; h < u.n_points(); ++h) {
      Elem cp = h == x ? L.bot() : u.mem(x);
      acc = L.meet(acc, L.meet(u.mem(x), L.impl(L.neg(q.at(h)), cp)));
    }
    if (acc != q.at(x)) return false;
  }
  return true;
}

inline constexpr std::uint64_t kDefaultPowersetCap = 1000000;

/// Canonical order on P(U): mixed radix, points in declared order, per-point
/// digits ranging over the carrier elements below U(x) in carrier-index order.
/// This order is the contract for extensional operator tables and witness
/// reporting.
class PowersetIndex {
 public:
  explicit PowersetIndex(UniversePtr uni, std::uint64_t cap = kDefaultPowersetCap)
      : uni_(std::move(uni)) {
    const Universe& u = *uni_;
    const Lattice& L = u.lat();
    candidates_.resize(u.n_points());
    size_ = 1;
    for (int x = 0; x < u.n_points(); ++x) {
      for (Elem g = 0; g < L.size(); ++g)
        if (L.leq(g, u.mem(x))) candidates_[x].push_back(g);
      std::uint64_t radix = candidates_[x].size();
      if (size_ > cap / radix)
        throw PowersetTooLarge("powerset size exceeds cap " + std::to_string(cap));
      size_ *= radix;
    }
  }

  std::uint64_t size() const { return size_; }
  const UniversePtr& uni_ptr() const { return uni_; }

  LSubset at(std::uint64_t idx) const {
    const Universe& u = *uni_;
    std::vector<Elem> vals(u.n_points());
    for (int x = u.n_points() - 1; x >= 0; --x) {
      std::uint64_t r = candidates_[x].size();
      vals[x] = candidates_[x][idx % r];
      idx /= r;
    }
    return LSubset(uni_, std::move(vals));
  }

  std::uint64_t index_of(const LSubset& w) const {
    require_same_universe(*uni_, w.uni());
    std::uint64_t idx = 0;
    for (int x = 0; x < uni_->n_points(); ++x) {
      const auto& cand = candidates_[x];
      std::uint64_t digit = cand.size();
      for (std::uint64_t k = 0; k < cand.size(); ++k)
        if (cand[k] == w.at(x)) digit = k;
      if (digit == cand.size()) throw BoundViolation("subset value not below universe");
      idx = idx * cand.size() + digit;
    }
    return idx;
  }

 private:
  UniversePtr uni_;
  std::vector<std::vector<Elem>> candidates_;
  std::uint64_t size_ = 1;
};

inline std::vector<LSubset> enumerate_powerset(const UniversePtr& u,
                                               std::uint64_t cap = kDefaultPowersetCap) {
  PowersetIndex idx(u, cap);
  std::vector<LSubset> out;
  out.reserve(idx.size());
  for (std::uint64_t i = 0; i < idx.size(); ++i) out.push_back(idx.at(i));
  return out;
}

}  // namespace lvrough
