#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lvrough/errors.hpp"
#include "lvrough/relation.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

enum class Direction { upper, lower };

inline std::string to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

/// Upper approximation: o ↦ ⋁_d (R(d,o) ⊛ (U(d) → Q(d)))
inline LSubset upper_approx(const Relation& r, const LSubset& q) {
  require_same_universe(r.uni(), q.uni());
  const Universe& u = r.uni();
  const Lattice& L = u.lat();
  std::vector<Elem> out(u.n_points());
  for (int o = 0; o < u.n_points(); ++o) {
    Elem acc = L.bot();
    for (int d = 0; d < u.n_points(); ++d)
      acc = L.join(acc, L.tensor(r.at(d, o), L.impl(u.mem(d), q.at(d))));
    out[o] = acc;
  }
  return LSubset(r.uni_ptr(), std::move(out));
}

/// Lower approximation: o ↦ ⋀_d (U(o) ⊛ (R(d,o) → Q(d)))
inline LSubset lower_approx(const Relation& r, const LSubset& q) {
  require_same_universe(r.uni(), q.uni());
  const Universe& u = r.uni();
  const Lattice& L = u.lat();
  std::vector<Elem> out(u.n_points());
  for (int o = 0; o < u.n_points(); ++o) {
    Elem acc = L.top();
    for (int d = 0; d < u.n_points(); ++d)
      acc = L.meet(acc, L.tensor(u.mem(o), L.impl(r.at(d, o), q.at(d))));
    out[o] = acc;
  }
  return LSubset(r.uni_ptr(), std::move(out));
}

/// Map P(U) → P(U) with a direction tag. Intensional kinds (induced by a
/// relation, named builtin, closure) apply lazily; the table kind fixes the
/// whole graph in canonical powerset order.
class Operator {
 public:
  enum class Kind { induced, builtin, table, closure };

  static Operator induced_upper(Relation r) {
    Operator op(r.uni_ptr(), Direction::upper, Kind::induced);
    op.rel_ = std::make_shared<Relation>(std::move(r));
    return op;
  }

  static Operator induced_lower(Relation r) {
    Operator op(r.uni_ptr(), Direction::lower, Kind::induced);
    op.rel_ = std::make_shared<Relation>(std::move(r));
    return op;
  }

  static Operator builtin(UniversePtr u, const std::string& name, Direction dir) {
    if (name == "identity") {
      // either direction
    } else if (name == "h1_largest") {
      if (dir != Direction::upper) throw DirectionMismatch("h1_largest is an upper operator");
    } else if (name == "l1_least") {
      if (dir != Direction::lower) throw DirectionMismatch("l1_least is a lower operator");
    } else {
      throw ParseError("unknown builtin operator '" + name + "'");
    }
    Operator op(std::move(u), dir, Kind::builtin);
    op.builtin_name_ = name;
    return op;
  }

  static Operator table(UniversePtr u, Direction dir, std::vector<LSubset> entries,
                        std::uint64_t cap = kDefaultPowersetCap) {
    auto pidx = std::make_shared<PowersetIndex>(u, cap);
    if (entries.size() != pidx->size())
      throw ParseError("operator table has " + std::to_string(entries.size()) +
                       " entries, powerset has " + std::to_string(pidx->size()));
    for (const LSubset& e : entries) require_same_universe(*u, e.uni());
    Operator op(std::move(u), dir, Kind::table);
    op.pidx_ = std::move(pidx);
    op.entries_ = std::move(entries);
    return op;
  }

  static Operator closure(UniversePtr u, Direction dir,
                          std::function<LSubset(const LSubset&)> fn) {
    Operator op(std::move(u), dir, Kind::closure);
    op.fn_ = std::move(fn);
    return op;
  }

  Direction direction() const { return dir_; }
  Kind kind() const { return kind_; }
  const Universe& uni() const { return *uni_; }
  const UniversePtr& uni_ptr() const { return uni_; }
  const std::string& builtin_name() const { return builtin_name_; }
  const Relation& relation() const { return *rel_; }
  const std::vector<LSubset>& entries() const { return entries_; }

  LSubset apply(const LSubset& q) const {
    require_same_universe(*uni_, q.uni());
    switch (kind_) {
      case Kind::induced:
        return dir_ == Direction::upper ? upper_approx(*rel_, q) : lower_approx(*rel_, q);
      case Kind::builtin:
        return apply_builtin(q);
      case Kind::table:
        return entries_[pidx_->index_of(q)];
      case Kind::closure:
        return fn_(q);
    }
    throw ParseError("corrupt operator kind");
  }

 private:
  Operator(UniversePtr u, Direction dir, Kind kind)
      : uni_(std::move(u)), dir_(dir), kind_(kind) {}

  LSubset apply_builtin(const LSubset& q) const {
    const Universe& u = *uni_;
    const Lattice& L = u.lat();
    if (builtin_name_ == "identity") return q;
    std::vector<Elem> out(u.n_points());
    if (builtin_name_ == "h1_largest") {
      // a ↦ ⋁_b (Q(b) ⊛ (U(b) → U(a)))
      for (int a = 0; a < u.n_points(); ++a) {
        Elem acc = L.bot();
        for (int b = 0; b < u.n_points(); ++b)
          acc = L.join(acc, L.tensor(q.at(b), L.impl(u.mem(b), u.mem(a))));
        out[a] = acc;
      }
    } else {
      // l1_least: a ↦ U(a) ∧ ⋀_d Q(d)
      Elem inf = L.top();
      for (int d = 0; d < u.n_points(); ++d) inf = L.meet(inf, q.at(d));
      for (int a = 0; a < u.n_points(); ++a) out[a] = L.meet(u.mem(a), inf);
    }
    return LSubset(uni_, std::move(out));
  }

  UniversePtr uni_;
  Direction dir_;
  Kind kind_;
  std::shared_ptr<const Relation> rel_;
  std::string builtin_name_;
  std::shared_ptr<const PowersetIndex> pidx_;
  std::vector<LSubset> entries_;
  std::function<LSubset(const LSubset&)> fn_;
};

inline Operator tabulate(const Operator& op, std::uint64_t cap = kDefaultPowersetCap) {
  PowersetIndex pidx(op.uni_ptr(), cap);
  std::vector<LSubset> entries;
  entries.reserve(pidx.size());
  for (std::uint64_t i = 0; i < pidx.size(); ++i) entries.push_back(op.apply(pidx.at(i)));
  return Operator::table(op.uni_ptr(), op.direction(), std::move(entries), cap);
}

/// Extensional equality over the whole powerset.
inline bool tables_equal(const Operator& a, const Operator& b,
                         std::uint64_t cap = kDefaultPowersetCap) {
  require_same_universe(a.uni(), b.uni());
  if (a.direction() != b.direction()) return false;
  PowersetIndex pidx(a.uni_ptr(), cap);
  for (std::uint64_t i = 0; i < pidx.size(); ++i) {
    LSubset q = pidx.at(i);
    if (a.apply(q) != b.apply(q)) return false;
  }
  return true;
}

}  // namespace lvrough
