#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lvrough/approx.hpp"
#include "lvrough/errors.hpp"
#include "lvrough/product.hpp"
#include "lvrough/relation.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

struct AxiomId {
  std::string name;
  Direction family = Direction::upper;
  bool single = false;          // two-sided product-style axiom
  RelationProperties props;     // properties named by a single axiom
};

namespace detail {

enum class Term { arg, base, inv, comp2, invinv, base_inv };

struct SingleSpec {
  std::vector<Term> terms;
  bool opposite_connective = false;  // the M-axioms flip join/meet
  RelationProperties props;
};

inline const std::map<std::string, SingleSpec>& single_registry() {
  using T = Term;
  auto props = [](bool r, bool s, bool t, bool e, bool m) {
    RelationProperties p;
    p.reflexive = r;
    p.symmetric = s;
    p.transitive = t;
    p.euclidean = e;
    p.mediate = m;
    return p;
  };
  static const std::map<std::string, SingleSpec> reg = {
      {"", {{T::inv}, false, props(0, 0, 0, 0, 0)}},
      {"R", {{T::arg, T::inv}, false, props(1, 0, 0, 0, 0)}},
      {"T", {{T::invinv, T::inv}, false, props(0, 0, 1, 0, 0)}},
      {"S", {{T::base}, false, props(0, 1, 0, 0, 0)}},
      {"E", {{T::base_inv, T::inv}, false, props(0, 0, 0, 1, 0)}},
      {"M", {{T::invinv, T::inv}, true, props(0, 0, 0, 0, 1)}},
      {"RT", {{T::arg, T::invinv, T::inv}, false, props(1, 0, 1, 0, 0)}},
      {"RS", {{T::arg, T::base}, false, props(1, 1, 0, 0, 0)}},
      {"RE", {{T::arg, T::base_inv, T::inv}, false, props(1, 0, 0, 1, 0)}},
      {"TS", {{T::comp2, T::base}, false, props(0, 1, 1, 0, 0)}},
      {"TE", {{T::invinv, T::base_inv, T::inv}, false, props(0, 0, 1, 1, 0)}},
      {"TM", {{T::invinv}, false, props(0, 0, 1, 0, 1)}},
      {"SM", {{T::comp2, T::base}, true, props(0, 1, 0, 0, 1)}},
      {"RTS", {{T::arg, T::base, T::comp2}, false, props(1, 1, 1, 0, 0)}},
      {"RTE", {{T::arg, T::invinv, T::base_inv, T::inv}, false, props(1, 0, 1, 1, 0)}},
  };
  return reg;
}

}  // namespace detail

inline const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const char* c : {"H0", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "C1", "C2", "C3",
                          "C4", "C5"})
      out.push_back(c);
    for (const auto& [suffix, spec] : detail::single_registry()) out.push_back("H" + suffix);
    for (const char* c : {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "D1", "D2", "D3", "D4",
                          "D5"})
      out.push_back(c);
    for (const auto& [suffix, spec] : detail::single_registry()) out.push_back("L" + suffix);
    return out;
  }();
  return names;
}

inline AxiomId axiom_by_name(const std::string& name) {
  if (name.empty()) throw ParseError("empty axiom name");
  AxiomId ax;
  ax.name = name;
  char head = name[0];
  std::string tail = name.substr(1);
  if (head == 'H' || head == 'C')
    ax.family = Direction::upper;
  else if (head == 'L' || head == 'D')
    ax.family = Direction::lower;
  else
    throw ParseError("unknown axiom '" + name + "'");
  bool component = tail.size() == 1 && tail[0] >= '0' && tail[0] <= '9';
  if (head == 'C' || head == 'D') {
    if (!component || tail[0] < '1' || tail[0] > '5')
      throw ParseError("unknown axiom '" + name + "'");
    return ax;
  }
  if (component) {
    int k = tail[0] - '0';
    int lo = head == 'H' ? 0 : 1;
    if (k < lo || k > 7) throw ParseError("unknown axiom '" + name + "'");
    return ax;
  }
  auto it = detail::single_registry().find(tail);
  if (it == detail::single_registry().end()) throw ParseError("unknown axiom '" + name + "'");
  ax.single = true;
  ax.props = it->second.props;
  return ax;
}

struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  static CheckMode exhaustive_mode() { return CheckMode{}; }
  static CheckMode sampled(std::uint64_t seed, std::uint64_t trials) {
    return CheckMode{false, seed, trials};
  }
};

struct AxiomWitness {
  std::string where;  // quantified values at the failure
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  AxiomId axiom;
  bool holds = false;
  CheckMode mode;
  std::optional<AxiomWitness> witness;
  std::uint64_t checked_count = 0;
};

namespace detail {

/// The operator family appearing in the axiom formulas, built lazily over the
/// base operator.
struct OpSet {
  Operator base;
  Operator inv;
  Operator comp2;
  Operator invinv;
  Operator base_inv;

  static OpSet build(const Operator& op) {
    Operator inv = op.direction() == Direction::upper ? upper_inverse(op) : lower_inverse(op);
    Operator comp2 = Operator::closure(op.uni_ptr(), op.direction(), [op](const LSubset& q) {
      return op.apply(op.apply(q));
    });
    Operator invinv =
        Operator::closure(op.uni_ptr(), op.direction(), [inv](const LSubset& q) {
          return inv.apply(inv.apply(q));
        });
    Operator base_inv =
        Operator::closure(op.uni_ptr(), op.direction(), [op, inv](const LSubset& q) {
          return op.apply(inv.apply(q));
        });
    return OpSet{op, std::move(inv), std::move(comp2), std::move(invinv), std::move(base_inv)};
  }

  const Operator& get(Term t) const {
    switch (t) {
      case Term::base: return base;
      case Term::inv: return inv;
      case Term::comp2: return comp2;
      case Term::invinv: return invinv;
      case Term::base_inv: return base_inv;
      default: throw ParseError("Term::arg has no operator");
    }
  }
};

class AxiomChecker {
 public:
  AxiomChecker(const Operator& op, const AxiomId& ax, const CheckMode& mode, std::uint64_t cap)
      : op_(op), ax_(ax), mode_(mode), cap_(cap), u_(op.uni_ptr()), L_(u_->lat()) {
    if (op.direction() != ax.family)
      throw DirectionMismatch("axiom " + ax.name + " does not apply to a " +
                              to_string(op.direction()) + " operator");
    if (ax.family == Direction::lower) {
      if (!L_.caps().mv_algebra) throw RequiresMV("lower-family axioms need an MV lattice");
      if (!u_->is_constant())
        throw RequiresConstantUniverse("lower-family axioms need a constant universe");
    }
  }

  AxiomReport run() {
    report_.axiom = ax_;
    report_.mode = mode_;
    report_.holds = true;
    const std::string& n = ax_.name;
    if (ax_.single)
      check_single();
    else if (n == "H0")
      check_h0();
    else if (n == "H1" || n == "C1")
      check_scalar_law_upper();
    else if (n == "L1" || n == "D1")
      check_scalar_law_lower();
    else if (n == "H2" || n == "C2")
      check_join_preservation();
    else if (n == "L2" || n == "D2")
      check_meet_preservation();
    else if (n == "C5")
      check_c5();
    else if (n == "D5")
      check_d5();
    else
      check_pointwise();
    return std::move(report_);
  }

 private:
  enum class Cmp { leq, geq, eq };

  void fail(const std::string& where, const std::string& lhs, const std::string& rhs) {
    report_.holds = false;
    report_.witness = AxiomWitness{where, lhs, rhs};
  }

  bool subset_cmp(const LSubset& a, const LSubset& b, Cmp c) const {
    switch (c) {
      case Cmp::leq: return a.leq(b);
      case Cmp::geq: return b.leq(a);
      case Cmp::eq: return a == b;
    }
    return false;
  }

  /// (H): I(A, H(B)) = I(B, combo(A)) and the lower mirror with O.
  void check_single() {
    const SingleSpec& spec = single_registry().at(ax_.name.substr(1));
    OpSet ops = OpSet::build(op_);
    bool upper = ax_.family == Direction::upper;
    auto product = upper ? inner_product : outer_product;
    bool combo_join = upper ? !spec.opposite_connective : spec.opposite_connective;
    auto combo = [&](const LSubset& a) {
      std::optional<LSubset> acc;
      for (Term t : spec.terms) {
        LSubset piece = t == Term::arg ? a : ops.get(t).apply(a);
        if (!acc)
          acc = std::move(piece);
        else
          acc = combo_join ? join(*acc, piece) : meet(*acc, piece);
      }
      return *acc;
    };
    auto check_pair = [&](const LSubset& a, const LSubset& b) {
      ++report_.checked_count;
      Elem lhs = product(a, op_.apply(b));
      Elem rhs = product(b, combo(a));
      if (lhs != rhs) {
        fail("A=" + a.str() + ", B=" + b.str(), L_.label(lhs).str(), L_.label(rhs).str());
        return false;
      }
      return true;
    };
    if (mode_.exhaustive) {
      PowersetIndex pidx(u_, cap_);
      std::vector<LSubset> all;
      all.reserve(pidx.size());
      for (std::uint64_t i = 0; i < pidx.size(); ++i) all.push_back(pidx.at(i));
      // memoize combo over the enumerated powerset
      std::vector<std::optional<LSubset>> combos(all.size());
      for (std::uint64_t ia = 0; ia < all.size(); ++ia) {
        combos[ia] = combo(all[ia]);
        for (std::uint64_t ib = 0; ib < all.size(); ++ib) {
          ++report_.checked_count;
          Elem lhs = product(all[ia], op_.apply(all[ib]));
          Elem rhs = product(all[ib], *combos[ia]);
          if (lhs != rhs) {
            fail("A=" + all[ia].str() + ", B=" + all[ib].str(), L_.label(lhs).str(),
                 L_.label(rhs).str());
            return;
          }
        }
      }
    } else {
      std::mt19937_64 rng(mode_.seed);
      PowersetIndex pidx(u_, cap_);
      std::uniform_int_distribution<std::uint64_t> dist(0, pidx.size() - 1);
      for (std::uint64_t t = 0; t < mode_.trials; ++t)
        if (!check_pair(pidx.at(dist(rng)), pidx.at(dist(rng)))) return;
    }
  }

  /// (H0): H(U_d) ≤ U(d) as a scalar bound.
  void check_h0() {
    for (int d = 0; d < u_->n_points(); ++d) {
      LSubset hd = op_.apply(point_subset(u_, d));
      ++report_.checked_count;
      for (int x = 0; x < u_->n_points(); ++x)
        if (!L_.leq(hd.at(x), u_->mem(d))) {
          fail("d=" + u_->point_name(d) + ", at=" + u_->point_name(x),
               L_.label(hd.at(x)).str(), L_.label(u_->mem(d)).str());
          return;
        }
    }
  }

  /// (H1): for β ≤ α and ⋁Q ≤ α: H(β⊛(α→Q)) = β⊛(α→H(Q)).
  void check_scalar_law_upper() {
    for_quantified([&](const LSubset& q, Elem alpha, Elem beta) {
      Elem sup = L_.bot();
      for (int x = 0; x < u_->n_points(); ++x) sup = L_.join(sup, q.at(x));
      if (!L_.leq(beta, alpha) || !L_.leq(sup, alpha)) return true;  // out of scope tuple
      std::vector<Elem> scaled(u_->n_points());
      for (int x = 0; x < u_->n_points(); ++x)
        scaled[x] = L_.tensor(beta, L_.impl(alpha, q.at(x)));
      LSubset lhs = op_.apply(LSubset(u_, std::move(scaled)));
      LSubset hq = op_.apply(q);
      std::vector<Elem> rhs_v(u_->n_points());
      for (int x = 0; x < u_->n_points(); ++x)
        rhs_v[x] = L_.tensor(beta, L_.impl(alpha, hq.at(x)));
      LSubset rhs(u_, std::move(rhs_v));
      if (lhs != rhs) {
        fail("Q=" + q.str() + ", alpha=" + L_.label(alpha).str() +
                 ", beta=" + L_.label(beta).str(),
             lhs.str(), rhs.str());
        return false;
      }
      return true;
    });
  }

  /// (L1): L(U ∧ (α→W)) = U ∧ (α→L(W)).
  void check_scalar_law_lower() {
    for_quantified([&](const LSubset& w, Elem alpha, Elem beta) {
      if (beta != L_.bot()) return true;  // single scalar quantifier
      std::vector<Elem> arg(u_->n_points());
      for (int x = 0; x < u_->n_points(); ++x)
        arg[x] = L_.meet(u_->mem(x), L_.impl(alpha, w.at(x)));
      LSubset lhs = op_.apply(LSubset(u_, std::move(arg)));
      LSubset lw = op_.apply(w);
      std::vector<Elem> rhs_v(u_->n_points());
      for (int x = 0; x < u_->n_points(); ++x)
        rhs_v[x] = L_.meet(u_->mem(x), L_.impl(alpha, lw.at(x)));
      LSubset rhs(u_, std::move(rhs_v));
      if (lhs != rhs) {
        fail("W=" + w.str() + ", alpha=" + L_.label(alpha).str(), lhs.str(), rhs.str());
        return false;
      }
      return true;
    });
  }

  /// Iterates (Q, α, β) in canonical order (powerset, then scalars) or samples
  /// the same grid. The visitor returns false to stop with a witness.
  template <typename Visit>
  void for_quantified(Visit visit) {
    if (mode_.exhaustive) {
      PowersetIndex pidx(u_, cap_);
      for (std::uint64_t i = 0; i < pidx.size(); ++i) {
        LSubset q = pidx.at(i);
        for (Elem alpha = 0; alpha < L_.size(); ++alpha)
          for (Elem beta = 0; beta < L_.size(); ++beta) {
            ++report_.checked_count;
            if (!visit(q, alpha, beta)) return;
          }
      }
    } else {
      std::mt19937_64 rng(mode_.seed);
      PowersetIndex pidx(u_, cap_);
      std::uniform_int_distribution<std::uint64_t> qdist(0, pidx.size() - 1);
      std::uniform_int_distribution<int> edist(0, L_.size() - 1);
      for (std::uint64_t t = 0; t < mode_.trials; ++t) {
        ++report_.checked_count;
        if (!visit(pidx.at(qdist(rng)), edist(rng), edist(rng))) return;
      }
    }
  }

  /// (H2): empty family, all binary families, and the full powerset family.
  void check_join_preservation() {
    PowersetIndex pidx(u_, cap_);
    ++report_.checked_count;
    LSubset h_zero = op_.apply(zero_subset(u_));
    if (h_zero != zero_subset(u_)) {
      fail("empty family", h_zero.str(), zero_subset(u_).str());
      return;
    }
    std::vector<LSubset> all;
    all.reserve(pidx.size());
    for (std::uint64_t i = 0; i < pidx.size(); ++i) all.push_back(pidx.at(i));
    auto check_pair = [&](const LSubset& q, const LSubset& v) {
      ++report_.checked_count;
      LSubset lhs = op_.apply(join(q, v));
      LSubset rhs = join(op_.apply(q), op_.apply(v));
      if (lhs != rhs) {
        fail("Q=" + q.str() + ", V=" + v.str(), lhs.str(), rhs.str());
        return false;
      }
      return true;
    };
    if (mode_.exhaustive) {
      for (const LSubset& q : all)
        for (const LSubset& v : all)
          if (!check_pair(q, v)) return;
    } else {
      std::mt19937_64 rng(mode_.seed);
      std::uniform_int_distribution<std::uint64_t> dist(0, all.size() - 1);
      for (std::uint64_t t = 0; t < mode_.trials; ++t)
        if (!check_pair(all[dist(rng)], all[dist(rng)])) return;
    }
    ++report_.checked_count;
    LSubset big = zero_subset(u_);
    LSubset big_image = zero_subset(u_);
    for (const LSubset& q : all) {
      big = join(big, q);
      big_image = join(big_image, op_.apply(q));
    }
    LSubset lhs = op_.apply(big);
    if (lhs != big_image) fail("full powerset family", lhs.str(), big_image.str());
  }

  /// (L2): dual of (H2); the empty meet is U itself.
  void check_meet_preservation() {
    PowersetIndex pidx(u_, cap_);
    ++report_.checked_count;
    LSubset l_full = op_.apply(full_subset(u_));
    if (l_full != full_subset(u_)) {
      fail("empty family", l_full.str(), full_subset(u_).str());
      return;
    }
    std::vector<LSubset> all;
    all.reserve(pidx.size());
    for (std::uint64_t i = 0; i < pidx.size(); ++i) all.push_back(pidx.at(i));
    auto check_pair = [&](const LSubset& q, const LSubset& v) {
      ++report_.checked_count;
      LSubset lhs = op_.apply(meet(q, v));
      LSubset rhs = meet(op_.apply(q), op_.apply(v));
      if (lhs != rhs) {
        fail("Q=" + q.str() + ", V=" + v.str(), lhs.str(), rhs.str());
        return false;
      }
      return true;
    };
    if (mode_.exhaustive) {
      for (const LSubset& q : all)
        for (const LSubset& v : all)
          if (!check_pair(q, v)) return;
    } else {
      std::mt19937_64 rng(mode_.seed);
      std::uniform_int_distribution<std::uint64_t> dist(0, all.size() - 1);
      for (std::uint64_t t = 0; t < mode_.trials; ++t)
        if (!check_pair(all[dist(rng)], all[dist(rng)])) return;
    }
    ++report_.checked_count;
    LSubset big = full_subset(u_);
    LSubset big_image = full_subset(u_);
    for (const LSubset& q : all) {
      big = meet(big, q);
      big_image = meet(big_image, op_.apply(q));
    }
    LSubset lhs = op_.apply(big);
    if (lhs != big_image) fail("full powerset family", lhs.str(), big_image.str());
  }

  /// (C5): H(U_d)(h) = H(U_h)(d).
  void check_c5() {
    std::vector<LSubset> images;
    for (int d = 0; d < u_->n_points(); ++d) images.push_back(op_.apply(point_subset(u_, d)));
    for (int d = 0; d < u_->n_points(); ++d)
      for (int h = 0; h < u_->n_points(); ++h) {
        ++report_.checked_count;
        if (images[d].at(h) != images[h].at(d)) {
          fail("d=" + u_->point_name(d) + ", h=" + u_->point_name(h),
               L_.label(images[d].at(h)).str(), L_.label(images[h].at(d)).str());
          return;
        }
      }
  }

  /// (D5): ¬L(U_{X−{d}})(h) = ¬L(U_{X−{h}})(d).
  void check_d5() {
    std::vector<LSubset> images;
    for (int d = 0; d < u_->n_points(); ++d)
      images.push_back(neg(op_.apply(copoint_subset(u_, d))));
    for (int d = 0; d < u_->n_points(); ++d)
      for (int h = 0; h < u_->n_points(); ++h) {
        ++report_.checked_count;
        if (images[d].at(h) != images[h].at(d)) {
          fail("d=" + u_->point_name(d) + ", h=" + u_->point_name(h),
               L_.label(images[d].at(h)).str(), L_.label(images[h].at(d)).str());
          return;
        }
      }
  }

  /// The one-subset comparison axioms: lhs(W) cmp rhs(W) for all W.
  void check_pointwise() {
    const std::string& n = ax_.name;
    OpSet ops = OpSet::build(op_);
    Operator idop = Operator::builtin(u_, "identity", op_.direction());
    const Operator* lhs = nullptr;
    const Operator* rhs = nullptr;
    Cmp cmp = Cmp::eq;
    if (n == "H3") {
      lhs = &idop; rhs = &ops.inv; cmp = Cmp::leq;           // W ≤ H⁻¹(W)
    } else if (n == "H4") {
      lhs = &ops.invinv; rhs = &ops.inv; cmp = Cmp::leq;
    } else if (n == "H5") {
      lhs = &ops.inv; rhs = &ops.base; cmp = Cmp::eq;
    } else if (n == "H6") {
      lhs = &ops.base_inv; rhs = &ops.inv; cmp = Cmp::leq;
    } else if (n == "H7") {
      lhs = &ops.invinv; rhs = &ops.inv; cmp = Cmp::geq;
    } else if (n == "C3") {
      lhs = &idop; rhs = &ops.base; cmp = Cmp::leq;
    } else if (n == "C4") {
      lhs = &ops.comp2; rhs = &ops.base; cmp = Cmp::leq;
    } else if (n == "L3") {
      lhs = &ops.inv; rhs = &idop; cmp = Cmp::leq;           // L~1(W) ≤ W
    } else if (n == "L4") {
      lhs = &ops.invinv; rhs = &ops.inv; cmp = Cmp::geq;
    } else if (n == "L5") {
      lhs = &ops.inv; rhs = &ops.base; cmp = Cmp::eq;
    } else if (n == "L6") {
      lhs = &ops.base_inv; rhs = &ops.inv; cmp = Cmp::geq;
    } else if (n == "L7") {
      lhs = &ops.invinv; rhs = &ops.inv; cmp = Cmp::leq;
    } else if (n == "D3") {
      lhs = &ops.base; rhs = &idop; cmp = Cmp::leq;
    } else if (n == "D4") {
      lhs = &ops.comp2; rhs = &ops.base; cmp = Cmp::geq;
    } else {
      throw ParseError("unknown axiom '" + n + "'");
    }
    auto check_one = [&](const LSubset& w) {
      ++report_.checked_count;
      LSubset a = lhs->apply(w);
      LSubset b = rhs->apply(w);
      if (!subset_cmp(a, b, cmp)) {
        fail("W=" + w.str(), a.str(), b.str());
        return false;
      }
      return true;
    };
    PowersetIndex pidx(u_, cap_);
    if (mode_.exhaustive) {
      for (std::uint64_t i = 0; i < pidx.size(); ++i)
        if (!check_one(pidx.at(i))) return;
    } else {
      std::mt19937_64 rng(mode_.seed);
      std::uniform_int_distribution<std::uint64_t> dist(0, pidx.size() - 1);
      for (std::uint64_t t = 0; t < mode_.trials; ++t)
        if (!check_one(pidx.at(dist(rng)))) return;
    }
  }

  const Operator& op_;
  AxiomId ax_;
  CheckMode mode_;
  std::uint64_t cap_;
  UniversePtr u_;
  const Lattice& L_;
  AxiomReport report_;
};

}  // namespace detail

inline AxiomReport check_axiom(const Operator& op, const AxiomId& ax,
                               const CheckMode& mode = CheckMode::exhaustive_mode(),
                               std::uint64_t powerset_cap = kDefaultPowersetCap) {
  return detail::AxiomChecker(op, ax, mode, powerset_cap).run();
}

inline AxiomReport check_axiom(const Operator& op, const std::string& name,
                               const CheckMode& mode = CheckMode::exhaustive_mode(),
                               std::uint64_t powerset_cap = kDefaultPowersetCap) {
  return check_axiom(op, axiom_by_name(name), mode, powerset_cap);
}

inline std::vector<AxiomReport> check_axiom_set(const Operator& op,
                                                const std::vector<std::string>& names,
                                                const CheckMode& mode = CheckMode::exhaustive_mode(),
                                                std::uint64_t powerset_cap = kDefaultPowersetCap) {
  std::vector<AxiomReport> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(check_axiom(op, n, mode, powerset_cap));
  return out;
}

/// R(a,b) := H(U_a)(b); requires (H0) so the result respects the relation
/// bound.
inline Relation reconstruct_relation_upper(const Operator& h) {
  if (h.direction() != Direction::upper)
    throw DirectionMismatch("upper reconstruction needs an upper operator");
  const UniversePtr& u = h.uni_ptr();
  const int n = u->n_points();
  std::vector<Elem> m(n * n);
  for (int a = 0; a < n; ++a) {
    LSubset row = h.apply(point_subset(u, a));
    for (int b = 0; b < n; ++b) {
      if (!u->lat().leq(row.at(b), u->mem(a)))
        throw H0Violated("H(U_d) exceeds U(d) at d=" + u->point_name(a) +
                         ", point " + u->point_name(b));
      m[a * n + b] = row.at(b);
    }
  }
  return Relation(u, std::move(m));
}

/// R(a,b) := ¬(L(U_{X−{a}}))(b); needs MV and a constant universe.
inline Relation reconstruct_relation_lower(const Operator& lop) {
  if (lop.direction() != Direction::lower)
    throw DirectionMismatch("lower reconstruction needs a lower operator");
  const UniversePtr& u = lop.uni_ptr();
  if (!u->lat().caps().mv_algebra) throw RequiresMV("lower reconstruction needs an MV lattice");
  if (!u->is_constant())
    throw RequiresConstantUniverse("lower reconstruction needs a constant universe");
  const int n = u->n_points();
  std::vector<Elem> m(n * n);
  for (int a = 0; a < n; ++a) {
    LSubset row = neg(lop.apply(copoint_subset(u, a)));
    for (int b = 0; b < n; ++b) m[a * n + b] = row.at(b);
  }
  return Relation(u, std::move(m));
}

struct CharacterizationReport {
  AxiomReport axiom;
  bool reconstructed = false;
  std::optional<Relation> relation;
  RelationProperties properties;
  bool roundtrip_equal = false;
  bool prediction_confirmed = false;  // axiom_holds ⟺ (roundtrip ∧ properties)
  std::string note;
};

/// Checks the theorem attached to a single axiom on one operator instance:
/// the axiom must hold exactly when the operator is induced by a relation
/// with the axiom's named properties.
inline CharacterizationReport verify_characterization(
    const AxiomId& theorem, const Operator& op,
    const CheckMode& mode = CheckMode::exhaustive_mode(),
    std::uint64_t powerset_cap = kDefaultPowersetCap) {
  if (!theorem.single)
    throw ParseError("axiom " + theorem.name + " is not a single-axiom characterization");
  CharacterizationReport rep;
  rep.axiom = check_axiom(op, theorem, mode, powerset_cap);
  bool predicted = false;
  try {
    Relation r = theorem.family == Direction::upper ? reconstruct_relation_upper(op)
                                                    : reconstruct_relation_lower(op);
    rep.reconstructed = true;
    rep.properties = r.properties();
    Operator induced = theorem.family == Direction::upper
                           ? Operator::induced_upper(r)
                           : Operator::induced_lower(r);
    rep.roundtrip_equal = tables_equal(op, induced, powerset_cap);
    rep.relation = std::move(r);
    predicted = rep.roundtrip_equal && theorem.props.satisfied_by(rep.properties);
  } catch (const H0Violated& e) {
    rep.note = e.what();
  }
  rep.prediction_confirmed = rep.axiom.holds == predicted;
  return rep;
}

inline CharacterizationReport verify_characterization(
    const std::string& theorem, const Operator& op,
    const CheckMode& mode = CheckMode::exhaustive_mode(),
    std::uint64_t powerset_cap = kDefaultPowersetCap) {
  return verify_characterization(axiom_by_name(theorem), op, mode, powerset_cap);
}

}  // namespace lvrough
