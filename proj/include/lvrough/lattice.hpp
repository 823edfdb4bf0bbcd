#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvrough/errors.hpp"
#include "lvrough/rational.hpp"

namespace lvrough {

/// Carrier index. All arithmetic is table lookups on indices; rational labels
/// are display sugar.
using Elem = int;

struct Caps {
  bool residuated = false;
  bool gl_quantale = false;
  bool mv_algebra = false;
};

inline constexpr int kDefaultMaxCarrier = 64;

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// A finite complete residuated lattice given by full operation tables.
/// Every constructor verifies the lattice and residuation laws exhaustively
/// (O(m^3)) and computes the capability flags; nothing is trusted from input.
class Lattice {
 public:
  static LatticePtr lukasiewicz_chain(int levels, int max_carrier = kDefaultMaxCarrier) {
    if (levels < 1) throw ParseError("lukasiewicz chain needs levels >= 1");
    const int m = levels + 1;
    Lattice lat = chain_skeleton(m, levels);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) {
        lat.tensor_[i * m + j] = std::max(i + j - levels, 0);
        lat.impl_[i * m + j] = std::min(levels, levels - i + j);
      }
    lat.finalize(max_carrier);
    return std::make_shared<Lattice>(std::move(lat));
  }

  static LatticePtr goedel_chain(int levels, int max_carrier = kDefaultMaxCarrier) {
    if (levels < 1) throw ParseError("goedel chain needs levels >= 1");
    const int m = levels + 1;
    Lattice lat = chain_skeleton(m, levels);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) {
        lat.tensor_[i * m + j] = std::min(i, j);
        lat.impl_[i * m + j] = i <= j ? levels : j;
      }
    lat.finalize(max_carrier);
    return std::make_shared<Lattice>(std::move(lat));
  }

  /// Crisp two-element chain, the degenerate case used by the classical
  /// degeneracy oracle.
  static LatticePtr boolean_2() { return goedel_chain(1); }

  static LatticePtr from_tables(const std::vector<Rational>& labels,
                                const std::vector<std::vector<bool>>& leq,
                                const std::vector<std::vector<Rational>>& tensor,
                                const std::optional<std::vector<std::vector<Rational>>>& impl,
                                int max_carrier = kDefaultMaxCarrier) {
    const int m = static_cast<int>(labels.size());
    if (m < 1) throw ParseError("empty carrier");
    Lattice lat;
    lat.m_ = m;
    lat.labels_ = labels;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && labels[i] == labels[j]) throw ParseError("duplicate carrier label");
    if (static_cast<int>(leq.size()) != m) throw ParseError("leq table size mismatch");
    lat.leq_.assign(m * m, 0);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(leq[i].size()) != m) throw ParseError("leq row size mismatch");
      for (int j = 0; j < m; ++j) lat.leq_[i * m + j] = leq[i][j] ? 1 : 0;
    }
    auto decode = [&](const Rational& r) -> Elem {
      for (int k = 0; k < m; ++k)
        if (labels[k] == r) return k;
      throw ParseError("table entry '" + r.str() + "' is not a carrier label");
    };
    if (static_cast<int>(tensor.size()) != m) throw ParseError("tensor table size mismatch");
    lat.tensor_.assign(m * m, 0);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(tensor[i].size()) != m) throw ParseError("tensor row size mismatch");
      for (int j = 0; j < m; ++j) lat.tensor_[i * m + j] = decode(tensor[i][j]);
    }
    lat.impl_.assign(m * m, -1);
    if (impl) {
      if (static_cast<int>(impl->size()) != m) throw ParseError("impl table size mismatch");
      for (int i = 0; i < m; ++i) {
        if (static_cast<int>((*impl)[i].size()) != m) throw ParseError("impl row size mismatch");
        for (int j = 0; j < m; ++j) lat.impl_[i * m + j] = decode((*impl)[i][j]);
      }
    }
    lat.finalize(max_carrier, !impl.has_value());
    return std::make_shared<Lattice>(std::move(lat));
  }

  int size() const { return m_; }
  bool leq(Elem a, Elem b) const { return leq_[a * m_ + b] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[a * m_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * m_ + b]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[a * m_ + b]; }
  Elem impl(Elem a, Elem b) const { return impl_[a * m_ + b]; }
  Elem neg(Elem a) const { return impl(a, bot_); }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  const Caps& caps() const { return caps_; }
  const Rational& label(Elem a) const { return labels_[a]; }

  Elem elem_of(const Rational& r) const {
    for (Elem k = 0; k < m_; ++k)
      if (labels_[k] == r) return k;
    throw ParseError("'" + r.str() + "' is not on the lattice carrier");
  }

  /// Structural identity; used to cross-validate workspace files.
  bool same_as(const Lattice& other) const {
    return m_ == other.m_ && labels_ == other.labels_ && leq_ == other.leq_ &&
           tensor_ == other.tensor_ && impl_ == other.impl_;
  }

 private:
  friend struct LawChecker;

  static Lattice chain_skeleton(int m, int den) {
    Lattice lat;
    lat.m_ = m;
    lat.labels_.reserve(m);
    for (int k = 0; k < m; ++k) lat.labels_.emplace_back(k, den);
    lat.leq_.assign(m * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) lat.leq_[i * m + j] = 1;
    lat.tensor_.assign(m * m, 0);
    lat.impl_.assign(m * m, 0);
    return lat;
  }

  std::string triple(Elem a, Elem b, Elem c) const {
    return "(" + labels_[a].str() + ", " + labels_[b].str() + ", " + labels_[c].str() + ")";
  }

  void finalize(int max_carrier, bool derive_impl = false) {
    if (m_ > max_carrier)
      throw ParseError("carrier size " + std::to_string(m_) + " exceeds cap " +
                       std::to_string(max_carrier));
    verify_order();
    compute_meet_join();
    if (derive_impl) {
      // α→β = ⋁{γ : α⊛γ ≤ β}
      for (Elem a = 0; a < m_; ++a)
        for (Elem b = 0; b < m_; ++b) {
          Elem acc = bot_;
          for (Elem g = 0; g < m_; ++g)
            if (leq(tensor(a, g), b)) acc = join(acc, g);
          impl_[a * m_ + b] = acc;
        }
    }
    verify_residuation();
    caps_.residuated = true;
    caps_.gl_quantale = check_gl();
    caps_.mv_algebra = caps_.gl_quantale && check_mv();
  }

  void verify_order() {
    for (Elem a = 0; a < m_; ++a)
      if (!leq(a, a)) throw NotALattice("leq not reflexive at " + labels_[a].str());
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b)
        if (a != b && leq(a, b) && leq(b, a))
          throw NotALattice("leq not antisymmetric at " + triple(a, b, b));
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b)
        for (Elem c = 0; c < m_; ++c)
          if (leq(a, b) && leq(b, c) && !leq(a, c))
            throw NotALattice("leq not transitive at " + triple(a, b, c));
    bot_ = top_ = -1;
    for (Elem a = 0; a < m_; ++a) {
      bool is_bot = true, is_top = true;
      for (Elem b = 0; b < m_; ++b) {
        if (!leq(a, b)) is_bot = false;
        if (!leq(b, a)) is_top = false;
      }
      if (is_bot) bot_ = a;
      if (is_top) top_ = a;
    }
    if (bot_ < 0 || top_ < 0) throw NotALattice("order has no bottom or no top");
  }

  void compute_meet_join() {
    meet_.assign(m_ * m_, -1);
    join_.assign(m_ * m_, -1);
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b) {
        Elem glb = -1, lub = -1;
        for (Elem g = 0; g < m_; ++g) {
          if (leq(g, a) && leq(g, b) && (glb < 0 || leq(glb, g))) glb = g;
          if (leq(a, g) && leq(b, g) && (lub < 0 || leq(g, lub))) lub = g;
        }
        // the candidate found by the scan must dominate every other bound
        for (Elem h = 0; h < m_; ++h) {
          if (leq(h, a) && leq(h, b) && (glb < 0 || !leq(h, glb)))
            throw NotALattice("no greatest lower bound of " + labels_[a].str() + ", " +
                              labels_[b].str());
          if (leq(a, h) && leq(b, h) && (lub < 0 || !leq(lub, h)))
            throw NotALattice("no least upper bound of " + labels_[a].str() + ", " +
                              labels_[b].str());
        }
        meet_[a * m_ + b] = glb;
        join_[a * m_ + b] = lub;
      }
  }

  void verify_residuation() {
    for (Elem a = 0; a < m_; ++a) {
      if (tensor(a, top_) != a)
        throw NotResiduated("unit law fails: " + labels_[a].str() + " ⊛ 1 != " + labels_[a].str());
      if (tensor(a, bot_) != bot_)
        throw NotResiduated("α⊛0 != 0 at " + labels_[a].str());
    }
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b)
        if (tensor(a, b) != tensor(b, a))
          throw NotResiduated("tensor not commutative at " + triple(a, b, b));
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b)
        for (Elem c = 0; c < m_; ++c) {
          if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
            throw NotResiduated("tensor not associative at " + triple(a, b, c));
          // binary join distributivity; finite families fold through this case
          if (tensor(a, join(b, c)) != join(tensor(a, b), tensor(a, c)))
            throw NotResiduated("tensor does not distribute over join at " + triple(a, b, c));
          bool lhs = leq(tensor(a, c), b);
          bool rhs = leq(c, impl(a, b));
          if (lhs != rhs) throw NotResiduated("adjunction fails at " + triple(a, b, c));
        }
  }

  bool check_gl() const {
    for (Elem a = 0; a < m_; ++a)
      for (Elem b = 0; b < m_; ++b)
        if (meet(a, b) != tensor(a, impl(a, b))) return false;
    return true;
  }

  bool check_mv() const {
    for (Elem g = 0; g < m_; ++g)
      if (impl(impl(g, bot_), bot_) != g) return false;
    return true;
  }

  int m_ = 0;
  std::vector<Rational> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, tensor_, impl_;
  Elem bot_ = 0, top_ = 0;
  Caps caps_;
};

enum class LawStatus { pass, fail, skipped };

struct LawVerdict {
  std::string law;
  LawStatus status = LawStatus::pass;
  std::string witness;  // violating elements, empty on pass/skip
};

struct LawReport {
  std::vector<LawVerdict> items;
  bool all_pass() const {
    for (const auto& v : items)
      if (v.status == LawStatus::fail) return false;
    return true;
  }
};

/// Exhaustive verification of the residuated / GL / MV law suites. Failures
/// are report content, never exceptions; constructors have already rejected
/// anything that is not a residuated lattice, so Lemma-1 items double as a
/// self-check.
struct LawChecker {
  const Lattice& lat;
  LawReport report;

  void add(const std::string& law, bool ok, const std::string& witness) {
    report.items.push_back({law, ok ? LawStatus::pass : LawStatus::fail, ok ? "" : witness});
  }
  void skip(const std::string& law) { report.items.push_back({law, LawStatus::skipped, ""}); }

  template <typename Pred>
  void law3(const std::string& name, Pred pred) {
    for (Elem a = 0; a < lat.size(); ++a)
      for (Elem b = 0; b < lat.size(); ++b)
        for (Elem c = 0; c < lat.size(); ++c)
          if (!pred(a, b, c)) {
            add(name, false, lat.triple(a, b, c));
            return;
          }
    add(name, true, "");
  }

  void run() {
    const Lattice& L = lat;
    const int m = L.size();
    law3("lemma1.1 adjunction", [&](Elem a, Elem b, Elem c) {
      return L.leq(L.tensor(a, c), b) == L.leq(c, L.impl(a, b));
    });
    law3("lemma1.2 modus ponens", [&](Elem a, Elem b, Elem) {
      return L.leq(L.tensor(L.impl(a, b), a), b);
    });
    law3("lemma1.3 currying", [&](Elem a, Elem b, Elem c) {
      return L.impl(a, L.impl(b, c)) == L.impl(L.tensor(a, b), c);
    });
    law3("lemma1.4 order-implication", [&](Elem a, Elem b, Elem) {
      return L.leq(a, b) == (L.impl(a, b) == L.top());
    });
    // (5),(6): binary families plus the full-carrier family; finite meets and
    // joins fold through the binary case.
    law3("lemma1.5 impl-meet", [&](Elem b, Elem x, Elem y) {
      return L.impl(b, L.meet(x, y)) == L.meet(L.impl(b, x), L.impl(b, y));
    });
    {
      bool ok = true;
      std::string w;
      for (Elem b = 0; b < m && ok; ++b) {
        Elem lhs = L.impl(b, L.bot());  // ⋀ of the whole carrier is bot
        Elem rhs = L.top();
        for (Elem x = 0; x < m; ++x) rhs = L.meet(rhs, L.impl(b, x));
        if (lhs != rhs) {
          ok = false;
          w = L.label(b).str();
        }
      }
      add("lemma1.5 impl-meet (full family)", ok, w);
    }
    law3("lemma1.6 join-impl", [&](Elem b, Elem x, Elem y) {
      return L.impl(L.join(x, y), b) == L.meet(L.impl(x, b), L.impl(y, b));
    });
    {
      bool ok = true;
      std::string w;
      for (Elem b = 0; b < m && ok; ++b) {
        Elem lhs = L.impl(L.top(), b);
        Elem rhs = L.top();
        for (Elem x = 0; x < m; ++x) rhs = L.meet(rhs, L.impl(x, b));
        if (lhs != rhs) {
          ok = false;
          w = L.label(b).str();
        }
      }
      add("lemma1.6 join-impl (full family)", ok, w);
    }

    if (L.caps().gl_quantale) {
      law3("gl.1 divisibility", [&](Elem b, Elem g, Elem) {
        return !L.leq(b, g) || L.tensor(g, L.impl(g, b)) == b;
      });
      law3("gl.2 exchange", [&](Elem a, Elem b, Elem g) {
        return !(L.leq(a, g) && L.leq(b, g)) ||
               L.tensor(a, L.impl(g, b)) == L.tensor(b, L.impl(g, a));
      });
      law3("gl.3 relative meet", [&](Elem a, Elem b, Elem g) {
        return !L.leq(b, g) ||
               L.tensor(g, L.impl(b, a)) == L.meet(g, L.impl(L.impl(g, b), a));
      });
    } else {
      skip("gl.1 divisibility");
      skip("gl.2 exchange");
      skip("gl.3 relative meet");
    }

    if (L.caps().mv_algebra) {
      law3("mv.1 contraposition", [&](Elem b, Elem g, Elem) {
        return L.impl(b, g) == L.impl(L.neg(g), L.neg(b));
      });
      law3("mv.2 tensor-meet", [&](Elem b, Elem x, Elem y) {
        return L.tensor(b, L.meet(x, y)) == L.meet(L.tensor(b, x), L.tensor(b, y));
      });
      {
        bool ok = true;
        std::string w;
        for (Elem b = 0; b < m && ok; ++b) {
          Elem lhs = L.tensor(b, L.bot());
          Elem rhs = L.top();
          for (Elem x = 0; x < m; ++x) rhs = L.meet(rhs, L.tensor(b, x));
          if (lhs != rhs) {
            ok = false;
            w = L.label(b).str();
          }
        }
        add("mv.2 tensor-meet (full family)", ok, w);
      }
    } else {
      skip("mv.1 contraposition");
      skip("mv.2 tensor-meet");
    }
  }
};

inline LawReport verify_laws(const Lattice& lat) {
  LawChecker checker{lat, {}};
  checker.run();
  return checker.report;
}

}  // namespace lvrough
