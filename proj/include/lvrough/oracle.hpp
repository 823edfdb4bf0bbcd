#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lvrough/axiom.hpp"
#include "lvrough/classical.hpp"
#include "lvrough/errors.hpp"
#include "lvrough/product.hpp"

namespace lvrough {

struct Budget {
  std::uint64_t max_relations = kDefaultRelationCap;
  std::uint64_t max_operators = 10000000;
  std::uint64_t sample_seed = 42;
  std::uint64_t sample_trials = 100000;
};

struct InstanceSpec {
  std::string name;
  UniversePtr universe;
  std::vector<std::string> scope;  // single-axiom theorem names; empty = all applicable
  Budget budget;
};

struct MatrixRow {
  std::string theorem;
  std::string check;   // soundness | completeness | completeness_sampled | degeneracy:<op>
  std::string status;  // confirmed | refuted | skipped
  std::string detail;  // skip reason or witness description
  std::uint64_t cases_checked = 0;
};

struct VerificationMatrix {
  std::string instance;
  std::vector<MatrixRow> rows;

  bool all_confirmed() const {
    for (const auto& r : rows)
      if (r.status == "refuted") return false;
    return true;
  }
};

namespace detail {

inline bool lower_applicable(const Universe& u, std::string* reason) {
  if (!u.lat().caps().mv_algebra) {
    if (reason) *reason = "lattice is not MV";
    return false;
  }
  if (!u.is_constant()) {
    if (reason) *reason = "universe is not constant";
    return false;
  }
  return true;
}

/// Theorems in scope for the instance, with skip rows appended for the rest.
inline std::vector<AxiomId> scoped_theorems(const InstanceSpec& inst, const std::string& check,
                                            std::vector<MatrixRow>* skips) {
  std::vector<std::string> names = inst.scope;
  if (names.empty()) {
    for (const std::string& n : axiom_names()) {
      AxiomId ax = axiom_by_name(n);
      if (ax.single) names.push_back(n);
    }
  }
  std::string reason;
  bool lower_ok = lower_applicable(*inst.universe, &reason);
  std::vector<AxiomId> out;
  for (const std::string& n : names) {
    AxiomId ax = axiom_by_name(n);
    if (!ax.single) throw ParseError("scope entry '" + n + "' is not a single axiom");
    if (ax.family == Direction::lower && !lower_ok) {
      if (skips) skips->push_back({n, check, "skipped", reason, 0});
      continue;
    }
    out.push_back(ax);
  }
  return out;
}

struct RowFailure {
  std::uint64_t case_index;
  std::string detail;
};

/// Scans [0, total) with `eval(case_index, theorem_slot) -> optional detail`,
/// optionally split across threads; keeps the canonically first failure per
/// theorem slot and exact per-slot case counts.
template <typename Eval>
std::vector<std::optional<RowFailure>> scan_space(std::uint64_t total, std::size_t slots,
                                                  int jobs, std::vector<std::uint64_t>* counts,
                                                  Eval eval) {
  jobs = std::max(1, jobs);
  if (static_cast<std::uint64_t>(jobs) > total && total > 0)
    jobs = static_cast<int>(total);
  std::vector<std::vector<std::optional<RowFailure>>> fails(
      jobs, std::vector<std::optional<RowFailure>>(slots));
  std::vector<std::vector<std::uint64_t>> local_counts(
      jobs, std::vector<std::uint64_t>(slots, 0));
  auto work = [&](int w) {
    std::uint64_t lo = total * w / jobs;
    std::uint64_t hi = total * (w + 1) / jobs;
    for (std::uint64_t i = lo; i < hi; ++i)
      for (std::size_t s = 0; s < slots; ++s) {
        if (fails[w][s]) continue;  // first local failure per slot is enough
        ++local_counts[w][s];
        if (auto d = eval(i, s)) fails[w][s] = RowFailure{i, *d};
      }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::vector<std::optional<RowFailure>> merged(slots);
  counts->assign(slots, 0);
  for (int w = 0; w < jobs; ++w)
    for (std::size_t s = 0; s < slots; ++s) {
      (*counts)[s] += local_counts[w][s];
      if (fails[w][s] && (!merged[s] || fails[w][s]->case_index < merged[s]->case_index))
        merged[s] = fails[w][s];
    }
  return merged;
}

inline std::string relation_str(const Relation& r) {
  std::string out = "[";
  const Universe& u = r.uni();
  for (int a = 0; a < u.n_points(); ++a) {
    if (a) out += "; ";
    for (int b = 0; b < u.n_points(); ++b) {
      if (b) out += ",";
      out += u.lat().label(r.at(a, b)).str();
    }
  }
  return out + "]";
}

}  // namespace detail

/// Every enumerated relation whose properties cover a theorem's property set
/// must induce an operator satisfying that theorem's axiom.
inline VerificationMatrix verify_soundness(const InstanceSpec& inst, int jobs = 1) {
  VerificationMatrix mat;
  mat.instance = inst.name;
  std::vector<AxiomId> theorems = detail::scoped_theorems(inst, "soundness", &mat.rows);
  RelationIndex ridx(inst.universe, inst.budget.max_relations);
  std::vector<std::uint64_t> counts;
  auto fails = detail::scan_space(
      ridx.size(), theorems.size(), jobs, &counts,
      [&](std::uint64_t i, std::size_t s) -> std::optional<std::string> {
        Relation r = ridx.at(i);
        const AxiomId& thm = theorems[s];
        if (!thm.props.satisfied_by(r.properties())) return std::nullopt;
        Operator op = thm.family == Direction::upper ? Operator::induced_upper(r)
                                                     : Operator::induced_lower(r);
        AxiomReport rep = check_axiom(op, thm);
        if (rep.holds) return std::nullopt;
        return "relation " + detail::relation_str(r) + " has the properties but fails " +
               thm.name + " at " + rep.witness->where + " (lhs " + rep.witness->lhs +
               ", rhs " + rep.witness->rhs + ")";
      });
  for (std::size_t s = 0; s < theorems.size(); ++s)
    mat.rows.push_back({theorems[s].name, "soundness",
                        fails[s] ? "refuted" : "confirmed",
                        fails[s] ? fails[s]->detail : "", counts[s]});
  return mat;
}

/// Canonical order on extensional operator tables: mixed radix, one digit per
/// powerset index, digits in canonical powerset order.
class OperatorTableIndex {
 public:
  OperatorTableIndex(UniversePtr uni, std::uint64_t max_operators,
                     std::uint64_t powerset_cap = kDefaultPowersetCap)
      : pidx_(std::move(uni), powerset_cap) {
    size_ = 1;
    for (std::uint64_t k = 0; k < pidx_.size(); ++k) {
      if (size_ > max_operators / pidx_.size())
        throw OperatorSpaceTooLarge("operator space exceeds cap " +
                                    std::to_string(max_operators));
      size_ *= pidx_.size();
    }
  }

  std::uint64_t size() const { return size_; }
  const PowersetIndex& powerset() const { return pidx_; }

  Operator at(std::uint64_t idx, Direction dir) const {
    std::vector<LSubset> entries;
    std::vector<std::uint64_t> digits(pidx_.size());
    for (std::uint64_t k = pidx_.size(); k-- > 0;) {
      digits[k] = idx % pidx_.size();
      idx /= pidx_.size();
    }
    entries.reserve(pidx_.size());
    for (std::uint64_t k = 0; k < pidx_.size(); ++k) entries.push_back(pidx_.at(digits[k]));
    return Operator::table(pidx_.uni_ptr(), dir, std::move(entries));
  }

 private:
  PowersetIndex pidx_;
  std::uint64_t size_ = 0;
};

namespace detail {

/// Completeness check for one operator against one theorem: if the axiom
/// holds, the operator must round-trip through reconstruction to a relation
/// with the matching properties.
inline std::optional<std::string> completeness_case(const Operator& op, const AxiomId& thm) {
  AxiomReport rep = check_axiom(op, thm);
  if (!rep.holds) return std::nullopt;
  try {
    Relation r = thm.family == Direction::upper ? reconstruct_relation_upper(op)
                                                : reconstruct_relation_lower(op);
    if (!thm.props.satisfied_by(r.properties()))
      return "axiom " + thm.name + " holds but reconstructed relation " + relation_str(r) +
             " lacks the required properties";
    Operator induced = thm.family == Direction::upper ? Operator::induced_upper(r)
                                                      : Operator::induced_lower(r);
    if (!tables_equal(op, induced))
      return "axiom " + thm.name + " holds but the operator does not round-trip through " +
             relation_str(r);
  } catch (const H0Violated& e) {
    return "axiom " + thm.name + " holds but reconstruction failed: " + e.what();
  }
  return std::nullopt;
}

}  // namespace detail

inline VerificationMatrix verify_completeness_exhaustive(const InstanceSpec& inst,
                                                         int jobs = 1) {
  VerificationMatrix mat;
  mat.instance = inst.name;
  std::vector<AxiomId> theorems = detail::scoped_theorems(inst, "completeness", &mat.rows);
  OperatorTableIndex oidx(inst.universe, inst.budget.max_operators);
  std::vector<std::uint64_t> counts;
  auto fails = detail::scan_space(
      oidx.size(), theorems.size(), jobs, &counts,
      [&](std::uint64_t i, std::size_t s) -> std::optional<std::string> {
        const AxiomId& thm = theorems[s];
        Operator op = oidx.at(i, thm.family);
        auto bad = detail::completeness_case(op, thm);
        if (bad) return "table #" + std::to_string(i) + ": " + *bad;
        return std::nullopt;
      });
  for (std::size_t s = 0; s < theorems.size(); ++s)
    mat.rows.push_back({theorems[s].name, "completeness",
                        fails[s] ? "refuted" : "confirmed",
                        fails[s] ? fails[s]->detail : "", counts[s]});
  return mat;
}

/// Sampled completeness: half the trials draw uniform random tables, half
/// perturb an induced operator at a few random entries. Deterministic per
/// seed.
inline VerificationMatrix verify_completeness_sampled(const InstanceSpec& inst) {
  VerificationMatrix mat;
  mat.instance = inst.name;
  std::vector<AxiomId> theorems = detail::scoped_theorems(inst, "completeness_sampled",
                                                          &mat.rows);
  PowersetIndex pidx(inst.universe, kDefaultPowersetCap);
  RelationIndex ridx(inst.universe, inst.budget.max_relations);
  std::mt19937_64 rng(inst.budget.sample_seed);
  std::uniform_int_distribution<std::uint64_t> sdist(0, pidx.size() - 1);
  std::uniform_int_distribution<std::uint64_t> rdist(0, ridx.size() - 1);
  std::uniform_int_distribution<int> kdist(1, 3);
  std::vector<std::optional<detail::RowFailure>> fails(theorems.size());
  std::vector<std::uint64_t> counts(theorems.size(), 0);
  for (std::uint64_t t = 0; t < inst.budget.sample_trials; ++t) {
    std::vector<LSubset> entries;
    entries.reserve(pidx.size());
    bool lower_ok = detail::lower_applicable(*inst.universe, nullptr);
    if (t % 2 == 0) {
      for (std::uint64_t k = 0; k < pidx.size(); ++k) entries.push_back(pidx.at(sdist(rng)));
    } else {
      Relation r = ridx.at(rdist(rng));
      Direction dir =
          lower_ok && (t / 2) % 2 == 1 ? Direction::lower : Direction::upper;
      Operator induced =
          dir == Direction::upper ? Operator::induced_upper(r) : Operator::induced_lower(r);
      for (std::uint64_t k = 0; k < pidx.size(); ++k)
        entries.push_back(induced.apply(pidx.at(k)));
      int k = kdist(rng);
      for (int p = 0; p < k; ++p) entries[sdist(rng) % pidx.size()] = pidx.at(sdist(rng));
    }
    for (std::size_t s = 0; s < theorems.size(); ++s) {
      if (fails[s]) continue;
      ++counts[s];
      Operator op = Operator::table(pidx.uni_ptr(), theorems[s].family, entries);
      auto bad = detail::completeness_case(op, theorems[s]);
      if (bad) fails[s] = detail::RowFailure{t, "trial #" + std::to_string(t) + ": " + *bad};
    }
  }
  for (std::size_t s = 0; s < theorems.size(); ++s)
    mat.rows.push_back({theorems[s].name, "completeness_sampled",
                        fails[s] ? "refuted" : "confirmed",
                        fails[s] ? fails[s]->detail : "", counts[s]});
  return mat;
}

/// With a constant-top universe every engine formula must agree with the
/// independently coded classical implementation.
inline VerificationMatrix classical_degeneracy_suite(const InstanceSpec& inst) {
  VerificationMatrix mat;
  mat.instance = inst.name;
  const UniversePtr& u = inst.universe;
  const Lattice& L = u->lat();
  const int n = u->n_points();
  for (int x = 0; x < n; ++x)
    if (u->mem(x) != L.top())
      throw RequiresConstantUniverse("degeneracy suite needs a constant-top universe");

  PowersetIndex pidx(u, kDefaultPowersetCap);
  RelationIndex ridx(u, inst.budget.max_relations);

  auto add_row = [&](const std::string& what, std::uint64_t cases,
                     const std::optional<std::string>& bad) {
    mat.rows.push_back({what, "degeneracy", bad ? "refuted" : "confirmed",
                        bad ? *bad : "", cases});
  };

  // approximation operators, inverses, predicates: per relation
  {
    std::optional<std::string> bad_up, bad_lo, bad_uinv, bad_linv, bad_pred;
    std::uint64_t cases = 0;
    bool mv = L.caps().mv_algebra;
    for (std::uint64_t i = 0; i < ridx.size(); ++i) {
      Relation r = ridx.at(i);
      Operator hop = Operator::induced_upper(r);
      Operator lop = Operator::induced_lower(r);
      auto h_fn = [&](const std::vector<Elem>& v) {
        return hop.apply(LSubset(u, v)).values();
      };
      auto l_fn = [&](const std::vector<Elem>& v) {
        return lop.apply(LSubset(u, v)).values();
      };
      Operator hinv = upper_inverse(hop);
      std::optional<Operator> linv;
      if (mv) linv = lower_inverse(lop);
      for (std::uint64_t k = 0; k < pidx.size(); ++k) {
        LSubset q = pidx.at(k);
        ++cases;
        std::string where = "relation " + detail::relation_str(r) + ", Q=" + q.str();
        if (!bad_up && upper_approx(r, q).values() != classical::upper(L, r.matrix(), n, q.values()))
          bad_up = where;
        if (!bad_lo && lower_approx(r, q).values() != classical::lower(L, r.matrix(), n, q.values()))
          bad_lo = where;
        if (!bad_uinv &&
            hinv.apply(q).values() != classical::upper_inverse(L, n, h_fn, q.values()))
          bad_uinv = where;
        if (!bad_linv && linv &&
            linv->apply(q).values() != classical::lower_inverse(L, n, l_fn, q.values()))
          bad_linv = where;
      }
      if (!bad_pred) {
        if (r.is_reflexive() != classical::is_reflexive(L, r.matrix(), n) ||
            r.is_symmetric() != classical::is_symmetric(r.matrix(), n) ||
            r.is_transitive() != classical::is_transitive(L, r.matrix(), n))
          bad_pred = "relation " + detail::relation_str(r);
      }
    }
    add_row("upper_approx", cases, bad_up);
    add_row("lower_approx", cases, bad_lo);
    add_row("upper_inverse", cases, bad_uinv);
    if (mv)
      add_row("lower_inverse", cases, bad_linv);
    else
      mat.rows.push_back({"lower_inverse", "degeneracy", "skipped", "lattice is not MV", 0});
    add_row("predicates", ridx.size(), bad_pred);
  }

  // products: per subset pair
  {
    std::optional<std::string> bad_inner, bad_sub, bad_outer;
    std::uint64_t cases = 0;
    for (std::uint64_t i = 0; i < pidx.size(); ++i)
      for (std::uint64_t j = 0; j < pidx.size(); ++j) {
        LSubset m = pidx.at(i), q = pidx.at(j);
        ++cases;
        std::string where = "M=" + m.str() + ", Q=" + q.str();
        if (!bad_inner && inner_product(m, q) != classical::inner(L, m.values(), q.values()))
          bad_inner = where;
        if (!bad_sub && subsethood(m, q) != classical::subset_degree(L, m.values(), q.values()))
          bad_sub = where;
        if (!bad_outer && outer_product(m, q) != classical::outer(L, m.values(), q.values()))
          bad_outer = where;
      }
    add_row("inner_product", cases, bad_inner);
    add_row("subsethood", cases, bad_sub);
    add_row("outer_product", cases, bad_outer);
  }
  return mat;
}

}  // namespace lvrough
