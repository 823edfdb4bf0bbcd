#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvrough/approx.hpp"
#include "lvrough/errors.hpp"
#include "lvrough/oracle.hpp"
#include "lvrough/relation.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

/// Named workspaces for one-command reproduction of the worked examples and
/// for the verification harness's standard micro-instances.
struct Fixture {
  std::string name;
  UniversePtr universe;
  std::optional<LSubset> m;
  std::optional<LSubset> q;
  std::optional<Relation> relation;
  std::optional<Operator> op;
  std::optional<InstanceSpec> instance;
};

namespace detail {

inline UniversePtr make_uni(const LatticePtr& lat, const std::vector<std::string>& pts,
                            const std::vector<std::string>& mem) {
  std::vector<Elem> vals;
  vals.reserve(mem.size());
  for (const std::string& s : mem) vals.push_back(lat->elem_of(Rational::parse(s)));
  return Universe::make(lat, pts, vals);
}

inline LSubset make_sub(const UniversePtr& u, const std::vector<std::string>& vals) {
  std::vector<Elem> v;
  v.reserve(vals.size());
  for (const std::string& s : vals) v.push_back(u->lat().elem_of(Rational::parse(s)));
  return LSubset(u, std::move(v));
}

inline Relation make_rel(const UniversePtr& u, const std::vector<std::string>& cells) {
  std::vector<Elem> v;
  v.reserve(cells.size());
  for (const std::string& s : cells) v.push_back(u->lat().elem_of(Rational::parse(s)));
  return Relation(u, std::move(v));
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "inner-example-godel", "inner-example-luk", "outer-example",  "euclidean-example",
      "mediate-example",     "least-equivalent",  "largest-equivalent",
      "boolean2x",           "luk2x1",            "luk2x2",         "godel2x2",
  };
  return names;
}

inline Fixture get_fixture(const std::string& name) {
  using detail::make_rel;
  using detail::make_sub;
  using detail::make_uni;
  Fixture f;
  f.name = name;
  if (name == "inner-example-godel" || name == "inner-example-luk" || name == "outer-example") {
    LatticePtr lat = name == "inner-example-godel" ? Lattice::goedel_chain(10)
                                                   : Lattice::lukasiewicz_chain(10);
    f.universe = make_uni(lat, {"a", "b", "c", "d"}, {"0.2", "0.7", "0.3", "0.8"});
    f.m = make_sub(f.universe, {"0.2", "0.5", "0.3", "0.6"});
    f.q = make_sub(f.universe, {"0.2", "0.5", "0.3", "0.5"});
    f.op = Operator::builtin(f.universe, "identity",
                             name == "outer-example" ? Direction::lower : Direction::upper);
  } else if (name == "euclidean-example") {
    f.universe = make_uni(Lattice::goedel_chain(10), {"a", "b", "c"}, {"0.5", "0.7", "0.4"});
    f.relation = make_rel(f.universe, {"0.5", "0.2", "0.2",
                                       "0.2", "0.7", "0.1",
                                       "0.2", "0.1", "0.4"});
  } else if (name == "mediate-example") {
    f.universe = make_uni(Lattice::goedel_chain(10), {"a", "b", "c"}, {"0.5", "0.7", "0.4"});
    f.relation = make_rel(f.universe, {"0.5", "0.2", "0.3",
                                       "0.1", "0.7", "0.1",
                                       "0.2", "0.4", "0.4"});
  } else if (name == "least-equivalent" || name == "largest-equivalent") {
    f.universe = make_uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"1/2", "3/4"});
    f.op = name == "least-equivalent"
               ? Operator::builtin(f.universe, "identity", Direction::upper)
               : Operator::builtin(f.universe, "h1_largest", Direction::upper);
    f.relation = name == "least-equivalent" ? identity_relation(f.universe)
                                            : full_relation(f.universe);
  } else if (name == "boolean2x") {
    f.universe = make_uni(Lattice::boolean_2(), {"a", "b"}, {"1", "1"});
    f.instance = InstanceSpec{name, f.universe, {}, {}};
  } else if (name == "luk2x1") {
    f.universe = make_uni(Lattice::lukasiewicz_chain(2), {"a"}, {"1"});
    f.instance = InstanceSpec{name, f.universe, {}, {}};
  } else if (name == "luk2x2") {
    f.universe = make_uni(Lattice::lukasiewicz_chain(2), {"a", "b"}, {"1", "1"});
    f.instance = InstanceSpec{name, f.universe, {}, {}};
  } else if (name == "godel2x2") {
    f.universe = make_uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
    InstanceSpec inst{name, f.universe, {}, {}};
    for (const std::string& n : axiom_names()) {
      AxiomId ax = axiom_by_name(n);
      if (ax.single && ax.family == Direction::upper) inst.scope.push_back(n);
    }
    f.instance = std::move(inst);
  } else {
    throw ParseError("unknown fixture '" + name + "'");
  }
  return f;
}

}  // namespace lvrough
