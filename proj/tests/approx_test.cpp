#include <gtest/gtest.h>

#include "lvrough/approx.hpp"

using namespace lvrough;

namespace {

UniversePtr uni(const LatticePtr& lat, std::vector<std::string> pts,
                std::vector<std::string> mem) {
  std::vector<Elem> vals;
  for (const auto& s : mem) vals.push_back(lat->elem_of(Rational::parse(s)));
  return Universe::make(lat, std::move(pts), std::move(vals));
}

}  // namespace

TEST(Approx, UpperOfPointSubsetRecoversRelation) {
  UniversePtr u = uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
  for (const Relation& r : enumerate_relations(u))
    for (int a = 0; a < u->n_points(); ++a) {
      LSubset row = upper_approx(r, point_subset(u, a));
      for (int b = 0; b < u->n_points(); ++b) EXPECT_EQ(row.at(b), r.at(a, b));
    }
}

TEST(Approx, ZeroRelationLimits) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"1/2", "3/4"});
  Relation zero = zero_relation(u);
  for (const LSubset& q : enumerate_powerset(u)) {
    EXPECT_EQ(upper_approx(zero, q), zero_subset(u));
    EXPECT_EQ(lower_approx(zero, q), full_subset(u));
  }
}

TEST(Approx, NegLowerOfCopointRecoversRelation) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(2), {"a", "b"}, {"1", "1"});
  for (const Relation& r : enumerate_relations(u))
    for (int a = 0; a < u->n_points(); ++a) {
      LSubset row = neg(lower_approx(r, copoint_subset(u, a)));
      for (int b = 0; b < u->n_points(); ++b) EXPECT_EQ(row.at(b), r.at(a, b));
    }
}

TEST(Approx, Monotone) {
  UniversePtr u = uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
  auto subsets = enumerate_powerset(u);
  for (const Relation& r : enumerate_relations(u))
    for (const LSubset& q : subsets)
      for (const LSubset& v : subsets)
        if (q.leq(v)) {
          EXPECT_TRUE(upper_approx(r, q).leq(upper_approx(r, v)));
          EXPECT_TRUE(lower_approx(r, q).leq(lower_approx(r, v)));
        }
}

TEST(Approx, JoinAndMeetPreservation) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(2), {"a", "b"}, {"1", "1"});
  auto subsets = enumerate_powerset(u);
  for (const Relation& r : enumerate_relations(u))
    for (const LSubset& q : subsets)
      for (const LSubset& v : subsets) {
        EXPECT_EQ(upper_approx(r, join(q, v)),
                  join(upper_approx(r, q), upper_approx(r, v)));
        EXPECT_EQ(lower_approx(r, meet(q, v)),
                  meet(lower_approx(r, q), lower_approx(r, v)));
      }
}

TEST(Approx, ReflexiveBracketsTheSubset) {
  UniversePtr u = uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
  RelationProperties reflexive;
  reflexive.reflexive = true;
  for (const Relation& r : enumerate_relations(u, reflexive))
    for (const LSubset& q : enumerate_powerset(u)) {
      EXPECT_TRUE(q.leq(upper_approx(r, q)));
      EXPECT_TRUE(lower_approx(r, q).leq(q));
    }
}

TEST(Approx, TransitiveIsIdempotentUpperBound) {
  UniversePtr u = uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
  RelationProperties transitive;
  transitive.transitive = true;
  for (const Relation& r : enumerate_relations(u, transitive))
    for (const LSubset& q : enumerate_powerset(u))
      EXPECT_TRUE(upper_approx(r, upper_approx(r, q)).leq(upper_approx(r, q)));
}

TEST(Approx, BuiltinOperators) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"1/2", "3/4"});
  Operator id = Operator::builtin(u, "identity", Direction::upper);
  Operator h1 = Operator::builtin(u, "h1_largest", Direction::upper);
  for (const LSubset& q : enumerate_powerset(u)) EXPECT_EQ(id.apply(q), q);
  // h1_largest on a point subset gives b ↦ U(a) ∧ U(b)
  for (int a = 0; a < u->n_points(); ++a) {
    LSubset got = h1.apply(point_subset(u, a));
    for (int b = 0; b < u->n_points(); ++b)
      EXPECT_EQ(got.at(b), u->lat().meet(u->mem(a), u->mem(b)));
  }
  UniversePtr c = uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"3/4", "3/4"});
  Operator l1 = Operator::builtin(c, "l1_least", Direction::lower);
  EXPECT_EQ(l1.apply(full_subset(c)), full_subset(c));
}

TEST(Approx, BuiltinDirectionGuard) {
  UniversePtr u = uni(Lattice::boolean_2(), {"a"}, {"1"});
  EXPECT_THROW(Operator::builtin(u, "h1_largest", Direction::lower), DirectionMismatch);
  EXPECT_THROW(Operator::builtin(u, "l1_least", Direction::upper), DirectionMismatch);
  EXPECT_THROW(Operator::builtin(u, "nope", Direction::upper), ParseError);
  EXPECT_NO_THROW(Operator::builtin(u, "identity", Direction::lower));
}

TEST(Approx, TabulateMatchesLazyApplication) {
  UniversePtr u = uni(Lattice::goedel_chain(2), {"a", "b"}, {"1", "1/2"});
  Operator induced = Operator::induced_upper(identity_relation(u));
  Operator tab = tabulate(induced);
  PowersetIndex pidx(u);
  for (std::uint64_t i = 0; i < pidx.size(); ++i)
    EXPECT_EQ(tab.apply(pidx.at(i)), induced.apply(pidx.at(i)));
  // induced by the identity relation = identity operator (GL divisibility)
  Operator id = Operator::builtin(u, "identity", Direction::upper);
  EXPECT_TRUE(tables_equal(induced, id));
  // tabulation is idempotent
  EXPECT_TRUE(tables_equal(tabulate(tab), tab));
}

TEST(Approx, TableOperatorValidation) {
  UniversePtr u = uni(Lattice::boolean_2(), {"a", "b"}, {"1", "1"});
  std::vector<LSubset> short_entries(2, zero_subset(u));
  EXPECT_THROW(Operator::table(u, Direction::upper, short_entries), ParseError);
}

TEST(Approx, UniverseMismatchRejected) {
  LatticePtr L = Lattice::goedel_chain(10);
  UniversePtr u1 = uni(L, {"a", "b"}, {"0.2", "0.7"});
  UniversePtr u2 = uni(L, {"a", "b"}, {"0.2", "0.8"});
  EXPECT_THROW(upper_approx(zero_relation(u1), zero_subset(u2)), UniverseMismatch);
}
