#include <gtest/gtest.h>

#include "lvrough/universe.hpp"

using namespace lvrough;

namespace {

UniversePtr uni(const LatticePtr& lat, std::vector<std::string> pts,
                std::vector<std::string> mem) {
  std::vector<Elem> vals;
  for (const auto& s : mem) vals.push_back(lat->elem_of(Rational::parse(s)));
  return Universe::make(lat, std::move(pts), std::move(vals));
}

LSubset sub(const UniversePtr& u, std::vector<std::string> vals) {
  std::vector<Elem> v;
  for (const auto& s : vals) v.push_back(u->lat().elem_of(Rational::parse(s)));
  return LSubset(u, std::move(v));
}

}  // namespace

TEST(Universe, ValidatesConstruction) {
  LatticePtr L = Lattice::goedel_chain(10);
  EXPECT_THROW(Universe::make(L, {}, {}), ParseError);
  EXPECT_THROW(Universe::make(L, {"a", "a"}, {0, 0}), ParseError);
  EXPECT_THROW(Universe::make(L, {"a"}, {0, 1}), ParseError);
  UniversePtr u = uni(L, {"a", "b"}, {"0.2", "0.7"});
  EXPECT_FALSE(u->is_constant());
  EXPECT_TRUE(uni(L, {"a", "b"}, {"0.4", "0.4"})->is_constant());
  EXPECT_EQ(u->point_index("b"), 1);
  EXPECT_THROW(u->point_index("z"), UnknownPoint);
}

TEST(Universe, SubsetBoundIsHardError) {
  UniversePtr u = uni(Lattice::goedel_chain(10), {"a", "b"}, {"0.2", "0.7"});
  EXPECT_THROW(sub(u, {"0.3", "0.5"}), BoundViolation);
  EXPECT_NO_THROW(sub(u, {"0.2", "0.7"}));
}

TEST(Universe, PointwiseOps) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(10), {"a", "b"}, {"0.2", "0.7"});
  LSubset w = sub(u, {"0.2", "0.5"});
  LSubset v = sub(u, {"0.1", "0.6"});
  EXPECT_EQ(tensor(w, v), sub(u, {"0", "0.1"}));
  EXPECT_EQ(join(w, zero_subset(u)), w);
  EXPECT_EQ(meet(w, w), w);
  EXPECT_EQ(join(w, v), sub(u, {"0.2", "0.6"}));
}

TEST(Universe, MismatchedUniversesRejected) {
  LatticePtr L = Lattice::goedel_chain(10);
  UniversePtr u1 = uni(L, {"a", "b"}, {"0.2", "0.7"});
  UniversePtr u2 = uni(L, {"a", "b"}, {"0.2", "0.8"});
  EXPECT_THROW(join(zero_subset(u1), zero_subset(u2)), UniverseMismatch);
  UniversePtr u3 = uni(L, {"a", "b"}, {"0.2", "0.7"});
  EXPECT_NO_THROW(join(zero_subset(u1), zero_subset(u3)));  // equal content
}

TEST(Universe, Negation) {
  UniversePtr u =
      uni(Lattice::lukasiewicz_chain(10), {"a", "b", "c", "d"}, {"0.2", "0.7", "0.3", "0.8"});
  EXPECT_EQ(neg(zero_subset(u)), full_subset(u));
  EXPECT_EQ(neg(full_subset(u)), zero_subset(u));
  LSubset m = sub(u, {"0.2", "0.5", "0.3", "0.6"});
  EXPECT_EQ(neg(m), sub(u, {"0", "0.2", "0", "0.2"}));
  // involution on MV lattices
  EXPECT_EQ(neg(neg(m)), m);
}

TEST(Universe, NegationIsAntitone) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"1/2", "3/4"});
  auto all = enumerate_powerset(u);
  for (const LSubset& w : all)
    for (const LSubset& v : all)
      if (w.leq(v)) EXPECT_TRUE(neg(v).leq(neg(w)));
}

TEST(Universe, PointAndCopointSubsets) {
  UniversePtr u = uni(Lattice::lukasiewicz_chain(10), {"a", "b"}, {"0.2", "0.7"});
  EXPECT_EQ(point_subset(u, 0), sub(u, {"0.2", "0"}));
  EXPECT_EQ(copoint_subset(u, 0), sub(u, {"0", "0.7"}));
  EXPECT_THROW(point_subset(u, 5), UnknownPoint);
  // ¬U_{X−{d}} = U_{d} on MV chains
  for (int d = 0; d < u->n_points(); ++d)
    EXPECT_EQ(neg(copoint_subset(u, d)), point_subset(u, d));
}

TEST(Universe, JoinDecompositionHoldsOnGl) {
  UniversePtr u = uni(Lattice::goedel_chain(4), {"a", "b"}, {"1/2", "3/4"});
  EXPECT_TRUE(decompose_join_check(zero_subset(u)));
  EXPECT_TRUE(decompose_join_check(full_subset(u)));
  for (const LSubset& q : enumerate_powerset(u)) EXPECT_TRUE(decompose_join_check(q));
}

TEST(Universe, MeetDecompositionHoldsOnConstantMv) {
  UniversePtr u =
      uni(Lattice::lukasiewicz_chain(10), {"a", "b", "c"}, {"0.8", "0.8", "0.8"});
  EXPECT_TRUE(decompose_meet_check(full_subset(u)));
  EXPECT_TRUE(decompose_meet_check(zero_subset(u)));
  EXPECT_TRUE(decompose_meet_check(sub(u, {"0.3", "0.8", "0.1"})));
  UniversePtr small = uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"3/4", "3/4"});
  for (const LSubset& q : enumerate_powerset(small)) EXPECT_TRUE(decompose_meet_check(q));
}

TEST(Universe, MeetDecompositionPreconditions) {
  UniversePtr godel = uni(Lattice::goedel_chain(4), {"a", "b"}, {"1/2", "1/2"});
  EXPECT_THROW(decompose_meet_check(zero_subset(godel)), RequiresMV);
  UniversePtr nonconst =
      uni(Lattice::lukasiewicz_chain(4), {"a", "b"}, {"1/2", "3/4"});
  EXPECT_THROW(decompose_meet_check(zero_subset(nonconst)), RequiresConstantUniverse);
}

TEST(Universe, PowersetEnumeration) {
  UniversePtr boolean = uni(Lattice::boolean_2(), {"a", "b"}, {"1", "1"});
  EXPECT_EQ(enumerate_powerset(boolean).size(), 4u);
  UniversePtr luk = uni(Lattice::lukasiewicz_chain(2), {"a"}, {"1"});
  EXPECT_EQ(enumerate_powerset(luk).size(), 3u);
  UniversePtr mixed = uni(Lattice::goedel_chain(10), {"a", "b"}, {"0.2", "0.7"});
  EXPECT_EQ(enumerate_powerset(mixed).size(), 24u);
}

TEST(Universe, PowersetCanonicalOrder) {
  UniversePtr u = uni(Lattice::goedel_chain(10), {"a", "b"}, {"0.2", "0.7"});
  PowersetIndex idx(u);
  EXPECT_EQ(idx.at(0), zero_subset(u));
  EXPECT_EQ(idx.at(idx.size() - 1), full_subset(u));
  // second entry bumps the last point's digit
  EXPECT_EQ(idx.at(1), sub(u, {"0", "0.1"}));
  for (std::uint64_t i = 0; i < idx.size(); ++i) EXPECT_EQ(idx.index_of(idx.at(i)), i);
}

TEST(Universe, PowersetCapEnforced) {
  UniversePtr u = uni(Lattice::goedel_chain(10), {"a", "b"}, {"0.2", "0.7"});
  EXPECT_THROW(enumerate_powerset(u, 10), PowersetTooLarge);
}
