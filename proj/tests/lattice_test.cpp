#include <gtest/gtest.h>

#include "lvrough/lattice.hpp"

using namespace lvrough;

namespace {

Elem e(const Lattice& L, const char* s) { return L.elem_of(Rational::parse(s)); }

// Rebuilds a chain's tables as plain data for from_tables.
struct Tables {
  std::vector<Rational> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<Rational>> tensor;
  std::vector<std::vector<Rational>> impl;
};

Tables dump(const Lattice& L) {
  Tables t;
  const int m = L.size();
  for (Elem i = 0; i < m; ++i) t.labels.push_back(L.label(i));
  t.leq.assign(m, std::vector<bool>(m));
  t.tensor.assign(m, std::vector<Rational>(m));
  t.impl.assign(m, std::vector<Rational>(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      t.leq[i][j] = L.leq(i, j);
      t.tensor[i][j] = L.label(L.tensor(i, j));
      t.impl[i][j] = L.label(L.impl(i, j));
    }
  return t;
}

}  // namespace

TEST(Lattice, LukasiewiczChainArithmetic) {
  LatticePtr L = Lattice::lukasiewicz_chain(10);
  EXPECT_EQ(L->tensor(e(*L, "0.5"), e(*L, "0.8")), e(*L, "0.3"));
  EXPECT_EQ(L->impl(e(*L, "0.8"), e(*L, "0.5")), e(*L, "0.7"));
  EXPECT_TRUE(L->caps().residuated);
  EXPECT_TRUE(L->caps().gl_quantale);
  EXPECT_TRUE(L->caps().mv_algebra);
}

TEST(Lattice, LukasiewiczUnitChain) {
  LatticePtr L = Lattice::lukasiewicz_chain(1);
  EXPECT_EQ(L->tensor(L->top(), L->top()), L->top());
  EXPECT_TRUE(L->caps().mv_algebra);
}

TEST(Lattice, GoedelChainArithmetic) {
  LatticePtr L = Lattice::goedel_chain(10);
  EXPECT_EQ(L->impl(e(*L, "0.7"), e(*L, "0.5")), e(*L, "0.5"));
  EXPECT_EQ(L->impl(e(*L, "0.3"), e(*L, "0.3")), L->top());
  EXPECT_TRUE(L->caps().gl_quantale);
  EXPECT_FALSE(L->caps().mv_algebra);
}

TEST(Lattice, GoedelTwoLevelsIsNotMv) {
  LatticePtr L = Lattice::goedel_chain(2);
  // (1/2 → 0) → 0 = 0 → 0 = 1 ≠ 1/2
  EXPECT_FALSE(L->caps().mv_algebra);
  Elem half = e(*L, "1/2");
  EXPECT_EQ(L->impl(L->impl(half, L->bot()), L->bot()), L->top());
}

TEST(Lattice, BooleanIsCrisp) {
  LatticePtr L = Lattice::boolean_2();
  EXPECT_EQ(L->size(), 2);
  EXPECT_EQ(L->impl(L->top(), L->bot()), L->bot());
  EXPECT_EQ(L->impl(L->bot(), L->bot()), L->top());
  EXPECT_EQ(L->tensor(L->top(), L->top()), L->top());
  EXPECT_TRUE(L->caps().mv_algebra);
}

TEST(Lattice, FromTablesRebuildsChains) {
  for (bool luk : {true, false}) {
    LatticePtr ref = luk ? Lattice::lukasiewicz_chain(3) : Lattice::goedel_chain(3);
    Tables t = dump(*ref);
    LatticePtr with_impl = Lattice::from_tables(t.labels, t.leq, t.tensor, t.impl);
    LatticePtr derived = Lattice::from_tables(t.labels, t.leq, t.tensor, std::nullopt);
    EXPECT_TRUE(with_impl->same_as(*ref));
    EXPECT_TRUE(derived->same_as(*ref));
    EXPECT_TRUE(with_impl->caps().gl_quantale);
    EXPECT_EQ(with_impl->caps().mv_algebra, luk);
  }
}

TEST(Lattice, FromTablesRejectsNonAssociativeTensor) {
  Tables t = dump(*Lattice::lukasiewicz_chain(3));
  t.tensor[1][2] = t.labels[3];  // breaks commutativity/associativity
  EXPECT_THROW(
      Lattice::from_tables(t.labels, t.leq, t.tensor, std::nullopt),
      NotResiduated);
}

TEST(Lattice, FromTablesRejectsBrokenOrder) {
  Tables t = dump(*Lattice::goedel_chain(2));
  t.leq[0][0] = false;  // not reflexive
  EXPECT_THROW(Lattice::from_tables(t.labels, t.leq, t.tensor, t.impl), NotALattice);
}

TEST(Lattice, FromTablesRejectsWrongImpl) {
  Tables t = dump(*Lattice::lukasiewicz_chain(2));
  t.impl[2][0] = t.labels[2];  // adjunction broken
  EXPECT_THROW(Lattice::from_tables(t.labels, t.leq, t.tensor, t.impl), NotResiduated);
}

TEST(Lattice, CarrierCapEnforced) {
  EXPECT_THROW(Lattice::lukasiewicz_chain(100), ParseError);
  EXPECT_NO_THROW(Lattice::lukasiewicz_chain(100, 128));
}

TEST(Lattice, LawSuitesPass) {
  for (LatticePtr L : {Lattice::lukasiewicz_chain(10), Lattice::goedel_chain(10),
                       Lattice::boolean_2()}) {
    LawReport rep = verify_laws(*L);
    EXPECT_TRUE(rep.all_pass());
    for (const LawVerdict& v : rep.items) EXPECT_NE(v.status, LawStatus::fail) << v.law;
  }
}

TEST(Lattice, LawSuiteSkipsMvOnGoedel) {
  LawReport rep = verify_laws(*Lattice::goedel_chain(10));
  bool saw_mv_skip = false;
  for (const LawVerdict& v : rep.items)
    if (v.law.rfind("mv.", 0) == 0) {
      EXPECT_EQ(v.status, LawStatus::skipped);
      saw_mv_skip = true;
    }
  EXPECT_TRUE(saw_mv_skip);
}

TEST(Lattice, ElemOfRejectsOffCarrier) {
  LatticePtr L = Lattice::goedel_chain(2);
  EXPECT_THROW(L->elem_of(Rational::parse("1/3")), ParseError);
  EXPECT_EQ(L->label(L->elem_of(Rational::parse("0.5"))).str(), "1/2");
}
