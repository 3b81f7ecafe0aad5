#include "quantrel/quantale.hpp"

#include <gtest/gtest.h>

#include "quantrel/error.hpp"
#include "support/oracles.hpp"

using namespace quantrel;
using quantrel::testing::tropical_grid;

namespace {

QuantalePtr five_element_heyting() {
  // 0 < a, b < ab < 1 with a, b incomparable.
  return heyting_quantale(HeytingTable{
      {"0", "a", "b", "ab", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "ab"}, {"b", "ab"}, {"ab", "1"}}});
}

QElem h(const QuantalePtr& q, const std::string& label) {
  return *dynamic_cast<const HeytingQuantale&>(*q).find(label);
}

std::vector<QElem> carrier_sample(const QuantalePtr& q) {
  switch (q->kind()) {
    case QuantaleKind::boolean:
      return {false, true};
    case QuantaleKind::tropical:
      return tropical_grid();
    case QuantaleKind::natural: {
      std::vector<QElem> g;
      for (std::uint64_t i = 0; i <= 9; ++i) g.push_back(natural(i));
      g.push_back(natural_inf());
      return g;
    }
    case QuantaleKind::heyting: {
      std::vector<QElem> g;
      const auto& hq = dynamic_cast<const HeytingQuantale&>(*q);
      for (std::size_t i = 0; i < hq.labels().size(); ++i)
        g.push_back(LatticeIndex{i});
      return g;
    }
    case QuantaleKind::language:
      return {Language{}, Language{{""}}, Language{{"a"}}, Language{{"", "aa"}},
              Language{{"a", "aaa"}}};
  }
  return {};
}

std::vector<QuantalePtr> residuated() {
  return {boolean_quantale(), tropical_quantale(), natural_quantale(),
          five_element_heyting()};
}

}  // namespace

TEST(Quantale, LeqExamples) {
  EXPECT_TRUE(boolean_quantale()->leq(false, true));
  EXPECT_TRUE(tropical_quantale()->leq(tropical_inf(), tropical(3)));
  EXPECT_FALSE(tropical_quantale()->leq(tropical(3), tropical(5)));
  EXPECT_TRUE(tropical_quantale()->leq(tropical(5), tropical(3)));
}

TEST(Quantale, MixedComparisonIsDomainMismatch) {
  EXPECT_THROW(tropical_quantale()->leq(tropical(1), true), DomainMismatch);
  EXPECT_THROW(boolean_quantale()->join(true, natural(1)), DomainMismatch);
  EXPECT_THROW(five_element_heyting()->leq(LatticeIndex{7}, LatticeIndex{0}),
               DomainMismatch);
}

TEST(Quantale, JoinMeetExamples) {
  const auto t = tropical_quantale();
  EXPECT_EQ(boolean_quantale()->join(false, true), QElem{true});
  EXPECT_EQ(t->join(tropical(3), tropical(5)), tropical(3));
  EXPECT_EQ(t->meet(tropical(3), tropical(5)), tropical(5));
  EXPECT_EQ(t->join_all({}), tropical_inf());
  EXPECT_EQ(t->meet_all({}), tropical(0));
  EXPECT_EQ(boolean_quantale()->meet_all({}), QElem{true});
  EXPECT_THROW(language_quantale({"a"})->meet_all({}), Unsupported);
}

TEST(Quantale, JoinMeetAgreeWithLeqScan) {
  // Oracle: least upper bound / greatest lower bound found by scanning the
  // sample with leq alone.
  for (const auto& q : residuated()) {
    const auto xs = carrier_sample(q);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        std::optional<QElem> lub, glb;
        for (const auto& c : xs) {
          if (q->leq(a, c) && q->leq(b, c) && (!lub || q->leq(c, *lub))) lub = c;
          if (q->leq(c, a) && q->leq(c, b) && (!glb || q->leq(*glb, c))) glb = c;
        }
        EXPECT_EQ(q->join(a, b), *lub) << q->name();
        EXPECT_EQ(q->meet(a, b), *glb) << q->name();
      }
  }
}

TEST(Quantale, TensorExamples) {
  const auto t = tropical_quantale();
  EXPECT_EQ(t->tensor(tropical(2), tropical(3)), tropical(5));
  EXPECT_EQ(t->tensor(tropical(2), tropical_inf()), tropical_inf());
  const auto l = language_quantale({"a"});
  EXPECT_EQ(l->tensor(Language{{"a"}}, Language{{"aa"}}), QElem{Language{{"aaa"}}});
}

TEST(Quantale, ResidualExamples) {
  const auto t = tropical_quantale();
  EXPECT_EQ(boolean_quantale()->residual(false, true), QElem{false});
  EXPECT_EQ(t->residual(tropical(5), tropical(2)), tropical(3));
  EXPECT_EQ(t->residual(tropical(3), tropical_inf()), tropical(0));
  EXPECT_THROW(language_quantale({"a"})->residual(Language{}, Language{}),
               Unsupported);
}

TEST(Quantale, TropicalResidualMatchesGridEnumeration) {
  // Oracle: the leq-largest t on a wide grid with t + b >= a numerically.
  const auto q = tropical_quantale();
  std::vector<QElem> wide;
  for (int i = 0; i <= 20; ++i) wide.push_back(tropical(i));
  wide.push_back(tropical_inf());
  for (const auto& a : tropical_grid())
    for (const auto& b : tropical_grid()) {
      std::optional<QElem> best;
      for (const auto& t : wide)
        if (q->leq(q->tensor(t, b), a) && (!best || q->leq(*best, t))) best = t;
      ASSERT_TRUE(best);
      EXPECT_EQ(q->residual(a, b), *best);
    }
}

TEST(Quantale, ScalarInteriorExamples) {
  const auto t = tropical_quantale();
  EXPECT_EQ(boolean_quantale()->scalar_interior(true), QElem{true});
  EXPECT_EQ(t->scalar_interior(tropical(3)), tropical_inf());
  EXPECT_EQ(t->scalar_interior(tropical(0)), tropical(0));
  const auto l = language_quantale({"a"});
  EXPECT_EQ(l->scalar_interior(Language{{"", "a"}}), QElem{Language{{""}}});
  EXPECT_EQ(l->scalar_interior(Language{{"a"}}), QElem{Language{}});
}

TEST(Quantale, ResiduationGaloisLaw) {
  for (const auto& q : residuated()) {
    const auto xs = carrier_sample(q);
    for (const auto& a : xs)
      for (const auto& b : xs)
        for (const auto& t : xs) {
          EXPECT_EQ(q->leq(q->tensor(t, b), a), q->leq(t, q->residual(a, b)))
              << q->name();
        }
  }
}

TEST(Quantale, ModusPonensAndDistributivity) {
  for (const auto& q : residuated()) {
    const auto xs = carrier_sample(q);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        EXPECT_TRUE(q->leq(q->tensor(q->residual(a, b), b), a));
        for (const auto& c : xs) {
          EXPECT_EQ(q->tensor(a, q->join(b, c)),
                    q->join(q->tensor(a, b), q->tensor(a, c)));
          EXPECT_EQ(q->residual(a, q->join(b, c)),
                    q->meet(q->residual(a, b), q->residual(a, c)));
        }
      }
  }
}

TEST(Quantale, StructuralInvariants) {
  auto all = residuated();
  all.push_back(language_quantale({"a"}));
  for (const auto& q : all) {
    const auto xs = carrier_sample(q);
    for (const auto& a : xs) {
      EXPECT_EQ(q->tensor(q->unit(), a), a);
      EXPECT_EQ(q->tensor(a, q->unit()), a);
      EXPECT_TRUE(q->leq(q->bottom(), a));
      EXPECT_EQ(q->tensor(a, q->bottom()), q->bottom());
      for (const auto& b : xs) EXPECT_EQ(q->tensor(a, b), q->tensor(b, a));
    }
    for (const auto& e : q->idempotents()) {
      EXPECT_EQ(q->tensor(e, e), e);
      EXPECT_TRUE(q->leq(e, q->unit()));
    }
    EXPECT_EQ(q->idempotents().front(), q->bottom());
  }
}

TEST(Quantale, LanguageTensorIsNotCommutativeOverTwoLetters) {
  const auto l = language_quantale({"a", "b"});
  EXPECT_NE(l->tensor(Language{{"a"}}, Language{{"b"}}),
            l->tensor(Language{{"b"}}, Language{{"a"}}));
}

TEST(Quantale, ScalarInteriorProperties) {
  for (const auto& q : residuated()) {
    const auto xs = carrier_sample(q);
    for (const auto& a : xs) {
      const QElem i = q->scalar_interior(a);
      EXPECT_TRUE(q->leq(i, a));
      EXPECT_TRUE(q->is_idempotent(i));
      EXPECT_EQ(q->scalar_interior(i), i);
      for (const auto& b : xs)
        if (q->leq(a, b)) EXPECT_TRUE(q->leq(i, q->scalar_interior(b)));
    }
    for (const auto& e : q->idempotents()) EXPECT_EQ(q->scalar_interior(e), e);
  }
}

TEST(Quantale, HeytingImplication) {
  const auto q = five_element_heyting();
  EXPECT_EQ(q->residual(h(q, "0"), h(q, "a")), h(q, "b"));
  EXPECT_EQ(q->residual(h(q, "b"), h(q, "a")), h(q, "b"));
  EXPECT_EQ(q->residual(h(q, "ab"), h(q, "1")), h(q, "ab"));
  EXPECT_EQ(q->residual(h(q, "a"), h(q, "0")), h(q, "1"));
  EXPECT_EQ(q->unit(), h(q, "1"));
  EXPECT_EQ(q->bottom(), h(q, "0"));
}

TEST(Quantale, HeytingTableValidation) {
  EXPECT_THROW(heyting_quantale({{}, {}}), InvalidValue);
  EXPECT_THROW(heyting_quantale({{"0", "1"}, {{"0", "2"}}}), InvalidValue);
  EXPECT_THROW(heyting_quantale({{"0", "1"}, {{"0", "1"}, {"1", "0"}}}),
               InvalidValue);
  // Two incomparable elements with no top.
  EXPECT_THROW(heyting_quantale({{"a", "b"}, {}}), InvalidValue);
  // M3 is a lattice but not distributive.
  EXPECT_THROW(heyting_quantale({{"0", "x", "y", "z", "1"},
                                 {{"0", "x"}, {"0", "y"}, {"0", "z"},
                                  {"x", "1"}, {"y", "1"}, {"z", "1"}}}),
               InvalidValue);
}

TEST(Quantale, SameQuantale) {
  EXPECT_TRUE(same_quantale(tropical_quantale(), tropical_quantale()));
  EXPECT_FALSE(same_quantale(tropical_quantale(), natural_quantale()));
  EXPECT_TRUE(same_quantale(five_element_heyting(), five_element_heyting()));
  EXPECT_FALSE(same_quantale(language_quantale({"a"}), language_quantale({"b"})));
}

TEST(Quantale, ParseAndFormatTropical) {
  const auto q = tropical_quantale();
  EXPECT_EQ(QElem{parse_tropical("2.5")}, tropical(Rational(5, 2)));
  EXPECT_EQ(QElem{parse_tropical("7/3")}, tropical(Rational(7, 3)));
  EXPECT_EQ(QElem{parse_tropical("inf")}, tropical_inf());
  EXPECT_EQ(QElem{parse_tropical("12")}, tropical(12));
  EXPECT_EQ(QElem{parse_tropical("0.25")}, tropical(Rational(1, 4)));
  EXPECT_EQ(QElem{parse_tropical("010")}, tropical(10));
  EXPECT_EQ(QElem{parse_tropical("08/09")}, tropical(Rational(8, 9)));
  EXPECT_THROW(parse_tropical("-1"), InvalidValue);
  EXPECT_THROW(parse_tropical("1/0"), InvalidValue);
  EXPECT_THROW(parse_tropical("x"), InvalidValue);
  EXPECT_EQ(q->format(tropical(Rational(5, 2))), "2.5");
  EXPECT_EQ(q->format(tropical(Rational(1, 40))), "0.025");
  EXPECT_EQ(q->format(tropical(Rational(1, 3))), "1/3");
  EXPECT_EQ(q->format(tropical_inf()), "inf");
  EXPECT_EQ(q->residual(tropical(Rational(5, 2)), tropical(Rational(1, 3))),
            tropical(Rational(13, 6)));
}

TEST(Quantale, NaturalOverflowIsReported) {
  const auto q = natural_quantale();
  EXPECT_THROW(q->tensor(natural(std::numeric_limits<std::uint64_t>::max()),
                         natural(1)),
               Unsupported);
}
