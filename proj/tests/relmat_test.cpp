#include "quantrel/relmat.hpp"

#include <gtest/gtest.h>

#include "quantrel/error.hpp"
#include "support/oracles.hpp"

using namespace quantrel;
using namespace quantrel::testing;

namespace {

const FinType kAB("AB", {"a", "b"});
const FinType kA("A", {"a"});
const FinType kC("C", {"c"});
const FinType kOne = FinType::unit();

QuantalePtr chain3() {
  return heyting_quantale({{"lo", "mid", "hi"}, {{"lo", "mid"}, {"mid", "hi"}}});
}

Mat random_heyting(std::mt19937& rng, const QuantalePtr& q, const FinType& s,
                   const FinType& d) {
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  std::vector<QElem> e;
  for (std::size_t i = 0; i < s.size() * d.size(); ++i)
    e.push_back(LatticeIndex{pick(rng)});
  return Mat(s, d, q, std::move(e));
}

/// One random matrix generator per residuated quantale.
std::vector<std::function<Mat(std::mt19937&, const FinType&, const FinType&)>>
generators() {
  const auto h = chain3();
  return {
      [](std::mt19937& g, const FinType& s, const FinType& d) {
        return random_boolean(g, s, d);
      },
      [](std::mt19937& g, const FinType& s, const FinType& d) {
        return random_tropical(g, s, d);
      },
      [](std::mt19937& g, const FinType& s, const FinType& d) {
        return random_natural(g, s, d);
      },
      [h](std::mt19937& g, const FinType& s, const FinType& d) {
        return random_heyting(g, h, s, d);
      },
  };
}

}  // namespace

TEST(RelMat, IdentityExamples) {
  EXPECT_EQ(identity(kAB, boolean_quantale()), bmat(kAB, kAB, {{1, 0}, {0, 1}}));
  EXPECT_EQ(identity(kAB, tropical_quantale()),
            tmat(kAB, kAB, {{0, kInf}, {kInf, 0}}));
  EXPECT_EQ(identity(kA, natural_quantale()),
            Mat(kA, kA, natural_quantale(), {natural(0)}));
}

TEST(RelMat, ComposeExamples) {
  const FinType one("P", {"p"});
  EXPECT_EQ(compose(bmat(one, kAB, {{1, 1}}), bmat(kAB, kC, {{0}, {1}})),
            bmat(one, kC, {{1}}));
  EXPECT_EQ(compose(tmat(one, kAB, {{2, 7}}), tmat(kAB, kC, {{3}, {1}})),
            tmat(one, kC, {{5}}));
  std::mt19937 rng(7);
  for (auto& gen : generators()) {
    const Mat r = gen(rng, kAB, kC);
    EXPECT_EQ(compose(identity(kAB, r.quantale()), r), r);
  }
}

TEST(RelMat, ComposeErrors) {
  const Mat r = bmat(kAB, kC, {{1}, {0}});
  EXPECT_THROW(compose(r, r), TypeMismatch);
  EXPECT_THROW(compose(identity(kAB, tropical_quantale()), r), DomainMismatch);
  EXPECT_THROW(Mat(kAB, kAB, boolean_quantale(), {true}), TypeMismatch);
  EXPECT_THROW(Mat(kA, kA, boolean_quantale(), {tropical(1)}), DomainMismatch);
}

TEST(RelMat, PointwiseLattice) {
  const FinType one("P", {"p"});
  const Mat r = bmat(one, kAB, {{1, 0}});
  EXPECT_EQ(mjoin(r, mzero(one, kAB, boolean_quantale())), r);
  EXPECT_EQ(mjoin(r, bmat(one, kAB, {{0, 1}})), bmat(one, kAB, {{1, 1}}));
  EXPECT_TRUE(mleq(mzero(one, kAB, boolean_quantale()), r));
  EXPECT_EQ(mmeet(r, bmat(one, kAB, {{1, 1}})), r);
  EXPECT_EQ(mtop(kAB, kAB, tropical_quantale()),
            tmat(kAB, kAB, {{0, 0}, {0, 0}}));
  EXPECT_THROW(mtop(kAB, kAB, language_quantale({"a"})), Unsupported);
  EXPECT_THROW(mjoin(r, bmat(kAB, kAB, {{1, 0}, {0, 1}})), TypeMismatch);
}

TEST(RelMat, ResidualRightExamples) {
  const Mat r = bmat(kAB, kAB, {{1, 1}, {0, 1}});
  EXPECT_EQ(residual_right(r, identity(kAB, boolean_quantale())), r);
  const FinType z("Z", {"z"});
  const FinType y("Y", {"y"});
  EXPECT_EQ(residual_right(bmat(z, kAB, {{1, 0}}), bmat(y, kAB, {{1, 1}})),
            bmat(z, y, {{0}}));
  EXPECT_EQ(residual_right(tmat(z, kA, {{5}}), tmat(y, kA, {{2}})),
            tmat(z, y, {{3}}));
  const auto lang = language_quantale({"a"});
  EXPECT_THROW(residual_right(identity(kA, lang), identity(kA, lang)),
               Unsupported);
}

TEST(RelMat, ResidualLeftExamples) {
  const Mat t = bmat(kAB, kC, {{1}, {0}});
  EXPECT_EQ(residual_left(identity(kAB, boolean_quantale()), t), t);
  const FinType x("X", {"x"});
  EXPECT_EQ(residual_left(bmat(kAB, x, {{1}, {0}}), bmat(kAB, kC, {{1}, {1}})),
            bmat(x, kC, {{1}}));
}

TEST(RelMat, MixedAssociativeLaw) {
  std::mt19937 rng(11);
  for (auto& gen : generators())
    for (int i = 0; i < 200; ++i) {
      // s: Z->V, t: Z->X, r: W->X
      const Mat s = gen(rng, kAB, kAB);
      const Mat t = gen(rng, kAB, kAB);
      const Mat r = gen(rng, kAB, kAB);
      EXPECT_EQ(residual_left(s, residual_right(t, r)),
                residual_right(residual_left(s, t), r));
    }
}

TEST(RelMat, TransposeExamples) {
  const Mat r = bmat(kAB, kAB, {{1, 0}, {1, 1}});
  EXPECT_EQ(transpose(r), bmat(kAB, kAB, {{1, 1}, {0, 1}}));
  EXPECT_EQ(transpose(transpose(r)), r);
  EXPECT_EQ(transpose(identity(kAB, tropical_quantale())),
            identity(kAB, tropical_quantale()));
}

TEST(RelMat, AdjointPairExamples) {
  const auto q = boolean_quantale();
  EXPECT_TRUE(is_adjoint_pair(identity(kAB, q), identity(kAB, q)));
  const Mat graph = bmat(kAB, kC, {{1}, {1}});
  EXPECT_TRUE(is_adjoint_pair(graph, transpose(graph)));
  const Mat split = bmat(kC, kAB, {{1, 1}});
  EXPECT_FALSE(is_adjoint_pair(split, transpose(split)));
  EXPECT_TRUE(mleq(identity(kC, q), compose(split, transpose(split))));
  EXPECT_THROW(is_adjoint_pair(graph, graph), TypeMismatch);
}

TEST(RelMat, FunctionalityClassification) {
  const auto q = boolean_quantale();
  EXPECT_EQ(classify(identity(kAB, q)), Functionality::inversion);
  EXPECT_FALSE(is_functional(mzero(kAB, kC, q)));
  EXPECT_EQ(classify(bmat(kAB, kC, {{1}, {1}})), Functionality::reflective);
  const FinType abc("ABC", {"a", "b", "c"});
  EXPECT_EQ(classify(bmat(kAB, abc, {{1, 0, 0}, {0, 0, 1}})),
            Functionality::coreflective);
  EXPECT_EQ(classify(bmat(abc, kAB, {{1, 0}, {1, 0}, {1, 0}})),
            Functionality::functional);
  EXPECT_TRUE(is_functional(identity(kAB, tropical_quantale())));
  EXPECT_FALSE(is_functional(tmat(kAB, kAB, {{0, 1}, {kInf, 0}})));
}

TEST(RelMat, FunctionalIffGraphOfTotalFunction) {
  // Oracle: enumerate every function Y -> X and collect its graph.
  for (std::size_t ny = 1; ny <= 3; ++ny)
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      const FinType y = type("Y", ny), x = type("X", nx);
      std::set<std::vector<bool>> graphs;
      std::vector<std::size_t> f(ny, 0);
      while (true) {
        std::vector<bool> e(ny * nx, false);
        for (std::size_t i = 0; i < ny; ++i) e[i * nx + f[i]] = true;
        graphs.insert(e);
        std::size_t k = 0;
        while (k < ny && ++f[k] == nx) f[k++] = 0;
        if (k == ny) break;
      }
      for (const auto& r : all_boolean(y, x)) {
        std::vector<bool> bits;
        for (const auto& v : r.entries()) bits.push_back(std::get<bool>(v));
        EXPECT_EQ(is_functional(r), graphs.count(bits) == 1);
      }
    }
}

TEST(RelMat, RightAdjointsAreUnique) {
  for (std::size_t ny = 1; ny <= 2; ++ny)
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      const FinType y = type("Y", ny), x = type("X", nx);
      const auto candidates = all_boolean(x, y);
      for (const auto& r : all_boolean(y, x)) {
        std::vector<Mat> adjoints;
        for (const auto& s : candidates)
          if (is_adjoint_pair(r, s)) adjoints.push_back(s);
        ASSERT_LE(adjoints.size(), 1U);
        if (!adjoints.empty()) EXPECT_EQ(adjoints.front(), transpose(r));
      }
    }
}

TEST(RelMat, CategoryLaws) {
  std::mt19937 rng(3);
  for (auto& gen : generators())
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<std::size_t> size(1, 4);
      const FinType a = type("A", size(rng)), b = type("B", size(rng)),
                    c = type("C", size(rng)), d = type("D", size(rng));
      const Mat r = gen(rng, a, b), s = gen(rng, b, c), t = gen(rng, c, d);
      const Mat s2 = gen(rng, b, c);
      const auto& q = r.quantale();
      EXPECT_EQ(compose(compose(r, s), t), compose(r, compose(s, t)));
      EXPECT_EQ(compose(r, identity(b, q)), r);
      EXPECT_EQ(compose(identity(a, q), r), r);
      EXPECT_EQ(compose(r, mjoin(s, s2)), mjoin(compose(r, s), compose(r, s2)));
      EXPECT_EQ(compose(mjoin(s, s2), t), mjoin(compose(s, t), compose(s2, t)));
      EXPECT_EQ(compose(r, mzero(b, c, q)), mzero(a, c, q));
      EXPECT_EQ(transpose(compose(r, s)), compose(transpose(s), transpose(r)));
      EXPECT_EQ(transpose(mjoin(s, s2)), mjoin(transpose(s), transpose(s2)));
    }
}

TEST(RelMat, ResiduationLawsExhaustiveBoolean) {
  const FinType z = type("Z", 2), y = type("Y", 2), x = type("X", 2);
  const auto zy = all_boolean(z, y), yx = all_boolean(y, x), zx = all_boolean(z, x);
  for (const auto& t : zy)
    for (const auto& r : yx)
      for (const auto& s : zx) {
        ASSERT_EQ(mleq(compose(t, r), s), mleq(t, residual_right(s, r)));
        ASSERT_EQ(mleq(compose(t, r), s), mleq(r, residual_left(t, s)));
      }
}

TEST(RelMat, ResiduationConsequences) {
  std::mt19937 rng(5);
  for (auto& gen : generators())
    for (int i = 0; i < 200; ++i) {
      const FinType a = type("A", 2), b = type("B", 3), c = type("C", 2);
      const Mat s = gen(rng, a, c), r = gen(rng, b, c), t = gen(rng, a, b);
      // Right modus ponens and the Galois law on random triples.
      EXPECT_TRUE(mleq(compose(residual_right(s, r), r), s));
      EXPECT_EQ(mleq(compose(t, r), s), mleq(t, residual_right(s, r)));
      EXPECT_EQ(mleq(compose(t, r), s), mleq(r, residual_left(t, s)));
      // Transitivity: (t' <| s') ; (s' <| r') <= t' <| r'
      const Mat tt = gen(rng, a, c), ss = gen(rng, b, c), rr = gen(rng, c, c);
      EXPECT_TRUE(mleq(compose(residual_right(tt, ss), residual_right(ss, rr)),
                       residual_right(tt, rr)));
      // Unital law.
      EXPECT_EQ(residual_right(s, identity(c, s.quantale())), s);
    }
}

TEST(RelMat, HeytingImagesOfIdentity) {
  std::mt19937 rng(9);
  for (auto& gen : generators()) {
    const Mat q = gen(rng, kAB, kAB);
    EXPECT_EQ(heyting_direct_image(identity(kAB, q.quantale()), q), q);
    EXPECT_EQ(heyting_inverse_image(identity(kAB, q.quantale()), q), q);
  }
}

TEST(RelMat, HeytingDirectImageByExpansion) {
  const auto q = boolean_quantale();
  EXPECT_EQ(heyting_direct_image(bmat(kAB, kAB, {{1, 0}, {0, 0}}), identity(kAB, q)),
            bmat(kAB, kAB, {{1, 0}, {1, 1}}));
  // Independent expansion: H(q)[x][z] = forall y. r[y][x] -> (q;r)[y][z].
  const auto all = all_boolean(kAB, kAB);
  for (const auto& r : all)
    for (const auto& qq : all) {
      const Mat got = heyting_direct_image(r, qq);
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t z = 0; z < 2; ++z) {
          bool expect = true;
          for (std::size_t y = 0; y < 2; ++y) {
            bool qr = false;
            for (std::size_t w = 0; w < 2; ++w) qr = qr || (entry(qq, y, w) && entry(r, w, z));
            if (entry(r, y, x) && !qr) expect = false;
          }
          EXPECT_EQ(entry(got, x, z), expect);
        }
    }
}

TEST(RelMat, HeytingImagesAdjointForInversions) {
  // The direct/inverse image pair is a Galois connection when r is an
  // inversion; for other boolean terms it is not.
  const auto all = all_boolean(kAB, kAB);
  bool saw_failure = false;
  for (const auto& r : all) {
    bool adjoint = true;
    for (const auto& q : all)
      for (const auto& p : all)
        if (mleq(heyting_direct_image(r, q), p) != mleq(q, heyting_inverse_image(r, p)))
          adjoint = false;
    if (classify(r) == Functionality::inversion) {
      EXPECT_TRUE(adjoint);
    } else {
      saw_failure = saw_failure || !adjoint;
    }
  }
  EXPECT_TRUE(saw_failure);
}

TEST(RelMat, ObjectFlow) {
  const auto q = boolean_quantale();
  const Mat phi = bmat(kOne, kAB, {{1, 0}});
  EXPECT_EQ(obj_direct(phi, identity(kAB, q)), phi);
  EXPECT_EQ(obj_direct(phi, bmat(kAB, kAB, {{0, 1}, {1, 0}})),
            bmat(kOne, kAB, {{0, 1}}));
  const auto objs = all_boolean(kOne, kAB);
  for (const auto& r : all_boolean(kAB, kAB))
    for (const auto& a : objs)
      for (const auto& b : objs)
        EXPECT_EQ(mleq(obj_direct(a, r), b), mleq(a, obj_inverse(b, r)));
  EXPECT_THROW(obj_direct(identity(kAB, q), identity(kAB, q)), TypeMismatch);
}

TEST(RelMat, TropicalResiduationSampled) {
  std::mt19937 rng(13);
  const FinType a = type("A", 3), b = type("B", 2), c = type("C", 3);
  for (int i = 0; i < 500; ++i) {
    const Mat t = random_tropical(rng, a, b);
    const Mat r = random_tropical(rng, b, c);
    const Mat s = random_tropical(rng, a, c);
    ASSERT_EQ(mleq(compose(t, r), s), mleq(t, residual_right(s, r)));
    ASSERT_EQ(mleq(compose(t, r), s), mleq(r, residual_left(t, s)));
  }
}

TEST(RelMat, FinTypeRejectsDuplicateLabels) {
  EXPECT_THROW(FinType("T", {"x", "x"}), InvalidValue);
  EXPECT_EQ(FinType().size(), 0U);
  EXPECT_EQ(kAB.index_of("b"), std::optional<std::size_t>(1));
  EXPECT_FALSE(kAB.index_of("z"));
}
