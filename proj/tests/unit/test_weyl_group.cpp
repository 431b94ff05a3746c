#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cnbethe/errors.hpp"
#include "cnbethe/weyl_group.hpp"
#include "oracle.hpp"

using namespace cnbethe;

namespace {

SignedPermutation T(int n, int i) { return SignedPermutation::transposition(n, i); }
SignedPermutation R(int n) { return SignedPermutation::reflection(n, 1); }

SignedPermutation chain(std::initializer_list<SignedPermutation> gs) {
  auto it = gs.begin();
  SignedPermutation out = *it;
  for (++it; it != gs.end(); ++it) out = compose(out, *it);
  return out;
}

SignedPermutation random_element(int n, std::mt19937_64& rng) {
  const auto all = enumerate(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST(SignedPermutation, ValidatesConstruction) {
  EXPECT_THROW(SignedPermutation({1, 1}, {0, 0}), DomainError);
  EXPECT_THROW(SignedPermutation({1, 2}, {0, 1}), DomainError);
  EXPECT_THROW(SignedPermutation({1}, {0, 1}), DimensionError);
  EXPECT_THROW(T(3, 3), IndexError);
  EXPECT_THROW(T(3, 0), IndexError);
  EXPECT_NO_THROW(SignedPermutation({-1, 1}, {1, 0}));
}

TEST(SignedPermutation, ToStringIsOneBased) {
  EXPECT_EQ(SignedPermutation({1, -1}, {1, 0}).to_string(), "(+1,-1;2,1)");
}

TEST(Compose, InvolutionsSquareToIdentity) {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) EXPECT_TRUE(compose(T(n, i), T(n, i)).is_identity());
    EXPECT_TRUE(compose(R(n), R(n)).is_identity());
  }
}

TEST(Compose, DefiningRelations) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(chain({R(n), T(n, 1), R(n), T(n, 1)}), chain({T(n, 1), R(n), T(n, 1), R(n)}));
    for (int i = 1; i + 1 < n; ++i) {
      EXPECT_EQ(chain({T(n, i), T(n, i + 1), T(n, i)}), chain({T(n, i + 1), T(n, i), T(n, i + 1)}));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) EXPECT_EQ(compose(T(n, i), T(n, j)), compose(T(n, j), T(n, i)));
      if (i > 1) EXPECT_EQ(compose(R(n), T(n, i)), compose(T(n, i), R(n)));
    }
  }
}

TEST(Compose, IdentityIsNeutral) {
  std::mt19937_64 rng(3);
  const auto e = SignedPermutation::identity(4);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_element(4, rng);
    EXPECT_EQ(compose(g, e), g);
    EXPECT_EQ(compose(e, g), g);
  }
}

TEST(Compose, ActsAsSequentialApplication) {
  std::mt19937_64 rng(5);
  const std::vector<double> x{0.3, -1.7, 2.2, 0.9};
  for (int t = 0; t < 50; ++t) {
    const auto g = random_element(4, rng);
    const auto h = random_element(4, rng);
    EXPECT_EQ(apply_to_point(compose(g, h), x), apply_to_point(h, apply_to_point(g, x)));
  }
}

TEST(Compose, RejectsRankMismatch) { EXPECT_THROW(compose(T(2, 1), T(3, 1)), DimensionError); }

TEST(Inverse, Basics) {
  EXPECT_TRUE(inverse(SignedPermutation::identity(3)).is_identity());
  EXPECT_EQ(inverse(T(3, 2)), T(3, 2));
  EXPECT_EQ(inverse(R(3)), R(3));
}

TEST(Inverse, ExhaustiveOnW3) {
  for (const auto& g : enumerate(3)) {
    EXPECT_TRUE(compose(g, inverse(g)).is_identity());
    EXPECT_TRUE(compose(inverse(g), g).is_identity());
  }
}

TEST(ApplyToPoint, Examples) {
  const std::vector<double> x{1.0, 2.0};
  EXPECT_EQ(apply_to_point(SignedPermutation::identity(2), x), x);
  EXPECT_EQ(apply_to_point(R(2), x), (std::vector<double>{-1.0, 2.0}));
  EXPECT_EQ(apply_to_point(T(2, 1), x), (std::vector<double>{2.0, 1.0}));
  EXPECT_THROW(apply_to_point(T(3, 1), x), DimensionError);
}

TEST(Enumerate, SizesMatchIndependentClosure) {
  const std::size_t expected[] = {2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate(n);
    EXPECT_EQ(all.size(), expected[n - 1]);
    EXPECT_EQ(all.size(), oracle::group(n).size());
    EXPECT_EQ(std::set<SignedPermutation>(all.begin(), all.end()).size(), all.size());
    EXPECT_TRUE(all.front().is_identity());
  }
}

TEST(Enumerate, CapacityAndDomain) {
  EXPECT_THROW(enumerate(6), CapacityError);
  EXPECT_NO_THROW(enumerate(5));
  EXPECT_THROW(enumerate(0), DomainError);
}

TEST(EvaluateWord, Relations) {
  using G = Generator;
  EXPECT_TRUE(evaluate_word({}, 3).is_identity());
  EXPECT_EQ(evaluate_word({G::T(1), G::T(2), G::T(1)}, 3), evaluate_word({G::T(2), G::T(1), G::T(2)}, 3));
  EXPECT_EQ(evaluate_word({G::R1(), G::T(2)}, 3), evaluate_word({G::T(2), G::R1()}, 3));
  EXPECT_THROW(evaluate_word({G::T(3)}, 3), IndexError);
}

TEST(WordFor, RoundTripsOnW3AndW4) {
  EXPECT_TRUE(word_for(SignedPermutation::identity(3)).empty());
  EXPECT_EQ(evaluate_word(word_for(T(3, 2)), 3), T(3, 2));
  for (int n = 3; n <= 4; ++n) {
    for (const auto& g : enumerate(n)) {
      const auto w = word_for(g);
      EXPECT_EQ(evaluate_word(w, n), g) << g.to_string();
      // Letters are involutions, so the reversed word is the inverse.
      EXPECT_TRUE(compose(evaluate_word(w, n), evaluate_word(reversed(w), n)).is_identity());
    }
  }
}

TEST(WordFor, EmptyWordPrintsAsIdentity) { EXPECT_EQ(to_string(GeneratorWord{}), "I"); }

TEST(ClassifyWedge, Examples) {
  const std::vector<double> a{0.5, 1.2};
  EXPECT_TRUE(classify_wedge(a).is_identity());
  const std::vector<double> b{-0.5, 1.2};
  EXPECT_EQ(classify_wedge(b), SignedPermutation({-1, 1}, {0, 1}));
  const std::vector<double> c{2.0, -1.0, 0.5};
  const auto y = apply_to_point(classify_wedge(c), c);
  EXPECT_EQ(y, (std::vector<double>{0.5, 1.0, 2.0}));
}

TEST(ClassifyWedge, BoundaryPointsThrow) {
  const std::vector<double> wall{0.0, 1.0};
  const std::vector<double> tie{1.0, -1.0};
  EXPECT_THROW(classify_wedge(wall), BoundaryPointError);
  EXPECT_THROW(classify_wedge(tie), BoundaryPointError);
}

TEST(ClassifyWedge, RandomPointsLandInFundamentalWedge) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(4);
    for (auto& v : x) v = d(rng);
    const auto y = apply_to_point(classify_wedge(x), x);
    EXPECT_GT(y[0], 0.0);
    for (std::size_t j = 1; j < y.size(); ++j) EXPECT_LT(y[j - 1], y[j]);
  }
}

TEST(WeylGroup, TablesAgreeWithCompose) {
  const WeylGroup w(3);
  EXPECT_EQ(w.order(), 48u);
  EXPECT_EQ(w.generator_count(), 3u);
  for (std::size_t q = 0; q < w.order(); ++q) {
    EXPECT_EQ(w.index_of(w.element(q)), q);
    for (std::size_t s = 0; s < w.generator_count(); ++s) {
      EXPECT_EQ(w.right_multiply(q, s), w.index_of(compose(w.element(q), w.generator(s).element(3))));
    }
  }
  EXPECT_EQ(w.slot_of(Generator::R1()), 2u);
  EXPECT_THROW(w.slot_of(Generator::T(3)), IndexError);
  EXPECT_THROW(WeylGroup(6), CapacityError);
}

TEST(WeylGroup, ProductIndexIsAssociative) {
  const WeylGroup w(3);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, w.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(w.product_index(w.product_index(a, b), c), w.product_index(a, w.product_index(b, c)));
  }
}
