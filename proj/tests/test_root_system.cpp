#include <gtest/gtest.h>

#include <set>

#include "affine321/coxeter_words.hpp"
#include "affine321/errors.hpp"
#include "affine321/pattern_avoidance.hpp"
#include "affine321/root_system.hpp"
#include "support/oracles.hpp"

namespace affine321 {
namespace {

Root R(std::vector<Int> c) { return Root(std::move(c)); }
Root alpha(int n, int i) { return Root::simple(n, i); }

TEST(RootTest, SimpleReflectionAction) {
  EXPECT_EQ(simple_reflection_action(1, alpha(4, 1)), -alpha(4, 1));
  EXPECT_EQ(simple_reflection_action(1, alpha(4, 2)), alpha(4, 2) + alpha(4, 1));
  EXPECT_EQ(simple_reflection_action(1, alpha(4, 3)), alpha(4, 3));
  // alpha_4 is adjacent to alpha_1 through the extra node.
  EXPECT_EQ(simple_reflection_action(1, alpha(4, 4)), alpha(4, 4) + alpha(4, 1));
  EXPECT_THROW(simple_reflection_action(5, alpha(4, 1)), InvalidArgument);
}

// The three-case formula for s_i on alpha_j, written out independently.
TEST(RootTest, ActionMatchesCaseFormula) {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Root expected = alpha(n, j);
        if (i == j) {
          expected = -alpha(n, j);
        } else if (oracle::mod_rep(i, n) == oracle::mod_rep(j - 1, n) ||
                   oracle::mod_rep(i, n) == oracle::mod_rep(j + 1, n)) {
          expected = alpha(n, j) + alpha(n, i);
        }
        EXPECT_EQ(simple_reflection_action(i, alpha(n, j)), expected);
      }
    }
  }
}

TEST(RootTest, Pairing) {
  EXPECT_EQ(pairing(alpha(4, 1), alpha(4, 1)), 2);
  EXPECT_EQ(pairing(alpha(4, 1), alpha(4, 2)), -1);
  EXPECT_EQ(pairing(alpha(4, 1), alpha(4, 3)), 0);
  EXPECT_EQ(pairing(alpha(3, 1), alpha(3, 3)), -1);
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_EQ(pairing(Root::delta(n), alpha(n, i)), 0);
  }
  EXPECT_THROW(pairing(alpha(3, 1), alpha(4, 1)), RankMismatch);
}

TEST(RootTest, Act) {
  EXPECT_EQ(act(CoxeterWord(3, {1, 2}), alpha(3, 1)), alpha(3, 2));
  EXPECT_EQ(act(CoxeterWord(3), alpha(3, 1)), alpha(3, 1));
  for (int i = 1; i <= 4; ++i) {
    const Root r = R({3, -1, 2, 5});
    EXPECT_EQ(act(CoxeterWord(4, {i, i}), r), r);
  }
}

TEST(RootTest, Rho) {
  EXPECT_EQ(rho_action(alpha(5, 5)), alpha(5, 1));
  EXPECT_EQ(rho_action(alpha(5, 2)), alpha(5, 3));
  const Root r = R({1, 0, 2, 7, 3});
  EXPECT_EQ(rho_action(r, 5), r);
  EXPECT_EQ(rho_action(rho_action(r, 2), -2), r);
  EXPECT_EQ(rho_action(Root::delta(5)), Root::delta(5));
}

TEST(RootTest, InversionSets) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(inversion_set(AffinePermutation::generator(n, 1)),
              std::vector<Root>{alpha(n, 1)});
    EXPECT_TRUE(inversion_set(AffinePermutation::identity(n)).empty());
  }
  const auto w321 = AffinePermutation::from_window({3, 2, 1});
  EXPECT_EQ(inversion_set(w321),
            (std::vector<Root>{R({0, 1, 0}), R({1, 0, 0}), R({1, 1, 0})}));
  const auto w231 = AffinePermutation::from_window({2, 3, 1});
  EXPECT_EQ(inversion_set(w231), (std::vector<Root>{R({0, 1, 0}), R({1, 1, 0})}));
  EXPECT_FALSE(condition_iv_holds(w321));
  EXPECT_TRUE(condition_iv_holds(w231));
  EXPECT_TRUE(condition_iv_holds(AffinePermutation::identity(3)));
}

// N(w) equals the set of positive real roots sent negative by w, found by
// scanning every positive real root up to height 4n.
TEST(RootProperty, InversionSetMatchesRootScan) {
  for (int n = 3; n <= 5; ++n) {
    const auto roots = oracle::positive_real_roots(n, 4 * n);
    for (const auto& w : enumerate_ball(n, 5).elements()) {
      const auto word = canonical_reduced_word(w);
      const auto inv = inversion_set(w);
      ASSERT_EQ(inv.size(), static_cast<std::size_t>(length(w)));
      std::set<std::vector<Int>> expected;
      for (const auto& c : roots) {
        if (act(word, Root(c)).is_negative()) expected.insert(c);
      }
      std::set<std::vector<Int>> got;
      for (const auto& r : inv) {
        ASSERT_TRUE(r.is_positive());
        got.insert({r.coeffs().begin(), r.coeffs().end()});
      }
      EXPECT_EQ(got, expected);
      // Any reduced word gives the same set.
      for (const auto& member : commutation_class(word)) EXPECT_EQ(inversion_set(member), inv);
      EXPECT_EQ(condition_iv_holds(w), is_321_avoiding(w));
    }
  }
}

// For positive real roots alpha, beta: alpha + beta is a root iff their
// pairing is -1.
TEST(RootProperty, SumIsRootIffPairingMinusOne) {
  for (int n = 3; n <= 5; ++n) {
    const auto roots = oracle::positive_real_roots(n, 4 * n);
    const auto all = oracle::positive_real_roots(n, 8 * n);
    for (const auto& a : roots) {
      for (const auto& b : roots) {
        std::vector<Int> sum(n);
        for (int k = 0; k < n; ++k) sum[k] = a[k] + b[k];
        EXPECT_EQ(all.count(sum) == 1, pairing(Root(a), Root(b)) == -1);
        EXPECT_EQ(pairing(Root(a), Root(a)), 2);
      }
    }
  }
}

TEST(RootProperty, ReflectionsAndRhoPreservePairing) {
  for (int n = 3; n <= 6; ++n) {
    const auto roots = oracle::positive_real_roots(n, 2 * n);
    for (const auto& a : roots) {
      for (const auto& b : roots) {
        const Int p = pairing(Root(a), Root(b));
        for (int i = 1; i <= n; ++i) {
          EXPECT_EQ(pairing(simple_reflection_action(i, Root(a)),
                            simple_reflection_action(i, Root(b))),
                    p);
        }
        EXPECT_EQ(pairing(rho_action(Root(a)), rho_action(Root(b))), p);
      }
      for (int z = 1; z < n; ++z) EXPECT_TRUE(rho_action(Root(a), z).is_positive());
      for (int i = 1; i <= n; ++i) {
        EXPECT_EQ(simple_reflection_action(i, simple_reflection_action(i, Root(a))), Root(a));
      }
    }
  }
}

}  // namespace
}  // namespace affine321
