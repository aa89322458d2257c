// Group engine tests.  Orders are pinned to closed forms computed in the
// test (k^(m-1) m!, special-linear counts), window composition is checked
// against direct function composition on Z_{mk}, and ring matrix products
// against a naive convolution oracle.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hrg/errors.hpp"
#include "hrg/groups.hpp"

namespace hrg {
namespace {

std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

GroupElem random_word(const FiniteGroupHandle& g, std::mt19937* rng,
                      int length) {
  std::uniform_int_distribution<std::size_t> pick(0, g.generators.size() - 1);
  GroupElem x = g.ops->identity();
  for (int i = 0; i < length; ++i)
    x = g.ops->multiply(x, g.generators[pick(*rng)]);
  return x;
}

TEST(AffineGroup, OrdersMatchClosedForm) {
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= 3; ++k) {
      if (m == 5 && k == 3) continue;  // 9720 elements; covered below
      const auto g = affine_group(m, k);
      const auto elems = group_elements(g);
      EXPECT_EQ(static_cast<std::int64_t>(elems.size()),
                ipow(k, m - 1) * factorial(m))
          << "m=" << m << " k=" << k;
      ASSERT_TRUE(g.known_order.has_value());
      EXPECT_EQ(*g.known_order, static_cast<std::int64_t>(elems.size()));
    }
  EXPECT_EQ(group_elements(affine_group(5, 3)).size(), 9720u);
  EXPECT_EQ(group_elements(affine_group(3, 2)).size(), 24u);
  EXPECT_EQ(group_elements(affine_group(5, 2)).size(), 1920u);
}

TEST(AffineGroup, GeneratorWindows) {
  const auto g = affine_group(3, 2);
  EXPECT_EQ(decode_affine(g, g.ops->identity()).window,
            (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(decode_affine(g, affine_gen(g, 0)).window,
            (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(decode_affine(g, affine_gen(g, 1)).window,
            (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(decode_affine(g, affine_gen(g, 2)).window,
            (std::vector<int>{1, 3, 2}));

  const auto g5 = affine_group(5, 2);
  EXPECT_EQ(decode_affine(g5, affine_gen(g5, 0)).window,
            (std::vector<int>{0, 2, 3, 4, 6}));
}

TEST(AffineGroup, GeneratorsAreInvolutions) {
  const auto g = affine_group(4, 3);
  for (const auto& s : g.generators) {
    EXPECT_NE(s, g.ops->identity());
    EXPECT_EQ(g.ops->multiply(s, s), g.ops->identity());
    EXPECT_EQ(g.ops->inverse(s), s);
  }
}

// The window of a product must agree with composing the windows as
// functions on Z_{mk} via the shift rule u(x + m) = u(x) + m.
TEST(AffineGroup, CompositionMatchesFunctionComposition) {
  const auto g = affine_group(4, 3);
  const int modulus = 12;
  const auto as_function = [&](const GroupElem& u, int x) {
    const auto w = decode_affine(g, u).window;
    int r = x % 4;
    if (r == 0) r = 4;
    const int a = (x - r) / 4;
    return ((w[static_cast<std::size_t>(r - 1)] + a * 4) % modulus + modulus) %
           modulus;
  };
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    const GroupElem u = random_word(g, &rng, 8);
    const GroupElem v = random_word(g, &rng, 8);
    const GroupElem uv = g.ops->multiply(u, v);
    for (int x = 0; x < modulus; ++x)
      ASSERT_EQ(as_function(uv, x), as_function(u, as_function(v, x)));
    // Inverse really inverts.
    EXPECT_EQ(g.ops->multiply(u, g.ops->inverse(u)), g.ops->identity());
    EXPECT_EQ(g.ops->multiply(g.ops->inverse(u), u), g.ops->identity());
  }
}

TEST(AffineGroup, EncodeValidatesWindows) {
  const auto g = affine_group(3, 2);
  EXPECT_EQ(decode_affine(g, encode_affine(g, AffinePerm{{4, 5, 3}, 6})).window,
            (std::vector<int>{4, 5, 3}));
  // Entries colliding mod 3: 1 and 4.
  EXPECT_THROW(encode_affine(g, AffinePerm{{1, 4, 2}, 6}), InvalidParamsError);
  // Right residues, wrong translation class: sum 3 instead of 0 mod 6.
  EXPECT_THROW(encode_affine(g, AffinePerm{{4, 2, 3}, 6}), InvalidParamsError);
  EXPECT_THROW(encode_affine(g, AffinePerm{{1, 2, 3}, 5}), InvalidParamsError);
  EXPECT_THROW(encode_affine(g, AffinePerm{{1, 2, 9}, 6}), InvalidParamsError);
}

TEST(AffineGroup, StandardSubgroupOrders) {
  const auto g = affine_group(3, 2);
  const auto subs = standard_subgroups(g);
  ASSERT_EQ(subs.size(), 3u);
  for (const auto& gens : subs)
    EXPECT_EQ(subgroup_closure(g, gens).size(), 6u);  // each a copy of S_3

  // Pairwise intersections have order 2: closure of a single transposition.
  for (int i = 0; i < 3; ++i) {
    std::vector<GroupElem> pair_gens;
    for (int j = 0; j < 3; ++j)
      if (j != i && j != (i + 1) % 3)
        pair_gens.push_back(affine_gen(g, j));
    EXPECT_EQ(subgroup_closure(g, pair_gens).size(), 2u);
  }

  const auto g5 = affine_group(5, 2);
  const auto subs5 = standard_subgroups(g5);
  EXPECT_EQ(subgroup_closure(g5, subs5[0]).size(), 120u);
}

TEST(AffineGroup, Cosets) {
  const auto g = affine_group(3, 2);
  const auto subs = standard_subgroups(g);
  const auto k0 = subgroup_closure(g, subs[0]);
  const auto reps = cosets(g, k0);
  EXPECT_EQ(reps.size(), 4u);  // 24 / 6
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
  // Representatives are pairwise in distinct cosets: r1^-1 r2 not in K.
  const std::set<GroupElem> kset(k0.begin(), k0.end());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      EXPECT_FALSE(kset.count(
          g.ops->multiply(g.ops->inverse(reps[a]), reps[b])));
}

TEST(ElementaryGroup, OrderMatchesSpecialLinearCount) {
  const auto g = el_group(3, 2, 2);
  const auto elems = group_elements(g);
  // |SL_3(F_2)| * 2^(8*(s-1)) = 168 * 256.
  EXPECT_EQ(elems.size(), 43008u);
  ASSERT_TRUE(g.known_order.has_value());
  EXPECT_EQ(*g.known_order, 43008);

  const auto g1 = el_group(3, 2, 1);  // plain SL_3(F_2)
  EXPECT_EQ(group_elements(g1).size(), 168u);
  const auto g3 = el_group(3, 3, 1);  // SL_3(F_3)
  EXPECT_EQ(group_elements(g3).size(), 5616u);
}

TEST(ElementaryGroup, GeneratorRelations) {
  const auto g = el_group(3, 2, 2);
  const GroupElem e01t = elementary_gen(g, 0, 1, {0, 1});
  // Characteristic 2: every elementary generator squares to the identity.
  EXPECT_EQ(g.ops->multiply(e01t, e01t), g.ops->identity());
  // e_{01}(1) e_{01}(t) = e_{01}(1+t).
  EXPECT_EQ(g.ops->multiply(elementary_gen(g, 0, 1, {1}), e01t),
            elementary_gen(g, 0, 1, {1, 1}));
  // Commutator [e_{01}(1), e_{12}(1)] = e_{02}(1).
  const GroupElem a = elementary_gen(g, 0, 1, {1});
  const GroupElem b = elementary_gen(g, 1, 2, {1});
  const GroupElem comm = g.ops->multiply(
      g.ops->multiply(a, b),
      g.ops->multiply(g.ops->inverse(a), g.ops->inverse(b)));
  EXPECT_EQ(comm, elementary_gen(g, 0, 2, {1}));
}

TEST(ElementaryGroup, MultiplicationMatchesConvolutionOracle) {
  const auto g = el_group(3, 5, 3);
  std::mt19937 rng(2025);
  for (int round = 0; round < 25; ++round) {
    const GroupElem x = random_word(g, &rng, 6);
    const GroupElem y = random_word(g, &rng, 6);
    const RingMatrix a = decode_matrix(g, x);
    const RingMatrix b = decode_matrix(g, y);
    const RingMatrix c = decode_matrix(g, g.ops->multiply(x, y));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::vector<std::int64_t> conv(6, 0);
        for (int l = 0; l < 3; ++l)
          for (int d1 = 0; d1 < 3; ++d1)
            for (int d2 = 0; d2 < 3; ++d2)
              conv[static_cast<std::size_t>(d1 + d2)] +=
                  a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]
                           [static_cast<std::size_t>(d1)] *
                  b.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]
                           [static_cast<std::size_t>(d2)];
        for (int d = 0; d < 3; ++d)  // powers >= s vanish
          EXPECT_EQ(conv[static_cast<std::size_t>(d)] % 5,
                    c.entries[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)]
                             [static_cast<std::size_t>(d)]);
      }
    EXPECT_EQ(g.ops->multiply(x, g.ops->inverse(x)), g.ops->identity());
  }
}

TEST(ElementaryGroup, StandardSubgroupClosureSizes) {
  const auto g = el_group(3, 2, 2);
  const auto subs = standard_subgroups(g);
  ASSERT_EQ(subs.size(), 3u);
  for (const auto& gens : subs) {
    // Generated by two cyclically consecutive elementary positions with
    // linear coefficients.  The commutator chain reaches the third position
    // but its top coefficient collapses under the truncation, leaving
    // 2^6 = 64 elements (not 2^7).
    EXPECT_EQ(subgroup_closure(g, gens).size(), 64u);
  }
  EXPECT_EQ(cosets(g, subgroup_closure(g, subs[0])).size(), 672u);  // 43008/64
}

TEST(ElementaryGroup, ValidatesParameters) {
  EXPECT_THROW(el_group(2, 2, 2), InvalidParamsError);
  EXPECT_THROW(el_group(3, 4, 2), InvalidParamsError);  // 4 is not prime
  EXPECT_THROW(el_group(3, 2, 0), InvalidParamsError);
  // Full closure of the q=3 truncated group exceeds the default capacity
  // (about 3.7e7 elements).
  EXPECT_THROW(group_elements(el_group(3, 3, 2), 1000000), CapacityError);
}

TEST(Closure, SmallCases) {
  const auto g = affine_group(3, 1);  // plain S_3 in window form
  EXPECT_EQ(group_elements(g).size(), 6u);
  EXPECT_EQ(subgroup_closure(g, {}).size(), 1u);
  EXPECT_EQ(subgroup_closure(g, {g.ops->identity()}).size(), 1u);
  // Two adjacent transpositions generate everything.
  EXPECT_EQ(subgroup_closure(g, {affine_gen(g, 1), affine_gen(g, 2)}).size(),
            6u);
}

TEST(DirectProduct, OrdersAndPairs) {
  const auto s2 = affine_group(2, 1);
  const auto p = direct_product(s2, s2);
  EXPECT_EQ(group_elements(p).size(), 4u);
  ASSERT_TRUE(p.known_order.has_value());
  EXPECT_EQ(*p.known_order, 4);

  const auto g = affine_group(3, 2);
  const auto gg = direct_product(g, g);
  ASSERT_TRUE(gg.known_order.has_value());
  EXPECT_EQ(*gg.known_order, 24 * 24);
  EXPECT_EQ(group_elements(gg).size(), 576u);

  // Paired subgroups multiply the factor orders.
  const auto pairs = paired_subgroups(gg, {{0, 0}, {1, 2}});
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& gens : pairs)
    EXPECT_EQ(subgroup_closure(gg, gens).size(), 36u);  // 6 * 6

  EXPECT_THROW(paired_subgroups(g, {{0, 0}}), UnsupportedFamilyError);
  EXPECT_THROW(paired_subgroups(gg, {{0, 5}}), InvalidParamsError);
}

TEST(DirectProduct, KnightPairingOrder) {
  const auto g5 = affine_group(5, 2);
  const auto gg = direct_product(g5, g5);
  ASSERT_TRUE(gg.known_order.has_value());
  EXPECT_EQ(*gg.known_order, 1920ll * 1920ll);
  // K_i x K_{2i mod 5} generator sets close to 120^2 elements.
  const auto pairs = paired_subgroups(gg, {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}});
  EXPECT_EQ(subgroup_closure(gg, pairs[1]).size(), 14400u);
}

TEST(QuotientCheck, TranslationSubgroupMissesTheStandardSubgroups) {
  const auto g = affine_group(3, 2);
  // Translations inside the windowed group: shift each strand block by a
  // multiple of 3, net shift zero mod 6.  Four elements.
  const GroupElem t1 = encode_affine(g, AffinePerm{{4, 5, 3}, 6});
  const GroupElem t2 = encode_affine(g, AffinePerm{{4, 2, 0}, 6});
  const auto n = subgroup_closure(g, {t1, t2});
  EXPECT_EQ(n.size(), 4u);
  EXPECT_TRUE(quotient_check(g, n, standard_subgroups(g)));

  // The whole group intersects every subgroup beyond the identity.
  EXPECT_FALSE(quotient_check(g, group_elements(g), standard_subgroups(g)));
  // The trivial set passes vacuously.
  EXPECT_TRUE(
      quotient_check(g, {g.ops->identity()}, standard_subgroups(g)));
  // A non-normal subgroup is rejected.
  const auto h = subgroup_closure(g, {affine_gen(g, 1)});
  EXPECT_THROW(quotient_check(g, h, standard_subgroups(g)), NotNormalError);
}

TEST(Handles, DescribeIsHumanReadable) {
  const auto g = affine_group(3, 2);
  EXPECT_EQ(g.ops->describe(g.ops->identity()), "[1,2,3]");
  const auto el = el_group(3, 2, 2);
  EXPECT_EQ(el.ops->describe(elementary_gen(el, 0, 1, {1, 1})),
            "[1,1+t,0; 0,1,0; 0,0,1]");
  const auto p = direct_product(g, g);
  EXPECT_EQ(p.ops->describe(p.ops->identity()), "([1,2,3] | [1,2,3])");
}

}  // namespace
}  // namespace hrg
