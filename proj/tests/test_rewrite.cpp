#include "pbw/rewrite.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pbw;
using pbwtest::mono;
using pbwtest::random_homogeneous;
using pbwtest::random_poly;
using pbwtest::W;

namespace {

const RationalField Q;

template <class K>
NCPoly<K> expand_cofactors(const std::vector<NCPoly<K>>& gens,
                           const std::vector<CofactorTerm<K>>& cof) {
    NCPoly<K> out;
    for (const auto& t : cof)
        out += gens[static_cast<size_t>(t.gen)].sandwich(t.coeff, t.left, t.right);
    return out;
}

TEST(Rewrite, SingleCommutatorRelation) {
    // <xy - yx> in two letters: no new elements, normal words are y^a x^b
    auto r = mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0});
    RewriteSystem<Rational> rs({r}, 6);
    ASSERT_EQ(rs.basis().size(), 1u);
    EXPECT_EQ(rs.basis()[0], r);

    EXPECT_EQ(rs.normal_form(mono(Q, 1, {0, 1, 0})), mono(Q, 1, {1, 0, 0}));

    auto words = normal_words_up_to(rs, 2, 6);
    for (int d = 0; d <= 6; ++d) {
        EXPECT_EQ(words[static_cast<size_t>(d)].size(), static_cast<size_t>(d + 1));
        for (const Word& w : words[static_cast<size_t>(d)]) {
            // ordered monomials: no x before y
            bool seen_x = false;
            for (Letter l : w.letters) {
                if (l == 0)
                    seen_x = true;
                if (l == 1) {
                    EXPECT_FALSE(seen_x);
                }
            }
        }
    }
}

TEST(Rewrite, MonomialIdealDiamond) {
    // {x^2 y, y^3}: the overlap x^2 y . y^2 = x^2 . y^3 resolves to zero
    auto g1 = mono(Q, 1, {0, 0, 1});
    auto g2 = mono(Q, 1, {1, 1, 1});
    RewriteSystem<Rational> rs({g1, g2}, 6);
    ASSERT_EQ(rs.basis().size(), 2u);
    EXPECT_EQ(rs.basis()[0], g2); // y^3 < x^2 y in the monomial order
    EXPECT_EQ(rs.basis()[1], g1);
    EXPECT_TRUE(rs.normal_form(mono(Q, 1, {0, 0, 1, 1, 1})).is_zero());
    EXPECT_TRUE(rs.contains(mono(Q, 5, {1, 0, 0, 1, 1, 1})));
    EXPECT_FALSE(rs.contains(mono(Q, 1, {0, 0, 2}) - mono(Q, 1, {2, 1, 1})));
}

TEST(Rewrite, WeylHomogenizationInExtendedAlphabet) {
    // T[z] realized with explicit commutation rules; the homogenized Weyl
    // relation completes without new elements
    constexpr Letter Z = 2;
    auto rel = mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0}) - mono(Q, 1, {Z, Z});
    auto cx = mono(Q, 1, {0, Z}) - mono(Q, 1, {Z, 0});
    auto cy = mono(Q, 1, {1, Z}) - mono(Q, 1, {Z, 1});
    RewriteSystem<Rational> rs({rel, cx, cy}, 6);
    EXPECT_EQ(rs.basis().size(), 3u);
    bool found = false;
    for (const auto& g : rs.basis())
        if (g == rel)
            found = true;
    EXPECT_TRUE(found);
}

TEST(Rewrite, NormalFormIdempotentAndLinear) {
    PrimeField F(101);
    std::mt19937 rng(43);
    for (int it = 0; it < 50; ++it) {
        std::vector<NCPoly<Fp>> gens{random_homogeneous(F, rng, 2, 2, 3),
                                     random_homogeneous(F, rng, 2, 3, 3)};
        RewriteSystem<Fp> rs(gens, 6);
        for (int k = 0; k < 5; ++k) {
            auto f = random_poly(F, rng, 2, 6, 6);
            auto g = random_poly(F, rng, 2, 6, 6);
            auto nf = rs.normal_form(f);
            EXPECT_EQ(rs.normal_form(nf), nf);
            Fp a = F(3), b = F(7);
            EXPECT_EQ(rs.normal_form(a * f + b * g),
                      a * rs.normal_form(f) + b * rs.normal_form(g));
        }
    }
}

TEST(Rewrite, ConfluenceAtBoundViaRandomizedStrategies) {
    PrimeField F(101);
    std::mt19937 rng(47);
    for (int it = 0; it < 40; ++it) {
        std::vector<NCPoly<Fp>> gens{random_homogeneous(F, rng, 2, 2, 3),
                                     random_homogeneous(F, rng, 2, 3, 3)};
        RewriteSystem<Fp> rs(gens, 6);
        for (int k = 0; k < 4; ++k) {
            auto f = random_poly(F, rng, 2, 6, 6);
            auto nf = rs.normal_form(f);
            for (int s = 0; s < 3; ++s)
                EXPECT_EQ(rs.normal_form_randomized(f, rng), nf);
        }
    }
}

TEST(Rewrite, HomogeneousGeneratorsGiveHomogeneousBasis) {
    PrimeField F(101);
    std::mt19937 rng(53);
    for (int it = 0; it < 40; ++it) {
        std::vector<NCPoly<Fp>> gens{random_homogeneous(F, rng, 3, 2, 4),
                                     random_homogeneous(F, rng, 3, 3, 4)};
        RewriteSystem<Fp> rs(gens, 5);
        for (const auto& g : rs.basis())
            EXPECT_TRUE(g.is_homogeneous());
    }
}

TEST(Rewrite, CofactorsOnSpecExamples) {
    // f = xyx - yx^2 over {xy - yx}: f = (xy - yx) * x
    auto r = mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0});
    RewriteSystem<Rational> rs({r}, 6, {.track_cofactors = true});
    auto f = mono(Q, 1, {0, 1, 0}) - mono(Q, 1, {1, 0, 0});
    auto [rem, cof] = rs.reduce_with_cofactors(f);
    EXPECT_TRUE(rem.is_zero());
    ASSERT_EQ(cof.size(), 1u);
    EXPECT_EQ(cof[0].gen, 0);
    EXPECT_EQ(cof[0].left, Word{});
    EXPECT_EQ(cof[0].right, W({0}));
    EXPECT_EQ(cof[0].coeff, Rational(1));

    // f = x^2 y^3 over {x^2 y, y^3}: remainder 0 and a verifying identity
    auto g1 = mono(Q, 1, {0, 0, 1});
    auto g2 = mono(Q, 1, {1, 1, 1});
    RewriteSystem<Rational> rs2({g1, g2}, 6, {.track_cofactors = true});
    auto f2 = mono(Q, 1, {0, 0, 1, 1, 1});
    auto [rem2, cof2] = rs2.reduce_with_cofactors(f2);
    EXPECT_TRUE(rem2.is_zero());
    EXPECT_EQ(expand_cofactors(std::vector<NCPoly<Rational>>{g1, g2}, cof2), f2);
}

TEST(Rewrite, CofactorRoundTripFuzzed) {
    PrimeField F(101);
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> letterd(0, 1), lend(0, 2), pick(0, 1);
    for (int it = 0; it < 60; ++it) {
        std::vector<NCPoly<Fp>> gens{random_homogeneous(F, rng, 2, 2, 3),
                                     random_homogeneous(F, rng, 2, 3, 3)};
        RewriteSystem<Fp> rs(gens, 7, {.track_cofactors = true});
        // build f = sum c * u * g_i * w, then check remainder 0 and identity
        NCPoly<Fp> f;
        for (int t = 0; t < 3; ++t) {
            Word u, w;
            for (int i = lend(rng); i > 0; --i)
                u.letters.push_back(static_cast<Letter>(letterd(rng)));
            for (int i = lend(rng); i > 0; --i)
                w.letters.push_back(static_cast<Letter>(letterd(rng)));
            f += gens[static_cast<size_t>(pick(rng))].sandwich(F(1 + t), u, w);
        }
        if (f.degree() > 7)
            continue;
        auto [rem, cof] = rs.reduce_with_cofactors(f);
        EXPECT_TRUE(rem.is_zero());
        EXPECT_EQ(expand_cofactors(gens, cof) + rem, f);

        // arbitrary input: the identity must hold with whatever remainder
        auto g = random_poly(F, rng, 2, 7, 5);
        auto [rem2, cof2] = rs.reduce_with_cofactors(g);
        EXPECT_EQ(expand_cofactors(gens, cof2) + rem2, g);
        EXPECT_EQ(rem2, rs.normal_form(g));
    }
}

TEST(Rewrite, MembershipAgreesWithSpanOracle) {
    PrimeField F(101);
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> degd(2, 3), pick(0, 1);
    for (int ideals = 0; ideals < 40; ++ideals) {
        std::vector<NCPoly<Fp>> gens{random_homogeneous(F, rng, 2, degd(rng), 3),
                                     random_homogeneous(F, rng, 2, degd(rng), 3)};
        RewriteSystem<Fp> rs(gens, 6);
        for (int d = 1; d <= 6; ++d) {
            auto slice = pbwtest::ideal_slice_by_span(gens, 2, d);
            auto words = pbwtest::all_words(2, d);
            for (int k = 0; k < 6; ++k) {
                auto f = random_homogeneous(F, rng, 2, d, 4);
                EXPECT_EQ(rs.normal_form(f).is_zero(),
                          slice.member(pbwtest::coords_in_full_degree(f, words)));
            }
            // elements built inside the ideal must pass both tests
            const auto& g = gens[static_cast<size_t>(pick(rng))];
            if (g.degree() <= d) {
                auto u = pbwtest::all_words(2, d - g.degree());
                const Word& pad = u[static_cast<size_t>(rng() % u.size())];
                auto h = g.sandwich(F(5), pad, Word{});
                EXPECT_TRUE(rs.normal_form(h).is_zero());
                EXPECT_TRUE(slice.member(pbwtest::coords_in_full_degree(h, words)));
            }
        }
    }
}

TEST(Rewrite, ErrorPaths) {
    auto r = mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0});
    EXPECT_THROW(RewriteSystem<Rational>({NCPoly<Rational>{}}, 4), Error);
    EXPECT_THROW(RewriteSystem<Rational>({r}, 1), Error);
    RewriteSystem<Rational> rs({r}, 3);
    EXPECT_THROW(rs.normal_form(mono(Q, 1, {0, 0, 1, 1})), Error);
    EXPECT_THROW(rs.reduce_with_cofactors(r), Error);
}

} // namespace
