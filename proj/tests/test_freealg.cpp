#include "pbw/poly.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pbw;
using pbwtest::mono;
using pbwtest::random_poly;
using pbwtest::W;

namespace {

const RationalField Q;

TEST(Scalar, RationalBasics) {
    Rational a(3, 4), b(1, 4);
    EXPECT_EQ(a + b, Rational(1));
    EXPECT_EQ(a - b, Rational(1, 2));
    EXPECT_EQ(a * b, Rational(3, 16));
    EXPECT_EQ(a / b, Rational(3));
    EXPECT_EQ(Rational("3/4"), a);
    EXPECT_EQ(Rational("-12").str(), "-12");
    EXPECT_EQ((a / b).str(), "3");
    EXPECT_THROW(Rational(1, 0), Error);
    EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(Scalar, PrimeFieldBasics) {
    PrimeField F101(101);
    Fp a = F101(77), b = F101(50);
    EXPECT_EQ(a + b, F101(127));
    EXPECT_EQ(a * b, F101(77 * 50));
    EXPECT_EQ(a * a.inverse(), F101(1));
    EXPECT_EQ(F101(-1), F101(100));
    EXPECT_EQ(F101.from_literal("3/4"), F101(3) / F101(4));
    // field-agnostic zero absorbs
    Fp z;
    EXPECT_EQ(z + a, a);
    EXPECT_EQ(z * a, Fp{});
    EXPECT_TRUE((z * a).is_zero());
    EXPECT_THROW(PrimeField(100), Error);
    EXPECT_THROW(PrimeField(1), Error);
}

TEST(Word, OrderIsDegLexWithEarlierLettersLarger) {
    // alphabet x=0, y=1: x > y, so xy > yx
    EXPECT_LT(compare_words(W({1, 0}), W({0, 1})), 0); // yx < xy
    EXPECT_LT(compare_words(W({0, 1}), W({0, 0})), 0); // xy < xx
    EXPECT_LT(compare_words(W({0, 0}), W({1, 1, 1})), 0); // degree first
    EXPECT_EQ(compare_words(W({0, 1, 0}), W({0, 1, 0})), 0);
}

TEST(Word, OrderIsMultiplicative) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 4), letter(0, 2);
    auto rand_word = [&] {
        Word w;
        int l = len(rng);
        for (int i = 0; i < l; ++i)
            w.letters.push_back(static_cast<Letter>(letter(rng)));
        return w;
    };
    for (int it = 0; it < 500; ++it) {
        Word u = rand_word(), v = rand_word(), a = rand_word(), b = rand_word();
        int c = compare_words(u, v);
        if (c != 0) {
            EXPECT_EQ(compare_words(a * u * b, a * v * b), c);
        }
    }
}

TEST(Word, SubwordsAndOverlaps) {
    Word u = W({0, 0, 1}); // xxy
    EXPECT_TRUE(is_subword(W({0, 1}), u));
    EXPECT_FALSE(is_subword(W({1, 0}), u));
    EXPECT_EQ(find_occurrence(W({0}), u), 0);
    EXPECT_EQ(find_occurrence(W({0}), u, 1), 1);
    // suffix of xxy matching prefix of yyy: only length 1
    auto ov = proper_overlaps(W({0, 0, 1}), W({1, 1, 1}));
    ASSERT_EQ(ov.size(), 1u);
    EXPECT_EQ(ov[0], 1u);
    EXPECT_TRUE(proper_overlaps(W({0, 1}), W({0, 1})).empty());
}

TEST(NCPoly, ArithmeticAndAccessors) {
    auto f = mono(Q, 1, {0, 1}) + mono(Q, 1, {0}) + mono(Q, 1, {});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.leading_word(), W({0, 1}));
    EXPECT_EQ(f.term_count(), 3u);
    auto g = f - f;
    EXPECT_TRUE(g.is_zero());
    EXPECT_EQ(g.degree(), -1);
    EXPECT_THROW(g.leading_word(), Error);
    EXPECT_THROW(g.top_component(), Error);

    // (x + y)*(x - y) = xx - xy + yx - yy
    auto s = mono(Q, 1, {0}) + mono(Q, 1, {1});
    auto d = mono(Q, 1, {0}) - mono(Q, 1, {1});
    auto p = s * d;
    EXPECT_EQ(p, mono(Q, 1, {0, 0}) - mono(Q, 1, {0, 1}) + mono(Q, 1, {1, 0}) -
                     mono(Q, 1, {1, 1}));
}

TEST(NCPoly, ComponentsAndTruncation) {
    // top(x^2 y - w) = x^2 y over alphabet x=0,y=1,w=2
    auto f = mono(Q, 1, {0, 0, 1}) - mono(Q, 1, {2});
    EXPECT_EQ(f.top_component(), mono(Q, 1, {0, 0, 1}));
    EXPECT_EQ(f.truncate(1), mono(Q, -1, {2}));
    EXPECT_EQ(f.truncate(f.degree()), f);
    EXPECT_EQ(f.component(2), NCPoly<Rational>{});
}

TEST(NCPoly, RingAxiomsFuzzed) {
    PrimeField F(101);
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(F, rng, 2, 3, 4);
        auto b = random_poly(F, rng, 2, 3, 4);
        auto c = random_poly(F, rng, 2, 3, 4);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(NCPoly, DegreeOfProductsIsAdditiveOverAField) {
    RationalField F;
    std::mt19937 rng(13);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(F, rng, 2, 3, 4);
        auto b = random_poly(F, rng, 2, 3, 4);
        if (a.is_zero() || b.is_zero())
            continue;
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
        EXPECT_EQ((a * b).leading_word(), a.leading_word() * b.leading_word());
    }
}

// --- T[z] ------------------------------------------------------------------

constexpr Letter Z2 = 2; // central variable appended to a 2-letter alphabet
constexpr Letter Z3 = 3;

TEST(Homogenize, DefiningFormula) {
    // h(x y + x + 1) = xy + z x + z^2
    auto f = mono(Q, 1, {0, 1}) + mono(Q, 1, {0}) + mono(Q, 1, {});
    auto h = homogenize(f, Z2);
    auto expect = mono(Q, 1, {0, 1}) + mono(Q, 1, {Z2, 0}) + mono(Q, 1, {Z2, Z2});
    EXPECT_EQ(h.raw(), expect);
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(h.degree(), 2);
}

TEST(Homogenize, PaperSetFromSectionFour) {
    // h(x^2 y - w) = x^2 y - z^2 w over x=0,y=1,w=2 with z=3
    auto f = mono(Q, 1, {0, 0, 1}) - mono(Q, 1, {2});
    auto h = homogenize(f, Z3);
    EXPECT_EQ(h.raw(), mono(Q, 1, {0, 0, 1}) - mono(Q, 1, {Z3, Z3, 2}));
}

TEST(Homogenize, HomogeneousInputIsFixed) {
    auto r = mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0});
    EXPECT_EQ(homogenize(r, Z2).raw(), r);
    EXPECT_THROW(homogenize(NCPoly<Rational>{}, Z2), Error);
}

TEST(EvaluateCentral, BothHomomorphisms) {
    // g = xy - yx - z x
    auto g = ZPoly<Rational>(Z2, mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0}) - mono(Q, 1, {Z2, 0}));
    EXPECT_EQ(evaluate_central(g, 0), mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0}));
    EXPECT_EQ(evaluate_central(g, 1),
              mono(Q, 1, {0, 1}) - mono(Q, 1, {1, 0}) - mono(Q, 1, {0}));
}

TEST(EvaluateCentral, RoundTripsWithHomogenize) {
    PrimeField F(101);
    std::mt19937 rng(17);
    for (int it = 0; it < 300; ++it) {
        auto f = random_poly(F, rng, 2, 4, 5);
        if (f.is_zero())
            continue;
        auto h = homogenize(f, Z2);
        EXPECT_EQ(evaluate_central(h, 1), f);
        EXPECT_EQ(evaluate_central(h, 0), f.top_component());
        EXPECT_TRUE(h.is_homogeneous());
    }
}

TEST(ZPoly, CentralVariableCommutesAsStoredValue) {
    const PrimeField F(101);
    auto z = ZPoly<Fp>(Z2, NCPoly<Fp>::word(Word{Z2}, F(1)));
    std::mt19937 rng(19);
    for (int it = 0; it < 100; ++it) {
        auto w = random_poly(F, rng, 2, 3, 3);
        auto wz = lift_to_extended(w, Z2);
        EXPECT_EQ(z * wz, wz * z);
    }
}

TEST(ZPoly, TopComponentsMultiply) {
    RationalField F;
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
        auto f = random_poly(F, rng, 2, 3, 3);
        auto g = random_poly(F, rng, 2, 3, 3);
        if (f.is_zero() || g.is_zero())
            continue;
        auto prod = homogenize(f, Z2) * homogenize(g, Z2);
        EXPECT_EQ(evaluate_central(prod, 0), f.top_component() * g.top_component());
    }
}

TEST(ZPoly, ExactDivisionByZ) {
    auto g = ZPoly<Rational>(Z2, mono(Q, 2, {Z2, 0}) + mono(Q, 1, {Z2, Z2}));
    EXPECT_EQ(g.div_z().raw(), mono(Q, 2, {0}) + mono(Q, 1, {Z2}));
    auto bad = ZPoly<Rational>(Z2, mono(Q, 1, {0}));
    EXPECT_THROW(bad.div_z(), Error);
}

TEST(Alphabet, ValidationAndExtension) {
    EXPECT_THROW(Alphabet(std::vector<std::string>{}), Error);
    EXPECT_THROW(Alphabet({"x", "x"}), Error);
    Alphabet a({"x", "y"});
    EXPECT_EQ(a.extended("z").size(), 3u);
    EXPECT_THROW(a.extended("y"), Error);
    EXPECT_EQ(word_str(W({0, 0, 1}), a), "x^2*y");
    EXPECT_EQ(word_str(Word{}, a), "1");
}

} // namespace
