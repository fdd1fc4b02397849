#include "oracle.hpp"
#include "support.hpp"

#include "locring/hensel.hpp"

using namespace locring;
using test::F;
using test::P;

TEST(TaylorShift, Examples) {
    const Field q = F("Q");
    EXPECT_EQ(taylor_shift_certificate(P(q, "x^2"), P(q, "5/3")), P(q, "1"));
    EXPECT_EQ(taylor_shift_certificate(P(q, "x^2-2"), P(q, "x^3-7*x+1/2")), P(q, "1"));
    EXPECT_TRUE(taylor_shift_certificate(P(q, "x^2-2"), Poly(q)).is_zero());
    // over F2, x + x = 0 so P(x+Q) = P(0) = 1 = P + P'x exactly
    EXPECT_TRUE(taylor_shift_certificate(P("F2", "x^3+x+1"), P("F2", "x")).is_zero());
}

TEST(TaylorShift, IdentityHoldsOnRandomInputs) {
    for (const char* d : {"Q", "F3", "F2(t)", "F2[a]/(a^2+a+1)"}) {
        const Field k = F(d);
        std::mt19937_64 rng(21);
        for (int i = 0; i < 50; ++i) {
            const Poly p = random_poly(k, 4, rng), q = random_poly(k, 2, rng);
            const Poly r = taylor_shift_certificate(p, q);
            EXPECT_EQ(compose(p, Poly::x(k) + q), p + derivative(p) * q + r * q * q) << d;
        }
    }
}

TEST(RootSeries, RationalExample) {
    const Poly p = P("Q", "x^2-2");
    const RootSeries s = hensel_root_series(p, 2);
    ASSERT_EQ(s.corrections.size(), 1u);
    EXPECT_EQ(s.corrections[0], P("Q", "-x/4"));
    EXPECT_EQ(s.u, P("Q", "x - (x/4)*(x^2-2)"));
    EXPECT_TRUE(s.certificate_holds());
    // independent expansion: P(U) is divisible by P^2
    EXPECT_TRUE(rem(compose(p, s.u), p * p).is_zero());
}

TEST(RootSeries, BinaryExample) {
    const Poly p = P("F2", "x^2+x+1");
    const RootSeries s = hensel_root_series(p, 2);
    EXPECT_EQ(s.corrections, std::vector<Poly>{P("F2", "1")});
    EXPECT_EQ(s.u, P("F2", "x^2+1"));
    EXPECT_EQ(s.cofactor, P("F2", "1"));
    // P(x^2+1) = (x^2+x+1)^2 on integer vectors
    const oracle::IP pu = oracle::compose(oracle::from(p), oracle::from(s.u), 2);
    EXPECT_EQ(pu, oracle::mul(oracle::from(p), oracle::from(p), 2));
}

TEST(RootSeries, InseparableAndBadInput) {
    EXPECT_KIND(NotSeparable, hensel_root_series(P("F2(t)", "x^2+t"), 1));
    EXPECT_KIND(NotSeparable, hensel_root_series(P("F2(t)", "x^2+t"), 3));
    EXPECT_KIND(InvalidArgument, hensel_root_series(P("F2", "x^2+x+1"), 0));
    EXPECT_KIND(NotIrreducible, hensel_root_series(P("F2", "x^2+1"), 2));
}

TEST(RootSeries, LevelOneIsTheIdentity) {
    const RootSeries s = hensel_root_series(P("F3", "x^2+1"), 1);
    EXPECT_TRUE(s.corrections.empty());
    EXPECT_EQ(s.u, P("F3", "x"));
}

TEST(RootSeries, CertificateOverManyFields) {
    const std::vector<std::pair<const char*, const char*>> cases = {
        {"Q", "x^2-2"},           {"Q", "x^3-x-1"},         {"F5", "x^2+2"},
        {"F3(t)", "x^2-t"},       {"F2(t)", "x^2+x+t"},     {"F2[a]/(a^2+a+1)", "x^2+x+a"},
        {"Q[r]/(r^2-2)", "x^2-r"}, {"F7", "x^3+3"},
    };
    for (const auto& [field, text] : cases) {
        const Poly p = P(field, text);
        for (int k = 1; k <= 5; ++k) {
            const RootSeries s = hensel_root_series(p, k);
            EXPECT_TRUE(s.certificate_holds()) << field << " " << text << " k=" << k;
            EXPECT_EQ(s.corrections.size(), static_cast<std::size_t>(k - 1));
            for (const auto& q : s.corrections) EXPECT_LT(q.degree(), p.degree());
            EXPECT_TRUE(rem(s.u - Poly::x(p.field()), p).is_zero());
        }
    }
}

TEST(Embedding, Examples) {
    const Poly p = P("F2", "x^2+x+1");
    const auto e1 = embed_residue_field(p, 1);
    EXPECT_EQ(e1, StabilizingMorphism::identity(QuotientRing::make(p, 1)));
    const auto e2 = embed_residue_field(p, 2);
    EXPECT_EQ(e2.q_image(), P("F2", "x^2+1"));
    EXPECT_EQ(project(e2(e2.source().x()), 1), e2.source().x());
    EXPECT_KIND(NotSeparable, embed_residue_field(P("F2(t)", "x^2+t"), 2));
}

TEST(Embedding, SectionAndMorphismLaw) {
    for (const auto& [field, text] : std::vector<std::pair<const char*, const char*>>{
             {"F2", "x^2+x+1"}, {"F3", "x^2+1"}, {"F2", "x^3+x^2+1"}, {"F3", "x^4+x+2"}, {"Q", "x^2-2"}}) {
        const Poly p = P(field, text);
        for (int k = 1; k <= 4; ++k) {
            const auto e = embed_residue_field(p, k);
            const QuotientRing& res = e.source();
            std::vector<QuotientElement> elems;
            if (res.size() && *res.size() <= 81) {
                for (std::uint64_t i = 0; i < *res.size(); ++i) elems.push_back(res.element_at(i));
            } else {
                std::mt19937_64 rng(k);
                for (int i = 0; i < 60; ++i) elems.push_back(res.random(rng));
            }
            for (const auto& a : elems) EXPECT_EQ(project(e(a), 1), a);
            std::mt19937_64 rng(100 + k);
            std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
            for (int i = 0; i < 100; ++i) {
                const auto& a = elems[pick(rng)];
                const auto& b = elems[pick(rng)];
                EXPECT_EQ(e(a * b), e(a) * e(b));
                EXPECT_EQ(e(a + b), e(a) + e(b));
            }
        }
    }
}

TEST(Digits, Examples) {
    const Poly p = P("F2", "x^2+x+1");
    const DigitMap map(p, 2);
    const QuotientRing& res = map.residue_field();

    using Digits = std::vector<QuotientElement>;
    EXPECT_EQ(map.to_digits(map.ring().x()).digits, (Digits{res.x(), res.one()}));
    EXPECT_EQ(map.to_digits(map.ring().zero()).digits, (Digits{res.zero(), res.zero()}));
    EXPECT_EQ(map.to_digits(map.ring().element(p)).digits, (Digits{res.zero(), res.one()}));

    const DigitMap map4(p, 4);
    const QuotientRing& res4 = map4.residue_field();
    const QuotientElement b = res4.element(P("F2", "x+1"));
    EXPECT_EQ(map4.to_digits(map4.embedding()(b)).digits, (Digits{b, res4.zero(), res4.zero(), res4.zero()}));
    for (int j = 0; j < 4; ++j) {
        Digits expected(4, res4.zero());
        expected[static_cast<std::size_t>(j)] = res4.one();
        EXPECT_EQ(map4.to_digits(map4.ring().element(pow(p, static_cast<unsigned>(j)))).digits, expected);
    }
    EXPECT_EQ(to_digits(map.ring().x()).digits, map.to_digits(map.ring().x()).digits);
}

TEST(Digits, Errors) {
    const DigitMap map(P("F3", "x^2+1"), 2);
    EXPECT_KIND(RingMismatch, map.to_digits(QuotientRing::make(P("F3", "x^2+1"), 3).x()));
    EXPECT_KIND(InvalidArgument, map.from_digits(std::vector<QuotientElement>{map.residue_field().one()}));
    EXPECT_KIND(NotSeparable, DigitMap(P("F2(t)", "x^2+t"), 2));
}

TEST(Digits, RationalRoundTrip) {
    const DigitMap map(P("Q", "x^2-2"), 3);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const QuotientElement a = map.ring().random(rng);
        const ResidueDigits d = map.to_digits(a);
        EXPECT_EQ(d.digits.size(), 3u);
        EXPECT_EQ(map.from_digits(d), a);
    }
}

TEST(StructureIsomorphism, Examples) {
    for (int k = 1; k <= 4; ++k) {
        const StructureCheck c = structure_isomorphism_check(P("F2", "x^2+x+1"), k);
        EXPECT_TRUE(c.passed) << c.counterexample;
        EXPECT_TRUE(c.exhaustive);
    }
    const StructureCheck f3 = structure_isomorphism_check(P("F3", "x^2+1"), 3);
    EXPECT_TRUE(f3.passed) << f3.counterexample;
    EXPECT_TRUE(f3.exhaustive);
    EXPECT_EQ(f3.elements_checked, 729u);
    EXPECT_KIND(NotSeparable, structure_isomorphism_check(P("F2(t)", "x^2+t"), 2));
}

TEST(StructureIsomorphism, SampledWhenLarge) {
    const StructureCheck c = structure_isomorphism_check(P("F3", "x^3+2*x+1"), 3, 200, 100);
    EXPECT_TRUE(c.passed) << c.counterexample;
    EXPECT_FALSE(c.exhaustive);
    EXPECT_EQ(c.elements_checked, 200u);

    const StructureCheck q = structure_isomorphism_check(P("Q", "x^2-2"), 3, 40, 40);
    EXPECT_TRUE(q.passed) << q.counterexample;
}

TEST(StructureIsomorphism, DigitProductIsTruncatedConvolution) {
    const QuotientRing res = QuotientRing::make(P("F3", "x^2+1"), 1);
    const std::vector<QuotientElement> a{res.one(), res.x(), res.zero()};
    const std::vector<QuotientElement> b{res.x(), res.one(), res.one()};
    // (1 + xY)(x + Y + Y^2) = x + (1 + x^2) Y + (1 + x) Y^2 + ...
    const std::vector<QuotientElement> expected{res.x(), res.one() + res.x() * res.x(), res.one() + res.x()};
    EXPECT_EQ(digit_product(a, b), expected);
}
