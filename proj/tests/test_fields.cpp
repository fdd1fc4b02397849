#include "support.hpp"

using namespace locring;
using test::E;
using test::F;

TEST(Fields, PrimeFieldProduct) { EXPECT_EQ(E(F("F3"), "2") * E(F("F3"), "2"), F("F3").one()); }

TEST(Fields, RationalSum) {
    const Field q = Field::rationals();
    EXPECT_EQ(E(q, "1/2") + E(q, "1/3"), q.from_rational(mpq_class(5, 6)));
    EXPECT_EQ((E(q, "1/2") + E(q, "1/3")).to_string(), "5/6");
}

TEST(Fields, RationalFunctionCancellation) {
    const Field k = F("F2(t)");
    EXPECT_EQ(E(k, "1/t") * E(k, "t"), k.one());
}

TEST(Fields, CanonicalPayloads) {
    const Field q = Field::rationals();
    EXPECT_EQ(E(q, "2/4"), E(q, "1/2"));
    EXPECT_EQ(E(q, "3/(-6)").to_string(), "-1/2");

    const Field k = F("F3(t)");
    EXPECT_EQ(E(k, "(t^2-1)/(t-1)"), E(k, "t+1"));
    EXPECT_EQ(E(k, "(t+1)/(2*t^2)").to_string(), "(2*t+2)/t^2");

    const Field f4 = F("F2[a]/(a^2+a+1)");
    EXPECT_EQ(E(f4, "a^2"), E(f4, "a+1"));
}

TEST(Fields, Errors) {
    EXPECT_KIND(DivisionByZero, F("F5").one() / F("F5").zero());
    EXPECT_KIND(DivisionByZero, F("Q").zero().inverse());
    EXPECT_KIND(DescriptorMismatch, F("F3").one() + F("F5").one());
    EXPECT_KIND(InvalidArgument, Field::prime(9));
    EXPECT_KIND(NotIrreducible, F("F2[a]/(a^2+1)"));
    EXPECT_KIND(ParseError, F("G7"));
}

TEST(Fields, Automorphisms) {
    const Field q = Field::rationals();
    EXPECT_EQ(apply_automorphism(FieldAutomorphism::identity(), E(q, "5/7")), E(q, "5/7"));
    EXPECT_KIND(UnsupportedAutomorphism, apply_automorphism(FieldAutomorphism::frobenius(1), E(q, "5/7")));

    const Field f4 = F("F2[a]/(a^2+a+1)");
    EXPECT_EQ(apply_automorphism(FieldAutomorphism::frobenius(1), f4.generator()), E(f4, "a+1"));

    const Field f3 = F("F3");
    EXPECT_EQ(apply_automorphism(FieldAutomorphism::frobenius(1), E(f3, "2")), E(f3, "2"));
}

TEST(Fields, AutomorphismParsing) {
    EXPECT_EQ(FieldAutomorphism::parse("id"), FieldAutomorphism::identity());
    EXPECT_EQ(FieldAutomorphism::parse("frob"), FieldAutomorphism::frobenius(1));
    EXPECT_EQ(FieldAutomorphism::parse("frob^3"), FieldAutomorphism::frobenius(3));
    EXPECT_EQ(FieldAutomorphism::frobenius(2).to_string(), "frob^2");
    EXPECT_KIND(ParseError, FieldAutomorphism::parse("swap"));
}

TEST(Fields, DescriptorRoundTrip) {
    for (const char* d : {"Q", "F2", "F7", "F3(t)", "F2[a]/(a^2+a+1)", "Q[r]/(r^2-2)", "F3[b]/(b^3+2*b+1)"}) {
        const Field k = F(d);
        EXPECT_EQ(F(k.name()), k) << d;
    }
}

TEST(Fields, Sizes) {
    EXPECT_EQ(F("F7").size(), 7u);
    EXPECT_EQ(F("F3[b]/(b^3+2*b+1)").size(), 27u);
    EXPECT_EQ(F("Q").characteristic(), 0);
    EXPECT_EQ(F("F3(t)").characteristic(), 3);
    EXPECT_FALSE(F("F3(t)").is_finite());
}

TEST(Fields, EnumerationIsABijection) {
    const Field k = F("F3[b]/(b^2+1)");
    for (std::uint64_t i = 0; i < k.size(); ++i) EXPECT_EQ(k.element_at(i).index(), i);
}

// ------------------------------------------------------------ properties

class FieldAxioms : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldAxioms, RingAndFieldLaws) {
    const Field k = F(GetParam());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Element a = k.random(rng), b = k.random(rng), c = k.random(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, k.zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), k.one());
            EXPECT_EQ((b / a) * a, b);
        }
        // re-canonicalizing a stored payload changes nothing
        EXPECT_EQ(Element(k, a.payload()), a);
    }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, FieldAxioms,
                         ::testing::Values("Q", "F2", "F7", "F3(t)", "F2(t)", "F2[a]/(a^2+a+1)", "F3[b]/(b^2+1)",
                                           "Q[r]/(r^2-2)", "F1000003"));

class FrobeniusLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(FrobeniusLaws, DistributesAndIterates) {
    const Field k = F(GetParam());
    std::mt19937_64 rng(5);
    const auto frob = FieldAutomorphism::frobenius(1);
    for (int i = 0; i < 200; ++i) {
        const Element a = k.random(rng), b = k.random(rng);
        EXPECT_EQ(apply_automorphism(frob, a + b), apply_automorphism(frob, a) + apply_automorphism(frob, b));
        EXPECT_EQ(apply_automorphism(frob, a * b), apply_automorphism(frob, a) * apply_automorphism(frob, b));
        for (int e = 1; e <= 2; ++e) {
            Element iterated = a;
            for (int j = 0; j < 3; ++j) iterated = apply_automorphism(FieldAutomorphism::frobenius(e), iterated);
            EXPECT_EQ(iterated, apply_automorphism(FieldAutomorphism::frobenius(3 * e), a));
        }
        // a -> a^(p^e) by direct powering
        EXPECT_EQ(apply_automorphism(frob, a), a.pow(static_cast<std::uint64_t>(k.characteristic())));
    }
}

INSTANTIATE_TEST_SUITE_P(FiniteFields, FrobeniusLaws,
                         ::testing::Values("F5", "F2[a]/(a^2+a+1)", "F3[b]/(b^2+1)", "F2[c]/(c^3+c+1)"));

TEST(Fields, FrobeniusHasOrderDegree) {
    const Field k = F("F2[c]/(c^3+c+1)");
    for (std::uint64_t i = 0; i < k.size(); ++i) {
        const Element a = k.element_at(i);
        EXPECT_EQ(apply_automorphism(FieldAutomorphism::frobenius(3), a), a);
    }
    EXPECT_TRUE(FieldAutomorphism::frobenius(3).acts_trivially_on(k));
    EXPECT_FALSE(FieldAutomorphism::frobenius(1).acts_trivially_on(k));
}
