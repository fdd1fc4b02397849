#include "oracle.hpp"
#include "support.hpp"

#include "locring/lift.hpp"
#include "locring/verify.hpp"

using namespace locring;
using test::F;
using test::P;

namespace {

const FieldAutomorphism kId = FieldAutomorphism::identity();

std::vector<std::string> q_images(const std::vector<StabilizingMorphism>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(f.q_image().to_string());
    return out;
}

}  // namespace

TEST(ResidueMorphism, Examples) {
    const auto f = residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x+2"));
    EXPECT_EQ(s_f_of(f), P("F3", "1"));
    ASSERT_TRUE(f.s_cert().has_value());

    const Poly p = P("F2", "x^3+x+1");
    const auto frob = residue_morphism_from_q(p, p, kId, P("F2", "x^2"));
    EXPECT_EQ(*frob.s_cert(), p);

    EXPECT_KIND(NotAMorphism, residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x")));
    EXPECT_KIND(DegreeMismatch, residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^3+2*x+1"), kId, P("F3", "x")));
    EXPECT_KIND(InvalidArgument, residue_morphism_from_q(P("F3", "x+1"), P("F3", "x+2"), kId, P("F3", "x")));
    EXPECT_KIND(InvalidArgument, residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+1"), kId, P("F3", "2")));
}

TEST(ResidueMorphism, FindIsomorphisms) {
    using V = std::vector<std::string>;
    EXPECT_EQ(q_images(find_residue_isomorphisms(P("F3", "x^2+1"), P("F3", "x^2+x+2"))), V({"x+2", "2*x+1"}));
    EXPECT_EQ(find_residue_isomorphisms(P("F2", "x^3+x+1"), P("F2", "x^3+x^2+1")).size(), 3u);
    EXPECT_EQ(q_images(find_residue_isomorphisms(P("F2", "x^2+x+1"), P("F2", "x^2+x+1"))), V({"x", "x+1"}));
    EXPECT_KIND(UnsupportedField, find_residue_isomorphisms(P("Q", "x^2-2"), P("Q", "x^2-2")));
    EXPECT_KIND(DegreeMismatch, find_residue_isomorphisms(P("F3", "x^2+1"), P("F3", "x^3+2*x+1")));
}

TEST(ResidueMorphism, SearchMatchesBruteForceOracle) {
    // every Q of degree < d with P1(Q) = 0 mod P2, on integer vectors
    for (std::int64_t p : {2, 3}) {
        const Field k = Field::prime(p);
        for (int d = 2; d <= 3; ++d) {
            const auto irr = enumerate_irreducibles(k, d);
            for (const auto& p1 : irr)
                for (const auto& p2 : irr) {
                    std::vector<std::string> expected;
                    std::uint64_t count = 1;
                    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
                    for (std::uint64_t idx = static_cast<std::uint64_t>(p); idx < count; ++idx) {
                        oracle::IP q;
                        for (std::uint64_t t = idx; t > 0; t /= static_cast<std::uint64_t>(p))
                            q.push_back(static_cast<std::int64_t>(t % p));
                        const auto c = oracle::compose(oracle::from(p1), q, p);
                        if (oracle::mod(c, oracle::from(p2), p).empty()) expected.push_back(oracle::to(k, q).to_string());
                    }
                    EXPECT_EQ(q_images(find_residue_isomorphisms(p1, p2)), expected);
                    EXPECT_EQ(expected.size(), static_cast<std::size_t>(d));
                }
        }
    }
}

TEST(Lift, Examples) {
    const auto f = residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x+2"));
    EXPECT_EQ(lift_morphism(f, 1), f);
    const auto f3 = lift_morphism(f, 3);
    EXPECT_TRUE(f3.certificate_residue().is_zero());
    EXPECT_EQ(f3.source().power(), 3);

    const Poly p = P("F2", "x^3+x+1");
    const auto frob = residue_morphism_from_q(p, p, kId, P("F2", "x^2"));
    EXPECT_TRUE(lift_morphism(frob, 2).certificate_residue().is_zero());
}

TEST(Lift, Verdicts) {
    const auto f = residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x+2"));
    const LiftReport r = lift_is_isomorphism(f, 3);
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.q_f_derivative_nonzero);
    EXPECT_TRUE(r.gcd_sf_p2_is_one);
    EXPECT_EQ(r.s_f, P("F3", "1"));
    EXPECT_FALSE(kernel_witness(f, 3).has_value());

    const Poly p = P("F2", "x^3+x+1");
    const auto frob = residue_morphism_from_q(p, p, kId, P("F2", "x^2"));
    const LiftReport n2 = lift_is_isomorphism(frob, 2);
    EXPECT_FALSE(n2.verdict);
    EXPECT_FALSE(n2.q_f_derivative_nonzero);
    EXPECT_FALSE(n2.gcd_sf_p2_is_one);
    EXPECT_EQ(n2.multiplicity, 2);
    // a field map is always injective
    EXPECT_TRUE(lift_is_isomorphism(frob, 1).verdict);

    for (std::int64_t q : {2, 3})
        for (const auto& p1 : enumerate_irreducibles(Field::prime(q), 2))
            for (const auto& p2 : enumerate_irreducibles(Field::prime(q), 2))
                for (const auto& g : find_residue_isomorphisms(p1, p2))
                    if (g.q_image().degree() == 1) EXPECT_TRUE(lift_is_isomorphism(g, 3).verdict);
}

TEST(Lift, KernelWitnessUsesMultiplicity) {
    const Poly p = P("F2", "x^3+x+1");
    const auto frob = residue_morphism_from_q(p, p, kId, P("F2", "x^2"));
    for (int n = 2; n <= 5; ++n) {
        const auto w = kernel_witness(frob, n);
        ASSERT_TRUE(w.has_value());
        EXPECT_FALSE(w->is_zero());
        EXPECT_TRUE(lift_morphism(frob, n)(*w).is_zero()) << "n=" << n;
        EXPECT_EQ(*w, w->ring().element(pow(p, static_cast<unsigned>((n + 1) / 2))));
    }
}

TEST(Lift, InducedResidueMorphism) {
    const Poly p = P("F2", "x^3+x+1");
    const QuotientRing r2 = QuotientRing::make(p, 2);
    EXPECT_EQ(induced_residue_morphism(StabilizingMorphism::identity(r2)),
              StabilizingMorphism::identity(QuotientRing::make(p, 1)));

    const auto f_m = StabilizingMorphism::make(r2, r2, kId, P("F2", "x^2") + p * P("F2", "x+1"));
    EXPECT_EQ(induced_residue_morphism(f_m).q_image(), P("F2", "x^2"));

    const auto f = residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x+2"));
    EXPECT_EQ(induced_residue_morphism(lift_morphism(f, 3)).q_image(), P("F3", "x+2"));

    const QuotientRing a = QuotientRing::make(P("F3", "x^2+1"), 2);
    const QuotientRing b = QuotientRing::make(P("F3", "x^2+x+2"), 2);
    EXPECT_KIND(NotAMorphism, induced_residue_morphism(StabilizingMorphism::unchecked(a, b, kId, P("F3", "x"))));
}

TEST(Lift, RootBijection) {
    const auto f = residue_morphism_from_q(P("F3", "x^2+1"), P("F3", "x^2+x+2"), kId, P("F3", "x+2"));
    const RootBijection r = roots_bijection_check(f);
    EXPECT_TRUE(r.passed) << r.message;
    EXPECT_EQ(r.roots_p2.size(), 2u);

    const QuotientRing f8 = QuotientRing::make(P("F2", "x^3+x+1"), 1);
    EXPECT_TRUE(roots_bijection_check(StabilizingMorphism::identity(f8)).passed);
    for (const auto& g : find_residue_isomorphisms(P("F2", "x^3+x+1"), P("F2", "x^3+x^2+1"))) {
        const RootBijection rb = roots_bijection_check(g);
        EXPECT_TRUE(rb.passed) << rb.message;
        EXPECT_EQ(rb.roots_p2.size(), 3u);
    }
    const QuotientRing q = QuotientRing::make(P("Q", "x^2-2"), 1);
    EXPECT_KIND(UnsupportedField, roots_bijection_check(StabilizingMorphism::identity(q)));
}

TEST(Lift, RingsIsomorphicSeparable) {
    const auto iso = rings_isomorphic_separable(P("F3", "x^2+1"), P("F3", "x^2+x+2"), 3);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(rem(iso->q_image(), P("F3", "x^2+x+2")), P("F3", "x+2"));
    EXPECT_TRUE(certify_isomorphism(*iso));

    EXPECT_FALSE(rings_isomorphic_separable(P("F3", "x^2+1"), P("F3", "x^3+2*x+1"), 2).has_value());

    const Poly p = P("F2", "x^3+x+1");
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(*rings_isomorphic_separable(p, p, n), StabilizingMorphism::identity(QuotientRing::make(p, n)));

    EXPECT_KIND(NotSeparable, rings_isomorphic_separable(P("F2(t)", "x^2+t"), P("F2(t)", "x^2+t+1"), 2));
    EXPECT_KIND(UnsupportedField, rings_isomorphic_separable(P("Q", "x^2-2"), P("Q", "x^2-8"), 2));
}

TEST(Lift, DegreeOneUsesTheAffineMap) {
    const Field k = F("F5");
    for (int n = 1; n <= 4; ++n) {
        const auto iso = rings_isomorphic_separable(P(k, "x+1"), P(k, "x+3"), n);
        ASSERT_TRUE(iso.has_value());
        // P1 = x - 4, P2 = x - 2: x -> x + 2
        EXPECT_EQ((*iso)(iso->source().x()), iso->target().element(P(k, "x+2")));
        EXPECT_TRUE(certify_isomorphism(*iso));
    }
    const auto q = rings_isomorphic_separable(P("Q", "x-1/2"), P("Q", "x+3"), 3);
    ASSERT_TRUE(q.has_value());
    EXPECT_TRUE(certify_isomorphism(*q));
}

TEST(Lift, SuppliedResidueMorphismOverTheRationals) {
    // x -> x/2 maps x^2-8 into the ideal of x^2-2
    const Poly p1 = P("Q", "x^2-8"), p2 = P("Q", "x^2-2");
    const auto residue = residue_morphism_from_q(p1, p2, kId, P("Q", "2*x"));
    EXPECT_EQ(s_f_of(residue), P("Q", "4"));
    const auto iso = rings_isomorphic_separable(p1, p2, 3, residue);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(certify_isomorphism(*iso));
    EXPECT_TRUE(lift_is_isomorphism(residue, 3).verdict);
}

TEST(Lift, StructureFallbackGivesAnIsomorphism) {
    // Q = x^2 has zero derivative, yet the digit route still yields an isomorphism
    const Poly p = P("F2", "x^3+x+1");
    const auto frob = residue_morphism_from_q(p, p, kId, P("F2", "x^2"));
    for (int n = 1; n <= 4; ++n) {
        const auto iso = lift_via_structure(frob, n);
        EXPECT_TRUE(certify_isomorphism(iso)) << "n=" << n;
        EXPECT_EQ(induced_residue_morphism(iso).q_image(), P("F2", "x^2"));
    }
}

TEST(Lift, FrobeniusSigmaOverExtensionField) {
    const Field f4 = F("F2[a]/(a^2+a+1)");
    const Poly p1 = P(f4, "x^2+x+a"), p2 = P(f4, "x^2+x+a+1");
    const auto frob = FieldAutomorphism::frobenius(1);
    const auto found = find_residue_isomorphisms(p1, p2, frob);
    EXPECT_EQ(found.size(), 2u);
    for (const auto& f : found) {
        const LiftReport r = lift_is_isomorphism(f, 3);
        EXPECT_EQ(r.verdict, certify_isomorphism(lift_morphism(f, 3)));
    }
}

// ------------------------------------------------------------ properties

TEST(LiftLaws, CriteriaAgreeWithKernel) {
    for (std::int64_t q : {2, 3}) {
        const Field k = Field::prime(q);
        for (int d = 2; d <= 4; ++d) {
            const auto irr = enumerate_irreducibles(k, d);
            for (const auto& p1 : irr)
                for (const auto& p2 : irr)
                    for (const auto& f : find_residue_isomorphisms(p1, p2)) {
                        const LiftReport r = lift_is_isomorphism(f, 2);
                        EXPECT_EQ(r.q_f_derivative_nonzero, r.gcd_sf_p2_is_one);
                        for (int n = 2; n <= 3; ++n) {
                            const auto lifted = lift_morphism(f, n);
                            const bool injective = kernel_basis(morphism_matrix(lifted)).empty();
                            EXPECT_EQ(lift_is_isomorphism(f, n).verdict, injective);
                            if (const auto w = kernel_witness(f, n)) {
                                EXPECT_FALSE(w->is_zero());
                                EXPECT_TRUE(lifted(*w).is_zero());
                            }
                        }
                    }
        }
    }
}

TEST(LiftLaws, LiftCommutesWithProjection) {
    const auto f = residue_morphism_from_q(P("F3", "x^3+2*x+1"), P("F3", "x^3+2*x+2"), kId,
                                           find_residue_isomorphisms(P("F3", "x^3+2*x+1"), P("F3", "x^3+2*x+2"))
                                               .front()
                                               .q_image());
    const int n = 4;
    const auto fn = lift_morphism(f, n);
    std::mt19937_64 rng(12);
    for (int m = 1; m <= n; ++m) {
        const auto fm = lift_morphism(f, m);
        for (int i = 0; i < 50; ++i) {
            const QuotientElement a = fn.source().random(rng);
            EXPECT_EQ(project(fn(a), m), fm(project(a, m)));
        }
    }
}

TEST(LiftLaws, InducedAfterLiftIsIdentity) {
    for (const auto& p1 : enumerate_irreducibles(F("F3"), 2))
        for (const auto& p2 : enumerate_irreducibles(F("F3"), 2))
            for (const auto& f : find_residue_isomorphisms(p1, p2))
                for (int n = 1; n <= 3; ++n) EXPECT_EQ(induced_residue_morphism(lift_morphism(f, n)), f);
}

TEST(LiftLaws, RootBijectionForEveryFoundMorphism) {
    for (std::int64_t q : {2, 3})
        for (int d = 2; d <= 3; ++d) {
            const auto irr = enumerate_irreducibles(Field::prime(q), d);
            for (const auto& p1 : irr)
                for (const auto& p2 : irr)
                    for (const auto& f : find_residue_isomorphisms(p1, p2)) {
                        const RootBijection r = roots_bijection_check(f);
                        EXPECT_TRUE(r.passed) << r.message;
                    }
        }
}
