#include "locring/lift.hpp"

#include <algorithm>

#include "locring/hensel.hpp"

namespace locring {

namespace {

void require_same_field(const Poly& p1, const Poly& p2) {
    if (!(p1.field() == p2.field())) raise(ErrorKind::DescriptorMismatch, p1.field().name() + " vs " + p2.field().name());
}

void require_level_one(const StabilizingMorphism& f) {
    if (f.source().power() != 1 || f.target().power() != 1)
        raise(ErrorKind::InvalidArgument, "expected a residue-level morphism, got " + f.source().to_string() + " -> " +
                                              f.target().to_string());
}

/// Shared by the public constructor and the search, which has the rings at hand.
std::optional<StabilizingMorphism> try_residue_morphism(const QuotientRing& r1, const QuotientRing& r2,
                                                        const FieldAutomorphism& sigma, const Poly& sigma_p1,
                                                        const Poly& q) {
    auto [s, r] = divmod(compose(sigma_p1, q), r2.base_poly());
    if (!r.is_zero()) return std::nullopt;
    return StabilizingMorphism::unchecked(r1, r2, sigma, q).with_certificate(s);
}

}  // namespace

StabilizingMorphism residue_morphism_from_q(const Poly& p1, const Poly& p2, const FieldAutomorphism& sigma,
                                            const Poly& q) {
    require_same_field(p1, p2);
    if (p1.degree() != p2.degree())
        raise(ErrorKind::DegreeMismatch, "deg " + p1.to_string() + " != deg " + p2.to_string());
    if (p1.degree() < 2) raise(ErrorKind::InvalidArgument, "residue morphisms from Q need degree >= 2; use the affine map");
    if (q.is_constant() || q.degree() >= p2.degree())
        raise(ErrorKind::InvalidArgument, "X-image " + q.to_string() + " must be nonconstant of degree < " +
                                              std::to_string(p2.degree()));
    const QuotientRing r1 = QuotientRing::make(p1, 1);
    const QuotientRing r2 = QuotientRing::make(p2, 1);
    const Poly sigma_p1 = extend_automorphism(sigma, p1);
    auto f = try_residue_morphism(r1, r2, sigma, sigma_p1, q);
    if (!f)
        raise(ErrorKind::NotAMorphism, sigma.to_string() + "(" + p1.to_string() + ") o (" + q.to_string() +
                                           ") leaves remainder " + rem(compose(sigma_p1, q), p2).to_string() +
                                           " mod " + p2.to_string());
    return *f;
}

std::vector<StabilizingMorphism> find_residue_isomorphisms(const Poly& p1, const Poly& p2,
                                                           const FieldAutomorphism& sigma) {
    require_same_field(p1, p2);
    const Field& k = p1.field();
    if (!k.is_finite()) raise(ErrorKind::UnsupportedField, "residue isomorphism search needs a finite field, not " + k.name());
    if (p1.degree() != p2.degree())
        raise(ErrorKind::DegreeMismatch, "deg " + p1.to_string() + " != deg " + p2.to_string());
    const int d = p1.degree();
    if (d < 2) raise(ErrorKind::InvalidArgument, "residue isomorphism search needs degree >= 2; use the affine map");

    constexpr std::uint64_t budget = 531441;  // 9^6
    const std::uint64_t q = k.size();
    std::uint64_t candidates = 1;
    for (int i = 0; i < d; ++i) {
        if (candidates > budget / q) raise(ErrorKind::TooLarge, "more than 9^6 candidate X-images over " + k.name());
        candidates *= q;
    }

    const QuotientRing r1 = QuotientRing::make(p1, 1);
    const QuotientRing r2 = QuotientRing::make(p2, 1);
    const Poly sigma_p1 = extend_automorphism(sigma, p1);
    std::vector<StabilizingMorphism> out;
    for (std::uint64_t i = q; i < candidates; ++i) {
        const Poly cand = Poly::from_index(k, i);
        if (!compose_mod(sigma_p1, cand, p2).is_zero()) continue;
        out.push_back(*try_residue_morphism(r1, r2, sigma, sigma_p1, cand));
    }
    return out;
}

Poly s_f_of(const StabilizingMorphism& f) {
    if (f.s_cert()) return *f.s_cert();
    const Poly p2 = f.target().base_poly();
    return exact_div(compose(extend_automorphism(f.sigma(), f.source().base_poly()), rem(f.q_image(), p2)), p2);
}

StabilizingMorphism lift_morphism(const StabilizingMorphism& f, int n) {
    require_level_one(f);
    if (n < 1) raise(ErrorKind::InvalidArgument, "power must be >= 1");
    if (n == 1) return f;
    const Poly s = s_f_of(f);
    return StabilizingMorphism::make(f.source().at_power(n), f.target().at_power(n), f.sigma(), f.q_image())
        .with_certificate(s);
}

LiftReport lift_is_isomorphism(const StabilizingMorphism& f, int n) {
    require_level_one(f);
    if (n < 1) raise(ErrorKind::InvalidArgument, "power must be >= 1");
    const Poly& p2 = f.target().base_poly();
    LiftReport r{rem(f.q_image(), p2), s_f_of(f), n};
    r.q_f_derivative_nonzero = !derivative(r.q_f).is_zero();
    r.gcd_sf_p2_is_one = !r.s_f.is_zero() && gcd(r.s_f, p2).degree() == 0;
    if (r.q_f_derivative_nonzero != r.gcd_sf_p2_is_one)
        raise(ErrorKind::CriterionDisagreement, "Q_f = " + r.q_f.to_string() + ", S_f = " + r.s_f.to_string() +
                                                    ": derivative test and coprimality test disagree");
    r.verdict = n == 1 || (r.q_f_derivative_nonzero && r.gcd_sf_p2_is_one);
    r.multiplicity = r.s_f.is_zero() ? n : 1 + multiplicity(r.s_f, p2);
    return r;
}

std::optional<QuotientElement> kernel_witness(const StabilizingMorphism& f, int n) {
    const LiftReport r = lift_is_isomorphism(f, n);
    if (r.verdict) return std::nullopt;
    const int e = (n + r.multiplicity - 1) / r.multiplicity;
    const QuotientRing source = f.source().at_power(n);
    return source.element(pow(source.base_poly(), static_cast<unsigned>(e)));
}

StabilizingMorphism induced_residue_morphism(const StabilizingMorphism& f_m) {
    const QuotientRing r1 = f_m.source().residue_field();
    const QuotientRing r2 = f_m.target().residue_field();
    const Poly q = rem(f_m.q_image(), r2.base_poly());
    const Poly sigma_p1 = extend_automorphism(f_m.sigma(), r1.base_poly());
    auto f = try_residue_morphism(r1, r2, f_m.sigma(), sigma_p1, q);
    if (!f) raise(ErrorKind::NotAMorphism, "X -> " + q.to_string() + " does not induce a morphism " + r1.to_string() + " -> " +
                                               r2.to_string());
    return *f;
}

RootBijection roots_bijection_check(const StabilizingMorphism& f) {
    const Field& k = f.source().field();
    if (k.kind() != FieldKind::PrimeField)
        raise(ErrorKind::UnsupportedField, "root enumeration needs a prime field, not " + k.name());
    const Poly& p2 = f.target().base_poly();
    const Poly sigma_p1 = extend_automorphism(f.sigma(), f.source().base_poly());
    const Poly q_f = rem(f.q_image(), p2);
    const Field ext = Field::extension(k, p2.coefficients(), "a");
    const std::uint64_t size = ext.size();
    if (size > (std::uint64_t{1} << 20)) raise(ErrorKind::TooLarge, "refusing to enumerate " + ext.name());

    RootBijection out;
    for (std::uint64_t i = 0; i < size; ++i) {
        const Element a = ext.element_at(i);
        if (p2(a).is_zero()) out.roots_p2.push_back(a);
        if (sigma_p1(a).is_zero()) out.roots_sigma_p1.push_back(a);
    }
    for (const auto& alpha : out.roots_p2) out.images.push_back(q_f(alpha));

    auto by_index = [](const Element& x, const Element& y) { return x.index() < y.index(); };
    std::vector<Element> sorted_images = out.images;
    std::sort(sorted_images.begin(), sorted_images.end(), by_index);
    std::vector<Element> sorted_roots = out.roots_sigma_p1;
    std::sort(sorted_roots.begin(), sorted_roots.end(), by_index);

    if (out.roots_p2.size() != out.roots_sigma_p1.size()) {
        out.message = std::to_string(out.roots_p2.size()) + " roots of " + p2.to_string() + " but " +
                      std::to_string(out.roots_sigma_p1.size()) + " of " + sigma_p1.to_string();
    } else if (sorted_images != sorted_roots) {
        out.message = "Q_f = " + q_f.to_string() + " does not map the roots of " + p2.to_string() + " onto those of " +
                      sigma_p1.to_string();
    } else {
        out.passed = true;
        out.message = "bijection on " + std::to_string(out.roots_p2.size()) + " roots in " + ext.name();
    }
    return out;
}

StabilizingMorphism lift_via_structure(const StabilizingMorphism& residue, int n) {
    require_level_one(residue);
    const DigitMap source(residue.source().base_poly(), n);
    const DigitMap target(residue.target().base_poly(), n);
    std::vector<QuotientElement> digits;
    for (const auto& d : source.to_digits(source.ring().x()).digits) digits.push_back(residue(d));
    const QuotientElement image = target.from_digits(digits);
    return StabilizingMorphism::make(source.ring(), target.ring(), residue.sigma(), image.rep());
}

StabilizingMorphism affine_isomorphism(const Poly& p1, const Poly& p2, int n) {
    require_same_field(p1, p2);
    if (p1.degree() != 1 || p2.degree() != 1 || !p1.is_monic() || !p2.is_monic())
        raise(ErrorKind::InvalidArgument, "affine isomorphism needs monic linear moduli");
    // P_i = X - c_i, so c1 - c2 = P2(0) - P1(0)
    const Poly q = Poly::x(p1.field()) + Poly::constant(p2.coeff(0) - p1.coeff(0));
    return StabilizingMorphism::make(QuotientRing::make(p1, n), QuotientRing::make(p2, n), FieldAutomorphism::identity(), q);
}

std::optional<StabilizingMorphism> rings_isomorphic_separable(const Poly& p1, const Poly& p2, int n,
                                                              const std::optional<StabilizingMorphism>& residue) {
    require_same_field(p1, p2);
    if (n < 1) raise(ErrorKind::InvalidArgument, "power must be >= 1");
    if (p1.degree() != p2.degree()) return std::nullopt;
    for (const Poly* p : {&p1, &p2})
        if (p->degree() >= 1 && derivative(*p).is_zero())
            raise(ErrorKind::NotSeparable, "derivative of " + p->to_string() + " over " + p->field().name() + " is 0");
    if (p1 == p2) return StabilizingMorphism::identity(QuotientRing::make(p1, n));
    if (p1.degree() == 1) return affine_isomorphism(p1, p2, n);

    std::vector<StabilizingMorphism> candidates;
    if (residue) {
        require_level_one(*residue);
        if (!(residue->source().base_poly() == p1) || !(residue->target().base_poly() == p2))
            raise(ErrorKind::RingMismatch, "residue morphism is not between the residue fields of " + p1.to_string() +
                                               " and " + p2.to_string());
        candidates.push_back(*residue);
    } else if (p1.field().is_finite()) {
        candidates = find_residue_isomorphisms(p1, p2);
    } else {
        raise(ErrorKind::UnsupportedField, "over " + p1.field().name() + " a residue isomorphism must be supplied");
    }
    if (candidates.empty()) return std::nullopt;

    for (const auto& f : candidates)
        if (lift_is_isomorphism(f, n).verdict) return lift_morphism(f, n);
    return lift_via_structure(candidates.front(), n);
}

}  // namespace locring
