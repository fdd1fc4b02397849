#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locring/quotient.hpp"

namespace locring {

/// Data deciding whether a residue-level morphism lifts to an isomorphism
/// K[X]/(P1^n) -> K[X]/(P2^n).
struct LiftReport {
    Poly q_f;
    Poly s_f;
    int n = 1;
    bool q_f_derivative_nonzero = false;
    bool gcd_sf_p2_is_one = false;
    /// True for n = 1; otherwise both flags.
    bool verdict = false;
    /// Multiplicity of P2 in sigma^X(P1) o Q_f (1 + multiplicity in S_f).
    int multiplicity = 1;
};

/// The level-1 morphism K[X]/(P1) -> K[X]/(P2), X -> Q, restricting to sigma,
/// with S_f = (sigma^X(P1) o Q) / P2 attached as its certificate.
/// DegreeMismatch, NotAMorphism; deg P < 2 or Q constant is InvalidArgument.
StabilizingMorphism residue_morphism_from_q(const Poly& p1, const Poly& p2, const FieldAutomorphism& sigma,
                                            const Poly& q);

/// Every nonconstant Q of degree < d with sigma^X(P1) o Q = 0 mod P2, in
/// index order. Finite fields only; at most 9^6 candidates.
std::vector<StabilizingMorphism> find_residue_isomorphisms(const Poly& p1, const Poly& p2,
                                                           const FieldAutomorphism& sigma = FieldAutomorphism::identity());

/// S_f of a level-1 morphism, from its certificate or recomputed.
Poly s_f_of(const StabilizingMorphism& f);

/// Same sigma and X-image, read in K[X]/(P1^n) -> K[X]/(P2^n).
StabilizingMorphism lift_morphism(const StabilizingMorphism& f, int n);

/// Both criteria; CriterionDisagreement when they differ.
LiftReport lift_is_isomorphism(const StabilizingMorphism& f, int n);

/// A nonzero element of K[X]/(P1^n) killed by the lift, when the verdict is
/// false: the class of P1^e with e = ceil(n / multiplicity).
std::optional<QuotientElement> kernel_witness(const StabilizingMorphism& f, int n);

/// Reduces the X-image of a level-m morphism modulo P2.
StabilizingMorphism induced_residue_morphism(const StabilizingMorphism& f_m);

struct RootBijection {
    bool passed = false;
    std::vector<Element> roots_p2;        // in F_q[a]/(P2)
    std::vector<Element> roots_sigma_p1;  // same field
    std::vector<Element> images;          // Q_f(alpha) for alpha in roots_p2
    std::string message;
};

/// alpha -> Q_f(alpha) from the roots of P2 to the roots of sigma^X(P1),
/// both enumerated in F_q[a]/(P2). Prime fields only (UnsupportedField).
RootBijection roots_bijection_check(const StabilizingMorphism& f);

/// The isomorphism K[X]/(P1^n) -> K[X]/(P2^n) obtained by writing the class
/// of X in digits, applying the residue morphism digitwise and reassembling.
/// Needs P1 and P2 separable.
StabilizingMorphism lift_via_structure(const StabilizingMorphism& residue, int n);

/// The affine isomorphism X -> X + (c1 - c2) for P_i = X - c_i.
StabilizingMorphism affine_isomorphism(const Poly& p1, const Poly& p2, int n);

/// A verified isomorphism K[X]/(P1^n) -> K[X]/(P2^n) over K, or nothing when
/// the degrees differ. Over infinite fields a residue morphism must be given
/// (UnsupportedField otherwise). NotSeparable when P1' or P2' vanishes.
std::optional<StabilizingMorphism> rings_isomorphic_separable(
    const Poly& p1, const Poly& p2, int n, const std::optional<StabilizingMorphism>& residue = std::nullopt);

}  // namespace locring
