#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locring/quotient.hpp"

namespace locring {

/// R with P(X + Q) = P + P' Q + R Q^2, obtained by exact division by Q^2.
/// Q = 0 gives R = 0.
Poly taylor_shift_certificate(const Poly& p, const Poly& q);

/// An approximate root of P in K[X] to precision P^k:
///   U = X + Q_1 P + ... + Q_{k-1} P^{k-1},  P(U) = cofactor * P^k.
struct RootSeries {
    Poly p;
    int k;
    std::vector<Poly> corrections;  // Q_1 .. Q_{k-1}, each of degree < deg P
    Poly u;
    Poly cofactor;

    /// Recomputes P(U) - cofactor * P^k and checks it is zero.
    bool certificate_holds() const;
};

/// One power of P per step, starting from U = X. Each correction is the
/// representative of degree < deg P of -R (P')^{-1} mod P. NotSeparable when
/// P' = 0.
RootSeries hensel_root_series(const Poly& p, int k);

/// K[X]/(P) -> K[X]/(P^k), X -> U mod P^k. A section of the projection.
StabilizingMorphism embed_residue_field(const Poly& p, int k);

/// Coordinates a_0..a_{k-1} in the residue field of an element of K[X]/(P^k)
/// with respect to 1, P, ..., P^{k-1} over the embedded residue field.
struct ResidueDigits {
    QuotientRing ring;
    std::vector<QuotientElement> digits;
};

/// The structure isomorphism (K[X]/(P))[Y]/(Y^k) -> K[X]/(P^k), Y -> P, and
/// its inverse, for one (P, k). Holds the embedding so repeated conversions
/// do not redo the root series.
class DigitMap {
   public:
    DigitMap(const Poly& p, int k);
    explicit DigitMap(const QuotientRing& ring) : DigitMap(ring.base_poly(), ring.power()) {}

    const QuotientRing& ring() const noexcept { return ring_; }
    const QuotientRing& residue_field() const noexcept { return residue_; }
    const StabilizingMorphism& embedding() const noexcept { return embedding_; }

    ResidueDigits to_digits(const QuotientElement& a) const;
    QuotientElement from_digits(const ResidueDigits& d) const;
    QuotientElement from_digits(const std::vector<QuotientElement>& digits) const;

   private:
    QuotientRing ring_;
    QuotientRing residue_;
    StabilizingMorphism embedding_;
    QuotientElement p_class_;
};

ResidueDigits to_digits(const QuotientElement& a);
QuotientElement from_digits(const ResidueDigits& d);

/// Product in (K[X]/(P))[Y]/(Y^k): truncated convolution of digit vectors.
std::vector<QuotientElement> digit_product(const std::vector<QuotientElement>& a,
                                           const std::vector<QuotientElement>& b);

struct StructureCheck {
    bool passed = true;
    bool exhaustive = false;
    std::size_t elements_checked = 0;
    std::size_t pairs_checked = 0;
    std::string counterexample;
};

/// Round trip over every element when the ring has at most 3^6 elements,
/// else over `samples` random ones; multiplicativity and additivity on
/// sampled pairs, comparing the digit-side product with the ring product.
StructureCheck structure_isomorphism_check(const Poly& p, int k, std::size_t samples = 1000,
                                           std::size_t pair_samples = 300, std::uint64_t seed = 0x5eed);

}  // namespace locring
