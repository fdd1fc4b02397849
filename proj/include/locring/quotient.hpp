#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "locring/poly.hpp"

namespace locring {

class QuotientElement;

/// K[X]/(P^n) for P monic irreducible. Cheap to copy; two handles are equal
/// when they describe the same (K, P, n).
class QuotientRing {
   public:
    /// Over finite fields irreducibility of P is verified (NotIrreducible);
    /// over Q and F_p(t) it is the caller's assertion and only the necessary
    /// condition gcd(P, P') in {1, P} is checked.
    static QuotientRing make(const Poly& p, int n);

    const Field& field() const noexcept { return impl_->p.field(); }
    const Poly& base_poly() const noexcept { return impl_->p; }
    int power() const noexcept { return impl_->n; }
    const Poly& modulus() const noexcept { return impl_->modulus; }
    /// n * deg P.
    std::size_t dimension() const noexcept;
    /// Number of elements when K is finite and the count fits in 63 bits.
    std::optional<std::uint64_t> size() const;

    /// Same P at power m.
    QuotientRing at_power(int m) const;
    /// The residue field K[X]/(P).
    QuotientRing residue_field() const { return at_power(1); }

    QuotientElement element(const Poly& representative) const;
    QuotientElement zero() const;
    QuotientElement one() const;
    QuotientElement x() const;
    /// Enumerates a finite ring by the index of the representative.
    QuotientElement element_at(std::uint64_t index) const;
    QuotientElement random(std::mt19937_64& rng) const;

    std::string to_string() const;

    bool operator==(const QuotientRing& rhs) const;

   private:
    struct Impl {
        Poly p;
        int n;
        Poly modulus;
    };
    explicit QuotientRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

class QuotientElement {
   public:
    /// Reduces `representative` modulo the ring modulus.
    QuotientElement(QuotientRing ring, const Poly& representative);

    const QuotientRing& ring() const noexcept { return ring_; }
    const Poly& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }

    QuotientElement operator+(const QuotientElement& rhs) const;
    QuotientElement operator-(const QuotientElement& rhs) const;
    QuotientElement operator*(const QuotientElement& rhs) const;
    QuotientElement operator-() const;
    QuotientElement pow(unsigned exponent) const;

    bool operator==(const QuotientElement& rhs) const { return ring_ == rhs.ring_ && rep_ == rhs.rep_; }

    std::string to_string() const { return rep_.to_string(); }

   private:
    QuotientRing ring_;
    Poly rep_;
};

/// Nonunits of the local ring are exactly the multiples of P.
bool is_unit(const QuotientElement& a);
/// NotAUnit when a is in the maximal ideal.
QuotientElement invert(const QuotientElement& a);
/// Reduction K[X]/(P^n) -> K[X]/(P^m), 1 <= m <= n (BadTarget otherwise).
QuotientElement project(const QuotientElement& a, int m);

/// A ring morphism K[X]/(P1^n1) -> K[X]/(P2^n2) restricting to sigma on K,
/// determined by the image of the class of X. The image is stored reduced
/// modulo the full target modulus.
class StabilizingMorphism {
   public:
    /// Checks sigma^X(source modulus) o q = 0 in the target; throws
    /// NotWellDefinedError with the nonzero residue otherwise.
    static StabilizingMorphism make(const QuotientRing& source, const QuotientRing& target,
                                    const FieldAutomorphism& sigma, const Poly& q);
    /// Skips the well-definedness check. Meant for oracles that need to look
    /// at broken data.
    static StabilizingMorphism unchecked(const QuotientRing& source, const QuotientRing& target,
                                         const FieldAutomorphism& sigma, const Poly& q);
    static StabilizingMorphism identity(const QuotientRing& ring);

    const QuotientRing& source() const noexcept { return source_; }
    const QuotientRing& target() const noexcept { return target_; }
    const FieldAutomorphism& sigma() const noexcept { return sigma_; }
    const Poly& q_image() const noexcept { return q_; }
    /// S with sigma^X(P1) o Q = S * P2, when known.
    const std::optional<Poly>& s_cert() const noexcept { return s_cert_; }
    StabilizingMorphism with_certificate(const Poly& s) const;

    /// sigma^X(source modulus) o q mod target modulus; zero iff well defined.
    Poly certificate_residue() const;

    QuotientElement operator()(const QuotientElement& a) const;

    /// Equality of the data that determines the action.
    bool operator==(const StabilizingMorphism& rhs) const;

   private:
    StabilizingMorphism(QuotientRing source, QuotientRing target, FieldAutomorphism sigma, Poly q)
        : source_(std::move(source)), target_(std::move(target)), sigma_(sigma), q_(std::move(q)) {}

    QuotientRing source_;
    QuotientRing target_;
    FieldAutomorphism sigma_;
    Poly q_;
    std::optional<Poly> s_cert_;
};

class NotWellDefinedError : public Error {
   public:
    NotWellDefinedError(const std::string& message, Poly residue)
        : Error(ErrorKind::NotWellDefined, message), residue_(std::move(residue)) {}
    const Poly& residue() const noexcept { return residue_; }

   private:
    Poly residue_;
};

/// (g after f); RingMismatch unless f.target() == g.source().
StabilizingMorphism compose_morphisms(const StabilizingMorphism& g, const StabilizingMorphism& f);

}  // namespace locring
