#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "locring/error.hpp"

namespace locring {

class Element;

namespace detail {
struct FieldData;

/// Ratio of two polynomials over F_p in ascending order. The denominator is
/// monic and coprime to the numerator; zero is (empty, [1]).
struct FpFraction {
    std::vector<std::int64_t> num;
    std::vector<std::int64_t> den;
    bool operator==(const FpFraction&) const = default;
};
}  // namespace detail

enum class FieldKind { Rationals, PrimeField, RationalFunctions, SimpleExtension };

/// Handle to an interned field descriptor. Descriptors are created once per
/// canonical name and never destroyed, so handles compare by identity and
/// are cheap to copy across threads.
class Field {
   public:
    static Field rationals();
    static Field prime(std::int64_t p);
    static Field rational_functions(std::int64_t p, const std::string& variable = "t");
    /// K[a]/(m) for K the rationals or a prime field. `minimal_poly` is in
    /// ascending order over `base` and must be monic of degree >= 2. Over a
    /// prime field irreducibility is verified; over Q it is the caller's
    /// assertion.
    static Field extension(const Field& base, const std::vector<Element>& minimal_poly,
                           const std::string& generator = "a");

    FieldKind kind() const noexcept;
    std::int64_t characteristic() const noexcept;
    /// The prime p; throws UnsupportedField in characteristic 0.
    std::int64_t prime() const;
    bool is_finite() const noexcept;
    /// Number of elements; throws UnsupportedField for infinite fields and
    /// TooLarge when it does not fit in 63 bits.
    std::uint64_t size() const;
    /// Degree over the prime subfield (finite fields), or over Q for
    /// extensions of Q.
    int degree_over_prime() const noexcept;
    Field base() const;
    Field prime_subfield() const;
    const std::vector<Element>& minimal_polynomial() const;
    /// t for F_p(t), the generator symbol for extensions, empty otherwise.
    const std::string& variable() const noexcept;
    const std::string& name() const noexcept;

    Element zero() const;
    Element one() const;
    Element from_int(long long value) const;
    Element from_integer(const mpz_class& value) const;
    Element from_rational(const mpq_class& value) const;
    /// t for F_p(t); the class of the generator for extensions.
    Element generator() const;
    /// Image of a base-field element in this extension.
    Element embed(const Element& base_element) const;

    /// Bijection [0, size()) -> elements: base-p digits of the coordinates,
    /// lowest coordinate least significant.
    Element element_at(std::uint64_t index) const;
    Element random(std::mt19937_64& rng) const;

    bool operator==(const Field& other) const noexcept { return data_ == other.data_; }

    const detail::FieldData* data() const noexcept { return data_; }
    explicit Field(const detail::FieldData* data) noexcept : data_(data) {}

   private:
    const detail::FieldData* data_;
};

/// An element of one of the supported fields, always in canonical form so
/// that equality is payload equality.
namespace detail {
struct Canonical {};
}  // namespace detail

class Element {
   public:
    using Payload = std::variant<std::int64_t,                // F_p residue
                                 mpq_class,                   // rational
                                 detail::FpFraction,          // F_p(t)
                                 std::vector<std::int64_t>,   // extension of F_p
                                 std::vector<mpq_class>>;     // extension of Q

    Element(const Field& field, Payload payload);
    /// Takes a payload that is already canonical.
    Element(const Field& field, Payload payload, detail::Canonical) : field_(field.data()), payload_(std::move(payload)) {}

    Field field() const noexcept { return Field(field_); }
    const Payload& payload() const noexcept { return payload_; }

    bool is_zero() const;
    bool is_one() const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    Element operator/(const Element& rhs) const;
    Element operator-() const;
    Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
    Element& operator-=(const Element& rhs) { return *this = *this - rhs; }
    Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

    Element inverse() const;
    Element pow(std::uint64_t exponent) const;

    /// Sign of a rational; 0 or 1 for every other field.
    int sign() const;
    /// Inverse of Field::element_at.
    std::uint64_t index() const;
    /// Coordinates over the prime subfield (finite fields only).
    std::vector<Element> prime_coordinates() const;

    std::string to_string() const;

    bool operator==(const Element& rhs) const { return field_ == rhs.field_ && payload_ == rhs.payload_; }

   private:
    const detail::FieldData* field_;
    Payload payload_;
};

/// Identity or a power of Frobenius, a -> a^(p^e).
class FieldAutomorphism {
   public:
    static FieldAutomorphism identity() noexcept { return FieldAutomorphism(0); }
    static FieldAutomorphism frobenius(int exponent);
    /// "id" or "frob^e" (also "frob" for e = 1).
    static FieldAutomorphism parse(std::string_view text);

    bool is_identity() const noexcept { return exponent_ == 0; }
    int exponent() const noexcept { return exponent_; }

    /// Throws UnsupportedAutomorphism when Frobenius is attached to an
    /// infinite field.
    void validate(const Field& field) const;
    /// True when the automorphism fixes every element of `field`.
    bool acts_trivially_on(const Field& field) const;
    /// Same action on `field`, with the exponent reduced modulo the degree.
    FieldAutomorphism normalized(const Field& field) const;

    std::string to_string() const;

    bool operator==(const FieldAutomorphism&) const = default;

   private:
    explicit FieldAutomorphism(int exponent) noexcept : exponent_(exponent) {}
    int exponent_;
};

/// (g after f).
FieldAutomorphism compose(const FieldAutomorphism& g, const FieldAutomorphism& f);

Element apply_automorphism(const FieldAutomorphism& sigma, const Element& a);

}  // namespace locring
