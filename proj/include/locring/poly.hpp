#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "locring/field.hpp"

namespace locring {

/// Dense univariate polynomial over one field, ascending coefficients, no
/// trailing zeros. The zero polynomial has degree -1.
class Poly {
   public:
    explicit Poly(Field field) : field_(field) {}
    Poly(Field field, std::vector<Element> coefficients);

    static Poly constant(const Element& c);
    static Poly monomial(const Element& c, std::size_t degree);
    static Poly x(const Field& field);
    /// Finite fields: the polynomial whose coefficient indices are the base-q
    /// digits of `index`, c0 least significant.
    static Poly from_index(const Field& field, std::uint64_t index);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Element>& coefficients() const noexcept { return c_; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    /// Inverse of from_index.
    std::uint64_t index() const;

    Poly monic() const;
    /// Horner evaluation. `at` may also live in an extension of field().
    Element operator()(const Element& at) const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Element& c) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    bool operator==(const Poly& rhs) const { return field_ == rhs.field_ && c_ == rhs.c_; }

    std::string to_string(std::string_view variable = "x") const;

   private:
    Field field_;
    std::vector<Element> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Bezout data: g = u*a + v*b with g monic.
struct ExtGcd {
    Poly g;
    Poly u;
    Poly v;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// a / b, throwing InexactDivision when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly pow(const Poly& a, unsigned exponent);
/// a(q) as an exact polynomial.
Poly compose(const Poly& a, const Poly& q);
/// a(q) mod m by Horner with a reduction after every step.
Poly compose_mod(const Poly& a, const Poly& q, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t exponent, const Poly& m);
/// Largest e with p^e | f; f nonzero, deg p >= 1.
int multiplicity(const Poly& f, const Poly& p);

/// sigma applied coefficient-wise, X fixed.
Poly extend_automorphism(const FieldAutomorphism& sigma, const Poly& a);

/// Finite fields only (UnsupportedField otherwise); deg a >= 1.
bool is_irreducible_fq(const Poly& a);
/// All monic irreducibles of exactly `degree`, ordered by Poly::index.
std::vector<Poly> enumerate_irreducibles(const Field& field, int degree);

Poly random_poly(const Field& field, int max_degree, std::mt19937_64& rng);

}  // namespace locring
