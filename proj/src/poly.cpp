#include "locring/poly.hpp"

#include <optional>

#include "dense.hpp"
#include "format.hpp"

namespace locring {

namespace {

struct ElementOps {
    using value_type = Element;

    explicit ElementOps(const Field& f) : zero_(f.zero()), one_(f.one()) {}

    Element zero() const { return zero_; }
    Element one() const { return one_; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }

   private:
    Element zero_;
    Element one_;
};

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        raise(ErrorKind::DescriptorMismatch, "polynomials over " + a.field().name() + " and " + b.field().name());
}

void require_nonzero(const Poly& b) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
}

}  // namespace

Poly::Poly(Field field, std::vector<Element> coefficients) : field_(field), c_(std::move(coefficients)) {
    for (const auto& c : c_)
        if (!(c.field() == field_))
            raise(ErrorKind::DescriptorMismatch, "coefficient in " + c.field().name() + ", expected " + field_.name());
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Element& c, std::size_t degree) {
    std::vector<Element> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::from_index(const Field& field, std::uint64_t index) {
    const std::uint64_t q = field.size();
    std::vector<Element> v;
    while (index > 0) {
        v.push_back(field.element_at(index % q));
        index /= q;
    }
    return Poly(field, std::move(v));
}

std::uint64_t Poly::index() const {
    const std::uint64_t q = field_.size();
    std::uint64_t index = 0;
    for (std::size_t i = c_.size(); i-- > 0;) index = index * q + c_[i].index();
    return index;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return *this * c_.back().inverse();
}

Element Poly::operator()(const Element& at) const {
    const Field target = at.field();
    const bool lifted = !(target == field_);
    if (lifted && !(target.kind() == FieldKind::SimpleExtension && target.base() == field_))
        raise(ErrorKind::DescriptorMismatch, "cannot evaluate a polynomial over " + field_.name() + " at an element of " +
                                                 target.name());
    Element r = target.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * at + (lifted ? target.embed(c_[i]) : c_[i]);
    return r;
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_field(*this, rhs);
    return Poly(field_, detail::add(ElementOps(field_), c_, rhs.c_));
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same_field(*this, rhs);
    return Poly(field_, detail::sub(ElementOps(field_), c_, rhs.c_));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_field(*this, rhs);
    return Poly(field_, detail::mul(ElementOps(field_), c_, rhs.c_));
}

Poly Poly::operator*(const Element& c) const {
    if (!(c.field() == field_)) raise(ErrorKind::DescriptorMismatch, "scalar not in " + field_.name());
    return Poly(field_, detail::scale(ElementOps(field_), c_, c));
}

Poly Poly::operator-() const { return Poly(field_, detail::neg(ElementOps(field_), c_)); }

std::string Poly::to_string(std::string_view variable) const {
    std::vector<std::optional<detail::CoeffText>> terms;
    terms.reserve(c_.size());
    const bool rational = field_.kind() == FieldKind::Rationals;
    for (const auto& c : c_) {
        if (c.is_zero()) {
            terms.emplace_back();
        } else if (rational && c.sign() < 0) {
            terms.push_back(detail::CoeffText{true, (-c).to_string()});
        } else {
            terms.push_back(detail::CoeffText{false, c.to_string()});
        }
    }
    return detail::format_terms(terms, variable);
}

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    require_nonzero(b);
    auto [q, r] = detail::divmod(ElementOps(a.field()), a.coefficients(), b.coefficients());
    return DivMod{Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    require_nonzero(b);
    if (a.degree() < b.degree()) return a;
    return Poly(a.field(), detail::rem(ElementOps(a.field()), a.coefficients(), b.coefficients()));
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        raise(ErrorKind::InexactDivision, b.to_string() + " does not divide " + a.to_string() + " (remainder " +
                                              r.to_string() + ")");
    return q;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) raise(ErrorKind::InvalidArgument, "ext_gcd of two zero polynomials");
    auto [g, u, v] = detail::ext_gcd(ElementOps(a.field()), a.coefficients(), b.coefficients());
    const Field& f = a.field();
    return ExtGcd{Poly(f, std::move(g)), Poly(f, std::move(u)), Poly(f, std::move(v))};
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return Poly(a.field(), detail::gcd(ElementOps(a.field()), a.coefficients(), b.coefficients()));
}

Poly derivative(const Poly& a) {
    const auto& c = a.coefficients();
    std::vector<Element> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * a.field().from_int(static_cast<long long>(i)));
    return Poly(a.field(), std::move(d));
}

Poly pow(const Poly& a, unsigned exponent) {
    Poly result = Poly::constant(a.field().one());
    Poly base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Poly compose(const Poly& a, const Poly& q) {
    require_same_field(a, q);
    Poly r(a.field());
    const auto& c = a.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) r = r * q + Poly::constant(c[i]);
    return r;
}

Poly compose_mod(const Poly& a, const Poly& q, const Poly& m) {
    require_same_field(a, q);
    require_same_field(a, m);
    require_nonzero(m);
    const ElementOps ops(a.field());
    const auto qm = detail::rem(ops, q.coefficients(), m.coefficients());
    std::vector<Element> r;
    const auto& c = a.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        r = detail::mul(ops, r, qm);
        r = detail::add(ops, r, std::vector<Element>{c[i]});
        r = detail::rem(ops, r, m.coefficients());
    }
    return Poly(a.field(), std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return rem(a * b, m); }

Poly powmod(const Poly& a, std::uint64_t exponent, const Poly& m) {
    require_same_field(a, m);
    require_nonzero(m);
    return Poly(a.field(), detail::powmod(ElementOps(a.field()), a.coefficients(), exponent, m.coefficients()));
}

int multiplicity(const Poly& f, const Poly& p) {
    if (f.is_zero()) raise(ErrorKind::InvalidArgument, "multiplicity in the zero polynomial");
    if (p.degree() < 1) raise(ErrorKind::InvalidArgument, "multiplicity of a constant");
    int e = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = divmod(g, p);
        if (!r.is_zero()) return e;
        g = std::move(q);
        ++e;
    }
}

Poly extend_automorphism(const FieldAutomorphism& sigma, const Poly& a) {
    sigma.validate(a.field());
    if (sigma.acts_trivially_on(a.field())) return a;
    std::vector<Element> c;
    c.reserve(a.coefficients().size());
    for (const auto& x : a.coefficients()) c.push_back(apply_automorphism(sigma, x));
    return Poly(a.field(), std::move(c));
}

bool is_irreducible_fq(const Poly& a) {
    if (!a.field().is_finite())
        raise(ErrorKind::UnsupportedField, "irreducibility is only decided over finite fields, not " + a.field().name());
    if (a.degree() < 1) raise(ErrorKind::InvalidArgument, "irreducibility of a constant");
    const Poly f = a.monic();
    return detail::ben_or_irreducible(ElementOps(a.field()), f.coefficients(), a.field().size());
}

std::vector<Poly> enumerate_irreducibles(const Field& field, int degree) {
    if (!field.is_finite()) raise(ErrorKind::UnsupportedField, field.name() + " is infinite");
    if (degree < 1) raise(ErrorKind::InvalidArgument, "degree must be >= 1");
    const std::uint64_t q = field.size();
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) {
        if (count > (std::uint64_t{1} << 24) / q) raise(ErrorKind::TooLarge, "too many candidates to enumerate");
        count *= q;
    }
    const Poly lead = Poly::monomial(field.one(), static_cast<std::size_t>(degree));
    std::vector<Poly> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        Poly candidate = lead + Poly::from_index(field, i);
        if (is_irreducible_fq(candidate)) out.push_back(std::move(candidate));
    }
    return out;
}

Poly random_poly(const Field& field, int max_degree, std::mt19937_64& rng) {
    std::vector<Element> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(field.random(rng));
    return Poly(field, std::move(c));
}

}  // namespace locring
