#include "locring/quotient.hpp"

namespace locring {

QuotientRing QuotientRing::make(const Poly& p, int n) {
    if (n < 1) raise(ErrorKind::InvalidArgument, "power must be >= 1");
    if (p.degree() < 1) raise(ErrorKind::InvalidArgument, "modulus base must have degree >= 1");
    if (!p.is_monic()) raise(ErrorKind::NotMonic, p.to_string() + " is not monic");
    if (p.field().is_finite()) {
        if (!is_irreducible_fq(p)) raise(ErrorKind::NotIrreducible, p.to_string() + " is reducible over " + p.field().name());
    } else {
        const Poly d = derivative(p);
        if (!d.is_zero() && gcd(p, d).degree() >= 1)
            raise(ErrorKind::NotIrreducible, p.to_string() + " has a repeated factor over " + p.field().name());
    }
    return QuotientRing(std::make_shared<const Impl>(Impl{p, n, pow(p, static_cast<unsigned>(n))}));
}

std::size_t QuotientRing::dimension() const noexcept {
    return static_cast<std::size_t>(impl_->n) * static_cast<std::size_t>(impl_->p.degree());
}

std::optional<std::uint64_t> QuotientRing::size() const {
    if (!field().is_finite()) return std::nullopt;
    const std::uint64_t q = field().size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (count > (std::uint64_t{1} << 62) / q) return std::nullopt;
        count *= q;
    }
    return count;
}

QuotientRing QuotientRing::at_power(int m) const {
    if (m < 1) raise(ErrorKind::BadTarget, "power must be >= 1");
    if (m == impl_->n) return *this;
    return QuotientRing(std::make_shared<const Impl>(Impl{impl_->p, m, pow(impl_->p, static_cast<unsigned>(m))}));
}

QuotientElement QuotientRing::element(const Poly& representative) const { return QuotientElement(*this, representative); }
QuotientElement QuotientRing::zero() const { return element(Poly(field())); }
QuotientElement QuotientRing::one() const { return element(Poly::constant(field().one())); }
QuotientElement QuotientRing::x() const { return element(Poly::x(field())); }

QuotientElement QuotientRing::element_at(std::uint64_t index) const {
    const auto n = size();
    if (!n) raise(ErrorKind::UnsupportedField, to_string() + " cannot be enumerated");
    if (index >= *n) raise(ErrorKind::InvalidArgument, "element index out of range");
    return element(Poly::from_index(field(), index));
}

QuotientElement QuotientRing::random(std::mt19937_64& rng) const {
    return element(random_poly(field(), static_cast<int>(dimension()) - 1, rng));
}

std::string QuotientRing::to_string() const {
    std::string s = field().name() + "[x]/(" + impl_->p.to_string() + ")";
    if (impl_->n > 1) s += "^" + std::to_string(impl_->n);
    return s;
}

bool QuotientRing::operator==(const QuotientRing& rhs) const {
    return impl_ == rhs.impl_ || (impl_->n == rhs.impl_->n && impl_->p == rhs.impl_->p);
}

// --------------------------------------------------------------- elements

QuotientElement::QuotientElement(QuotientRing ring, const Poly& representative)
    : ring_(std::move(ring)), rep_(rem(representative, ring_.modulus())) {}

namespace {
void require_same_ring(const QuotientElement& a, const QuotientElement& b) {
    if (!(a.ring() == b.ring()))
        raise(ErrorKind::RingMismatch, "elements of " + a.ring().to_string() + " and " + b.ring().to_string());
}
}  // namespace

QuotientElement QuotientElement::operator+(const QuotientElement& rhs) const {
    require_same_ring(*this, rhs);
    return QuotientElement(ring_, rep_ + rhs.rep_);
}

QuotientElement QuotientElement::operator-(const QuotientElement& rhs) const {
    require_same_ring(*this, rhs);
    return QuotientElement(ring_, rep_ - rhs.rep_);
}

QuotientElement QuotientElement::operator*(const QuotientElement& rhs) const {
    require_same_ring(*this, rhs);
    return QuotientElement(ring_, rep_ * rhs.rep_);
}

QuotientElement QuotientElement::operator-() const { return QuotientElement(ring_, -rep_); }

QuotientElement QuotientElement::pow(unsigned exponent) const {
    return QuotientElement(ring_, powmod(rep_, exponent, ring_.modulus()));
}

bool is_unit(const QuotientElement& a) { return !rem(a.rep(), a.ring().base_poly()).is_zero(); }

QuotientElement invert(const QuotientElement& a) {
    if (!is_unit(a)) raise(ErrorKind::NotAUnit, a.to_string() + " lies in the maximal ideal of " + a.ring().to_string());
    const ExtGcd b = ext_gcd(a.rep(), a.ring().modulus());
    return QuotientElement(a.ring(), b.u);
}

QuotientElement project(const QuotientElement& a, int m) {
    if (m < 1 || m > a.ring().power())
        raise(ErrorKind::BadTarget, "cannot project " + a.ring().to_string() + " to power " + std::to_string(m));
    return QuotientElement(a.ring().at_power(m), a.rep());
}

// -------------------------------------------------------------- morphisms

StabilizingMorphism StabilizingMorphism::unchecked(const QuotientRing& source, const QuotientRing& target,
                                                   const FieldAutomorphism& sigma, const Poly& q) {
    if (!(source.field() == target.field()))
        raise(ErrorKind::DescriptorMismatch, source.field().name() + " vs " + target.field().name());
    if (!(q.field() == target.field())) raise(ErrorKind::DescriptorMismatch, "X-image not over " + target.field().name());
    sigma.validate(source.field());
    return StabilizingMorphism(source, target, sigma, rem(q, target.modulus()));
}

StabilizingMorphism StabilizingMorphism::make(const QuotientRing& source, const QuotientRing& target,
                                              const FieldAutomorphism& sigma, const Poly& q) {
    StabilizingMorphism f = unchecked(source, target, sigma, q);
    Poly residue = f.certificate_residue();
    if (!residue.is_zero())
        throw NotWellDefinedError("x -> " + f.q_image().to_string() + " does not send (" + source.modulus().to_string() +
                                      ") into (" + target.modulus().to_string() + "); residue " + residue.to_string(),
                                  std::move(residue));
    return f;
}

StabilizingMorphism StabilizingMorphism::identity(const QuotientRing& ring) {
    return StabilizingMorphism(ring, ring, FieldAutomorphism::identity(), rem(Poly::x(ring.field()), ring.modulus()));
}

StabilizingMorphism StabilizingMorphism::with_certificate(const Poly& s) const {
    StabilizingMorphism f = *this;
    f.s_cert_ = s;
    return f;
}

Poly StabilizingMorphism::certificate_residue() const {
    // sigma^X(P1^n) o q = (sigma^X(P1) o q)^n
    const Poly& m = target_.modulus();
    const Poly base = compose_mod(extend_automorphism(sigma_, source_.base_poly()), q_, m);
    return powmod(base, static_cast<std::uint64_t>(source_.power()), m);
}

QuotientElement StabilizingMorphism::operator()(const QuotientElement& a) const {
    if (!(a.ring() == source_))
        raise(ErrorKind::RingMismatch, "element of " + a.ring().to_string() + ", morphism from " + source_.to_string());
    return QuotientElement(target_, compose_mod(extend_automorphism(sigma_, a.rep()), q_, target_.modulus()));
}

bool StabilizingMorphism::operator==(const StabilizingMorphism& rhs) const {
    return source_ == rhs.source_ && target_ == rhs.target_ && q_ == rhs.q_ &&
           sigma_.normalized(source_.field()) == rhs.sigma_.normalized(source_.field());
}

StabilizingMorphism compose_morphisms(const StabilizingMorphism& g, const StabilizingMorphism& f) {
    if (!(f.target() == g.source()))
        raise(ErrorKind::RingMismatch, "cannot compose: " + f.target().to_string() + " vs " + g.source().to_string());
    const Poly q = compose_mod(extend_automorphism(g.sigma(), f.q_image()), g.q_image(), g.target().modulus());
    return StabilizingMorphism::make(f.source(), g.target(), compose(g.sigma(), f.sigma()), q);
}

}  // namespace locring
