#include "locring/hensel.hpp"

namespace locring {

Poly taylor_shift_certificate(const Poly& p, const Poly& q) {
    if (q.is_zero()) return Poly(p.field());
    const Poly shifted = compose(p, Poly::x(p.field()) + q);
    return exact_div(shifted - p - derivative(p) * q, q * q);
}

bool RootSeries::certificate_holds() const {
    return (compose(p, u) - cofactor * pow(p, static_cast<unsigned>(k))).is_zero();
}

namespace {

Poly inverse_derivative_mod(const Poly& p) {
    const Poly d = derivative(p);
    if (d.is_zero()) raise(ErrorKind::NotSeparable, "derivative of " + p.to_string() + " over " + p.field().name() + " is 0");
    const ExtGcd b = ext_gcd(d, p);
    if (!(b.g == Poly::constant(p.field().one())))
        raise(ErrorKind::NotIrreducible, p.to_string() + " shares the factor " + b.g.to_string() + " with its derivative");
    return rem(b.u, p);
}

}  // namespace

RootSeries hensel_root_series(const Poly& p, int k) {
    if (k < 1) raise(ErrorKind::InvalidArgument, "precision k must be >= 1");
    QuotientRing::make(p, 1);
    const Poly inv = inverse_derivative_mod(p);

    RootSeries s{p, k, {}, Poly::x(p.field()), Poly::constant(p.field().one())};
    Poly p_power = p;  // P^j with P(U) = cofactor * P^j
    for (int j = 1; j < k; ++j) {
        Poly correction = rem(-(s.cofactor * inv), p);
        s.u = s.u + correction * p_power;
        s.corrections.push_back(std::move(correction));
        p_power = p_power * p;
        s.cofactor = exact_div(compose(p, s.u), p_power);
    }
    return s;
}

StabilizingMorphism embed_residue_field(const Poly& p, int k) {
    const RootSeries s = hensel_root_series(p, k);
    const QuotientRing residue = QuotientRing::make(p, 1);
    return StabilizingMorphism::make(residue, residue.at_power(k), FieldAutomorphism::identity(), s.u);
}

// ---------------------------------------------------------------- digits

DigitMap::DigitMap(const Poly& p, int k)
    : ring_(QuotientRing::make(p, k)),
      residue_(ring_.residue_field()),
      embedding_(embed_residue_field(p, k)),
      p_class_(ring_.element(p)) {}

ResidueDigits DigitMap::to_digits(const QuotientElement& a) const {
    if (!(a.ring() == ring_)) raise(ErrorKind::RingMismatch, "element of " + a.ring().to_string() + ", expected " + ring_.to_string());
    const int k = ring_.power();
    ResidueDigits out{ring_, {}};
    out.digits.reserve(static_cast<std::size_t>(k));
    Poly r = a.rep();
    for (int j = 0; j < k; ++j) {
        QuotientElement digit = residue_.element(r);
        if (j + 1 < k) {
            const QuotientElement rest = ring_.element(r) - embedding_(digit);
            r = exact_div(rest.rep(), ring_.base_poly());
        }
        out.digits.push_back(std::move(digit));
    }
    return out;
}

QuotientElement DigitMap::from_digits(const std::vector<QuotientElement>& digits) const {
    if (digits.size() != static_cast<std::size_t>(ring_.power()))
        raise(ErrorKind::InvalidArgument, "expected " + std::to_string(ring_.power()) + " digits, got " + std::to_string(digits.size()));
    QuotientElement sum = ring_.zero();
    QuotientElement p_power = ring_.one();
    for (const auto& d : digits) {
        sum = sum + embedding_(d) * p_power;
        p_power = p_power * p_class_;
    }
    return sum;
}

QuotientElement DigitMap::from_digits(const ResidueDigits& d) const {
    if (!(d.ring == ring_)) raise(ErrorKind::RingMismatch, "digits of " + d.ring.to_string() + ", expected " + ring_.to_string());
    return from_digits(d.digits);
}

ResidueDigits to_digits(const QuotientElement& a) { return DigitMap(a.ring()).to_digits(a); }

QuotientElement from_digits(const ResidueDigits& d) { return DigitMap(d.ring).from_digits(d); }

std::vector<QuotientElement> digit_product(const std::vector<QuotientElement>& a, const std::vector<QuotientElement>& b) {
    if (a.size() != b.size() || a.empty()) raise(ErrorKind::InvalidArgument, "digit vectors of different lengths");
    std::vector<QuotientElement> c(a.size(), a.front().ring().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

namespace {

std::string digits_text(const std::vector<QuotientElement>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i].to_string();
    return s + "]";
}

}  // namespace

StructureCheck structure_isomorphism_check(const Poly& p, int k, std::size_t samples, std::size_t pair_samples,
                                           std::uint64_t seed) {
    const DigitMap map(p, k);
    const QuotientRing& ring = map.ring();
    const QuotientRing& residue = map.residue_field();
    StructureCheck report;
    std::mt19937_64 rng(seed);

    auto fail = [&](std::string what) {
        if (report.passed) report.counterexample = std::move(what);
        report.passed = false;
    };

    std::vector<QuotientElement> pool;
    const auto size = ring.size();
    constexpr std::uint64_t exhaustive_limit = 729;  // 3^6
    report.exhaustive = size && *size <= exhaustive_limit;
    if (report.exhaustive) {
        const std::uint64_t q = residue.size().value();
        for (std::uint64_t i = 0; i < *size; ++i) {
            pool.push_back(ring.element_at(i));
            // the digit vector with the same index, base |K[X]/(P)|
            std::vector<QuotientElement> d;
            std::uint64_t idx = i;
            for (int j = 0; j < k; ++j) {
                d.push_back(residue.element_at(idx % q));
                idx /= q;
            }
            if (map.to_digits(map.from_digits(d)).digits != d) fail("to_digits(from_digits(" + digits_text(d) + ")) differs");
        }
    } else {
        for (std::size_t i = 0; i < samples; ++i) pool.push_back(ring.random(rng));
    }

    for (const auto& a : pool) {
        const ResidueDigits d = map.to_digits(a);
        if (!(map.from_digits(d) == a)) fail("from_digits(to_digits(" + a.to_string() + ")) differs");
    }
    report.elements_checked = pool.size();

    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < pair_samples; ++i) {
        const QuotientElement& a = pool[pick(rng)];
        const QuotientElement& b = pool[pick(rng)];
        const auto da = map.to_digits(a).digits;
        const auto db = map.to_digits(b).digits;
        if (map.to_digits(a * b).digits != digit_product(da, db))
            fail("product of " + a.to_string() + " and " + b.to_string() + " not preserved");
        std::vector<QuotientElement> dsum;
        for (std::size_t j = 0; j < da.size(); ++j) dsum.push_back(da[j] + db[j]);
        if (map.to_digits(a + b).digits != dsum) fail("sum of " + a.to_string() + " and " + b.to_string() + " not preserved");
    }
    report.pairs_checked = pair_samples;
    return report;
}

}  // namespace locring
