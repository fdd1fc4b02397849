#include "locring/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "dense.hpp"
#include "format.hpp"

namespace locring {

namespace detail {

struct FieldData {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;
    std::string var;
    const FieldData* base = nullptr;
    std::vector<std::int64_t> min_fp;  // extension of F_p
    std::vector<mpq_class> min_q;      // extension of Q
    std::vector<Element> min_elements;
    int degree = 1;
    std::string name;
};

struct FpOps {
    using value_type = std::int64_t;
    std::int64_t p;

    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }
    bool is_zero(std::int64_t a) const { return a == 0; }
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p : s;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
    }
    std::int64_t inv(std::int64_t a) const {
        if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of 0 in F" + std::to_string(p));
        std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t t2 = t0 - static_cast<std::int64_t>((static_cast<__int128>(q) * t1) % p);
            t2 %= p;
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
        return t0 < 0 ? t0 + p : t0;
    }
    std::int64_t reduce(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
};

struct QOps {
    using value_type = mpq_class;

    mpq_class zero() const { return 0; }
    mpq_class one() const { return 1; }
    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
    mpq_class neg(const mpq_class& a) const { return -a; }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
    mpq_class inv(const mpq_class& a) const {
        if (sgn(a) == 0) raise(ErrorKind::DivisionByZero, "inverse of 0 in Q");
        return 1 / a;
    }
};

}  // namespace detail

using detail::FieldData;
using detail::FpFraction;
using detail::FpOps;
using detail::QOps;

namespace {

using FpVec = std::vector<std::int64_t>;
using QVec = std::vector<mpq_class>;

std::string format_fp(const FpVec& v, std::string_view var) {
    std::vector<std::optional<detail::CoeffText>> terms;
    for (auto c : v) {
        if (c == 0)
            terms.emplace_back();
        else
            terms.push_back(detail::CoeffText{false, std::to_string(c)});
    }
    return detail::format_terms(terms, var);
}

std::string format_q(const QVec& v, std::string_view var) {
    std::vector<std::optional<detail::CoeffText>> terms;
    for (const auto& c : v) {
        if (sgn(c) == 0)
            terms.emplace_back();
        else
            terms.push_back(detail::CoeffText{sgn(c) < 0, mpq_class(abs(c)).get_str()});
    }
    return detail::format_terms(terms, var);
}

class Registry {
   public:
    static Registry& instance() {
        static Registry registry;
        return registry;
    }

    const FieldData* intern(FieldData data) {
        std::lock_guard lock(mutex_);
        auto it = fields_.find(data.name);
        if (it != fields_.end()) return it->second.get();
        auto owned = std::make_unique<FieldData>(std::move(data));
        const FieldData* raw = owned.get();
        fields_.emplace(raw->name, std::move(owned));
        return raw;
    }

   private:
    std::mutex mutex_;
    std::map<std::string, std::unique_ptr<FieldData>> fields_;
};

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    mpz_class z(static_cast<long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

bool valid_symbol(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')) return false;
    return true;
}

FpFraction normalize_fraction(const FpOps& ops, FpVec num, FpVec den) {
    if (den.empty()) raise(ErrorKind::DivisionByZero, "zero denominator in F" + std::to_string(ops.p) + "(t)");
    if (num.empty()) return FpFraction{{}, {1}};
    if (den.size() > 1) {
        FpVec g = detail::gcd(ops, num, den);
        if (g.size() > 1) {
            num = detail::divmod(ops, num, g).first;
            den = detail::divmod(ops, den, g).first;
        }
    }
    const auto c = ops.inv(den.back());
    return FpFraction{detail::scale(ops, num, c), detail::scale(ops, den, c)};
}

FpVec random_fp_vec(const FpOps& ops, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, ops.p - 1);
    FpVec v(len);
    for (auto& c : v) c = dist(rng);
    detail::trim(ops, v);
    return v;
}

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::rationals() {
    FieldData d;
    d.kind = FieldKind::Rationals;
    d.name = "Q";
    return Field(Registry::instance().intern(std::move(d)));
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 62)) raise(ErrorKind::TooLarge, "prime exceeds 62 bits");
    FieldData d;
    d.kind = FieldKind::PrimeField;
    d.p = p;
    d.name = "F" + std::to_string(p);
    return Field(Registry::instance().intern(std::move(d)));
}

Field Field::rational_functions(std::int64_t p, const std::string& variable) {
    const Field base = prime(p);
    if (!valid_symbol(variable)) raise(ErrorKind::InvalidArgument, "bad variable name '" + variable + "'");
    FieldData d;
    d.kind = FieldKind::RationalFunctions;
    d.p = p;
    d.var = variable;
    d.base = base.data();
    d.name = "F" + std::to_string(p) + "(" + variable + ")";
    return Field(Registry::instance().intern(std::move(d)));
}

Field Field::extension(const Field& base, const std::vector<Element>& minimal_poly, const std::string& generator) {
    if (base.kind() != FieldKind::Rationals && base.kind() != FieldKind::PrimeField)
        raise(ErrorKind::UnsupportedField, "simple extensions are only built over Q or F_p, not " + base.name());
    if (!valid_symbol(generator)) raise(ErrorKind::InvalidArgument, "bad generator name '" + generator + "'");
    for (const auto& c : minimal_poly)
        if (!(c.field() == base)) raise(ErrorKind::DescriptorMismatch, "minimal polynomial not over " + base.name());

    FieldData d;
    d.var = generator;
    d.base = base.data();
    if (base.kind() == FieldKind::PrimeField) {
        const FpOps ops{base.prime()};
        FpVec m;
        for (const auto& c : minimal_poly) m.push_back(std::get<std::int64_t>(c.payload()));
        detail::trim(ops, m);
        if (m.size() < 3) raise(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 2");
        if (m.back() != 1) raise(ErrorKind::NotMonic, "minimal polynomial must be monic");
        if (!detail::ben_or_irreducible(ops, m, static_cast<unsigned long long>(ops.p)))
            raise(ErrorKind::NotIrreducible, format_fp(m, generator) + " is reducible over " + base.name());
        d.kind = FieldKind::SimpleExtension;
        d.p = base.prime();
        d.degree = static_cast<int>(m.size()) - 1;
        d.name = base.name() + "[" + generator + "]/(" + format_fp(m, generator) + ")";
        d.min_fp = std::move(m);
    } else {
        const QOps ops;
        QVec m;
        for (const auto& c : minimal_poly) m.push_back(std::get<mpq_class>(c.payload()));
        detail::trim(ops, m);
        if (m.size() < 3) raise(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 2");
        if (m.back() != 1) raise(ErrorKind::NotMonic, "minimal polynomial must be monic");
        // Irreducibility over Q is asserted by the caller; squarefreeness is checked.
        QVec dm;
        for (std::size_t i = 1; i < m.size(); ++i) dm.push_back(m[i] * static_cast<long>(i));
        if (detail::gcd(ops, m, dm).size() != 1)
            raise(ErrorKind::NotIrreducible, format_q(m, generator) + " has a repeated factor");
        d.kind = FieldKind::SimpleExtension;
        d.degree = static_cast<int>(m.size()) - 1;
        d.name = "Q[" + generator + "]/(" + format_q(m, generator) + ")";
        d.min_q = std::move(m);
    }
    d.min_elements = minimal_poly;
    while (!d.min_elements.empty() && d.min_elements.back().is_zero()) d.min_elements.pop_back();
    return Field(Registry::instance().intern(std::move(d)));
}

FieldKind Field::kind() const noexcept { return data_->kind; }
std::int64_t Field::characteristic() const noexcept { return data_->p; }

std::int64_t Field::prime() const {
    if (data_->p == 0) raise(ErrorKind::UnsupportedField, name() + " has characteristic 0");
    return data_->p;
}

bool Field::is_finite() const noexcept {
    return data_->kind == FieldKind::PrimeField || (data_->kind == FieldKind::SimpleExtension && data_->p != 0);
}

std::uint64_t Field::size() const {
    if (!is_finite()) raise(ErrorKind::UnsupportedField, name() + " is infinite");
    std::uint64_t q = 1;
    for (int i = 0; i < data_->degree; ++i) {
        if (q > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(data_->p))
            raise(ErrorKind::TooLarge, name() + " has too many elements to index");
        q *= static_cast<std::uint64_t>(data_->p);
    }
    return q;
}

int Field::degree_over_prime() const noexcept { return data_->degree; }

Field Field::base() const {
    if (data_->base == nullptr) raise(ErrorKind::UnsupportedField, name() + " has no base field");
    return Field(data_->base);
}

Field Field::prime_subfield() const {
    if (data_->p == 0) return rationals();
    return prime(data_->p);
}

const std::vector<Element>& Field::minimal_polynomial() const {
    if (data_->kind != FieldKind::SimpleExtension) raise(ErrorKind::UnsupportedField, name() + " is not an extension");
    return data_->min_elements;
}

const std::string& Field::variable() const noexcept { return data_->var; }
const std::string& Field::name() const noexcept { return data_->name; }

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }
Element Field::from_int(long long value) const { return from_integer(mpz_class(static_cast<long>(value))); }

Element Field::from_integer(const mpz_class& value) const {
    switch (data_->kind) {
        case FieldKind::Rationals: return Element(*this, mpq_class(value));
        case FieldKind::PrimeField: {
            mpz_class r = value % data_->p;
            if (r < 0) r += data_->p;
            return Element(*this, static_cast<std::int64_t>(r.get_si()));
        }
        case FieldKind::RationalFunctions: {
            mpz_class r = value % data_->p;
            if (r < 0) r += data_->p;
            FpVec num;
            if (r != 0) num.push_back(r.get_si());
            return Element(*this, FpFraction{num, {1}});
        }
        case FieldKind::SimpleExtension: return embed(Field(data_->base).from_integer(value));
    }
    raise(ErrorKind::UnsupportedField, "unknown field kind");
}

Element Field::from_rational(const mpq_class& value) const {
    if (data_->kind == FieldKind::Rationals) return Element(*this, value);
    if (data_->kind == FieldKind::SimpleExtension && data_->p == 0) return embed(Field(data_->base).from_rational(value));
    return from_integer(value.get_num()) / from_integer(value.get_den());
}

Element Field::generator() const {
    switch (data_->kind) {
        case FieldKind::RationalFunctions: return Element(*this, FpFraction{{0, 1}, {1}});
        case FieldKind::SimpleExtension:
            if (data_->p != 0) return Element(*this, FpVec{0, 1});
            return Element(*this, QVec{mpq_class(0), mpq_class(1)});
        default: raise(ErrorKind::UnsupportedField, name() + " has no generator");
    }
}

Element Field::embed(const Element& base_element) const {
    if (base_element.field() == *this) return base_element;
    if (data_->base == nullptr || !(base_element.field() == Field(data_->base)))
        raise(ErrorKind::DescriptorMismatch, base_element.field().name() + " does not embed in " + name());
    if (data_->kind == FieldKind::RationalFunctions) {
        const auto r = std::get<std::int64_t>(base_element.payload());
        return Element(*this, FpFraction{r == 0 ? FpVec{} : FpVec{r}, {1}});
    }
    if (data_->p != 0) {
        const auto r = std::get<std::int64_t>(base_element.payload());
        return Element(*this, r == 0 ? FpVec{} : FpVec{r});
    }
    const auto& r = std::get<mpq_class>(base_element.payload());
    return Element(*this, sgn(r) == 0 ? QVec{} : QVec{r});
}

Element Field::element_at(std::uint64_t index) const {
    const std::uint64_t q = size();
    if (index >= q) raise(ErrorKind::InvalidArgument, "element index out of range for " + name());
    const auto p = static_cast<std::uint64_t>(data_->p);
    if (data_->kind == FieldKind::PrimeField) return Element(*this, static_cast<std::int64_t>(index));
    FpVec v;
    while (index > 0) {
        v.push_back(static_cast<std::int64_t>(index % p));
        index /= p;
    }
    return Element(*this, std::move(v));
}

Element Field::random(std::mt19937_64& rng) const {
    switch (data_->kind) {
        case FieldKind::Rationals: return Element(*this, random_rational(rng));
        case FieldKind::PrimeField: {
            std::uniform_int_distribution<std::int64_t> dist(0, data_->p - 1);
            return Element(*this, dist(rng));
        }
        case FieldKind::RationalFunctions: {
            const FpOps ops{data_->p};
            FpVec num = random_fp_vec(ops, 3, rng);
            FpVec den = random_fp_vec(ops, 3, rng);
            if (den.empty()) den = {1};
            return Element(*this, normalize_fraction(ops, std::move(num), std::move(den)));
        }
        case FieldKind::SimpleExtension: {
            if (data_->p != 0) return Element(*this, random_fp_vec(FpOps{data_->p}, data_->degree, rng));
            QVec v;
            for (int i = 0; i < data_->degree; ++i) v.push_back(random_rational(rng));
            return Element(*this, std::move(v));
        }
    }
    raise(ErrorKind::UnsupportedField, "unknown field kind");
}

// ---------------------------------------------------------------- Element

Element::Element(const Field& field, Payload payload) : field_(field.data()), payload_(std::move(payload)) {
    const FieldData& d = *field_;
    auto mismatch = [&] { raise(ErrorKind::DescriptorMismatch, "payload does not belong to " + d.name); };
    switch (d.kind) {
        case FieldKind::Rationals: {
            auto* q = std::get_if<mpq_class>(&payload_);
            if (q == nullptr) mismatch();
            if (sgn(q->get_den()) == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
            q->canonicalize();
            break;
        }
        case FieldKind::PrimeField: {
            auto* r = std::get_if<std::int64_t>(&payload_);
            if (r == nullptr) mismatch();
            *r = FpOps{d.p}.reduce(*r);
            break;
        }
        case FieldKind::RationalFunctions: {
            auto* f = std::get_if<FpFraction>(&payload_);
            if (f == nullptr) mismatch();
            const FpOps ops{d.p};
            for (auto& c : f->num) c = ops.reduce(c);
            for (auto& c : f->den) c = ops.reduce(c);
            detail::trim(ops, f->num);
            detail::trim(ops, f->den);
            *f = normalize_fraction(ops, std::move(f->num), std::move(f->den));
            break;
        }
        case FieldKind::SimpleExtension: {
            if (d.p != 0) {
                auto* v = std::get_if<FpVec>(&payload_);
                if (v == nullptr) mismatch();
                const FpOps ops{d.p};
                for (auto& c : *v) c = ops.reduce(c);
                detail::trim(ops, *v);
                *v = detail::rem(ops, *v, d.min_fp);
            } else {
                auto* v = std::get_if<QVec>(&payload_);
                if (v == nullptr) mismatch();
                const QOps ops;
                for (auto& c : *v) c.canonicalize();
                detail::trim(ops, *v);
                *v = detail::rem(ops, *v, d.min_q);
            }
            break;
        }
    }
}

namespace {

enum class Op { Add, Sub, Mul, Div };

template <class Ops>
std::vector<typename Ops::value_type> ext_inverse(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                                  const std::vector<typename Ops::value_type>& m,
                                                  const std::string& name) {
    if (a.empty()) raise(ErrorKind::DivisionByZero, "division by zero in " + name);
    auto [g, u, v] = detail::ext_gcd(ops, a, m);
    if (g.size() != 1) raise(ErrorKind::NotIrreducible, "minimal polynomial of " + name + " has a nontrivial factor");
    return u;
}

template <class Ops>
std::vector<typename Ops::value_type> ext_binary(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                                                 const std::vector<typename Ops::value_type>& b,
                                                 const std::vector<typename Ops::value_type>& m, Op op,
                                                 const std::string& name) {
    switch (op) {
        case Op::Add: return detail::add(ops, a, b);
        case Op::Sub: return detail::sub(ops, a, b);
        case Op::Mul: return detail::mulmod(ops, a, b, m);
        case Op::Div: return detail::mulmod(ops, a, ext_inverse(ops, b, m, name), m);
    }
    return {};
}

}  // namespace

static Element binary(const Element& a, const Element& b, Op op) {
    if (!(a.field() == b.field()))
        raise(ErrorKind::DescriptorMismatch, a.field().name() + " vs " + b.field().name());
    const FieldData& d = *a.field().data();
    const Field f = a.field();
    switch (d.kind) {
        case FieldKind::Rationals: {
            const auto& x = std::get<mpq_class>(a.payload());
            const auto& y = std::get<mpq_class>(b.payload());
            switch (op) {
                case Op::Add: return Element(f, mpq_class(x + y));
                case Op::Sub: return Element(f, mpq_class(x - y));
                case Op::Mul: return Element(f, mpq_class(x * y));
                case Op::Div:
                    if (sgn(y) == 0) raise(ErrorKind::DivisionByZero, "division by zero in Q");
                    return Element(f, mpq_class(x / y));
            }
            break;
        }
        case FieldKind::PrimeField: {
            const FpOps ops{d.p};
            const auto x = std::get<std::int64_t>(a.payload());
            const auto y = std::get<std::int64_t>(b.payload());
            switch (op) {
                case Op::Add: return Element(f, ops.add(x, y), detail::Canonical{});
                case Op::Sub: return Element(f, ops.sub(x, y), detail::Canonical{});
                case Op::Mul: return Element(f, ops.mul(x, y), detail::Canonical{});
                case Op::Div: return Element(f, ops.mul(x, ops.inv(y)), detail::Canonical{});
            }
            break;
        }
        case FieldKind::RationalFunctions: {
            const FpOps ops{d.p};
            const auto& x = std::get<FpFraction>(a.payload());
            const auto& y = std::get<FpFraction>(b.payload());
            using detail::mul;
            switch (op) {
                case Op::Add:
                case Op::Sub: {
                    FpVec l = mul(ops, x.num, y.den);
                    FpVec r = mul(ops, y.num, x.den);
                    FpVec num = op == Op::Add ? detail::add(ops, l, r) : detail::sub(ops, l, r);
                    return Element(f, normalize_fraction(ops, std::move(num), mul(ops, x.den, y.den)), detail::Canonical{});
                }
                case Op::Mul:
                    return Element(f, normalize_fraction(ops, mul(ops, x.num, y.num), mul(ops, x.den, y.den)), detail::Canonical{});
                case Op::Div:
                    if (y.num.empty()) raise(ErrorKind::DivisionByZero, "division by zero in " + d.name);
                    return Element(f, normalize_fraction(ops, mul(ops, x.num, y.den), mul(ops, x.den, y.num)), detail::Canonical{});
            }
            break;
        }
        case FieldKind::SimpleExtension:
            if (d.p != 0)
                return Element(f, ext_binary(FpOps{d.p}, std::get<FpVec>(a.payload()), std::get<FpVec>(b.payload()),
                                             d.min_fp, op, d.name));
            return Element(f, ext_binary(QOps{}, std::get<QVec>(a.payload()), std::get<QVec>(b.payload()), d.min_q,
                                         op, d.name));
    }
    raise(ErrorKind::UnsupportedField, "unknown field kind");
}

Element Element::operator+(const Element& rhs) const { return binary(*this, rhs, Op::Add); }
Element Element::operator-(const Element& rhs) const { return binary(*this, rhs, Op::Sub); }
Element Element::operator*(const Element& rhs) const { return binary(*this, rhs, Op::Mul); }
Element Element::operator/(const Element& rhs) const { return binary(*this, rhs, Op::Div); }
Element Element::operator-() const { return field().zero() - *this; }

bool Element::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>)
                return v == 0;
            else if constexpr (std::is_same_v<T, mpq_class>)
                return sgn(v) == 0;
            else if constexpr (std::is_same_v<T, FpFraction>)
                return v.num.empty();
            else
                return v.empty();
        },
        payload_);
}

bool Element::is_one() const { return *this == field().one(); }

Element Element::inverse() const { return field().one() / *this; }

Element Element::pow(std::uint64_t exponent) const {
    Element result = field().one();
    Element base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

int Element::sign() const {
    if (const auto* q = std::get_if<mpq_class>(&payload_)) return sgn(*q);
    return is_zero() ? 0 : 1;
}

std::uint64_t Element::index() const {
    const FieldData& d = *field_;
    if (!field().is_finite()) raise(ErrorKind::UnsupportedField, d.name + " is infinite");
    if (d.kind == FieldKind::PrimeField) return static_cast<std::uint64_t>(std::get<std::int64_t>(payload_));
    const auto& v = std::get<FpVec>(payload_);
    std::uint64_t index = 0;
    for (std::size_t i = v.size(); i-- > 0;) index = index * static_cast<std::uint64_t>(d.p) + v[i];
    return index;
}

std::vector<Element> Element::prime_coordinates() const {
    const FieldData& d = *field_;
    if (!field().is_finite()) raise(ErrorKind::UnsupportedField, d.name + " is infinite");
    if (d.kind == FieldKind::PrimeField) return {*this};
    const Field fp = Field::prime(d.p);
    const auto& v = std::get<FpVec>(payload_);
    std::vector<Element> out;
    for (int i = 0; i < d.degree; ++i)
        out.emplace_back(fp, static_cast<std::size_t>(i) < v.size() ? v[i] : std::int64_t{0});
    return out;
}

std::string Element::to_string() const {
    const FieldData& d = *field_;
    switch (d.kind) {
        case FieldKind::Rationals: return std::get<mpq_class>(payload_).get_str();
        case FieldKind::PrimeField: return std::to_string(std::get<std::int64_t>(payload_));
        case FieldKind::RationalFunctions: {
            const auto& f = std::get<FpFraction>(payload_);
            std::string num = format_fp(f.num, d.var);
            if (f.den == FpVec{1}) return num;
            std::string den = format_fp(f.den, d.var);
            if (detail::has_sum(num)) num = "(" + num + ")";
            if (!detail::is_plain_atom(den)) den = "(" + den + ")";
            return num + "/" + den;
        }
        case FieldKind::SimpleExtension:
            if (d.p != 0) return format_fp(std::get<FpVec>(payload_), d.var);
            return format_q(std::get<QVec>(payload_), d.var);
    }
    return "?";
}

// ------------------------------------------------------- automorphisms

FieldAutomorphism FieldAutomorphism::frobenius(int exponent) {
    if (exponent < 1) raise(ErrorKind::InvalidArgument, "Frobenius exponent must be >= 1");
    return FieldAutomorphism(exponent);
}

FieldAutomorphism FieldAutomorphism::parse(std::string_view text) {
    if (text == "id" || text == "identity") return identity();
    if (text == "frob") return frobenius(1);
    if (text.substr(0, 5) == "frob^" && text.size() > 5) {
        int e = 0;
        for (char c : text.substr(5)) {
            if (c < '0' || c > '9' || e > 1000000) raise(ErrorKind::ParseError, "bad automorphism '" + std::string(text) + "'");
            e = e * 10 + (c - '0');
        }
        return e == 0 ? identity() : frobenius(e);
    }
    raise(ErrorKind::ParseError, "bad automorphism '" + std::string(text) + "' (expected id or frob^e)");
}

void FieldAutomorphism::validate(const Field& field) const {
    if (!is_identity() && !field.is_finite())
        raise(ErrorKind::UnsupportedAutomorphism, to_string() + " is not an automorphism of " + field.name());
}

bool FieldAutomorphism::acts_trivially_on(const Field& field) const {
    validate(field);
    return is_identity() || exponent_ % field.degree_over_prime() == 0;
}

FieldAutomorphism FieldAutomorphism::normalized(const Field& field) const {
    validate(field);
    if (is_identity()) return *this;
    const int e = exponent_ % field.degree_over_prime();
    return e == 0 ? identity() : frobenius(e);
}

std::string FieldAutomorphism::to_string() const {
    return is_identity() ? "id" : "frob^" + std::to_string(exponent_);
}

FieldAutomorphism compose(const FieldAutomorphism& g, const FieldAutomorphism& f) {
    const int e = g.exponent() + f.exponent();
    return e == 0 ? FieldAutomorphism::identity() : FieldAutomorphism::frobenius(e);
}

Element apply_automorphism(const FieldAutomorphism& sigma, const Element& a) {
    const Field f = a.field();
    sigma.validate(f);
    if (sigma.acts_trivially_on(f)) return a;
    const int e = sigma.normalized(f).exponent();
    const auto p = static_cast<std::uint64_t>(f.prime());
    Element r = a;
    for (int i = 0; i < e; ++i) r = r.pow(p);
    return r;
}

}  // namespace locring
