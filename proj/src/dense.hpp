#pragma once

// Dense univariate arithmetic on ascending coefficient vectors, shared by the
// field payloads (F_p(t), simple extensions) and by Poly. An Ops policy
// supplies the coefficient ring: value_type, zero(), one(), is_zero, add,
// sub, mul, neg and inv (inv throws on zero).

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

namespace locring::detail {

template <class Ops>
using Vec = std::vector<typename Ops::value_type>;

template <class Ops>
void trim(const Ops& ops, Vec<Ops>& v) {
    while (!v.empty() && ops.is_zero(v.back())) v.pop_back();
}

template <class Ops>
Vec<Ops> add(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    const Vec<Ops>& longer = a.size() >= b.size() ? a : b;
    const Vec<Ops>& shorter = a.size() >= b.size() ? b : a;
    Vec<Ops> r = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = ops.add(r[i], shorter[i]);
    trim(ops, r);
    return r;
}

template <class Ops>
Vec<Ops> neg(const Ops& ops, const Vec<Ops>& a) {
    Vec<Ops> r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(ops.neg(c));
    return r;
}

template <class Ops>
Vec<Ops> sub(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    Vec<Ops> r = a;
    if (r.size() < b.size()) r.resize(b.size(), ops.zero());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.sub(r[i], b[i]);
    trim(ops, r);
    return r;
}

template <class Ops>
Vec<Ops> scale(const Ops& ops, const Vec<Ops>& a, const typename Ops::value_type& c) {
    if (ops.is_zero(c)) return {};
    Vec<Ops> r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(ops.mul(x, c));
    trim(ops, r);
    return r;
}

template <class Ops>
Vec<Ops> mul(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    Vec<Ops> r(a.size() + b.size() - 1, ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ops.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
    trim(ops, r);
    return r;
}

/// Requires b nonzero and trimmed.
template <class Ops>
std::pair<Vec<Ops>, Vec<Ops>> divmod(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    if (a.size() < b.size()) return {Vec<Ops>{}, a};
    const std::size_t db = b.size() - 1;
    const auto lead_inv = ops.inv(b.back());
    Vec<Ops> r = a;
    Vec<Ops> q(a.size() - db, ops.zero());
    for (std::size_t i = r.size(); i-- > db;) {
        if (ops.is_zero(r[i])) continue;
        auto c = ops.mul(r[i], lead_inv);
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = ops.sub(r[i - db + j], ops.mul(c, b[j]));
        q[i - db] = std::move(c);
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
    trim(ops, r);
    trim(ops, q);
    return {std::move(q), std::move(r)};
}

template <class Ops>
Vec<Ops> rem(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    if (a.size() < b.size()) return a;
    return divmod(ops, a, b).second;
}

/// Returns (g, u, v) with g = u a + v b and g monic (g = 0 when a = b = 0).
template <class Ops>
std::tuple<Vec<Ops>, Vec<Ops>, Vec<Ops>> ext_gcd(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b) {
    Vec<Ops> r0 = a, r1 = b;
    Vec<Ops> s0{ops.one()}, s1{};
    Vec<Ops> t0{}, t1{ops.one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(ops, r0, r1);
        Vec<Ops> s2 = sub(ops, s0, mul(ops, q, s1));
        Vec<Ops> t2 = sub(ops, t0, mul(ops, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {Vec<Ops>{}, Vec<Ops>{}, Vec<Ops>{}};
    const auto c = ops.inv(r0.back());
    return {scale(ops, r0, c), scale(ops, s0, c), scale(ops, t0, c)};
}

template <class Ops>
Vec<Ops> gcd(const Ops& ops, Vec<Ops> a, Vec<Ops> b) {
    while (!b.empty()) {
        Vec<Ops> r = rem(ops, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(ops, a, ops.inv(a.back()));
}

template <class Ops>
Vec<Ops> monic(const Ops& ops, const Vec<Ops>& a) {
    if (a.empty()) return a;
    return scale(ops, a, ops.inv(a.back()));
}

template <class Ops>
Vec<Ops> mulmod(const Ops& ops, const Vec<Ops>& a, const Vec<Ops>& b, const Vec<Ops>& m) {
    return rem(ops, mul(ops, a, b), m);
}

template <class Ops>
Vec<Ops> powmod(const Ops& ops, Vec<Ops> base, unsigned long long exponent, const Vec<Ops>& m) {
    Vec<Ops> result = rem(ops, Vec<Ops>{ops.one()}, m);
    base = rem(ops, base, m);
    while (exponent > 0) {
        if (exponent & 1ULL) result = mulmod(ops, result, base, m);
        exponent >>= 1;
        if (exponent > 0) base = mulmod(ops, base, base, m);
    }
    return result;
}

/// Ben-Or: f of degree d >= 1 over F_q is irreducible iff
/// gcd(f, X^(q^i) - X) = 1 for every 1 <= i <= d/2.
template <class Ops>
bool ben_or_irreducible(const Ops& ops, const Vec<Ops>& f, unsigned long long q) {
    const std::size_t d = f.size() - 1;
    const Vec<Ops> x{ops.zero(), ops.one()};
    Vec<Ops> h = rem(ops, x, f);
    for (std::size_t i = 1; 2 * i <= d; ++i) {
        h = powmod(ops, h, q, f);
        const Vec<Ops> g = gcd(ops, f, sub(ops, h, x));
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace locring::detail
