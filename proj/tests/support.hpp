#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "locring/parse.hpp"

namespace test {

inline locring::Field F(const std::string& descriptor) { return locring::parse_field(descriptor); }
inline locring::Poly P(const locring::Field& k, const std::string& text) { return locring::parse_poly(k, text); }
inline locring::Poly P(const std::string& field, const std::string& text) { return P(F(field), text); }
inline locring::Element E(const locring::Field& k, const std::string& text) { return locring::parse_element(k, text); }

/// Runs `body` and checks it throws a locring::Error of the given kind.
template <class Body>
::testing::AssertionResult throws_kind(locring::ErrorKind kind, Body&& body) {
    try {
        body();
    } catch (const locring::Error& e) {
        if (e.kind() == kind) return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << "threw " << e.what();
    }
    return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace test

namespace locring {
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Element& e, std::ostream* os) { *os << e.to_string(); }
}  // namespace locring

#define EXPECT_KIND(kind, stmt) EXPECT_TRUE(::test::throws_kind(::locring::ErrorKind::kind, [&] { (void)(stmt); }))
