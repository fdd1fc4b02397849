#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locring::detail {

/// One coefficient as printed: an optional leading minus and the magnitude.
struct CoeffText {
    bool negative = false;
    std::string magnitude;
};

inline bool is_plain_atom(std::string_view s) {
    if (s.empty()) return false;
    bool digits = true;
    for (char c : s) digits = digits && c >= '0' && c <= '9';
    if (digits) return true;
    // identifier, optionally raised to a literal power
    std::size_t i = 0;
    while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') || s[i] == '_')) ++i;
    if (i == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '^' || i + 1 == s.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    return true;
}

inline bool has_sum(std::string_view s) { return s.find_first_of("+-") != std::string_view::npos; }

/// Canonical text of a univariate polynomial, highest degree first, e.g.
/// "x^3+x+1", "-(1/4)*x^3+(3/2)*x". Zero coefficients are nullopt.
inline std::string format_terms(const std::vector<std::optional<CoeffText>>& ascending, std::string_view var) {
    std::string out;
    for (std::size_t k = ascending.size(); k-- > 0;) {
        if (!ascending[k]) continue;
        const CoeffText& c = *ascending[k];
        if (out.empty()) {
            if (c.negative) out += '-';
        } else {
            out += c.negative ? '-' : '+';
        }
        if (k == 0) {
            out += has_sum(c.magnitude) ? "(" + c.magnitude + ")" : c.magnitude;
            continue;
        }
        if (c.magnitude != "1") {
            out += is_plain_atom(c.magnitude) ? c.magnitude : "(" + c.magnitude + ")";
            out += '*';
        }
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace locring::detail
