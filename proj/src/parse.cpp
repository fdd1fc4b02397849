#include "locring/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace locring {

namespace {

struct Token {
    enum class Kind { Number, Ident, Symbol, End } kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void parse_fail(std::string_view source, std::size_t pos, const std::string& what) {
    raise(ErrorKind::ParseError, what + " at column " + std::to_string(pos + 1) + " in '" + std::string(source) + "'");
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), i});
            ++i;
        } else {
            parse_fail(s, i, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

/// Recursive descent over + - * / ^ with unary minus and implicit
/// multiplication before identifiers and parentheses.
template <class Algebra>
class ExprParser {
   public:
    using Value = typename Algebra::Value;

    ExprParser(std::string_view source, const Algebra& algebra)
        : source_(source), tokens_(tokenize(source)), algebra_(algebra) {}

    Value parse() {
        if (peek().kind == Token::Kind::End) parse_fail(source_, 0, "empty expression");
        Value v = expr();
        if (peek().kind != Token::Kind::End) parse_fail(source_, peek().pos, "unexpected token '" + peek().text + "'");
        return v;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at_symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
    std::size_t end_of_previous() const {
        const Token& t = tokens_[pos_ - 1];
        return t.pos + t.text.size();
    }

    Value expr() {
        Value v = term();
        while (at_symbol('+') || at_symbol('-')) {
            const bool plus = at_symbol('+');
            ++pos_;
            Value rhs = term();
            v = plus ? algebra_.add(v, rhs) : algebra_.sub(v, rhs);
        }
        return v;
    }

    Value term() {
        const std::size_t start = peek().pos;
        Value v = unary();
        for (;;) {
            if (at_symbol('*')) {
                ++pos_;
                Value rhs = unary();
                v = algebra_.mul(v, rhs);
            } else if (at_symbol('/')) {
                ++pos_;
                Value rhs = unary();
                const std::string span(source_.substr(start, end_of_previous() - start));
                try {
                    v = algebra_.div(v, rhs);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::ParseError) throw;
                    parse_fail(source_, start, "invalid expression '" + span + "' (" + e.what() + ")");
                }
            } else if (peek().kind == Token::Kind::Ident || at_symbol('(')) {
                Value rhs = power();
                v = algebra_.mul(v, rhs);
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (at_symbol('-')) {
            ++pos_;
            return algebra_.neg(unary());
        }
        if (at_symbol('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (!at_symbol('^')) return base;
        ++pos_;
        const Token& t = peek();
        if (t.kind != Token::Kind::Number || t.text.size() > 6)
            parse_fail(source_, t.pos, "expected a small non-negative integer exponent, got '" + t.text + "'");
        ++pos_;
        return algebra_.pow(base, static_cast<unsigned>(std::stoul(t.text)));
    }

    Value atom() {
        const Token t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                ++pos_;
                return algebra_.integer(mpz_class(t.text));
            case Token::Kind::Ident: {
                ++pos_;
                auto v = algebra_.identifier(t.text);
                if (!v) parse_fail(source_, t.pos, "unknown symbol '" + t.text + "'");
                return *v;
            }
            case Token::Kind::Symbol: {
                if (t.text != "(") break;
                ++pos_;
                Value v = expr();
                if (!at_symbol(')')) parse_fail(source_, peek().pos, "expected ')' but found '" + peek().text + "'");
                ++pos_;
                return v;
            }
            case Token::Kind::End: parse_fail(source_, t.pos, "unexpected end of input");
        }
        parse_fail(source_, t.pos, "unexpected token '" + t.text + "'");
    }

    std::string_view source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Algebra& algebra_;
};

struct ElementAlgebra {
    using Value = Element;
    Field field;

    Element integer(const mpz_class& n) const { return field.from_integer(n); }
    std::optional<Element> identifier(const std::string& name) const {
        if (!field.variable().empty() && name == field.variable()) return field.generator();
        return std::nullopt;
    }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element div(const Element& a, const Element& b) const { return a / b; }
    Element neg(const Element& a) const { return -a; }
    Element pow(const Element& a, unsigned e) const { return a.pow(e); }
};

struct PolyAlgebra {
    using Value = Poly;
    Field field;
    std::string variable;

    Poly integer(const mpz_class& n) const { return Poly::constant(field.from_integer(n)); }
    std::optional<Poly> identifier(const std::string& name) const {
        if (name == variable) return Poly::x(field);
        if (!field.variable().empty() && name == field.variable()) return Poly::constant(field.generator());
        return std::nullopt;
    }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly div(const Poly& a, const Poly& b) const {
        if (!b.is_constant()) raise(ErrorKind::InvalidArgument, "division by a non-constant polynomial");
        if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero in " + field.name());
        return a * b.leading().inverse();
    }
    Poly neg(const Poly& a) const { return -a; }
    Poly pow(const Poly& a, unsigned e) const { return locring::pow(a, e); }
};

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::int64_t parse_prime(std::string_view whole, std::string_view digits) {
    if (digits.empty() || digits.size() > 18) raise(ErrorKind::ParseError, "bad field descriptor '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            raise(ErrorKind::ParseError, "bad field descriptor '" + std::string(whole) + "'");
    return std::stoll(std::string(digits));
}

Field parse_extension(std::string_view whole, const Field& base, std::string_view rest) {
    // rest = "[a]/(poly)"
    const auto close = rest.find("]/(");
    if (rest.empty() || rest.front() != '[' || close == std::string_view::npos || rest.back() != ')')
        raise(ErrorKind::ParseError, "bad extension descriptor '" + std::string(whole) + "' (expected F<p>[a]/(poly))");
    const std::string generator(rest.substr(1, close - 1));
    const std::string_view modulus = rest.substr(close + 3, rest.size() - close - 4);
    const Poly m = parse_poly(base, modulus, generator);
    return Field::extension(base, m.coefficients(), generator);
}

}  // namespace

Field parse_field(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s == "Q") return Field::rationals();
    if (s.rfind("Q[", 0) == 0) return parse_extension(text, Field::rationals(), std::string_view(s).substr(1));
    if (s.size() < 2 || s[0] != 'F') raise(ErrorKind::ParseError, "bad field descriptor '" + std::string(text) + "'");
    std::size_t end = 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    const std::int64_t p = parse_prime(text, std::string_view(s).substr(1, end - 1));
    const std::string_view rest = std::string_view(s).substr(end);
    try {
        if (rest.empty()) return Field::prime(p);
        if (rest.front() == '(' && rest.back() == ')') return Field::rational_functions(p, std::string(rest.substr(1, rest.size() - 2)));
        return parse_extension(text, Field::prime(p), rest);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) raise(ErrorKind::ParseError, std::string(e.what()) + " in '" + std::string(text) + "'");
        throw;
    }
}

Element parse_element(const Field& field, std::string_view text) {
    const ElementAlgebra algebra{field};
    return ExprParser<ElementAlgebra>(text, algebra).parse();
}

Poly parse_poly(const Field& field, std::string_view text, std::string_view variable) {
    if (!field.variable().empty() && field.variable() == variable)
        raise(ErrorKind::ParseError, "the polynomial variable '" + std::string(variable) + "' collides with the symbol of " +
                                         field.name());
    const PolyAlgebra algebra{field, std::string(variable)};
    return ExprParser<PolyAlgebra>(text, algebra).parse();
}

}  // namespace locring
