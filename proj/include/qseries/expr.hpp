#ifndef QSERIES_EXPR_HPP
#define QSERIES_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <qseries/products.hpp>
#include <qseries/series.hpp>

// A small expression language for q-series:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)? | '-' factor
//   atom   := int | 'q' ('^' int)? | func '(' args ')' | '(' expr ')'
//   func   := 'E' | 'eta' | 'phi' | 'psi' | 'P' | 'X'
//
// E(a,b) is (q^a;q^b)_inf, eta(k) is E(k,k), phi(k) is Phi(-q^k), psi(k) is
// Psi(q^k), P(k) is P(q^k), X(k) is X(-q^k).

namespace qseries
{

struct source_span {
    std::size_t offset = 0; // 0-based byte offset
    std::size_t length = 0;
};

enum class node_kind { int_literal, qpower, pochhammer, euler, named, neg, add, sub, mul, div, pow, paren };

struct expr_node {
    node_kind kind = node_kind::int_literal;
    mpz_class value;          // int_literal
    long long a = 0;          // qpower shift, pochhammer a, euler/named k, pow exponent
    long long b = 0;          // pochhammer b
    named_tag tag = named_tag::phi_neg;
    std::vector<expr_node> children;
    source_span span;

    // Structural equality; source positions are ignored.
    friend bool operator==(const expr_node &x, const expr_node &y)
    {
        return x.kind == y.kind && x.value == y.value && x.a == y.a && x.b == y.b && x.tag == y.tag
               && x.children == y.children;
    }
};

class syntax_error : public std::runtime_error
{
public:
    syntax_error(const std::string &what, std::size_t offset, std::string expected)
        : std::runtime_error(what), m_offset(offset), m_expected(std::move(expected))
    {
    }
    // 1-based position of the offending byte (input length + 1 at end of input).
    std::size_t offset() const
    {
        return m_offset;
    }
    const std::string &expected() const
    {
        return m_expected;
    }

private:
    std::size_t m_offset;
    std::string m_expected;
};

class eval_error : public std::runtime_error
{
public:
    eval_error(const std::string &what, source_span span) : std::runtime_error(what), m_span(span) {}
    const source_span &span() const
    {
        return m_span;
    }

private:
    source_span m_span;
};

namespace detail
{

class expr_parser
{
public:
    explicit expr_parser(std::string_view text) : m_text(text) {}

    expr_node parse()
    {
        auto e = parse_expr();
        skip_ws();
        if (!at_end()) {
            fail("unexpected '" + std::string(1, m_text[m_pos]) + "'", "operator or end of input");
        }
        return e;
    }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;

    bool at_end() const
    {
        return m_pos >= m_text.size();
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    char peek()
    {
        skip_ws();
        return at_end() ? '\0' : m_text[m_pos];
    }

    [[noreturn]] void fail(const std::string &what, const std::string &expected)
    {
        throw syntax_error("syntax error at offset " + std::to_string(m_pos + 1) + ": " + what + " (expected "
                               + expected + ")",
                           m_pos + 1, expected);
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(at_end() ? "unexpected end of input" : "unexpected '" + std::string(1, m_text[m_pos]) + "'",
                 std::string("'") + c + "'");
        }
        ++m_pos;
    }

    static expr_node make(node_kind k, std::size_t begin, std::size_t end)
    {
        expr_node n;
        n.kind = k;
        n.span = {begin, end - begin};
        return n;
    }

    static expr_node binary(node_kind k, expr_node lhs, expr_node rhs)
    {
        expr_node n;
        n.kind = k;
        n.span = {lhs.span.offset, rhs.span.offset + rhs.span.length - lhs.span.offset};
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    std::string digits()
    {
        skip_ws();
        const auto begin = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (begin == m_pos) {
            fail(at_end() ? "unexpected end of input" : "unexpected '" + std::string(1, m_text[m_pos]) + "'",
                 "integer");
        }
        return std::string(m_text.substr(begin, m_pos - begin));
    }

    long long small_int(bool allow_sign)
    {
        bool negative = false;
        if (allow_sign && peek() == '-') {
            negative = true;
            ++m_pos;
        }
        const auto at = m_pos;
        const auto d = digits();
        if (d.size() > 9) {
            m_pos = at;
            fail("integer " + d + " too large", "integer below 10^9");
        }
        const auto v = std::stoll(d);
        return negative ? -v : v;
    }

    long long positive_arg()
    {
        skip_ws();
        const auto at = m_pos;
        const auto v = small_int(false);
        if (v == 0) {
            m_pos = at;
            fail("argument must be positive", "positive integer");
        }
        return v;
    }

    expr_node parse_expr()
    {
        auto lhs = parse_term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return lhs;
            }
            ++m_pos;
            auto rhs = parse_term();
            lhs = binary(c == '+' ? node_kind::add : node_kind::sub, std::move(lhs), std::move(rhs));
        }
    }

    expr_node parse_term()
    {
        auto lhs = parse_factor();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') {
                return lhs;
            }
            ++m_pos;
            auto rhs = parse_factor();
            lhs = binary(c == '*' ? node_kind::mul : node_kind::div, std::move(lhs), std::move(rhs));
        }
    }

    expr_node parse_factor()
    {
        if (peek() == '-') {
            const auto begin = m_pos++;
            auto inner = parse_factor();
            auto n = make(node_kind::neg, begin, inner.span.offset + inner.span.length);
            n.children.push_back(std::move(inner));
            return n;
        }
        auto base = parse_atom();
        if (peek() == '^') {
            ++m_pos;
            const auto e = small_int(true);
            auto n = make(node_kind::pow, base.span.offset, m_pos);
            n.a = e;
            n.children.push_back(std::move(base));
            return n;
        }
        return base;
    }

    expr_node parse_atom()
    {
        const char c = peek();
        const auto begin = m_pos;
        if (c == '\0') {
            fail("unexpected end of input", "integer, 'q', function or '('");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = make(node_kind::int_literal, begin, begin);
            n.value = mpz_class(digits());
            n.span.length = m_pos - begin;
            return n;
        }
        if (c == '(') {
            ++m_pos;
            auto inner = parse_expr();
            expect(')');
            auto n = make(node_kind::paren, begin, m_pos);
            n.children.push_back(std::move(inner));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isalpha(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            const auto name = std::string(m_text.substr(begin, m_pos - begin));
            if (name == "q") {
                auto n = make(node_kind::qpower, begin, m_pos);
                n.a = 1;
                if (peek() == '^') {
                    ++m_pos;
                    skip_ws();
                    if (!at_end() && m_text[m_pos] == '-') {
                        fail("negative power of q", "non-negative integer");
                    }
                    n.a = small_int(false);
                }
                n.span.length = m_pos - begin;
                return n;
            }
            return parse_call(name, begin);
        }
        fail("unexpected '" + std::string(1, c) + "'", "integer, 'q', function or '('");
    }

    expr_node parse_call(const std::string &name, std::size_t begin)
    {
        expr_node n;
        if (name == "E") {
            n.kind = node_kind::pochhammer;
        } else if (name == "eta") {
            n.kind = node_kind::euler;
        } else if (name == "phi" || name == "psi" || name == "P" || name == "X") {
            n.kind = node_kind::named;
            n.tag = name == "phi" ? named_tag::phi_neg
                    : name == "psi" ? named_tag::psi
                    : name == "P"   ? named_tag::p
                                    : named_tag::x_neg;
        } else {
            m_pos = begin;
            fail("unknown name '" + name + "'", "'q', 'E', 'eta', 'phi', 'psi', 'P' or 'X'");
        }
        expect('(');
        n.a = positive_arg();
        if (n.kind == node_kind::pochhammer) {
            expect(',');
            n.b = positive_arg();
        }
        expect(')');
        n.span = {begin, m_pos - begin};
        return n;
    }
};

inline const char *named_spelling(named_tag t)
{
    switch (t) {
        case named_tag::phi_neg:
            return "phi";
        case named_tag::psi:
            return "psi";
        case named_tag::p:
            return "P";
        case named_tag::x_neg:
            return "X";
    }
    return "?";
}

} // namespace detail

inline expr_node parse_expr(std::string_view text)
{
    return detail::expr_parser(text).parse();
}

inline std::string render(const expr_node &n)
{
    switch (n.kind) {
        case node_kind::int_literal:
            return n.value.get_str();
        case node_kind::qpower:
            return n.a == 1 ? "q" : "q^" + std::to_string(n.a);
        case node_kind::pochhammer:
            return "E(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")";
        case node_kind::euler:
            return "eta(" + std::to_string(n.a) + ")";
        case node_kind::named:
            return std::string(detail::named_spelling(n.tag)) + "(" + std::to_string(n.a) + ")";
        case node_kind::neg:
            return "-" + render(n.children[0]);
        case node_kind::add:
            return render(n.children[0]) + " + " + render(n.children[1]);
        case node_kind::sub:
            return render(n.children[0]) + " - " + render(n.children[1]);
        case node_kind::mul:
            return render(n.children[0]) + " * " + render(n.children[1]);
        case node_kind::div:
            return render(n.children[0]) + " / " + render(n.children[1]);
        case node_kind::pow:
            return render(n.children[0]) + "^" + std::to_string(n.a);
        case node_kind::paren:
            return "(" + render(n.children[0]) + ")";
    }
    return {};
}

// Evaluates to a series exact through `order`.
inline series eval_expr(const expr_node &n, std::size_t order)
{
    auto unit_or_throw = [](const series &s, const expr_node &at, const char *what) {
        if (s[0] != 1 && s[0] != -1) {
            throw eval_error(std::string(what) + ": constant term " + s[0].get_str() + " is not +1 or -1",
                             at.span);
        }
    };
    switch (n.kind) {
        case node_kind::int_literal:
            return series::constant(n.value, order);
        case node_kind::qpower:
            return series::monomial(static_cast<std::size_t>(n.a), order);
        case node_kind::pochhammer:
            return eval_factor({static_cast<std::size_t>(n.a), static_cast<std::size_t>(n.b), 1}, order);
        case node_kind::euler:
            return euler(static_cast<std::size_t>(n.a), order);
        case node_kind::named:
            return evaluate(named_function{n.tag, static_cast<std::size_t>(n.a)}, order);
        case node_kind::neg:
            return negate(eval_expr(n.children[0], order));
        case node_kind::add:
            return add(eval_expr(n.children[0], order), eval_expr(n.children[1], order));
        case node_kind::sub:
            return sub(eval_expr(n.children[0], order), eval_expr(n.children[1], order));
        case node_kind::mul:
            return mul(eval_expr(n.children[0], order), eval_expr(n.children[1], order));
        case node_kind::div: {
            auto den = eval_expr(n.children[1], order);
            unit_or_throw(den, n.children[1], "division by a non-unit series");
            return divide(eval_expr(n.children[0], order), den);
        }
        case node_kind::pow: {
            auto base = eval_expr(n.children[0], order);
            if (n.a < 0) {
                unit_or_throw(base, n.children[0], "negative power of a non-unit series");
            }
            return pow(base, n.a);
        }
        case node_kind::paren:
            return eval_expr(n.children[0], order);
    }
    throw std::logic_error("unknown expression node");
}

inline series eval_expr(std::string_view text, std::size_t order)
{
    return eval_expr(parse_expr(text), order);
}

} // namespace qseries

#endif
