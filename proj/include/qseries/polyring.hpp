#ifndef QSERIES_POLYRING_HPP
#define QSERIES_POLYRING_HPP

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// Exponents of the four opaque symbols
//   F = Phi(-q^9), X = X(-q^3), P = P(q^3), S = Psi(q^9)
// plus an explicit power of q.
struct monomial {
    unsigned f = 0;
    unsigned x = 0;
    unsigned p = 0;
    unsigned s = 0;
    unsigned qdeg = 0;

    friend bool operator==(const monomial &, const monomial &) = default;
};

// Canonical order: qdeg ascending, then (p, x, f, s) descending.
struct monomial_order {
    bool operator()(const monomial &a, const monomial &b) const
    {
        if (a.qdeg != b.qdeg) {
            return a.qdeg < b.qdeg;
        }
        return std::tie(b.p, b.x, b.f, b.s) < std::tie(a.p, a.x, a.f, a.s);
    }
};

inline monomial operator*(const monomial &a, const monomial &b)
{
    return {a.f + b.f, a.x + b.x, a.p + b.p, a.s + b.s, a.qdeg + b.qdeg};
}

// Sparse polynomial with integer coefficients; zero coefficients are never stored.
class graded_poly
{
public:
    using term_map = std::map<monomial, mpz_class, monomial_order>;

    graded_poly() = default;

    static graded_poly constant(const mpz_class &c)
    {
        graded_poly r;
        r.add_term(monomial{}, c);
        return r;
    }

    void add_term(const monomial &m, const mpz_class &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    const term_map &terms() const
    {
        return m_terms;
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool empty() const
    {
        return m_terms.empty();
    }

    mpz_class coefficient(const monomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? mpz_class(0) : it->second;
    }

    friend bool operator==(const graded_poly &, const graded_poly &) = default;

private:
    term_map m_terms;
};

// L = F^2 + 2q F X + 4q^2 X^2
inline graded_poly poly_L()
{
    graded_poly r;
    r.add_term({2, 0, 0, 0, 0}, 1);
    r.add_term({1, 1, 0, 0, 1}, 2);
    r.add_term({0, 2, 0, 0, 2}, 4);
    return r;
}

// M = P^2 - q S P + q^2 S^2
inline graded_poly poly_M()
{
    graded_poly r;
    r.add_term({0, 0, 2, 0, 0}, 1);
    r.add_term({0, 0, 1, 1, 1}, -1);
    r.add_term({0, 0, 0, 2, 2}, 1);
    return r;
}

inline graded_poly poly_add(const graded_poly &a, const graded_poly &b)
{
    graded_poly r = a;
    for (const auto &[m, c] : b.terms()) {
        r.add_term(m, c);
    }
    return r;
}

inline graded_poly poly_mul(const graded_poly &a, const graded_poly &b)
{
    graded_poly r;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

inline graded_poly poly_pow(const graded_poly &p, unsigned e)
{
    auto r = graded_poly::constant(1);
    auto base = p;
    while (e != 0) {
        if (e & 1u) {
            r = poly_mul(r, base);
        }
        e >>= 1;
        if (e != 0) {
            base = poly_mul(base, base);
        }
    }
    return r;
}

// Terms whose q-degree is congruent to r mod m.
inline graded_poly residue_extract(const graded_poly &p, unsigned m, unsigned r)
{
    if (m == 0 || r >= m) {
        throw std::invalid_argument("residue_extract: need 0 <= r < m");
    }
    graded_poly out;
    for (const auto &[mono, c] : p.terms()) {
        if (mono.qdeg % m == r) {
            out.add_term(mono, c);
        }
    }
    return out;
}

// Terms with exactly the given q-degree.
inline graded_poly degree_part(const graded_poly &p, unsigned qdeg)
{
    graded_poly out;
    for (const auto &[mono, c] : p.terms()) {
        if (mono.qdeg == qdeg) {
            out.add_term(mono, c);
        }
    }
    return out;
}

// "coef * q^d * F^a X^b P^c S^e"
inline std::string render_term(const monomial &m, const mpz_class &c)
{
    return c.get_str() + " * q^" + std::to_string(m.qdeg) + " * F^" + std::to_string(m.f) + " X^"
           + std::to_string(m.x) + " P^" + std::to_string(m.p) + " S^" + std::to_string(m.s);
}

inline std::string render(const graded_poly &p)
{
    if (p.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += render_term(m, c);
    }
    return out;
}

// Substitutes the concrete series for the four symbols and sums to the given order.
class symbol_evaluator
{
public:
    explicit symbol_evaluator(std::size_t order)
        : m_order(order), m_base{phi_neg(9, order), x_neg(3, order), p_func(3, order), psi(9, order)}
    {
        for (std::size_t i = 0; i < 4; ++i) {
            m_powers[i].push_back(series::one(order));
        }
    }

    series power(std::size_t symbol, unsigned e)
    {
        auto &cache = m_powers[symbol];
        while (cache.size() <= e) {
            cache.push_back(mul(cache.back(), m_base[symbol]));
        }
        return cache[e];
    }

    series operator()(const graded_poly &p)
    {
        series r(m_order);
        for (const auto &[m, c] : p.terms()) {
            if (m.qdeg > m_order) {
                continue;
            }
            auto t = mul(mul(power(0, m.f), power(1, m.x)), mul(power(2, m.p), power(3, m.s)));
            r = add(r, shift(scale(t, c), m.qdeg));
        }
        return r;
    }

private:
    std::size_t m_order;
    std::array<series, 4> m_base;
    std::array<std::vector<series>, 4> m_powers;
};

inline series render_series(const graded_poly &p, std::size_t order)
{
    symbol_evaluator eval(order);
    return eval(p);
}

} // namespace qseries

#endif
