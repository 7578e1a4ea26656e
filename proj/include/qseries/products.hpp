#ifndef QSERIES_PRODUCTS_HPP
#define QSERIES_PRODUCTS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <qseries/series.hpp>

namespace qseries
{

// (q^a; q^b)_inf = prod_{n>=0} (1 - q^{a+nb}), truncated at order N.
// Factors are multiplied in directly, one (1 - q^e) at a time.
inline series pochhammer(std::size_t a, std::size_t b, std::size_t order)
{
    if (a == 0 || b == 0) {
        throw std::invalid_argument("pochhammer: a and b must be positive");
    }
    auto r = series::one(order);
    for (std::size_t e = a; e <= order; e += b) {
        for (std::size_t n = order; n >= e; --n) {
            r[n] -= r[n - e];
        }
    }
    return r;
}

// (q^k; q^k)_inf via the pentagonal number theorem:
//   sum_{j in Z} (-1)^j q^{k j(3j-1)/2}.
inline series euler(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("euler: k must be positive");
    }
    series r(order);
    r[0] = 1;
    for (std::size_t j = 1;; ++j) {
        const auto lo = k * (j * (3 * j - 1) / 2);
        if (lo > order) {
            break;
        }
        const int sign = (j % 2 == 0) ? 1 : -1;
        r[lo] = sign;
        const auto hi = k * (j * (3 * j + 1) / 2);
        if (hi <= order) {
            r[hi] = sign;
        }
    }
    return r;
}

// One (q^a; q^b)_inf^e factor of an eta quotient.
struct product_factor {
    std::size_t a = 1;
    std::size_t b = 1;
    long long exponent = 1;

    friend bool operator==(const product_factor &, const product_factor &) = default;
};

// scalar * q^qpower * prod (q^a; q^b)_inf^e
struct product_spec {
    mpz_class scalar = 1;
    std::size_t qpower = 0;
    std::vector<product_factor> factors;

    friend bool operator==(const product_spec &, const product_spec &) = default;
};

inline series eval_factor(const product_factor &f, std::size_t order)
{
    if (f.a == 0 || f.b == 0) {
        throw std::invalid_argument("product factor needs a >= 1 and b >= 1");
    }
    const auto base = f.a == f.b ? euler(f.a, order) : pochhammer(f.a, f.b, order);
    return pow(base, f.exponent);
}

inline series eval_product_spec(const product_spec &spec, std::size_t order)
{
    series r(order);
    if (spec.scalar == 0 || spec.qpower > order) {
        return r;
    }
    // Only order - qpower coefficients of the product survive the shift.
    const auto inner = order - spec.qpower;
    auto prod = series::constant(spec.scalar, inner);
    for (const auto &f : spec.factors) {
        prod = mul(prod, eval_factor(f, inner));
    }
    for (std::size_t n = 0; n <= inner; ++n) {
        r[n + spec.qpower] = prod[n];
    }
    return r;
}

inline series eval_product_sum(const std::vector<product_spec> &terms, std::size_t order)
{
    series r(order);
    for (const auto &t : terms) {
        r = add(r, eval_product_spec(t, order));
    }
    return r;
}

// Canonical DSL text, e.g. "3 * q^2 * E(3,3)^3 * E(1,1)^-4".
inline std::string render(const product_spec &spec)
{
    std::ostringstream os;
    os << spec.scalar.get_str();
    if (spec.qpower == 1) {
        os << " * q";
    } else if (spec.qpower > 1) {
        os << " * q^" << spec.qpower;
    }
    for (const auto &f : spec.factors) {
        os << " * E(" << f.a << ',' << f.b << ')';
        if (f.exponent != 1) {
            os << '^' << f.exponent;
        }
    }
    return os.str();
}

inline std::string render(const std::vector<product_spec> &terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) {
            out += " + ";
        }
        out += render(terms[i]);
    }
    return out.empty() ? "0" : out;
}

// The named theta-type functions. The argument power k stands for q -> q^k,
// so {phi_neg, 9} is Phi(-q^9). "X(-q)" is an atomic name; the engine never
// evaluates X at a positive argument.
enum class named_tag { phi_neg, psi, p, x_neg };

struct named_function {
    named_tag tag;
    std::size_t argument_power = 1;
};

// Phi(-q^k) = sum_{n in Z} (-1)^n q^{k n^2}
inline series phi_neg(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("phi_neg: k must be positive");
    }
    series r(order);
    r[0] = 1;
    for (std::size_t n = 1; k * n * n <= order; ++n) {
        r[k * n * n] = (n % 2 == 0) ? 2 : -2;
    }
    return r;
}

// Psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}
inline series psi(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("psi: k must be positive");
    }
    series r(order);
    for (std::size_t n = 0; k * (n * (n + 1) / 2) <= order; ++n) {
        r[k * (n * (n + 1) / 2)] = 1;
    }
    return r;
}

// Product forms. These are the cross-checks for the theta sums above and
// the definitions of P and X.
inline product_spec phi_neg_spec(std::size_t k)
{
    return {1, 0, {{k, k, 2}, {2 * k, 2 * k, -1}}};
}

inline product_spec psi_spec(std::size_t k)
{
    return {1, 0, {{2 * k, 2 * k, 1}, {k, 2 * k, -1}}};
}

// P(q^k) = (q^2k; q^6k)(q^4k; q^6k)(q^3k; q^3k)^2 / (q^k; q^k)
inline product_spec p_func_spec(std::size_t k)
{
    return {1, 0, {{2 * k, 6 * k, 1}, {4 * k, 6 * k, 1}, {3 * k, 3 * k, 2}, {k, k, -1}}};
}

// X(-q^k) = (q^k; q^k)(q^6k; q^6k)^2 / ((q^2k; q^2k)(q^3k; q^3k))
inline product_spec x_neg_spec(std::size_t k)
{
    return {1, 0, {{k, k, 1}, {6 * k, 6 * k, 2}, {2 * k, 2 * k, -1}, {3 * k, 3 * k, -1}}};
}

inline series phi_neg_product(std::size_t k, std::size_t order)
{
    return eval_product_spec(phi_neg_spec(k), order);
}

inline series psi_product(std::size_t k, std::size_t order)
{
    return eval_product_spec(psi_spec(k), order);
}

inline series p_func(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("p_func: k must be positive");
    }
    return eval_product_spec(p_func_spec(k), order);
}

inline series x_neg(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("x_neg: k must be positive");
    }
    return eval_product_spec(x_neg_spec(k), order);
}

inline series evaluate(const named_function &f, std::size_t order)
{
    switch (f.tag) {
        case named_tag::phi_neg:
            return phi_neg(f.argument_power, order);
        case named_tag::psi:
            return psi(f.argument_power, order);
        case named_tag::p:
            return p_func(f.argument_power, order);
        case named_tag::x_neg:
            return x_neg(f.argument_power, order);
    }
    throw std::logic_error("unknown named function");
}

} // namespace qseries

#endif
