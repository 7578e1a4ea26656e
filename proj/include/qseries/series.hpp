#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qseries
{

// Raised when a series has to be inverted but its constant term is not +1 or -1.
class non_unit_constant_term : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised by dissect() when the requested residue lies past the truncation order.
class empty_result : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised by equal_up_to() when the comparison window exceeds an operand's order.
class order_too_small : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Truncated formal power series in q. Coefficients 0..order() are exact;
// nothing is known past order().
template <typename Coeff>
class basic_series
{
public:
    using coeff_type = Coeff;

    basic_series() : m_coeffs(1) {}
    explicit basic_series(std::size_t order) : m_coeffs(order + 1) {}
    basic_series(std::size_t order, std::vector<Coeff> coeffs) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(order + 1);
    }

    static basic_series constant(const Coeff &c, std::size_t order)
    {
        basic_series r(order);
        r.m_coeffs[0] = c;
        return r;
    }
    static basic_series one(std::size_t order)
    {
        return constant(Coeff(1), order);
    }
    // q^s truncated at order; zero when s > order.
    static basic_series monomial(std::size_t s, std::size_t order, const Coeff &c = Coeff(1))
    {
        basic_series r(order);
        if (s <= order) {
            r.m_coeffs[s] = c;
        }
        return r;
    }

    std::size_t order() const
    {
        return m_coeffs.size() - 1;
    }
    const Coeff &operator[](std::size_t n) const
    {
        return m_coeffs[n];
    }
    Coeff &operator[](std::size_t n)
    {
        return m_coeffs[n];
    }
    const std::vector<Coeff> &coeffs() const
    {
        return m_coeffs;
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Coeff &c) { return c == 0; });
    }

    // Indices of the nonzero coefficients; the sparse loops in mul/invert run over these.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> idx;
        for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
            if (m_coeffs[n] != 0) {
                idx.push_back(n);
            }
        }
        return idx;
    }

    basic_series truncate(std::size_t order) const
    {
        basic_series r(std::min(order, this->order()));
        std::copy_n(m_coeffs.begin(), r.m_coeffs.size(), r.m_coeffs.begin());
        return r;
    }

    friend bool operator==(const basic_series &, const basic_series &) = default;

private:
    std::vector<Coeff> m_coeffs;
};

using series = basic_series<mpz_class>;

template <typename Coeff>
basic_series<Coeff> add(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    const auto n = std::min(f.order(), g.order());
    basic_series<Coeff> r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        r[i] = f[i] + g[i];
    }
    return r;
}

template <typename Coeff>
basic_series<Coeff> sub(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    const auto n = std::min(f.order(), g.order());
    basic_series<Coeff> r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        r[i] = f[i] - g[i];
    }
    return r;
}

template <typename Coeff>
basic_series<Coeff> negate(const basic_series<Coeff> &f)
{
    basic_series<Coeff> r(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
        r[i] = -f[i];
    }
    return r;
}

template <typename Coeff>
basic_series<Coeff> scale(const basic_series<Coeff> &f, const Coeff &c)
{
    basic_series<Coeff> r(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
        r[i] = f[i] * c;
    }
    return r;
}

// Truncated Cauchy product. The outer loop runs over the sparser operand's
// support, so products with eta factors cost O(nnz * N) rather than O(N^2).
template <typename Coeff>
basic_series<Coeff> mul(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    const auto n = std::min(f.order(), g.order());
    auto fs = f.truncate(n).support();
    auto gs = g.truncate(n).support();
    const bool swap = gs.size() < fs.size();
    const auto &a = swap ? g : f;
    const auto &b = swap ? f : g;
    const auto &as = swap ? gs : fs;

    basic_series<Coeff> r(n);
    for (auto i : as) {
        const Coeff &ai = a[i];
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] != 0) {
                r[i + j] += ai * b[j];
            }
        }
    }
    return r;
}

namespace detail
{

template <typename Coeff>
void require_unit(const basic_series<Coeff> &f, const char *what)
{
    if (f[0] != 1 && f[0] != -1) {
        throw non_unit_constant_term(std::string(what) + ": constant term must be +1 or -1");
    }
}

} // namespace detail

// f / g for a unit g, by the forward recurrence
//   r[n] = g[0] * (f[n] - sum_{k>=1} g[k] r[n-k]),
// run over the support of g. Order is min(f.order, g.order).
template <typename Coeff>
basic_series<Coeff> divide(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    detail::require_unit(g, "divide");
    const auto n = std::min(f.order(), g.order());
    std::vector<std::size_t> gs;
    for (auto k : g.truncate(n).support()) {
        if (k > 0) {
            gs.push_back(k);
        }
    }
    const Coeff g0 = g[0];

    basic_series<Coeff> r(n);
    Coeff acc;
    for (std::size_t i = 0; i <= n; ++i) {
        acc = f[i];
        for (auto k : gs) {
            if (k > i) {
                break;
            }
            acc -= g[k] * r[i - k];
        }
        // g0 is its own inverse.
        r[i] = acc * g0;
    }
    return r;
}

template <typename Coeff>
basic_series<Coeff> invert(const basic_series<Coeff> &f)
{
    detail::require_unit(f, "invert");
    return divide(basic_series<Coeff>::one(f.order()), f);
}

template <typename Coeff>
basic_series<Coeff> pow(const basic_series<Coeff> &f, long long e)
{
    auto base = e < 0 ? invert(f) : f;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    auto r = basic_series<Coeff>::one(f.order());
    bool first = true;
    while (k != 0) {
        if (k & 1u) {
            r = first ? base : mul(r, base);
            first = false;
        }
        k >>= 1;
        if (k != 0) {
            base = mul(base, base);
        }
    }
    return r;
}

// q -> q^k. The result is exact up to k * f.order().
template <typename Coeff>
basic_series<Coeff> substitute_power(const basic_series<Coeff> &f, std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("substitute_power: k must be positive");
    }
    basic_series<Coeff> r(k * f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        r[k * n] = f[n];
    }
    return r;
}

// Coefficients f[m*n + r] as a new series in q. This is the
// extract-residue / divide-by-q^r / replace-q^m-by-q step in one go.
template <typename Coeff>
basic_series<Coeff> dissect(const basic_series<Coeff> &f, std::size_t m, std::size_t r)
{
    if (m == 0 || r >= m) {
        throw std::invalid_argument("dissect: need m >= 1 and 0 <= r < m");
    }
    if (f.order() < r) {
        throw empty_result("dissect: residue " + std::to_string(r) + " lies past order "
                           + std::to_string(f.order()));
    }
    const auto n = (f.order() - r) / m;
    basic_series<Coeff> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = f[m * i + r];
    }
    return out;
}

// Multiplication by q^s; coefficients pushed past the order are dropped.
template <typename Coeff>
basic_series<Coeff> shift(const basic_series<Coeff> &f, std::size_t s)
{
    basic_series<Coeff> r(f.order());
    for (std::size_t n = s; n <= f.order(); ++n) {
        r[n] = f[n - s];
    }
    return r;
}

// Least non-negative residues.
template <typename Coeff>
basic_series<Coeff> reduce_mod(const basic_series<Coeff> &f, const Coeff &m)
{
    if (m < 2) {
        throw std::invalid_argument("reduce_mod: modulus must be at least 2");
    }
    basic_series<Coeff> r(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        Coeff c = f[n] % m;
        if (c < 0) {
            c += m;
        }
        r[n] = c;
    }
    return r;
}

template <typename Coeff>
struct mismatch {
    std::size_t index;
    Coeff lhs;
    Coeff rhs;
};

template <typename Coeff>
struct comparison {
    bool equal = true;
    std::optional<mismatch<Coeff>> first_mismatch;

    explicit operator bool() const
    {
        return equal;
    }
};

// Compares coefficients 0..n.
template <typename Coeff>
comparison<Coeff> equal_up_to(const basic_series<Coeff> &f, const basic_series<Coeff> &g, std::size_t n)
{
    if (n > f.order() || n > g.order()) {
        throw order_too_small("equal_up_to: window " + std::to_string(n) + " exceeds operand orders "
                              + std::to_string(f.order()) + "/" + std::to_string(g.order()));
    }
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] != g[i]) {
            return {false, mismatch<Coeff>{i, f[i], g[i]}};
        }
    }
    return {};
}

template <typename Coeff>
basic_series<Coeff> operator+(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    return add(f, g);
}
template <typename Coeff>
basic_series<Coeff> operator-(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    return sub(f, g);
}
template <typename Coeff>
basic_series<Coeff> operator-(const basic_series<Coeff> &f)
{
    return negate(f);
}
template <typename Coeff>
basic_series<Coeff> operator*(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    return mul(f, g);
}

template <typename Coeff>
std::ostream &operator<<(std::ostream &os, const basic_series<Coeff> &f)
{
    bool any = false;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (f[n] == 0) {
            continue;
        }
        Coeff c = f[n];
        if (any) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) {
                c = -c;
            }
        }
        if (n == 0 || c != 1) {
            os << c;
            if (n != 0) {
                os << '*';
            }
        }
        if (n == 1) {
            os << 'q';
        } else if (n > 1) {
            os << "q^" << n;
        }
        any = true;
    }
    if (!any) {
        os << '0';
    }
    return os << " + O(q^" << f.order() + 1 << ')';
}

} // namespace qseries

#endif
