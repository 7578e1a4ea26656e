#ifndef QSERIES_PARTITIONS_HPP
#define QSERIES_PARTITIONS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class partition_kind { ordinary, cubic };

struct partition_table {
    partition_kind kind = partition_kind::ordinary;
    std::vector<mpz_class> values;

    std::size_t limit() const
    {
        return values.size() - 1;
    }
    const mpz_class &operator[](std::size_t n) const
    {
        return values[n];
    }

    friend bool operator==(const partition_table &, const partition_table &) = default;
};

// p(n) for n <= limit as the coefficients of 1/(q;q)_inf.
inline partition_table p_series(std::size_t limit)
{
    return {partition_kind::ordinary, invert(euler(1, limit)).coeffs()};
}

// p(n) from Euler's recurrence
//   p(n) = sum_{j>=1} (-1)^{j+1} (p(n - j(3j-1)/2) + p(n - j(3j+1)/2)).
// Shares no code with the series routines.
inline partition_table p_pentagonal(std::size_t limit)
{
    std::vector<mpz_class> p(limit + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= limit; ++n) {
        mpz_class acc = 0;
        for (std::size_t j = 1;; ++j) {
            const auto g1 = j * (3 * j - 1) / 2;
            if (g1 > n) {
                break;
            }
            const auto g2 = j * (3 * j + 1) / 2;
            mpz_class t = p[n - g1];
            if (g2 <= n) {
                t += p[n - g2];
            }
            if (j % 2 == 1) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        p[n] = acc;
    }
    return {partition_kind::ordinary, std::move(p)};
}

// a(n) for n <= limit as the coefficients of 1/((q;q)_inf (q^2;q^2)_inf).
// Computed as (1/(q;q)_inf) / (q^2;q^2)_inf so that both steps run over a
// sparse divisor; the result is the same series.
inline partition_table a_series(std::size_t limit)
{
    return {partition_kind::cubic, divide(invert(euler(1, limit)), euler(2, limit)).coeffs()};
}

// Counting by parts. Ordinary: each part size 1..limit is one part-kind.
// Cubic: odd parts are one kind, each even part size is two kinds (two colors).
inline partition_table dp_oracle(partition_kind kind, std::size_t limit)
{
    std::vector<mpz_class> t(limit + 1);
    t[0] = 1;
    for (std::size_t part = 1; part <= limit; ++part) {
        const int kinds = (kind == partition_kind::cubic && part % 2 == 0) ? 2 : 1;
        for (int c = 0; c < kinds; ++c) {
            for (std::size_t n = part; n <= limit; ++n) {
                t[n] += t[n - part];
            }
        }
    }
    return {kind, std::move(t)};
}

} // namespace qseries

#endif
