#ifndef QSERIES_IDENTITIES_HPP
#define QSERIES_IDENTITIES_HPP

#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <qseries/partitions.hpp>
#include <qseries/polyring.hpp>
#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class identity_kind { series_equality, congruence, symbolic_poly };

enum class verification_status { verified, mismatch, error };

inline const char *to_string(verification_status s)
{
    switch (s) {
        case verification_status::verified:
            return "verified";
        case verification_status::mismatch:
            return "mismatch";
        case verification_status::error:
            return "error";
    }
    return "error";
}

inline const char *to_string(identity_kind k)
{
    switch (k) {
        case identity_kind::series_equality:
            return "series";
        case identity_kind::congruence:
            return "congruence";
        case identity_kind::symbolic_poly:
            return "symbolic";
    }
    return "series";
}

// Builders receive the last coefficient index that will be compared and
// return a series exact at least that far.
using series_builder = std::function<series(std::size_t order)>;

struct identity_case {
    std::string id;
    std::string description;
    std::string citation;
    identity_kind kind = identity_kind::series_equality;
    std::optional<unsigned long> modulus;
    series_builder lhs;
    // Sum of eta quotients; takes precedence over `rhs` when non-empty.
    std::vector<product_spec> rhs_terms;
    series_builder rhs;
    // The right-hand side in the expression language, empty when not expressible.
    std::string rhs_expr;

    series build_rhs(std::size_t order) const
    {
        return rhs_terms.empty() ? rhs(order) : eval_product_sum(rhs_terms, order);
    }
};

struct reported_mismatch {
    std::size_t index = 0;
    std::string lhs;
    std::string rhs;
};

struct verification_report {
    std::string id;
    std::size_t terms_checked = 0;
    verification_status status = verification_status::error;
    std::optional<reported_mismatch> first_mismatch;
    std::optional<std::string> notes;
    std::chrono::duration<double, std::milli> elapsed{0};
};

// --- symbolic residue expansion ------------------------------------------

// Residue-2 part of L^4 M^4, machine expanded. Computed once.
inline const graded_poly &residue_expansion()
{
    static const graded_poly r
        = residue_extract(poly_mul(poly_pow(poly_L(), 4), poly_pow(poly_M(), 4)), 3, 2);
    return r;
}

// The 27 terms of the residue-2 part exactly as they appear in print,
// including the q^5 P^4 F^7 S^4 entry written with X^3.
inline graded_poly published_residue_terms()
{
    struct row {
        int coeff;
        unsigned qdeg, p, x, f, s;
    };
    static constexpr row rows[] = {
        {40, 2, 8, 2, 6, 0},         {-32, 2, 7, 1, 7, 1},      {10, 2, 6, 0, 8, 2},

        {512, 5, 8, 5, 3, 0},        {-1216, 5, 7, 4, 4, 1},    {1280, 5, 6, 3, 5, 2},
        {-640, 5, 5, 2, 6, 3},       {152, 5, 4, 3, 7, 4},      {-16, 5, 3, 0, 8, 5},

        {256, 8, 8, 8, 0, 0},        {-2048, 8, 7, 7, 1, 1},    {6400, 8, 6, 6, 2, 2},
        {-8192, 8, 5, 5, 3, 3},      {5776, 8, 4, 4, 4, 4},     {-2048, 8, 3, 3, 5, 5},
        {400, 8, 2, 2, 6, 6},        {-32, 8, 1, 1, 7, 7},      {1, 8, 0, 0, 8, 8},

        {-4096, 11, 5, 8, 0, 3},     {9728, 11, 4, 7, 1, 4},    {-10240, 11, 3, 6, 2, 5},
        {5120, 11, 2, 5, 3, 6},      {-1216, 11, 1, 4, 4, 7},   {128, 11, 0, 3, 5, 8},

        {2560, 14, 2, 8, 0, 6},      {-2048, 14, 1, 7, 1, 7},   {640, 14, 0, 6, 2, 8},
    };
    graded_poly r;
    for (const auto &t : rows) {
        r.add_term(monomial{t.f, t.x, t.p, t.s, t.qdeg}, t.coeff);
    }
    return r;
}

// Per-monomial differences between two polynomials, one line per monomial.
inline std::vector<std::string> poly_diff(const graded_poly &expected, const graded_poly &actual,
                                          const std::string &expected_name = "expected",
                                          const std::string &actual_name = "actual")
{
    std::vector<std::string> out;
    for (const auto &[m, c] : expected.terms()) {
        const auto other = actual.coefficient(m);
        if (other == 0) {
            out.push_back("only in " + expected_name + ": " + render_term(m, c));
        } else if (other != c) {
            out.push_back("coefficient differs on " + render_term(m, 1) + ": " + expected_name + " "
                          + c.get_str() + ", " + actual_name + " " + other.get_str());
        }
    }
    for (const auto &[m, c] : actual.terms()) {
        if (expected.coefficient(m) == 0) {
            out.push_back("only in " + actual_name + ": " + render_term(m, c));
        }
    }
    return out;
}

namespace detail
{

inline std::string join_lines(const std::vector<std::string> &lines)
{
    std::string out;
    for (const auto &l : lines) {
        if (!out.empty()) {
            out += "; ";
        }
        out += l;
    }
    return out;
}

inline std::size_t checked_last_index(std::size_t terms)
{
    if (terms == 0) {
        throw std::invalid_argument("terms must be at least 1");
    }
    return terms - 1;
}

// Structural and numerical checks of the residue expansion.
inline verification_report verify_residue_expansion(const identity_case &c, std::size_t terms)
{
    verification_report rep;
    rep.id = c.id;
    const auto last = checked_last_index(terms);

    const auto full = poly_mul(poly_pow(poly_L(), 4), poly_pow(poly_M(), 4));
    const auto &residue = residue_expansion();

    auto fail = [&](std::size_t index, std::string lhs, std::string rhs) {
        rep.status = verification_status::mismatch;
        rep.first_mismatch = reported_mismatch{index, std::move(lhs), std::move(rhs)};
        return rep;
    };

    // The three residue classes partition the full expansion.
    auto reassembled = poly_add(poly_add(residue_extract(full, 3, 0), residue_extract(full, 3, 1)), residue);
    if (reassembled != full) {
        return fail(0, render(reassembled), render(full));
    }

    // 27 monomials, grouped by q-degree 2, 5, 8, 11, 14 with sizes 3, 6, 9, 6, 3.
    const std::map<unsigned, std::size_t> expected_groups{{2, 3}, {5, 6}, {8, 9}, {11, 6}, {14, 3}};
    std::map<unsigned, std::size_t> groups;
    for (const auto &[m, coeff] : residue.terms()) {
        ++groups[m.qdeg];
        if (m.f + m.x != 8 || m.p + m.s != 8) {
            return fail(0, render_term(m, coeff), "F+X = 8 and P+S = 8");
        }
    }
    if (residue.size() != 27 || groups != expected_groups) {
        return fail(0, std::to_string(residue.size()) + " monomials", "27 monomials in groups 3,6,9,6,3");
    }

    // Numerical route: take the concrete series for L and M, expand L^4 M^4
    // as series and dissect it; it must agree with the rendered residue.
    const auto order = 3 * last + 2;
    symbol_evaluator eval(order);
    const auto numeric = mul(pow(eval(poly_L()), 4), pow(eval(poly_M()), 4));
    const auto lhs = dissect(numeric, 3, 2);
    const auto rhs = dissect(eval(residue), 3, 2);
    rep.terms_checked = terms;
    if (auto cmp = equal_up_to(lhs, rhs, last); !cmp) {
        const auto &mm = *cmp.first_mismatch;
        return fail(mm.index, mm.lhs.get_str(), mm.rhs.get_str());
    }

    const auto diffs = poly_diff(published_residue_terms(), residue, "published", "machine");
    if (!diffs.empty()) {
        rep.notes = "published transcription differs from machine expansion: " + join_lines(diffs);
    }
    rep.status = verification_status::verified;
    return rep;
}

} // namespace detail

// --- registry --------------------------------------------------------------

namespace detail
{

inline mpz_class ipow(unsigned long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline product_spec eta_quotient(mpz_class scalar, std::size_t qpower,
                                 std::initializer_list<std::pair<std::size_t, long long>> etas)
{
    product_spec s{std::move(scalar), qpower, {}};
    for (const auto &[k, e] : etas) {
        s.factors.push_back({k, k, e});
    }
    return s;
}

inline series_builder dissected_p(std::size_t m, std::size_t r)
{
    return [m, r](std::size_t order) { return dissect(series(m * order + r, p_series(m * order + r).values), m, r); };
}

inline series_builder dissected_a(std::size_t m, std::size_t r)
{
    return [m, r](std::size_t order) { return dissect(series(m * order + r, a_series(m * order + r).values), m, r); };
}

} // namespace detail

inline std::vector<identity_case> registry()
{
    using detail::eta_quotient;
    using detail::ipow;
    std::vector<identity_case> cases;

    auto series_case = [&](std::string id, std::string desc, std::string cite, series_builder lhs,
                           std::vector<product_spec> rhs_terms) {
        identity_case c;
        c.id = std::move(id);
        c.description = std::move(desc);
        c.citation = std::move(cite);
        c.lhs = std::move(lhs);
        c.rhs_terms = std::move(rhs_terms);
        c.rhs_expr = render(c.rhs_terms);
        cases.push_back(std::move(c));
    };

    series_case("ramanujan-5", "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6", "Ramanujan", detail::dissected_p(5, 4),
                {eta_quotient(5, 0, {{5, 5}, {1, -6}})});

    series_case("ramanujan-7", "sum p(7n+5) q^n = 7 (q^7;q^7)^3/(q;q)^4 + 49 q (q^7;q^7)^7/(q;q)^8", "Ramanujan",
                detail::dissected_p(7, 5),
                {eta_quotient(7, 0, {{7, 3}, {1, -4}}), eta_quotient(49, 1, {{7, 7}, {1, -8}})});

    series_case("zuckerman-25", "sum p(25n+24) q^n as five eta quotients in (q^5;q^5) and (q;q)", "Zuckerman",
                detail::dissected_p(25, 24),
                {eta_quotient(63 * ipow(5, 2), 0, {{5, 6}, {1, -7}}),
                 eta_quotient(52 * ipow(5, 5), 1, {{5, 12}, {1, -13}}),
                 eta_quotient(63 * ipow(5, 7), 2, {{5, 18}, {1, -19}}),
                 eta_quotient(6 * ipow(5, 10), 3, {{5, 24}, {1, -25}}),
                 eta_quotient(ipow(5, 12), 4, {{5, 30}, {1, -31}})});

    series_case("chan-3", "sum a(3n+2) q^n = 3 (q^3;q^3)^3 (q^6;q^6)^3 / ((q;q)^4 (q^2;q^2)^4)", "H.-C. Chan",
                detail::dissected_a(3, 2), {eta_quotient(3, 0, {{3, 3}, {6, 3}, {1, -4}, {2, -4}})});

    series_case("cubic-9", "sum a(9n+8) q^n as five eta quotients in (q;q), (q^2;q^2), (q^3;q^3), (q^6;q^6)",
                "cubic partition analogue of Zuckerman's identity", detail::dissected_a(9, 8),
                {eta_quotient(2 * ipow(3, 3), 0, {{3, 30}, {1, -19}, {2, -7}, {6, -6}}),
                 eta_quotient(8 * ipow(3, 3), 1, {{3, 21}, {6, 3}, {1, -16}, {2, -10}}),
                 eta_quotient(19 * ipow(3, 4), 2, {{3, 12}, {6, 12}, {1, -13}, {2, -13}}),
                 eta_quotient(-64 * ipow(3, 3), 3, {{3, 3}, {6, 21}, {1, -10}, {2, -16}}),
                 eta_quotient(128 * ipow(3, 3), 4, {{6, 30}, {1, -7}, {2, -19}, {3, -6}})});

    {
        identity_case c;
        c.id = "lemma-2.2";
        c.description = "3-dissection of 1/Phi(-q): Phi(-q^9)/Phi(-q^3)^4 (Phi(-q^9)^2 + 2q Phi(-q^9) X(-q^3) + "
                        "4q^2 X(-q^3)^2)";
        c.citation = "Hirschhorn";
        c.lhs = [](std::size_t order) { return invert(phi_neg(1, order)); };
        c.rhs = [](std::size_t order) {
            const auto f9 = phi_neg(9, order);
            const auto x3 = x_neg(3, order);
            const auto inner = add(add(mul(f9, f9), shift(scale(mul(f9, x3), mpz_class(2)), 1)),
                                   shift(scale(mul(x3, x3), mpz_class(4)), 2));
            return mul(mul(f9, pow(phi_neg(3, order), -4)), inner);
        };
        c.rhs_expr = "phi(9) * phi(3)^-4 * (phi(9)^2 + 2 * q * phi(9) * X(3) + 4 * q^2 * X(3)^2)";
        cases.push_back(std::move(c));
    }
    {
        identity_case c;
        c.id = "lemma-2.3";
        c.description = "3-dissection of 1/Psi(q): Psi(q^9)/Psi(q^3)^4 (P(q^3)^2 - q P(q^3) Psi(q^9) + "
                        "q^2 Psi(q^9)^2)";
        c.citation = "Hirschhorn";
        c.lhs = [](std::size_t order) { return invert(psi(1, order)); };
        c.rhs = [](std::size_t order) {
            const auto s9 = psi(9, order);
            const auto p3 = p_func(3, order);
            const auto inner = add(sub(mul(p3, p3), shift(mul(p3, s9), 1)), shift(mul(s9, s9), 2));
            return mul(mul(s9, pow(psi(3, order), -4)), inner);
        };
        c.rhs_expr = "psi(9) * psi(3)^-4 * (P(3)^2 - q * P(3) * psi(9) + q^2 * psi(9)^2)";
        cases.push_back(std::move(c));
    }

    series_case("lemma-2.4-phi-psi", "Phi(-q) Psi(q) = (q;q) (q^2;q^2)", "product manipulation",
                [](std::size_t order) { return mul(phi_neg(1, order), psi(1, order)); },
                {eta_quotient(1, 0, {{1, 1}, {2, 1}})});

    series_case("lemma-2.4-xp", "X(-q) P(q) = (q^3;q^3) (q^6;q^6)", "product manipulation",
                [](std::size_t order) { return mul(x_neg(1, order), p_func(1, order)); },
                {eta_quotient(1, 0, {{3, 1}, {6, 1}})});

    {
        identity_case c;
        c.id = "lemma-4.1";
        c.kind = identity_kind::symbolic_poly;
        c.description = "terms of L^4 M^4 with q-exponent 2 mod 3 are A+B+C+D+E (27 monomials)";
        c.citation = "direct expansion";
        cases.push_back(std::move(c));
    }

    // Each group of the residue expansion, rendered as a series, against its closed form.
    const std::pair<const char *, product_spec> closed_forms[] = {
        {"A", eta_quotient(2 * ipow(3, 2), 2, {{6, 6}, {9, 26}, {3, -6}, {18, -10}})},
        {"B", eta_quotient(8 * ipow(3, 2), 5, {{6, 3}, {9, 17}, {3, -3}, {18, -1}})},
        {"C", eta_quotient(19 * ipow(3, 3), 8, {{9, 8}, {18, 8}})},
        {"D", eta_quotient(-64 * ipow(3, 2), 11, {{3, 3}, {18, 17}, {6, -3}, {9, -1}})},
        {"E", eta_quotient(128 * ipow(3, 2), 14, {{3, 6}, {18, 26}, {6, -6}, {9, -10}})},
    };
    for (const auto &[name, spec] : closed_forms) {
        const auto qdeg = static_cast<unsigned>(spec.qpower);
        series_case(std::string("lemma-4.2-") + name,
                    std::string(name) + ": the q^" + std::to_string(qdeg)
                        + " monomials of the residue expansion equal a single eta quotient",
                    "eta-quotient simplification",
                    [qdeg](std::size_t order) { return render_series(degree_part(residue_expansion(), qdeg), order); },
                    {spec});
    }

    auto congruence_case = [&](std::string id, std::string desc, std::string cite, series_builder lhs,
                               unsigned long modulus) {
        identity_case c;
        c.id = std::move(id);
        c.kind = identity_kind::congruence;
        c.description = std::move(desc);
        c.citation = std::move(cite);
        c.lhs = std::move(lhs);
        c.modulus = modulus;
        cases.push_back(std::move(c));
    };
    congruence_case("congruence-p5", "p(5n+4) = 0 mod 5", "Ramanujan", detail::dissected_p(5, 4), 5);
    congruence_case("congruence-p7", "p(7n+5) = 0 mod 7", "Ramanujan", detail::dissected_p(7, 5), 7);
    congruence_case("congruence-a3", "a(3n+2) = 0 mod 3", "H.-C. Chan", detail::dissected_a(3, 2), 3);
    congruence_case("congruence-a27", "a(9n+8) = 0 mod 27", "H.-C. Chan", detail::dissected_a(9, 8), 27);

    return cases;
}

inline const identity_case *find_case(const std::vector<identity_case> &cases, const std::string &id)
{
    for (const auto &c : cases) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

// --- verification ----------------------------------------------------------

inline verification_report verify(const identity_case &c, std::size_t terms)
{
    const auto start = std::chrono::steady_clock::now();
    verification_report rep;
    rep.id = c.id;
    try {
        const auto last = detail::checked_last_index(terms);
        switch (c.kind) {
            case identity_kind::symbolic_poly:
                rep = detail::verify_residue_expansion(c, terms);
                break;
            case identity_kind::congruence: {
                if (!c.modulus || *c.modulus < 2) {
                    throw std::invalid_argument("congruence case without a modulus");
                }
                const auto lhs = c.lhs(last);
                const auto residues = reduce_mod(lhs, mpz_class(*c.modulus));
                const auto cmp = equal_up_to(residues, series(residues.order()), last);
                rep.terms_checked = terms;
                if (cmp) {
                    rep.status = verification_status::verified;
                } else {
                    const auto &mm = *cmp.first_mismatch;
                    rep.status = verification_status::mismatch;
                    rep.first_mismatch = reported_mismatch{mm.index, lhs[mm.index].get_str(),
                                                           "0 mod " + std::to_string(*c.modulus)};
                }
                break;
            }
            case identity_kind::series_equality: {
                const auto lhs = c.lhs(last);
                const auto rhs = c.build_rhs(last);
                const auto cmp = equal_up_to(lhs, rhs, last);
                rep.terms_checked = terms;
                if (cmp) {
                    rep.status = verification_status::verified;
                } else {
                    const auto &mm = *cmp.first_mismatch;
                    rep.status = verification_status::mismatch;
                    rep.first_mismatch = reported_mismatch{mm.index, mm.lhs.get_str(), mm.rhs.get_str()};
                }
                break;
            }
        }
    } catch (const std::exception &e) {
        rep.status = verification_status::error;
        rep.first_mismatch.reset();
        rep.notes = e.what();
    }
    rep.id = c.id;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

// Runs every case concurrently; reports come back in input order.
inline std::vector<verification_report> verify_all(const std::vector<identity_case> &cases, std::size_t terms)
{
    std::vector<std::future<verification_report>> pending;
    pending.reserve(cases.size());
    for (const auto &c : cases) {
        pending.push_back(std::async(std::launch::async, [&c, terms] { return verify(c, terms); }));
    }
    std::vector<verification_report> out;
    out.reserve(cases.size());
    for (auto &f : pending) {
        out.push_back(f.get());
    }
    return out;
}

inline std::vector<verification_report> verify_all(std::size_t terms)
{
    return verify_all(registry(), terms);
}

} // namespace qseries

#endif
