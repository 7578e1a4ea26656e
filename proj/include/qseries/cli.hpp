#ifndef QSERIES_CLI_HPP
#define QSERIES_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qseries/expr.hpp>
#include <qseries/identities.hpp>
#include <qseries/partitions.hpp>
#include <qseries/report_json.hpp>
#include <qseries/series.hpp>

namespace qseries::cli
{

enum exit_code : int { ok = 0, mismatch = 1, usage = 2 };

namespace detail
{

inline void print_syntax_error(std::ostream &err, const std::string &text, const syntax_error &e)
{
    err << e.what() << '\n' << "  " << text << '\n' << "  " << std::string(e.offset() - 1, ' ') << "^\n";
}

inline void print_eval_error(std::ostream &err, const std::string &text, const eval_error &e)
{
    err << "error: " << e.what() << '\n' << "  " << text << '\n'
        << "  " << std::string(e.span().offset, ' ') << std::string(std::max<std::size_t>(e.span().length, 1), '~')
        << '\n';
}

inline void print_coefficients(std::ostream &out, const series &s, std::size_t count,
                               const std::optional<long> &modulus, bool json, const std::string &expr)
{
    const auto shown = modulus ? reduce_mod(s, mpz_class(*modulus)) : s;
    if (json) {
        nlohmann::json j;
        j["expr"] = expr;
        j["terms"] = count;
        j["modulus"] = modulus ? nlohmann::json(*modulus) : nlohmann::json(nullptr);
        auto arr = nlohmann::json::array();
        for (std::size_t n = 0; n < count; ++n) {
            arr.push_back(shown[n].get_str());
        }
        j["coefficients"] = std::move(arr);
        out << j.dump(2) << '\n';
        return;
    }
    for (std::size_t n = 0; n < count; ++n) {
        out << n << ' ' << shown[n].get_str() << '\n';
    }
}

// Parses and evaluates, reporting problems on err. Empty on failure.
inline std::optional<series> evaluate_text(const std::string &text, std::size_t order, std::ostream &err)
{
    try {
        return eval_expr(parse_expr(text), order);
    } catch (const syntax_error &e) {
        print_syntax_error(err, text, e);
    } catch (const eval_error &e) {
        print_eval_error(err, text, e);
    }
    return std::nullopt;
}

} // namespace detail

// Entry point behind the qverify binary. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of q-series identities for the cubic partition function", "qverify"};
    app.require_subcommand(1);

    std::size_t terms = 200;
    bool json = false;
    std::optional<long> modulus;

    auto *verify_cmd = app.add_subcommand("verify", "verify registered identities");
    std::vector<std::string> ids;
    bool all = false;
    verify_cmd->add_option("ids", ids, "identity ids (see `list`)");
    verify_cmd->add_flag("--all", all, "verify every registered identity");
    verify_cmd->add_option("--terms", terms, "coefficients to compare")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", json, "emit structured reports");

    auto *coeff_cmd = app.add_subcommand("coeff", "print p(n) or a(n)");
    std::string which;
    std::size_t index = 0;
    coeff_cmd->add_option("kind", which, "p or a")->required()->check(CLI::IsMember({"p", "a"}));
    coeff_cmd->add_option("n", index, "index")->required();
    coeff_cmd->add_option("--modulus", modulus, "print the residue mod m")->check(CLI::Range(2L, 1000000000L));

    auto *series_cmd = app.add_subcommand("series", "print coefficients of an expression");
    std::string expr_text;
    series_cmd->add_option("expr", expr_text, "expression")->required();
    series_cmd->add_option("--terms", terms, "coefficients to print")->check(CLI::PositiveNumber);
    series_cmd->add_option("--modulus", modulus, "print residues mod m")->check(CLI::Range(2L, 1000000000L));
    series_cmd->add_flag("--json", json, "structured output");

    auto *dissect_cmd = app.add_subcommand("dissect", "print coefficients f[m*n + r] of an expression");
    std::size_t m = 1;
    std::size_t r = 0;
    dissect_cmd->add_option("expr", expr_text, "expression")->required();
    dissect_cmd->add_option("m", m, "modulus of the dissection")->required()->check(CLI::PositiveNumber);
    dissect_cmd->add_option("r", r, "residue, 0 <= r < m")->required();
    dissect_cmd->add_option("--terms", terms, "coefficients to print")->check(CLI::PositiveNumber);
    dissect_cmd->add_option("--modulus", modulus, "print residues mod m")->check(CLI::Range(2L, 1000000000L));
    dissect_cmd->add_flag("--json", json, "structured output");

    app.add_subcommand("list", "list registered identities");

    std::vector<const char *> argv{"qverify"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    if (*verify_cmd) {
        const auto cases = registry();
        std::vector<identity_case> selected;
        if (all) {
            selected = cases;
        } else if (ids.empty()) {
            err << "error: verify needs identity ids or --all\n";
            return usage;
        }
        for (const auto &id : ids) {
            const auto *c = find_case(cases, id);
            if (c == nullptr) {
                err << "error: unknown identity '" << id << "' (see `qverify list`)\n";
                return usage;
            }
            if (!all) {
                selected.push_back(*c);
            }
        }
        const auto reports = verify_all(selected, terms);
        if (json) {
            out << to_json(reports).dump(2) << '\n';
        } else {
            for (const auto &rep : reports) {
                out << rep.id << ' ' << to_string(rep.status) << " terms=" << rep.terms_checked << " ("
                    << static_cast<long long>(rep.elapsed.count()) << " ms)\n";
                if (rep.first_mismatch) {
                    out << "  first mismatch at index " << rep.first_mismatch->index << ": lhs "
                        << rep.first_mismatch->lhs << ", rhs " << rep.first_mismatch->rhs << '\n';
                }
                if (rep.notes) {
                    out << "  note: " << *rep.notes << '\n';
                }
            }
        }
        for (const auto &rep : reports) {
            if (rep.status != verification_status::verified) {
                return mismatch;
            }
        }
        return ok;
    }

    if (*coeff_cmd) {
        const auto table = which == "p" ? p_series(index) : a_series(index);
        mpz_class v = table[index];
        if (modulus) {
            v = reduce_mod(series::constant(v, 0), mpz_class(*modulus))[0];
        }
        out << v.get_str() << '\n';
        return ok;
    }

    if (*series_cmd) {
        const auto s = detail::evaluate_text(expr_text, terms - 1, err);
        if (!s) {
            return usage;
        }
        detail::print_coefficients(out, *s, terms, modulus, json, expr_text);
        return ok;
    }

    if (*dissect_cmd) {
        if (r >= m) {
            err << "error: residue must satisfy 0 <= r < m\n";
            return usage;
        }
        const auto s = detail::evaluate_text(expr_text, m * (terms - 1) + r, err);
        if (!s) {
            return usage;
        }
        detail::print_coefficients(out, dissect(*s, m, r), terms, modulus, json, expr_text);
        return ok;
    }

    // list
    for (const auto &c : registry()) {
        out << c.id << '\t' << to_string(c.kind) << '\t' << c.description << " [" << c.citation << "]\n";
    }
    return ok;
}

} // namespace qseries::cli

#endif
