#pragma once

/**
 * @file verification.hpp
 * @brief Checks closed forms against the published value corpus, against
 *        each other, and against known misprints.
 *
 * Corpus format (UTF-8, one record per line):
 *
 *     label | p/q | expression | source
 *
 * '#' starts a comment line, blank lines are skipped. A line reading
 * "[errata]" switches to the non-authoritative section: records after it
 * are misprinted forms kept only so the errata analysis can measure them.
 */

#include "digamma/bigreal.hpp"
#include "digamma/closed_form.hpp"
#include "digamma/const_expr.hpp"
#include "digamma/exact_core.hpp"
#include "digamma/formulas.hpp"
#include "digamma/numerics.hpp"
#include "digamma/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digamma {

class corpus_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableEntry {
    std::string label;
    Rational argument;
    std::string expression;  // as written in the corpus
    ConstExpr expr;
    std::string source;
};

struct Corpus {
    std::vector<TableEntry> entries;  // authoritative values
    std::vector<TableEntry> errata;   // known-wrong published forms
    std::vector<std::string> warnings;
};

/// Number of authoritative records in the bundled corpus.
inline constexpr std::size_t kBundledCorpusSize = 39;

namespace detail {

inline std::string trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto bar = line.find('|', start);
        out.push_back(trim(std::string_view(line).substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

}  // namespace detail

inline Corpus parse_corpus(std::istream& in, std::optional<std::size_t> expected_count = std::nullopt) {
    Corpus corpus;
    std::set<std::string> labels;
    bool errata_section = false;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw corpus_error("corpus line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body == "[errata]") {
            errata_section = true;
            continue;
        }
        const auto fields = detail::split_fields(body);
        if (fields.size() != 4) fail("expected 4 '|'-separated fields, found " + std::to_string(fields.size()));
        if (fields[0].empty()) fail("empty label");
        if (!labels.insert(fields[0]).second) fail("duplicate label '" + fields[0] + "'");

        TableEntry e;
        e.label = fields[0];
        try {
            e.argument = parse_rational(fields[1]);
        } catch (const rational_error& ex) {
            fail(ex.what());
        }
        if (is_pole(e.argument)) fail("argument " + e.argument.str() + " is a pole");
        e.expression = fields[2];
        try {
            e.expr = parse_const_expr(fields[2]);
        } catch (const parse_error& ex) {
            fail(ex.what());
        }
        e.source = fields[3];
        (errata_section ? corpus.errata : corpus.entries).push_back(std::move(e));
    }

    if (corpus.entries.empty()) corpus.warnings.emplace_back("corpus contains no entries");
    if (expected_count && corpus.entries.size() != *expected_count) {
        throw corpus_error("corpus holds " + std::to_string(corpus.entries.size()) + " entries, expected " +
                           std::to_string(*expected_count));
    }
    return corpus;
}

inline Corpus load_corpus(const std::string& path, std::optional<std::size_t> expected_count = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw corpus_error("cannot open corpus '" + path + "'");
    return parse_corpus(in, expected_count);
}

struct ComparisonRecord {
    std::string argument;
    std::string formula_a;
    std::string formula_b;
    BigReal abs_diff;
    bool expect_agreement = true;  // false: the two sides are supposed to differ
    bool pass = false;
};

struct ComparisonReport {
    std::string title;
    int digits = 0;
    std::size_t arguments = 0;  // distinct arguments visited
    std::vector<ComparisonRecord> records;
    std::vector<std::string> notes;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
    }
    bool all_pass() const { return failures() == 0; }

    /// Largest difference among records that are expected to agree.
    BigReal max_abs_diff() const {
        BigReal m(64);
        for (const auto& r : records) {
            if (r.expect_agreement && r.abs_diff > m) m = r.abs_diff;
        }
        return m;
    }
};

namespace detail {

inline std::string diff_text(const BigReal& d) { return d.is_zero() ? "0" : d.to_decimal(6); }

inline ComparisonRecord agreement_record(std::string argument, std::string a, std::string b, const BigReal& va,
                                         const BigReal& vb, const BigReal& tol) {
    BigReal d = abs(va - vb);
    const bool pass = d < tol;
    return {std::move(argument), std::move(a), std::move(b), std::move(d), true, pass};
}

}  // namespace detail

inline std::string to_text(const ComparisonReport& r) {
    std::ostringstream os;
    os << r.title << " (D = " << r.digits << ", " << r.arguments << " arguments, " << r.records.size()
       << " comparisons)\n";
    for (const auto& rec : r.records) {
        os << (rec.pass ? "PASS" : "FAIL") << "  " << rec.argument << "  " << rec.formula_a << " vs "
           << rec.formula_b << "  |diff| = " << detail::diff_text(rec.abs_diff)
           << (rec.expect_agreement ? "" : "  (expected to differ)") << '\n';
    }
    for (const auto& n : r.notes) os << "note: " << n << '\n';
    os << "max |diff| (agreement cases) = " << detail::diff_text(r.max_abs_diff()) << '\n';
    os << "result: " << (r.all_pass() ? "all pass" : std::to_string(r.failures()) + " failure(s)") << '\n';
    return os.str();
}

inline nlohmann::json to_json(const ComparisonReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records) {
        records.push_back({{"argument", rec.argument},
                           {"formulaA", rec.formula_a},
                           {"formulaB", rec.formula_b},
                           {"absDiff", detail::diff_text(rec.abs_diff)},
                           {"expectAgreement", rec.expect_agreement},
                           {"pass", rec.pass}});
    }
    return {{"title", r.title},
            {"digits", r.digits},
            {"arguments", r.arguments},
            {"records", std::move(records)},
            {"notes", r.notes},
            {"maxAbsDiff", detail::diff_text(r.max_abs_diff())},
            {"failures", r.failures()},
            {"pass", r.all_pass()}};
}

/// Each corpus expression against psi_closed of its argument.
inline ComparisonReport verify_tables(const std::vector<TableEntry>& entries, const EvalContext& ctx) {
    ComparisonReport report;
    report.title = "table check";
    report.digits = ctx.digits;
    report.arguments = entries.size();
    const BigReal tol = agreement_tolerance(ctx);
    for (const auto& e : entries) {
        const BigReal closed = eval_closed_form(psi_closed(e.argument), ctx);
        try {
            const BigReal published = eval_const_expr(e.expr, ctx);
            report.records.push_back(detail::agreement_record(e.argument.str(), "corpus:" + e.label, "psi_closed",
                                                              published, closed, tol));
        } catch (const expr_domain_error& ex) {
            report.records.push_back({e.argument.str(), "corpus:" + e.label, "psi_closed", BigReal(1, ctx.bits()),
                                      true, false});
            report.notes.push_back(e.label + ": " + ex.what());
        }
    }
    return report;
}

/// Pairwise Gauss / Nielsen / Murty-Saradha agreement over all reduced p/q, q <= qmax.
inline ComparisonReport compare_formulas(std::int64_t qmax, const EvalContext& ctx) {
    if (qmax < 2) throw std::invalid_argument("compare_formulas: qmax must be at least 2");
    ComparisonReport report;
    report.title = "formula comparison";
    report.digits = ctx.digits;
    const BigReal tol = agreement_tolerance(ctx);
    for (std::int64_t q = 2; q <= qmax; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            if (Rational(p, q).denominator() != q) continue;
            ++report.arguments;
            const std::string arg = Rational(p, q).str();
            const BigReal g = eval_closed_form(gauss_1813(p, q), ctx);
            const BigReal n = eval_closed_form(nielsen(p, q), ctx);
            const BigReal m = eval_closed_form(murty_saradha(p, q), ctx);
            report.records.push_back(detail::agreement_record(arg, "gauss", "nielsen", g, n, tol));
            report.records.push_back(detail::agreement_record(arg, "gauss", "murty_saradha", g, m, tol));
            report.records.push_back(detail::agreement_record(arg, "nielsen", "murty_saradha", n, m, tol));
        }
    }
    return report;
}

/**
 * The shortened-sum variant against murty_saradha. For odd q the two upper
 * limits coincide; for even q the only omitted summand is
 * 2 cos(pi p) ln sin(pi/2) = 0. The report states both facts and the
 * measured differences without assuming either.
 */
inline ComparisonReport errata_gr(std::int64_t qmax, const EvalContext& ctx) {
    if (qmax < 2) throw std::invalid_argument("errata_gr: qmax must be at least 2");
    ComparisonReport report;
    report.title = "errata: shortened-sum variant vs murty_saradha";
    report.digits = ctx.digits;
    const BigReal tol = agreement_tolerance(ctx);
    std::size_t odd = 0, odd_identical = 0, even = 0, even_identical = 0;
    for (std::int64_t q = 2; q <= qmax; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            if (Rational(p, q).denominator() != q) continue;
            ++report.arguments;
            const ClosedForm gr = gr_variant(p, q);
            const ClosedForm ms = murty_saradha(p, q);
            const bool identical = combine(gr, ms, Rational(1), Rational(-1)).is_zero();
            if (q % 2 == 1) {
                ++odd;
                odd_identical += identical ? 1 : 0;
            } else {
                ++even;
                even_identical += identical ? 1 : 0;
            }
            report.records.push_back(detail::agreement_record(Rational(p, q).str(), "gr_variant", "murty_saradha",
                                                              eval_closed_form(gr, ctx), eval_closed_form(ms, ctx), tol));
        }
    }
    report.notes.push_back("odd q: floor((q+1)/2) - 1 = floor(q/2), so both sums have the same terms; "
                           "structurally identical forms: " + std::to_string(odd_identical) + " of " + std::to_string(odd));
    report.notes.push_back("even q: the only omitted summand is j = q/2, i.e. 2 cos(pi p) ln sin(pi/2) = 0 "
                           "since sin(pi/2) = 1; structurally identical forms: " + std::to_string(even_identical) +
                           " of " + std::to_string(even));
    report.notes.push_back("analytic expectation: zero discrepancy for every p/q; measured maximum = " +
                           detail::diff_text(report.max_abs_diff()));
    return report;
}

/// Fixed separation required of a misprinted form from the true value.
inline BigReal errata_threshold(const EvalContext& ctx) { return BigReal::pow10(-3, ctx.bits()); }

/**
 * Every authoritative entry at an errata argument (the corrected forms among
 * them) and every misprinted form, each against psi_closed.
 * Corrected forms must agree to tolerance; misprints must differ by more
 * than 10^-3.
 */
inline ComparisonReport errata_jensen(const Corpus& corpus, const EvalContext& ctx) {
    ComparisonReport report;
    report.title = "errata: Jensen forms vs psi_closed";
    report.digits = ctx.digits;
    const BigReal tol = agreement_tolerance(ctx);
    const BigReal gap = errata_threshold(ctx);

    std::set<Rational> arguments;
    for (const auto& bad : corpus.errata) arguments.insert(bad.argument);
    report.arguments = arguments.size();

    for (const auto& arg : arguments) {
        const BigReal closed = eval_closed_form(psi_closed(arg), ctx);
        for (const auto& e : corpus.entries) {
            if (e.argument != arg) continue;
            report.records.push_back(detail::agreement_record(arg.str(), "corpus:" + e.label, "psi_closed",
                                                              eval_const_expr(e.expr, ctx), closed, tol));
        }
        for (const auto& e : corpus.errata) {
            if (e.argument != arg) continue;
            BigReal d = abs(eval_const_expr(e.expr, ctx) - closed);
            const bool pass = d > gap;
            report.notes.push_back(e.label + " misses psi(" + arg.str() + ") by " + d.to_decimal(20));
            report.records.push_back({arg.str(), "errata:" + e.label, "psi_closed", std::move(d), false, pass});
        }
    }
    return report;
}

}  // namespace digamma
