#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code:
//   0 success / all checks pass, 1 verification failure, 2 usage error,
//   3 pole or domain error.

#include "digamma/closed_form.hpp"
#include "digamma/const_expr.hpp"
#include "digamma/exact_core.hpp"
#include "digamma/formulas.hpp"
#include "digamma/numerics.hpp"
#include "digamma/rational.hpp"
#include "digamma/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef DIGAMMA_DEFAULT_CORPUS
#define DIGAMMA_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace digamma::cli {

enum class OutputFormat { Text, Json, Latex };

struct CliConfig {
    int digits = 50;
    OutputFormat format = OutputFormat::Text;
    std::int64_t qmax = 40;
    std::string corpus_path = DIGAMMA_DEFAULT_CORPUS;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kPole = 3 };

namespace detail {

// A negative rational such as "-7/3" looks like a short option to the
// parser; move it behind a "--" so it is taken as positional.
inline std::vector<std::string> protect_negative_positionals(std::vector<std::string> args) {
    std::vector<std::string> out, tail;
    for (auto& a : args) {
        if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]))) {
            tail.push_back(std::move(a));
        } else {
            out.push_back(std::move(a));
        }
    }
    if (!tail.empty()) {
        out.emplace_back("--");
        for (auto& t : tail) out.push_back(std::move(t));
    }
    return out;
}

inline int emit_report(const ComparisonReport& report, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << to_text(report);
    }
    return report.all_pass() ? kOk : kVerificationFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string argument_text;
    bool corpus_given = false;

    CLI::App app{"Exact and numeric digamma values at rational arguments", "digamma"};
    app.require_subcommand(1);
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"latex", OutputFormat::Latex}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");

    auto digits_option = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "Significant decimal digits")->check(CLI::Range(15, 100000));
    };
    auto qmax_option = [&](CLI::App* sub) {
        sub->add_option("--qmax", cfg.qmax, "Largest denominator swept")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
    };

    auto* exact = app.add_subcommand("exact", "Print the canonical closed form of psi(p/q)");
    exact->add_option("argument", argument_text, "Rational p/q")->required();

    auto* eval = app.add_subcommand("eval", "Print psi(p/q) to D significant digits");
    eval->add_option("argument", argument_text, "Rational p/q")->required();
    digits_option(eval);

    auto* table = app.add_subcommand("table-check", "Check the published value corpus");
    table->add_option("--corpus", cfg.corpus_path, "Corpus file");
    digits_option(table);

    auto* compare = app.add_subcommand("compare", "Compare the three classical closed forms");
    qmax_option(compare);
    digits_option(compare);

    auto* errata = app.add_subcommand("errata", "Measure the known misprinted forms");
    qmax_option(errata);
    digits_option(errata);
    errata->add_option("--corpus", cfg.corpus_path, "Corpus file");

    for (auto* sub : {exact, eval, table, compare, errata}) sub->fallthrough();

    try {
        std::vector<std::string> args = detail::protect_negative_positionals(argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    corpus_given = table->count("--corpus") > 0 || errata->count("--corpus") > 0;

    try {
        if (exact->parsed()) {
            const Rational r = parse_rational(argument_text);
            const ClosedForm c = psi_closed(r);
            switch (cfg.format) {
                case OutputFormat::Text: out << render(c) << '\n'; break;
                case OutputFormat::Latex: out << render(c, RenderFormat::Latex) << '\n'; break;
                case OutputFormat::Json:
                    out << nlohmann::json{{"argument", r.str()},
                                          {"closedForm", render(c)},
                                          {"latex", render(c, RenderFormat::Latex)}}
                               .dump(2)
                        << '\n';
                    break;
            }
            return kOk;
        }
        if (eval->parsed()) {
            const Rational r = parse_rational(argument_text);
            const EvalContext ctx(cfg.digits);
            const std::string value = eval_closed_form(psi_closed(r), ctx).to_decimal(cfg.digits);
            if (cfg.format == OutputFormat::Json) {
                out << nlohmann::json{{"argument", r.str()}, {"digits", cfg.digits}, {"value", value}}.dump(2) << '\n';
            } else {
                out << value << '\n';
            }
            return kOk;
        }
        if (table->parsed()) {
            std::optional<std::size_t> expected;
            if (!corpus_given) expected = kBundledCorpusSize;
            const Corpus corpus = load_corpus(cfg.corpus_path, expected);
            for (const auto& w : corpus.warnings) err << "warning: " << w << '\n';
            return detail::emit_report(verify_tables(corpus.entries, EvalContext(cfg.digits)), cfg.format, out);
        }
        if (compare->parsed()) {
            return detail::emit_report(compare_formulas(cfg.qmax, EvalContext(cfg.digits)), cfg.format, out);
        }
        if (errata->parsed()) {
            const EvalContext ctx(cfg.digits);
            const ComparisonReport gr = errata_gr(cfg.qmax, ctx);
            const ComparisonReport jensen = errata_jensen(load_corpus(cfg.corpus_path), ctx);
            if (cfg.format == OutputFormat::Json) {
                out << nlohmann::json{{"reports", {to_json(gr), to_json(jensen)}}}.dump(2) << '\n';
            } else {
                out << to_text(gr) << '\n' << to_text(jensen);
            }
            return gr.all_pass() && jensen.all_pass() ? kOk : kVerificationFailed;
        }
    } catch (const rational_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const pole_error& e) {
        err << "error: " << e.what() << '\n';
        return kPole;
    } catch (const expr_domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kPole;
    } catch (const corpus_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace digamma::cli
