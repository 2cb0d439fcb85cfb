#include "test_helpers.hpp"

#include "digamma/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = digamma::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExactHalf) {
    const Result r = run({"exact", "1/2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-gamma - 2*ln(2)\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ExactNegative) {
    const Result r = run({"exact", "-7/3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, digamma::render(digamma::psi_closed(digamma::Rational(-7, 3))) + "\n");
}

TEST(Cli, EvalHalf) {
    const Result r = run({"eval", "1/2", "--digits", "30"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-1.96351002602142347944097633300\n");
}

TEST(Cli, EvalDefaultDigits) {
    const Result r = run({"eval", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-0.57721566490153286060651209008240243104215933593992\n");
}

TEST(Cli, Pole) {
    for (const char* arg : {"-1", "0", "-12"}) {
        const Result r = run({"exact", arg});
        EXPECT_EQ(r.code, 3) << arg;
        EXPECT_NE(r.err.find("digamma pole at non-positive integer"), std::string::npos) << arg;
        EXPECT_EQ(run({"eval", arg}).code, 3) << arg;
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"exact", "1/0"}).code, 2);
    EXPECT_EQ(run({"exact", "abc"}).code, 2);
    EXPECT_EQ(run({"exact", "1.5"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"exact"}).code, 2);
    EXPECT_EQ(run({"eval", "1/2", "--digits", "5"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "exact", "1/2"}).code, 2);
    EXPECT_EQ(run({"table-check", "--corpus", "/nonexistent"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ExactOutputReparsesToEval) {
    const digamma::EvalContext ctx(40);
    for (const char* arg : {"1/5", "-7/3", "11/12", "29/7", "1"}) {
        const Result exact = run({"exact", arg});
        const Result eval = run({"eval", arg, "--digits", "40"});
        ASSERT_EQ(exact.code, 0) << arg;
        ASSERT_EQ(eval.code, 0) << arg;
        const std::string text = exact.out.substr(0, exact.out.size() - 1);
        const auto value = digamma::eval_const_expr(digamma::parse_const_expr(text), ctx);
        const digamma::BigReal printed(eval.out.substr(0, eval.out.size() - 1), ctx.bits());
        EXPECT_TRUE(digamma::testing::Near(value, printed, 38)) << arg;
    }
}

TEST(Cli, Formats) {
    const Result latex = run({"--format", "latex", "exact", "1/4"});
    EXPECT_EQ(latex.out, "-\\gamma - \\frac{1}{2}\\pi\\cot\\left(\\frac{\\pi}{4}\\right) - 3\\ln 2\n");

    const Result json = run({"--format", "json", "exact", "1/2"});
    const auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j["argument"], "1/2");
    EXPECT_EQ(j["closedForm"], "-gamma - 2*ln(2)");

    const auto e = nlohmann::json::parse(run({"--format", "json", "eval", "1/2", "--digits", "20"}).out);
    EXPECT_EQ(e["digits"], 20);
    EXPECT_EQ(e["value"], "-1.9635100260214234794");
}

TEST(Cli, TableCheck) {
    const Result r = run({"table-check", "--digits", "40"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("result: all pass"), std::string::npos);
    const Result j = run({"--format", "json", "table-check"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["records"].size(), 39u);
}

TEST(Cli, TableCheckFailureExitsOne) {
    const std::string path = ::testing::TempDir() + "bad_corpus.txt";
    {
        std::ofstream f(path);
        f << "half | 1/2 | -gamma - 2*ln(3) | test\n";
    }
    const Result r = run({"table-check", "--corpus", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL  1/2"), std::string::npos);

    {
        std::ofstream f(path);
        f << "# empty\n";
    }
    const Result empty = run({"table-check", "--corpus", path});
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.err.find("warning"), std::string::npos);
}

TEST(Cli, CompareAndErrata) {
    const Result c = run({"compare", "--qmax", "10", "--digits", "30"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("31 arguments"), std::string::npos);
    const Result e = run({"errata", "--qmax", "10", "--digits", "30"});
    EXPECT_EQ(e.code, 0) << e.out;
    EXPECT_NE(e.out.find("measured maximum = 0"), std::string::npos);
    EXPECT_NE(e.out.find("jensen-3/5-misprint misses"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"--format", "json", "errata", "--qmax", "6"}).out);
    EXPECT_EQ(j["reports"].size(), 2u);
}
