#include <gtest/gtest.h>

#include "commands.hpp"
#include "input.hpp"
#include "iwmod/errors.hpp"

using namespace iwmod;
using namespace iwmod::cli;

namespace {

std::pair<int, int> parse_error_at(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {-1, -1};
}

}  // namespace

TEST(InputGrammar, TextAndJsonGiveSameTree) {
    Document t = parse_text(
        "# comment\n"
        "ring = zp:3\n"
        "precision = 10   # trailing\n"
        "[factor]\n"
        "poly = [0,\n"
        "        1]\n"
        "[factor]\n"
        "pi = true\n"
        "power = 2\n");
    Document j = parse_document(R"({"ring": "zp:3", "precision": 10,
        "factor": [{"poly": [0, 1]}, {"pi": true, "power": 2}]})");
    EXPECT_EQ(t.root, j.root);
    EXPECT_TRUE(j.from_json);
    EXPECT_EQ(t.locate("factor[1].power"), (std::pair<int, int>{9, 1}));
    EXPECT_EQ(t.locate("factor[1]"), (std::pair<int, int>{7, 1}));
}

TEST(InputGrammar, ErrorsCarryPositions) {
    EXPECT_EQ(parse_error_at("a = 1\nb 2\n"), (std::pair<int, int>{2, 1}));
    EXPECT_EQ(parse_error_at("a = 1\na = 2\n"), (std::pair<int, int>{2, 1}));
    EXPECT_EQ(parse_error_at("a = [1, 2\n"), (std::pair<int, int>{1, 5}));
    EXPECT_EQ(parse_error_at("[sec\n"), (std::pair<int, int>{1, 1}));
    EXPECT_EQ(parse_error_at("x = a b\n"), (std::pair<int, int>{1, 5}));
    EXPECT_EQ(parse_error_at("{\"a\": 1,\n \"b\": }"), (std::pair<int, int>{2, 7}));
    EXPECT_EQ(parse_error_at("[1, 2]"), (std::pair<int, int>{1, 2}));
}

TEST(InputGrammar, UnknownKeysRejected) {
    Document d = parse_text("g = 1\nlambda = 1\nm = 1\ncolour = red\n");
    EXPECT_THROW(run_command("classify-nonsplit", d, {}), ParseError);
    Document s = parse_text("ring = zp:3\n[factor]\npoly = [0, 1]\nshape = round\n");
    try {
        run_command("coinv", s, {});
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
    }
}

TEST(InputGrammar, TypedAccessors) {
    Document d = parse_text("n = 3\nw = word\nl = [1, -2]\nb = false\n");
    Node r = root_node(d);
    EXPECT_EQ(r.at("n").as_int(), 3);
    EXPECT_EQ(r.at("w").as_string(), "word");
    EXPECT_EQ(r.at("l").as_int_list(), (std::vector<std::int64_t>{1, -2}));
    EXPECT_FALSE(r.at("b").as_bool());
    EXPECT_THROW(r.at("w").as_int(), ParseError);
    EXPECT_THROW(r.at("missing"), ParseError);
    EXPECT_THROW(r.at("l")[5], ParseError);
}

TEST(Commands, ReportsFromDocuments) {
    Report ns = run_command("classify-nonsplit", parse_text("g = 1\nlambda = 1\nm = 1\n"), {});
    ASSERT_FALSE(ns.text.empty());
    EXPECT_EQ(ns.text[0], "dimension 1");

    Report c = run_command("coinv", parse_text("ring = zp:5\n[factor]\npoly = [0, 1]\n[factor]\npoly = [-5, 1]\n"), {});
    EXPECT_EQ(c.result["order"]["exponent"], 1);
    EXPECT_EQ(c.result["leading"]["index"], 1);
    EXPECT_EQ(c.result["leading"]["f_star"]["value"], "-5");
    EXPECT_EQ(c.ring, "zp:5");

    Options opt;
    opt.precision = 7;
    Report p = run_command("coinv", parse_text("ring = zp:3\nprecision = 20\n[factor]\npoly = [3, 1]\n"), opt);
    EXPECT_EQ(p.precision, 7);
}

TEST(Commands, ErrorKinds) {
    EXPECT_THROW(run_command("classify-lambda2",
                             parse_text("k = 5\nord_alpha = 1\nord_beta = 1\nord_gap = 1\nord_mu21 = 0\n"
                                        "ord_mu22 = 0\nn1 = 1\nn2 = 1\n"),
                             {}),
                 PreconditionError);
    EXPECT_THROW(run_command("coinv", parse_text("ring = zp:4\n[factor]\npoly = [0, 1]\n"), {}), ParseError);
    EXPECT_THROW(run_command("coinv", parse_text("ring = qq\n[factor]\npoly = [0, 1]\n"), {}), ParseError);
    EXPECT_THROW(run_command("no-such", parse_text("a = 1\n"), {}), std::invalid_argument);
}
