#include <string>
#include <vector>

#include "doctest.h"
#include "streg/ast.hpp"
#include "streg/dsl.hpp"
#include "support/ast_gen.hpp"

using namespace streg;

TEST_CASE("tokenizer splits names, terminals, counts and punctuation") {
    auto toks = tokenize_dsl("concat( <ab> , rep(<num>,12) )");
    std::vector<std::string> texts;
    for (auto& t : toks)
        texts.push_back(t.text);
    CHECK(texts == std::vector<std::string>{"concat", "(", "<ab>", ",", "rep", "(", "<num>", ",",
                                            "12", ")", ")"});
    CHECK(toks[0].pos == 0);
    CHECK(toks[2].pos == 8);
}

TEST_CASE("tokenizer rejects stray characters and unclosed terminals") {
    CHECK_THROWS_AS(tokenize_dsl("rep(<num>,2]"), DslError);
    CHECK_THROWS_AS(tokenize_dsl("contain(<abc"), DslError);
    try {
        tokenize_dsl("or(<a>,<b>) $");
    } catch (const DslError& e) {
        CHECK(e.position == 12);
    }
}

TEST_CASE("parsing builds the expected tree shapes") {
    AstPtr a = parse_dsl("and(startwith(<C0>),endwith(rep(<num>,4)))");
    REQUIRE(a->kind == NodeKind::And);
    CHECK(a->children[0]->kind == NodeKind::StartWith);
    CHECK(a->children[0]->children[0]->kind == NodeKind::ConstString);
    CHECK(a->children[0]->children[0]->text == "C0");
    CHECK(a->children[1]->children[0]->k1 == 4);
}

TEST_CASE("class names win over constants, everything else is a constant") {
    CHECK(parse_dsl("<num>")->kind == NodeKind::ClassTerm);
    CHECK(parse_dsl("<num>")->cls == CharClass::Num);
    CHECK(parse_dsl("<n>")->kind == NodeKind::ConstChar);
    CHECK(parse_dsl("<no>")->kind == NodeKind::ConstString);
    CHECK(parse_dsl("<->")->kind == NodeKind::ConstChar);
    CHECK(parse_dsl("<123>")->kind == NodeKind::ConstString);
}

TEST_CASE("binary operators accept more than two arguments by right-nesting") {
    AstPtr a = parse_dsl("concat(<a>,<b>,<c>)");
    AstPtr b = parse_dsl("concat(<a>,concat(<b>,<c>))");
    CHECK(ast_equal(a, b));
    AstPtr c = parse_dsl("or(<a>,<b>,<c>,<d>)");
    CHECK(c->children[1]->children[1]->children[1]->text == "d");
}

TEST_CASE("parse errors carry byte positions") {
    struct Case {
        const char* text;
        std::size_t pos;
    };
    for (Case tc : {Case{"bogus(<a>)", 0}, Case{"rep(<a>,)", 8}, Case{"and(<a>)", 8},
                    Case{"concat(<a>,<b>", 14}, Case{"rep(<a>,9999)", 8}}) {
        CAPTURE(tc.text);
        try {
            parse_dsl(tc.text);
            FAIL_CHECK("expected a parse failure");
        } catch (const DslError& e) {
            CHECK(e.position == tc.pos);
        }
    }
}

TEST_CASE("factory validation errors surface as parse errors") {
    // reprange requires k1 < k2; notcc requires a single-symbol operand
    CHECK_THROWS_AS(parse_dsl("reprange(<num>,3,2)"), DslError);
    CHECK_THROWS_AS(parse_dsl("reprange(<num>,2,2)"), DslError);
    CHECK_THROWS_AS(parse_dsl("notcc(concat(<a>,<b>))"), DslError);
    CHECK_THROWS_AS(parse_dsl("notcc(<ab>)"), DslError);
    CHECK_THROWS_AS(parse_dsl("<a b>"), DslError); // space is outside the alphabet
    CHECK_THROWS_AS(parse_dsl("<>"), DslError);
}

TEST_CASE("printing is canonical and parses back to the same tree") {
    const char* canonical = "concat(repatleast(<num>,1),rep(concat(<:>,or(repatleast(<let>,1),"
                            "repatleast(<num>,1))),2))";
    AstPtr a = parse_dsl(canonical);
    CHECK(print_dsl(a) == canonical);
    // whitespace and n-ary sugar normalize away
    CHECK(print_dsl(parse_dsl(" concat( <a>, <b>, <c> ) ")) == "concat(<a>,concat(<b>,<c>))");
}

TEST_CASE("print/parse round-trip holds for random trees") {
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        AstPtr a = test::gen_ast(rng, 4);
        AstPtr back = parse_dsl(print_dsl(a));
        CHECK(ast_equal(a, back));
    }
}

TEST_CASE("token sequence matches the canonical printed form") {
    AstPtr a = parse_dsl("reprange(<low>,1,12)");
    CHECK(dsl_token_strings(a) ==
          std::vector<std::string>{"reprange", "(", "<low>", ",", "1", ",", "12", ")"});
}

TEST_CASE("size counts nodes and depth counts levels from the root") {
    AstPtr a = parse_dsl("concat(repatleast(<num>,1),rep(concat(<:>,or(repatleast(<let>,1),"
                         "repatleast(<num>,1))),2))");
    AstMetrics m = ast_metrics(a);
    CHECK(m.size == 11);
    CHECK(m.depth == 6);
    CHECK(ast_metrics(parse_dsl("<x>")).size == 1);
    CHECK(ast_metrics(parse_dsl("<x>")).depth == 1);
}

TEST_CASE("anonymization hides constants and counts, keeps structure") {
    AstPtr a = parse_dsl("concat(reprange(<num>,1,2),concat(<.>,reprange(<num>,1,2)))");
    AstPtr anon = anonymize(a);
    CHECK(print_dsl(anon) == "concat(reprange(<num>,int,int),concat(const,reprange(<num>,int,int)))");
    CHECK(ast_equal(anonymize(anon), anon)); // idempotent
    // anonymized trees parse back
    CHECK(ast_equal(parse_dsl(print_dsl(anon)), anon));
}

TEST_CASE("standard notation for terminals") {
    CHECK(to_standard_regex(parse_dsl("<let>")) == "[A-Za-z]");
    CHECK(to_standard_regex(parse_dsl("<cap>")) == "[A-Z]");
    CHECK(to_standard_regex(parse_dsl("<low>")) == "[a-z]");
    CHECK(to_standard_regex(parse_dsl("<num>")) == "[0-9]");
    CHECK(to_standard_regex(parse_dsl("<spec>")) == "[-,;.+:!@#_$%&*=^]");
    CHECK(to_standard_regex(parse_dsl("<any>")) == ".");
    CHECK(to_standard_regex(parse_dsl("<null>")) == "∅");
    CHECK(to_standard_regex(parse_dsl("<a>")) == "a");
    CHECK(to_standard_regex(parse_dsl("<+>")) == "\\+");
    CHECK(to_standard_regex(parse_dsl("<1.23>")) == "1\\.23");
}

TEST_CASE("standard notation for each operator") {
    CHECK(to_standard_regex(parse_dsl("startwith(<num>)")) == "[0-9].*");
    CHECK(to_standard_regex(parse_dsl("endwith(<cap>)")) == ".*[A-Z]");
    CHECK(to_standard_regex(parse_dsl("contain(<x>)")) == ".*x.*");
    CHECK(to_standard_regex(parse_dsl("not(<low>)")) == "~([a-z])");
    CHECK(to_standard_regex(parse_dsl("optional(<num>)")) == "[0-9]?");
    CHECK(to_standard_regex(parse_dsl("star(<let>)")) == "[A-Za-z]*");
    CHECK(to_standard_regex(parse_dsl("concat(<cap>,<num>)")) == "[A-Z][0-9]");
    CHECK(to_standard_regex(parse_dsl("and(startwith(<a>),endwith(<b>))")) == "(a.*)&(.*b)");
    CHECK(to_standard_regex(parse_dsl("or(<low>,<num>)")) == "[a-z]|[0-9]");
    CHECK(to_standard_regex(parse_dsl("rep(<num>,3)")) == "[0-9]{3}");
    CHECK(to_standard_regex(parse_dsl("repatleast(<let>,2)")) == "[A-Za-z]{2,}");
    CHECK(to_standard_regex(parse_dsl("reprange(<num>,1,3)")) == "[0-9]{1,3}");
    CHECK(to_standard_regex(parse_dsl("notcc(<num>)")) == "[^0123456789]");
    CHECK(to_standard_regex(parse_dsl("notcc(<a>)")) == "[^a]");
    CHECK(to_standard_regex(parse_dsl("notcc(<any>)")) == "∅");
    CHECK(to_standard_regex(parse_dsl("notcc(<null>)")) == ".");
}

TEST_CASE("standard notation parenthesizes by precedence") {
    CHECK(to_standard_regex(parse_dsl("or(concat(<a>,<b>),<c>)")) == "ab|c");
    CHECK(to_standard_regex(parse_dsl("concat(or(<a>,<b>),<c>)")) == "(a|b)c");
    CHECK(to_standard_regex(parse_dsl("star(or(<a>,<b>))")) == "(a|b)*");
    CHECK(to_standard_regex(parse_dsl("star(<ab>)")) == "(ab)*");
    CHECK(to_standard_regex(parse_dsl("star(star(<a>))")) == "(a*)*");
    CHECK(to_standard_regex(parse_dsl("rep(not(<a>),2)")) == "(~(a)){2}");
    CHECK(to_standard_regex(parse_dsl("concat(not(<a>),<b>)")) == "~(a)b");
    CHECK(to_standard_regex(parse_dsl("and(or(<a>,<b>),<c>)")) == "(a|b)&(c)");
    CHECK(to_standard_regex(parse_dsl("startwith(concat(<a>,<b>))")) == "ab.*");
    CHECK(to_standard_regex(parse_dsl("star(startwith(<a>))")) == "(a.*)*");
    CHECK(to_standard_regex(parse_dsl("concat(reprange(<num>,1,2),concat(<.>,reprange(<num>,1,2))"
                                      ")")) == "[0-9]{1,2}\\.[0-9]{1,2}");
}

TEST_CASE("placeholder trees refuse to render as standard notation") {
    AstPtr anon = anonymize(parse_dsl("rep(<a>,3)"));
    CHECK_THROWS_AS(to_standard_regex(anon), Error);
    AstPtr nested = parse_dsl("concat(<x>,rep(<num>,int))");
    CHECK_THROWS_AS(to_standard_regex(nested), Error);
}

TEST_CASE("holes print but do not parse") {
    AstPtr partial = re::contain(re::hole());
    CHECK(print_dsl(partial) == "contain(?)");
    CHECK(contains_hole(partial));
    CHECK_FALSE(contains_hole(parse_dsl("contain(<a>)")));
    CHECK_THROWS_AS(parse_dsl("contain(?)"), DslError);
}
