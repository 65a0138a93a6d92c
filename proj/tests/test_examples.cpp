#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "streg/dfa.hpp"
#include "streg/dsl.hpp"
#include "streg/errors.hpp"
#include "streg/examples.hpp"
#include "streg/grammar.hpp"
#include "support/ast_gen.hpp"

using namespace streg;

namespace {

std::set<std::string> perturb_prints(const std::string& dsl, std::uint64_t seed = 5) {
    Rng rng(seed);
    std::set<std::string> out;
    for (const auto& [pert, cand] : perturb(parse_dsl(dsl), rng)) out.insert(print_dsl(cand));
    return out;
}

std::vector<std::string> texts(const std::vector<LabeledExample>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.text);
    return out;
}

} // namespace

TEST_CASE("perturbation kinds have stable names") {
    CHECK(perturb_kind_name(PerturbKind::ClassSwap) == "class-swap");
    CHECK(perturb_kind_name(PerturbKind::ParameterShift) == "parameter-shift");
    CHECK(perturb_kind_name(PerturbKind::NegationFlip) == "constraint-negation-flip");
    CHECK(perturb_kind_name(PerturbKind::ComponentDrop) == "component-drop");
    CHECK(perturb_kind_name(PerturbKind::ComponentDuplicate) == "component-duplicate");
    CHECK(perturb_kind_name(PerturbKind::ConstantSwap) == "constant-swap");
    CHECK(perturb_kind_name(PerturbKind::OptionalityToggle) == "optionality-toggle");

    Perturbation p{{1, 0}, PerturbKind::ClassSwap};
    CHECK(perturbation_tag(p) == "class-swap:1.0");
    CHECK(perturbation_tag({{}, PerturbKind::ComponentDrop}) == "component-drop");
}

TEST_CASE("parameter shifts move repetition counts by one") {
    Rng rng(1);
    bool down = false, up = false;
    for (const auto& [pert, cand] : perturb(parse_dsl("rep(<num>,4)"), rng)) {
        std::string p = print_dsl(cand);
        if (p == "rep(<num>,3)") {
            down = true;
            CHECK(pert.kind == PerturbKind::ParameterShift);
            CHECK(pert.path.empty());
        }
        if (p == "rep(<num>,5)") up = true;
    }
    CHECK(down);
    CHECK(up);

    // reprange respects its k1 < k2 envelope
    auto spans = perturb_prints("reprange(<num>,2,3)");
    CHECK(spans.count("reprange(<num>,1,3)") == 1);
    CHECK(spans.count("reprange(<num>,2,4)") == 1);
    CHECK(spans.count("reprange(<num>,3,3)") == 0); // would violate k1 < k2
}

TEST_CASE("class swap steps to the neighboring class") {
    auto prints = perturb_prints("startwith(<low>)");
    CHECK(prints.count("startwith(<cap>)") == 1);

    // <low> tightens <let>, so that swap has an empty difference and is culled
    auto widened = perturb_prints("rep(<let>,2)");
    CHECK(widened.count("rep(<low>,2)") == 0);
    // <num> to <let> strictly widens and survives
    auto num = perturb_prints("rep(<num>,2)");
    CHECK(num.count("rep(<let>,2)") == 1);
}

TEST_CASE("negation flips add or remove the wrapper") {
    auto prints = perturb_prints("not(contain(<x>))");
    CHECK(prints.count("contain(<x>)") == 1);
    for (const std::string& p : prints) CHECK(p.find("not(not(") == std::string::npos);

    auto bare = perturb_prints("contain(<1>)");
    CHECK(bare.count("not(contain(<1>))") == 1);
}

TEST_CASE("chain mutations drop, double and soften components") {
    Rng rng(3);
    AstPtr ast = parse_dsl("concat(<a>,rep(<num>,2))");
    bool saw_drop = false, saw_dup = false, saw_wrap = false;
    for (const auto& [pert, cand] : perturb(ast, rng)) {
        if (pert.kind == PerturbKind::ComponentDrop) saw_drop = true;
        if (pert.kind == PerturbKind::ComponentDuplicate) saw_dup = true;
        if (pert.kind == PerturbKind::OptionalityToggle) saw_wrap = true;
        CHECK_FALSE(ast_equal(cand, ast));
    }
    CHECK(saw_drop);
    CHECK(saw_dup);
    CHECK(saw_wrap);

    auto prints = perturb_prints("concat(<a>,rep(<num>,2))");
    CHECK(prints.count("rep(<num>,2)") == 1);
    CHECK(prints.count("<a>") == 1);
    CHECK(prints.count("concat(optional(<a>),rep(<num>,2))") == 1);
    CHECK(prints.count("concat(<a>,optional(rep(<num>,2)))") == 1);

    // chain operations fire once, at the chain root, not per spine node
    Rng rng2(4);
    int drops = 0;
    for (const auto& [pert, cand] : perturb(parse_dsl("concat(<a>,<b>,<c>)"), rng2))
        if (pert.kind == PerturbKind::ComponentDrop) ++drops;
    CHECK(drops == 3);
}

TEST_CASE("mutations that do not escape the language are culled") {
    Rng rng(6);
    CHECK(perturb(parse_dsl("star(<any>)"), rng).empty());
}

TEST_CASE("language-superset near-misses sort to the front") {
    Rng rng(8);
    AstPtr ast = parse_dsl("and(startwith(<C>),endwith(<num>))");
    auto cands = perturb(ast, rng);
    REQUIRE(cands.size() >= 3);

    Dfa orig = compile(ast);
    std::vector<bool> superset;
    for (const auto& [pert, cand] : cands)
        superset.push_back(is_empty(difference(orig, compile(cand))));
    CHECK(superset.front());
    CHECK_FALSE(std::is_sorted(superset.begin(), superset.end())); // both groups present
    // once a non-superset appears, no superset may follow
    auto first_bad = std::find(superset.begin(), superset.end(), false);
    CHECK(std::find(first_bad, superset.end(), true) == superset.end());
    CHECK(cands.front().first.kind == PerturbKind::ComponentDrop);
}

TEST_CASE("positive examples are distinct accepted strings near the shortest length") {
    AstPtr ast = parse_dsl("and(startwith(<C0>),endwith(rep(<num>,4)))");
    Dfa d = compile(ast);
    ExampleConfig cfg;

    Rng rng(11);
    PositiveSet res = gen_positive(ast, cfg, rng);
    CHECK(res.examples.size() == 6);
    CHECK_FALSE(res.shortfall);
    std::set<std::string> distinct;
    for (const auto& x : res.examples) {
        CHECK(x.positive);
        CHECK(x.provenance == "traversal");
        CHECK(d.matches(x.text));
        CHECK(x.text.size() >= 5); // C0 overlapping four digits
        CHECK(x.text.size() <= 13);
        distinct.insert(x.text);
    }
    CHECK(distinct.size() == 6);

    Rng rng2(11);
    CHECK(texts(gen_positive(ast, cfg, rng2).examples) == texts(res.examples));
}

TEST_CASE("small finite languages flag a shortfall instead of failing") {
    Rng rng(12);
    PositiveSet res = gen_positive(parse_dsl("or(<a>,or(<b>,<c>))"), {}, rng);
    CHECK(res.shortfall);
    auto got = texts(res.examples);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("window slack bounds the lengths considered") {
    AstPtr ast = parse_dsl("repatleast(<a>,1)");
    ExampleConfig cfg;
    cfg.window_slack = 0;
    Rng rng(13);
    PositiveSet res = gen_positive(ast, cfg, rng);
    CHECK(res.examples.size() == 1);
    CHECK(res.examples[0].text == "a");
    CHECK(res.shortfall);

    cfg.window_slack = 2;
    Rng rng2(13);
    auto wider = texts(gen_positive(ast, cfg, rng2).examples);
    std::sort(wider.begin(), wider.end());
    CHECK(wider == std::vector<std::string>{"a", "aa", "aaa"});
}

TEST_CASE("negative examples are rejected strings with perturbation provenance") {
    AstPtr ast = parse_dsl("and(startwith(<C0>),endwith(rep(<num>,4)))");
    Dfa d = compile(ast);
    CHECK_FALSE(d.matches("C04444x")); // near-miss with a trailing letter

    ExampleConfig cfg;
    Rng rng(21);
    NegativeSet res = gen_negative(ast, cfg, rng);
    CHECK(res.examples.size() == 6);
    CHECK_FALSE(res.shortfall);
    std::set<std::string> distinct;
    int tagged = 0;
    for (const auto& x : res.examples) {
        CHECK_FALSE(x.positive);
        CHECK_FALSE(d.matches(x.text));
        CHECK_FALSE(x.provenance.empty());
        if (x.provenance != "fallback") ++tagged;
        distinct.insert(x.text);
    }
    CHECK(distinct.size() == 6);
    CHECK(tagged == 6); // enough perturbations that no fallback is needed

    Rng rng2(21);
    CHECK(texts(gen_negative(ast, cfg, rng2).examples) == texts(res.examples));
}

TEST_CASE("universal originals yield an empty negative set without raising") {
    Rng rng(22);
    NegativeSet res = gen_negative(parse_dsl("star(<any>)"), {}, rng);
    CHECK(res.examples.empty());
    CHECK(res.shortfall);
}

TEST_CASE("scarce perturbations fall back to random rejected strings") {
    AstPtr ast = parse_dsl("<a>");
    Dfa d = compile(ast);
    ExampleConfig cfg;
    Rng rng(23);
    NegativeSet res = gen_negative(ast, cfg, rng);
    CHECK(res.examples.size() == 6);
    CHECK_FALSE(res.shortfall);
    int fallback = 0;
    bool swapped = false;
    for (const auto& x : res.examples) {
        CHECK_FALSE(d.matches(x.text));
        if (x.provenance == "fallback") ++fallback;
        if (x.provenance.rfind("constant-swap", 0) == 0) swapped = true;
    }
    CHECK(fallback >= 4); // the single-character language offers few near-misses
    CHECK(swapped);
}

TEST_CASE("empty languages refuse to produce examples") {
    Rng rng(24);
    CHECK_THROWS_AS(gen_positive(parse_dsl("<null>"), {}, rng), SampleWindowError);
    CHECK_THROWS_AS(gen_negative(parse_dsl("<null>"), {}, rng), SampleWindowError);
}

TEST_CASE("tuple-field fixture accepts its classic strings and rejects the near-misses") {
    AstPtr ast = parse_dsl("concat(<a>,rep(<num>,2),<,>,optional(<B>),reprange(<num>,2,3))");
    Dfa d = compile(ast);
    CHECK(d.matches("a51,B457"));
    CHECK(d.matches("a51,457"));
    CHECK_FALSE(d.matches("a7,B23"));

    ExampleConfig cfg;
    Rng rng(31);
    for (const auto& x : gen_positive(ast, cfg, rng).examples) CHECK(d.matches(x.text));
    Rng rng2(32);
    NegativeSet neg = gen_negative(ast, cfg, rng2);
    CHECK(neg.examples.size() == 6);
    for (const auto& x : neg.examples) CHECK_FALSE(d.matches(x.text));
}

TEST_CASE("sampled regexes get sound, distinguishing example sets") {
    GrammarConfig gcfg;
    gcfg.seed = 404;
    auto batch = sample_batch(30, std::nullopt, gcfg);
    REQUIRE(batch.size() == 30);

    ExampleConfig cfg;
    int distinguishing = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const AstPtr& ast = batch[i].second;
        Dfa d = compile(ast);
        Rng rng(1000 + i);
        PositiveSet pos = gen_positive(ast, cfg, rng);
        NegativeSet neg = gen_negative(ast, cfg, rng);
        CHECK_FALSE(pos.examples.empty());
        CHECK_FALSE(neg.examples.empty());
        for (const auto& x : pos.examples) CHECK(d.matches(x.text));
        for (const auto& x : neg.examples) CHECK_FALSE(d.matches(x.text));

        // some near-miss must accept every positive plus at least one negative
        Rng prng(2000 + i);
        bool found = false;
        for (const auto& [pert, cand] : perturb(ast, prng)) {
            Dfa cd = compile(cand);
            bool all_pos = std::all_of(pos.examples.begin(), pos.examples.end(),
                                       [&](const LabeledExample& x) { return cd.matches(x.text); });
            if (!all_pos) continue;
            if (std::any_of(neg.examples.begin(), neg.examples.end(),
                            [&](const LabeledExample& x) { return cd.matches(x.text); })) {
                found = true;
                break;
            }
        }
        if (found) ++distinguishing;
    }
    CHECK(distinguishing >= 27); // at least nine in ten
}
