#include <doctest.h>

#include "helpers.hpp"
#include "rcgp/derivation.hpp"
#include "rcgp/grammar_json.hpp"
#include "rcgp/pipeline.hpp"
#include "rcgp/semantics.hpp"

using namespace rcgp;

TEST_CASE("instantiate_class expands the built-in skeletons") {
    SemTemplate bin = instantiate_class("BinaryRel", parse_fs("[pred=vergessen]"));
    REQUIRE(bin.literals.size() == 1);
    CHECK(bin.literals[0].pred == "vergessen");
    CHECK(bin.literals[0].args ==
          std::vector<FeatValue>{FeatValue::var("x"), FeatValue::var("y")});

    SemTemplate un = instantiate_class("UnaryRel", parse_fs("[pred=sleep]"));
    CHECK(un.literals[0].args == std::vector<FeatValue>{FeatValue::var("x")});

    SemTemplate ne = instantiate_class("NamedEntity", parse_fs("[pred=name,const=j,word=john]"));
    REQUIRE(ne.literals.size() == 1);
    CHECK(ne.literals[0].pred == "name");
    CHECK(ne.literals[0].args ==
          std::vector<FeatValue>{FeatValue::atom("j"), FeatValue::atom("john")});
}

TEST_CASE("unknown classes and missing parameters are rejected") {
    CHECK_THROWS_AS(instantiate_class("TernaryRel", {}), UnknownClass);
    CHECK_THROWS_AS(instantiate_class("BinaryRel", {}), FormatError);
    CHECK_THROWS_AS(instantiate_class("NamedEntity", parse_fs("[pred=name]")), FormatError);
}

namespace {

/// Full pipeline up to derivation + binding for one unambiguous sentence.
struct SemRun {
    Grammar grammar;
    Lexicon lexicon;
    AnchorResult anchored;
    std::vector<const AnchoredTree*> trees;
    SimpleRCG rcg;
    Forest forest;
    DerivationTree derivation;
    Binding binding;
};

SemRun fig1_run(const std::vector<std::string>& tokens) {
    SemRun r;
    r.grammar = load_grammar(th::data_path("fig1/grammar.json"));
    r.lexicon = load_lexicon(th::data_path("fig1/morph.lex"), th::data_path("fig1/lemma.lex"));
    r.anchored = anchor(tokens, r.grammar, r.lexicon);
    for (const auto& perToken : r.anchored.perToken)
        for (const auto& cand : perToken) r.trees.push_back(&cand);
    r.rcg = convert(r.trees, "S");
    r.forest = parse(r.rcg, tokens, r.rcg.start);
    REQUIRE(r.forest.ok());
    auto derivs = enumerate(r.forest, 10);
    REQUIRE(derivs.size() == 1);
    r.derivation = to_tag_derivation(derivs[0], r.forest, r.rcg, r.trees);
    BuildResult built = build_derived(r.derivation, false);
    REQUIRE(built.ok);
    r.binding = built.tree.binding;
    return r;
}

}  // namespace

TEST_CASE("Fig. 1 semantics: love(j,m), name(j,john), name(m,mary)") {
    SemRun r = fig1_run({"John", "loves", "Mary"});
    SemOutput out = compute(r.derivation, r.binding);
    CHECK(render(out) == "love(j,m), name(j,john), name(m,mary)");
}

TEST_CASE("empty templates yield an empty output") {
    auto t = th::tree("t", "F", TreeType::Initial,
                      th::internal("S", {th::lex("a")}, AdjConstraint::Forbidden));
    AnchoredTree inst = make_instance(t, 0);
    DerivationTree d;
    d.nodes.push_back({&inst, -1});
    CHECK(compute(d, {}).empty());
}

TEST_CASE("a missing argument stays a symbolic variable") {
    // build the loves derivation but drop the object edge: ?y never binds
    SemRun r = fig1_run({"John", "loves", "Mary"});
    DerivationTree partial;
    partial.nodes = r.derivation.nodes;
    for (const auto& e : r.derivation.edges)
        if (e.site == Gorn{0}) partial.edges.push_back(e);
    partial.nodes.resize(2);  // loves + John only
    BuildResult built = build_derived(partial, true);
    SemOutput out = compute(partial, built.tree.binding);
    CHECK(render(out) == "love(j,?y), name(j,john)");
}

TEST_CASE("duplicate resolved literals collapse") {
    auto t = th::tree("t", "F", TreeType::Initial,
                      th::internal("S", {th::lex("a")}, AdjConstraint::Forbidden));
    t.semantics.literals.push_back({"p", {FeatValue::atom("c")}});
    t.semantics.literals.push_back({"p", {FeatValue::atom("c")}});
    AnchoredTree inst = make_instance(t, 0);
    DerivationTree d;
    d.nodes.push_back({&inst, -1});
    SemOutput out = compute(d, {});
    REQUIRE(out.size() == 1);
    CHECK(out[0].str() == "p(c)");
}

TEST_CASE("distinct unresolved variables with one base name stay distinct") {
    auto t1 = th::tree("t1", "F", TreeType::Initial,
                       th::internal("S", {th::lex("a")}, AdjConstraint::Forbidden));
    t1.semantics.literals.push_back({"p", {FeatValue::var("x")}});
    auto t2 = th::tree("t2", "G", TreeType::Initial,
                       th::internal("S", {th::lex("b")}, AdjConstraint::Forbidden));
    t2.semantics.literals.push_back({"q", {FeatValue::var("x")}});
    AnchoredTree i1 = make_instance(t1, 1);
    AnchoredTree i2 = make_instance(t2, 2);
    DerivationTree d;
    d.nodes.push_back({&i1, -1});
    d.nodes.push_back({&i2, -1});
    SemOutput out = compute(d, {});
    REQUIRE(out.size() == 2);
    CHECK(out[0].args[0] != out[1].args[0]);  // ?x#0 vs ?x#1
}

TEST_CASE("compute is monotone under binding extension") {
    SemRun r = fig1_run({"John", "loves", "Mary"});
    SemOutput grounded = compute(r.derivation, r.binding);
    SemOutput symbolic = compute(r.derivation, {});
    CHECK(grounded.size() == symbolic.size());
}

TEST_CASE("semantic output rendering is canonical") {
    SemOutput out = {{"b", {"1"}}, {"a", {"2"}}};
    std::sort(out.begin(), out.end());
    CHECK(render(out) == "a(2), b(1)");
}
