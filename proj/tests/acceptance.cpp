// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "rcgp/grammar_json.hpp"
#include "rcgp/pipeline.hpp"
#include "rcgp/polarity.hpp"
#include "rcgp/rcg.hpp"

using namespace rcgp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void outcome(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::string data_path(const std::string& rel) {
    return std::string(RCGP_DATA_DIR) + "/" + rel;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ------------------------------------------------------------ criterion 1

void criterion1() {
    auto t0 = Clock::now();
    ParseRequest req;
    req.grammarPath = data_path("fig1/grammar.json");
    req.morphPath = data_path("fig1/morph.lex");
    req.lemmaPath = data_path("fig1/lemma.lex");
    req.sentence = "John loves Mary";
    req.withSemantics = true;
    ParseReport report = run_parse(req);
    double elapsed = seconds_since(t0);

    std::set<std::string> expected = {"love(j,m)", "name(j,john)", "name(m,mary)"};
    std::set<std::string> got;
    if (report.derivations.size() == 1)
        for (const auto& lit : report.derivations[0].semantics) got.insert(lit.str());

    bool pass = report.status == ParseStatus::Ok && report.derivations.size() == 1 &&
                got == expected && elapsed < 1.0;
    std::ostringstream detail;
    detail << report.derivations.size() << " derivation(s), semantics {";
    bool first = true;
    for (const auto& s : got) {
        if (!first) detail << ", ";
        first = false;
        detail << s;
    }
    detail << "}, " << elapsed << " s";
    outcome(1, pass, "Fig. 1 reproduction: one derivation with the figure's semantics",
            detail.str());
}

// ------------------------------------------------------------ criterion 2

void criterion2() {
    Grammar g = load_grammar(data_path("fig2/grammar.json"));
    Lexicon lex = load_lexicon(data_path("fig2/morph.lex"), data_path("fig2/lemma.lex"));
    AnchorResult anchored = anchor({"John", "eats", "a", "cake"}, g, lex);

    bool pass = false;
    std::string detail;
    try {
        PolarityAutomaton a = build_automaton(anchored.perToken, "S");
        auto sets = valid_sets(a);
        std::set<std::string> names;
        if (sets.size() == 1)
            for (const auto* t : sets[0]) names.insert(t->base);
        std::string accepting =
            a.accepting.size() == 1 ? a.states[a.accepting[0]].polarity.render("S") : "?";
        pass = sets.size() == 1 &&
               names == std::set<std::string>{"proper", "trans", "det", "noun"} &&
               accepting == "S+";
        std::ostringstream d;
        d << sets.size() << " valid set(s), accepting state '" << accepting << "'";
        detail = d.str();
    } catch (const Error& e) {
        detail = e.what();
    }
    outcome(2, pass, "Fig. 2 reproduction: unique set {proper,trans,det,noun}, state 'S+'",
            detail);
}

// -------------------------------------------------- criteria 3, 4 and 6

struct CorpusStats {
    long grammars = 0;
    long strings = 0;
    long derivationChecks = 0;
    long mismatches3 = 0;
    long mismatches4 = 0;
    long simpleViolations = 0;  // criterion 6 accumulator
    std::string firstMismatch;
};

std::vector<std::vector<std::string>> all_strings(const std::vector<std::string>& alphabet,
                                                  int maxLen) {
    std::vector<std::vector<std::string>> out = {{}};
    std::vector<std::vector<std::string>> frontier = {{}};
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<std::vector<std::string>> next;
        for (const auto& prefix : frontier) {
            for (const auto& w : alphabet) {
                auto s = prefix;
                s.push_back(w);
                next.push_back(s);
                out.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ' ';
        s += tokens[i];
    }
    return s;
}

std::set<std::string> pipeline_keys(const ParseReport& report) {
    std::set<std::string> keys;
    for (const auto& d : report.derivations) keys.insert(d.derivation.canonical_key());
    return keys;
}

void criteria_3_4_6() {
    std::mt19937 rng(20080823);
    CorpusStats stats;
    auto t0 = Clock::now();

    const int grammarCount = 200;
    for (int gi = 0; gi < grammarCount; ++gi) {
        oracle::RandomTag rt = oracle::random_tag(rng, gi % 2 == 0);
        if (!validate(rt.grammar).empty()) continue;  // generator guarantees this
        ++stats.grammars;

        oracle::OracleResult oracleResult = oracle::enumerate_tag(rt.oracleTrees, "S", 6);

        for (const auto& tokens : all_strings(rt.alphabet, 6)) {
            ++stats.strings;
            ParseRequest req;
            req.sentence = join(tokens);
            req.maxDerivations = 100000;
            ParseReport filtered = run_parse(req, rt.grammar, rt.lexicon);
            std::set<std::string> got = pipeline_keys(filtered);

            auto expectedVec = oracleResult.keys_for(tokens);
            std::set<std::string> expected(expectedVec.begin(), expectedVec.end());
            stats.derivationChecks += static_cast<long>(expected.size());

            if (got != expected) {
                ++stats.mismatches3;
                if (stats.firstMismatch.empty()) {
                    std::ostringstream os;
                    os << "grammar " << gi << " on '" << join(tokens) << "': pipeline "
                       << got.size() << " vs oracle " << expected.size();
                    stats.firstMismatch = os.str();
                }
            }

            req.noFilter = true;
            ParseReport unfiltered = run_parse(req, rt.grammar, rt.lexicon);
            if (pipeline_keys(unfiltered) != got) ++stats.mismatches4;
        }

        // criterion 6 over this grammar's converted tree sets
        AnchorResult anchored = anchor(rt.alphabet, rt.grammar, rt.lexicon);
        std::vector<const AnchoredTree*> all;
        for (const auto& perToken : anchored.perToken)
            for (const auto& cand : perToken) all.push_back(&cand);
        if (!all.empty())
            stats.simpleViolations +=
                static_cast<long>(check_simple(convert(all, "S")).size());
    }

    double elapsed = seconds_since(t0);
    {
        std::ostringstream d;
        d << stats.grammars << " grammars, " << stats.strings << " strings, "
          << stats.derivationChecks << " oracle derivations, " << stats.mismatches3
          << " mismatches, " << elapsed << " s";
        if (!stats.firstMismatch.empty()) d << "; first: " << stats.firstMismatch;
        outcome(3, stats.mismatches3 == 0 && stats.grammars >= 200 && elapsed < 60.0,
                "pipeline equals the brute-force TAG oracle on the randomized corpus",
                d.str());
    }
    {
        std::ostringstream d;
        d << stats.mismatches4 << " filter on/off discrepancies";
        outcome(4, stats.mismatches4 == 0, "polarity filtering never changes the parse results",
                d.str());
    }

    // criterion 6 also covers the a^n b^n conversions of criterion 5
    Grammar anbn = load_grammar(data_path("anbn/grammar.json"));
    std::vector<AnchoredTree> insts;
    int id = 0;
    for (const auto& [name, tree] : anbn.trees) insts.push_back(make_instance(tree, id++));
    std::vector<const AnchoredTree*> ptrs;
    for (const auto& i : insts) ptrs.push_back(&i);
    stats.simpleViolations += static_cast<long>(check_simple(convert(ptrs, "S")).size());

    std::ostringstream d6;
    d6 << stats.simpleViolations << " diagnostics";
    outcome(6, stats.simpleViolations == 0,
            "check_simple is empty for every grammar tag2rcg produced", d6.str());
}

// ------------------------------------------------------------ criterion 5

void criterion5() {
    Grammar g = load_grammar(data_path("anbn/grammar.json"));
    std::vector<AnchoredTree> insts;
    int id = 0;
    for (const auto& [name, tree] : g.trees) insts.push_back(make_instance(tree, id++));
    std::vector<const AnchoredTree*> ptrs;
    for (const auto& i : insts) ptrs.push_back(&i);
    SimpleRCG rcg = convert(ptrs, "S");

    auto input = [](int as, int bs) {
        std::vector<std::string> s;
        for (int i = 0; i < as; ++i) s.push_back("a");
        for (int i = 0; i < bs; ++i) s.push_back("b");
        return s;
    };

    bool recognitionOk = true;
    std::vector<std::size_t> factCounts;
    for (int n = 0; n <= 10; ++n) {
        Forest f = parse(rcg, input(n, n), rcg.start);
        if (!f.ok()) recognitionOk = false;
        factCounts.push_back(f.facts.size());
    }
    for (int n = 1; n <= 10; ++n) {
        if (parse(rcg, input(n, n + 1), rcg.start).ok()) recognitionOk = false;
        if (parse(rcg, input(n + 1, n), rcg.start).ok()) recognitionOk = false;
    }

    double maxSlope = 0;
    for (int n = 2; n <= 10; ++n) {
        double slope = std::log(double(factCounts[n]) / double(factCounts[n - 1])) /
                       std::log(double(n) / double(n - 1));
        maxSlope = std::max(maxSlope, slope);
    }

    std::ostringstream d;
    d << "facts at n=10: " << factCounts[10] << ", max log-log slope " << maxSlope;
    outcome(5, recognitionOk && maxSlope <= 6.0,
            "a^n b^n recognized for n<=10, offsets rejected, growth within degree 6", d.str());
}

// ------------------------------------------------------------ criterion 7

void criterion7() {
    Grammar g;
    g.axiom = "S";
    {
        ElementaryTree verb;
        verb.name = "intransS";
        verb.family = "V1";
        TreeNode np;
        np.cat = "NP";
        np.kind = NodeKind::Substitution;
        np.name = "NParg1";
        np.top = parse_fs("[num=sg]");
        TreeNode v;
        v.cat = "V";
        v.kind = NodeKind::Anchor;
        TreeNode vp;
        vp.cat = "VP";
        vp.kind = NodeKind::Internal;
        vp.adj = AdjConstraint::Allowed;
        vp.children = {v};
        TreeNode s;
        s.cat = "S";
        s.kind = NodeKind::Internal;
        s.adj = AdjConstraint::Allowed;
        s.children = {np, vp};
        verb.root = s;
        g.families[verb.family].insert(verb.name);
        g.trees.emplace(verb.name, verb);

        ElementaryTree noun;
        noun.name = "plainNP";
        noun.family = "NPfam";
        TreeNode root;
        root.cat = "NP";
        root.kind = NodeKind::Anchor;
        noun.root = root;
        g.families[noun.family].insert(noun.name);
        g.trees.emplace(noun.name, noun);
    }
    Lexicon lex;
    lex.morph.push_back({"dogs", "dog", parse_fs("[num=pl]")});
    lex.morph.push_back({"barks", "bark", {}});
    LemmaEntry dog;
    dog.entry = "dog";
    dog.cat = "NP";
    dog.fam = "NPfam";
    lex.lemmas.push_back(dog);
    LemmaEntry bark;
    bark.entry = "bark";
    bark.cat = "V";
    bark.fam = "V1";
    lex.lemmas.push_back(bark);

    ParseRequest req;
    req.sentence = "dogs barks";
    req.robust = true;
    ParseReport report = run_parse(req, g, lex);

    bool pass = false;
    std::string detail = "no derivation";
    if (report.derivations.size() == 1) {
        const auto& fails = report.derivations[0].failures;
        if (fails.size() == 1) {
            const UnifClash& c = fails[0].clash;
            pass = c.attribute == "num" &&
                   std::set<std::string>{c.left, c.right} == std::set<std::string>{"pl", "sg"};
            detail = "failure: " + fails[0].str();
        } else {
            detail = std::to_string(fails.size()) + " failures";
        }
    }
    outcome(7, pass, "robust mode reports exactly one num=sg/pl mismatch", detail);
}

// ------------------------------------------------------------ criterion 8

void criterion8() {
    // 50-schema grammar: 8 proper nouns, 8 transitive + 8 intransitive verb
    // frames, 8 common nouns, 9 determiners, 9 VP adverbs; lexicon filters
    // select one variant per family, leaving the verb frame ambiguity to the
    // polarity filter.
    Grammar g;
    g.axiom = "S";
    auto addVariant = [&](ElementaryTree t, int i) {
        t.name += std::to_string(i);
        t.interface = parse_fs("[variant=v" + std::to_string(i) + "]");
        g.families[t.family].insert(t.name);
        g.trees.emplace(t.name, std::move(t));
    };

    for (int i = 0; i < 8; ++i) {
        ElementaryTree pn;
        pn.name = "pn";
        pn.family = "properNoun";
        TreeNode root;
        root.cat = "NP";
        root.kind = NodeKind::Anchor;
        pn.root = root;
        addVariant(pn, i);

        ElementaryTree noun;
        noun.name = "noun";
        noun.family = "Noun";
        TreeNode n;
        n.cat = "N";
        n.kind = NodeKind::Anchor;
        n.adj = AdjConstraint::Allowed;
        TreeNode np;
        np.cat = "NP";
        np.kind = NodeKind::Internal;
        np.adj = AdjConstraint::Allowed;
        np.children = {n};
        noun.root = np;
        addVariant(noun, i);

        ElementaryTree trans;
        trans.name = "trans";
        trans.family = "Vnp2";
        {
            TreeNode subj;
            subj.cat = "NP";
            subj.kind = NodeKind::Substitution;
            subj.top = parse_fs("[i=?x]");
            TreeNode v;
            v.cat = "V";
            v.kind = NodeKind::Anchor;
            TreeNode obj;
            obj.cat = "NP";
            obj.kind = NodeKind::Substitution;
            obj.top = parse_fs("[i=?y]");
            TreeNode vp;
            vp.cat = "VP";
            vp.kind = NodeKind::Internal;
            vp.adj = AdjConstraint::Allowed;
            vp.children = {v, obj};
            TreeNode s;
            s.cat = "S";
            s.kind = NodeKind::Internal;
            s.adj = AdjConstraint::Allowed;
            s.children = {subj, vp};
            trans.root = s;
        }
        addVariant(trans, i);

        ElementaryTree intrans;
        intrans.name = "intrans";
        intrans.family = "Vnp1";
        {
            TreeNode subj;
            subj.cat = "NP";
            subj.kind = NodeKind::Substitution;
            subj.top = parse_fs("[i=?x]");
            TreeNode v;
            v.cat = "V";
            v.kind = NodeKind::Anchor;
            TreeNode vp;
            vp.cat = "VP";
            vp.kind = NodeKind::Internal;
            vp.adj = AdjConstraint::Allowed;
            vp.children = {v};
            TreeNode s;
            s.cat = "S";
            s.kind = NodeKind::Internal;
            s.adj = AdjConstraint::Allowed;
            s.children = {subj, vp};
            intrans.root = s;
        }
        addVariant(intrans, i);
    }
    for (int i = 0; i < 9; ++i) {
        ElementaryTree det;
        det.name = "det";
        det.family = "Det";
        det.type = TreeType::Auxiliary;
        {
            TreeNode d;
            d.cat = "D";
            d.kind = NodeKind::Anchor;
            TreeNode foot;
            foot.cat = "N";
            foot.kind = NodeKind::Foot;
            TreeNode root;
            root.cat = "N";
            root.kind = NodeKind::Internal;
            root.adj = AdjConstraint::Forbidden;
            root.children = {d, foot};
            det.root = root;
        }
        addVariant(det, i);

        ElementaryTree adv;
        adv.name = "adv";
        adv.family = "Adv";
        adv.type = TreeType::Auxiliary;
        {
            TreeNode a;
            a.cat = "Adv";
            a.kind = NodeKind::Anchor;
            TreeNode foot;
            foot.cat = "VP";
            foot.kind = NodeKind::Foot;
            TreeNode root;
            root.cat = "VP";
            root.kind = NodeKind::Internal;
            root.adj = AdjConstraint::Allowed;
            root.children = {a, foot};
            adv.root = root;
        }
        addVariant(adv, i);
    }

    Lexicon lex;
    auto addWord = [&](const std::string& word, const std::string& cat, const std::string& fam,
                       const std::string& sem, const std::string& params) {
        lex.morph.push_back({word, word, {}});
        LemmaEntry e;
        e.entry = word;
        e.cat = cat;
        e.fam = fam;
        e.filters = parse_fs("[variant=v0]");
        if (!sem.empty()) e.sem = {sem, parse_fs(params)};
        lex.lemmas.push_back(e);
    };
    addWord("john", "NP", "properNoun", "NamedEntity", "[pred=name,const=j,word=john]");
    addWord("sees", "V", "Vnp2", "BinaryRel", "[pred=see]");
    {
        LemmaEntry e;  // sees is also intransitive: the filter must prune it
        e.entry = "sees";
        e.cat = "V";
        e.fam = "Vnp1";
        e.filters = parse_fs("[variant=v0]");
        e.sem = {"UnaryRel", parse_fs("[pred=see]")};
        lex.lemmas.push_back(e);
    }
    addWord("the", "D", "Det", "", "");
    addWord("cat", "N", "Noun", "UnaryRel", "[pred=cat]");
    for (const char* wordName :
         {"quickly", "quietly", "slowly", "surely", "often", "rarely"})
        addWord(wordName, "Adv", "Adv", "", "");

    const std::string sentence = "john quickly quietly slowly surely often rarely sees the cat";

    ParseRequest req;
    req.sentence = sentence;
    req.withSemantics = true;
    auto t0 = Clock::now();
    ParseReport report = run_parse(req, g, lex);
    double elapsed = seconds_since(t0);

    bool pass = report.status == ParseStatus::Ok && g.trees.size() == 50 &&
                tokenize(sentence).size() == 10 && elapsed < 2.0;
    std::ostringstream d;
    d << g.trees.size() << " trees, " << tokenize(sentence).size() << " tokens, "
      << report.derivations.size() << " derivation(s), " << elapsed << " s";
    outcome(8, pass, "50-tree grammar parses a 10-token sentence with semantics in < 2 s",
            d.str());
}

// ------------------------------------------------------------ criterion 9

void criterion9() {
    std::ifstream morphIn(data_path("fig5/morph.lex"));
    std::ifstream lemmaIn(data_path("fig5/lemma.lex"));
    std::ostringstream mo, lo;
    mo << morphIn.rdbuf();
    lo << lemmaIn.rdbuf();

    bool pass = true;
    std::string detail;
    try {
        std::string first = convert(mo.str(), lo.str());
        std::string second = lexicon_to_json(lexicon_from_json(first));
        bool stable = first == second;

        auto morph = parse_morph(mo.str());
        auto lemmas = parse_lemmas(lo.str());
        bool fieldsOk =
            morph.size() == 1 && morph[0].word == "vergisst" &&
            morph[0].lemma == "vergessen" &&
            fs_str(morph[0].features) == "[num=sg,per=3,pos=v]" && lemmas.size() == 1 &&
            lemmas[0].entry == "vergessen" && lemmas[0].cat == "v" &&
            lemmas[0].sem.name == "BinaryRel" &&
            fs_str(lemmas[0].sem.params) == "[pred=vergessen]" && lemmas[0].acc == "1" &&
            lemmas[0].fam == "Vnp2" && lemmas[0].filters.empty() &&
            lemmas[0].equations ==
                std::vector<Equation>{{"NParg1", FsSide::Top, "cas", FeatValue::atom("nom")},
                                      {"NParg2", FsSide::Top, "cas", FeatValue::atom("acc")}} &&
            lemmas[0].coanchors.empty();

        pass = stable && fieldsOk;
        detail = std::string("byte-stable=") + (stable ? "yes" : "no") +
                 ", fields=" + (fieldsOk ? "exact" : "MISMATCH");
    } catch (const Error& e) {
        pass = false;
        detail = e.what();
    }
    outcome(9, pass, "lexConverter round-trip is byte-stable and field-exact", detail);
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criteria_3_4_6();
        criterion5();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "acceptance: unexpected exception: " << e.what() << std::endl;
        return 99;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
