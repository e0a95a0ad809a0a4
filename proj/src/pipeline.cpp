#include "rcgp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcgp/log.hpp"
#include "rcgp/rcg.hpp"

namespace rcgp {

using nlohmann::json;

std::string status_str(ParseStatus s) {
    switch (s) {
        case ParseStatus::Ok: return "ok";
        case ParseStatus::NoParse: return "no-parse";
        case ParseStatus::LexicalGap: return "lexical-gap";
    }
    return "?";
}

int ParseReport::exit_code() const { return status == ParseStatus::Ok ? 0 : 1; }

std::vector<std::string> tokenize(const std::string& sentence) {
    std::vector<std::string> tokens;
    std::istringstream is(sentence);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// The candidate selections to parse: valid polarity sets, or one unfiltered
/// union set when the filter is off or falls back.
struct Selections {
    std::vector<std::vector<const AnchoredTree*>> sets;
    bool filterUsed = false;
    bool fellBack = false;
    std::string warning;
};

Selections select_sets(const AnchorResult& anchored, const std::string& axiom, bool noFilter) {
    Selections sel;
    auto union_set = [&]() {
        std::vector<const AnchoredTree*> all;
        for (const auto& perToken : anchored.perToken)
            for (const auto& cand : perToken) all.push_back(&cand);
        return all;
    };
    if (noFilter) {
        sel.sets.push_back(union_set());
        return sel;
    }
    try {
        PolarityAutomaton automaton = build_automaton(anchored.perToken, axiom);
        auto sets = valid_sets(automaton);
        if (sets.empty()) {
            sel.fellBack = true;
            sel.warning = "polarity filter found no compatible tree set; parsing unfiltered";
            sel.sets.push_back(union_set());
            return sel;
        }
        sel.filterUsed = true;
        sel.sets = std::move(sets);
    } catch (const FilterError& e) {
        sel.fellBack = true;
        sel.warning = std::string(e.what()) + "; parsing unfiltered";
        sel.sets.push_back(union_set());
    }
    return sel;
}

}  // namespace

ParseReport run_parse(const ParseRequest& req, const Grammar& grammar, const Lexicon& lexicon) {
    ParseReport report;
    report.tokens = tokenize(req.sentence);
    const std::string axiom = req.axiom.empty() ? grammar.axiom : req.axiom;

    auto validation = validate(grammar);
    if (!validation.empty())
        throw FormatError("grammar is not well-formed: " + validation.front().str());

    auto t0 = Clock::now();
    AnchorResult anchored = anchor(report.tokens, grammar, lexicon);
    report.timingMs["anchor"] = ms_since(t0);
    for (const auto& perToken : anchored.perToken)
        report.candidateCounts.push_back(static_cast<int>(perToken.size()));
    report.gapTokens = anchored.gapTokens;

    if (!report.gapTokens.empty()) {
        report.status = ParseStatus::LexicalGap;
        report.anchored = std::move(anchored);
        return report;
    }

    t0 = Clock::now();
    Selections sel = select_sets(anchored, axiom, req.noFilter);
    report.timingMs["filter"] = ms_since(t0);
    report.validSetCount = sel.filterUsed ? static_cast<int>(sel.sets.size()) : 0;
    report.filterUsed = sel.filterUsed;
    report.filterFellBack = sel.fellBack;
    if (!sel.warning.empty()) {
        report.warnings.push_back(sel.warning);
        log::info(sel.warning);
    }
    log::info("pipeline: ", sel.sets.size(), " tree set(s) to parse");

    double convertMs = 0, parseMs = 0, interpretMs = 0, semanticsMs = 0;
    std::set<std::string> seenDerivations;

    for (std::size_t setIdx = 0; setIdx < sel.sets.size(); ++setIdx) {
        const auto& trees = sel.sets[setIdx];

        auto tc = Clock::now();
        SimpleRCG rcg = convert(trees, axiom);
        convertMs += ms_since(tc);
        log::debug("set ", setIdx, ": ", rcg.clauses.size(), " clauses");

        tc = Clock::now();
        Forest forest = parse(rcg, report.tokens, rcg.start);
        parseMs += ms_since(tc);

        ParseReport::SetStats stats;
        stats.facts = static_cast<int>(forest.facts.size());

        if (!forest.ok()) {
            report.sets.push_back(stats);
            continue;
        }

        tc = Clock::now();
        auto rcgDerivs = enumerate(forest, req.maxDerivations);
        stats.rcgDerivations = static_cast<int>(rcgDerivs.size());
        report.sets.push_back(stats);

        for (const auto& rd : rcgDerivs) {
            DerivationTree deriv = to_tag_derivation(rd, forest, rcg, trees);
            if (!seenDerivations.insert(deriv.canonical_key()).second) continue;

            BuildResult derived = build_derived(deriv, req.robust);
            if (!req.robust && !derived.ok) continue;  // strict mode prunes

            DerivationReport dr;
            dr.setIndex = static_cast<int>(setIdx);
            dr.derivation = std::move(deriv);
            dr.derived = std::move(derived.tree);
            dr.failures = std::move(derived.failures);
            if (req.withSemantics) {
                auto ts = Clock::now();
                dr.semantics = compute(dr.derivation, dr.derived.binding);
                semanticsMs += ms_since(ts);
            }
            report.derivations.push_back(std::move(dr));
            if (static_cast<int>(report.derivations.size()) >= req.maxDerivations) break;
        }
        interpretMs += ms_since(tc);
        if (static_cast<int>(report.derivations.size()) >= req.maxDerivations) break;
    }

    report.timingMs["convert"] = convertMs;
    report.timingMs["parse"] = parseMs;
    report.timingMs["interpret"] = interpretMs;
    if (req.withSemantics) report.timingMs["semantics"] = semanticsMs;

    report.status = report.derivations.empty() ? ParseStatus::NoParse : ParseStatus::Ok;
    report.anchored = std::move(anchored);
    return report;
}

namespace {

struct LoadedResources {
    Grammar grammar;
    Lexicon lexicon;
};

LoadedResources load_resources(const ParseRequest& req) {
    LoadedResources res;
    res.grammar = load_grammar(req.grammarPath);
    if (!req.lexiconPath.empty())
        res.lexicon = load_lexicon_normalized(req.lexiconPath);
    else
        res.lexicon = load_lexicon(req.morphPath, req.lemmaPath);
    return res;
}

}  // namespace

ParseReport run_parse(const ParseRequest& req) {
    auto res = load_resources(req);
    return run_parse(req, res.grammar, res.lexicon);
}

namespace {

void derived_text(std::ostream& os, const DerivedNode& n) {
    if (n.kind == NodeKind::Lexical) {
        os << (n.cat.empty() ? "<eps>" : n.cat);
        return;
    }
    os << '(' << n.cat;
    if (!n.fs.empty()) os << fs_str(n.fs);
    for (const auto& c : n.children) {
        os << ' ';
        derived_text(os, c);
    }
    os << ')';
}

void derivation_text(std::ostream& os, const DerivationTree& d) {
    std::vector<std::vector<int>> edgesOf(d.nodes.size());
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        edgesOf[d.edges[e].parent].push_back(static_cast<int>(e));
    std::function<void(int, int)> walk = [&](int node, int depth) {
        os << std::string(static_cast<std::size_t>(depth) * 2 + 4, ' ');
        const auto& n = d.nodes[node];
        os << n.inst->base;
        if (!n.inst->lexItem.empty()) os << '[' << n.inst->lexItem << ']';
        if (n.anchorPos >= 0) os << '@' << n.anchorPos;
        os << '\n';
        for (int e : edgesOf[node]) {
            const auto& edge = d.edges[e];
            os << std::string(static_cast<std::size_t>(depth) * 2 + 6, ' ') << "+- "
               << op_str(edge.op) << " @" << gorn_str(edge.site) << ":\n";
            walk(edge.child, depth + 2);
        }
    };
    if (!d.nodes.empty()) walk(0, 0);
}

json derivation_json(const DerivationTree& d) {
    json out;
    json nodes = json::array();
    for (const auto& n : d.nodes) {
        json jn;
        jn["tree"] = n.inst->base;
        jn["instance"] = n.inst->instanceId;
        jn["lex"] = n.inst->lexItem;
        jn["anchorPos"] = n.anchorPos;
        nodes.push_back(jn);
    }
    out["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : d.edges) {
        json je;
        je["parent"] = e.parent;
        je["child"] = e.child;
        je["op"] = op_str(e.op);
        je["site"] = gorn_str(e.site);
        edges.push_back(je);
    }
    out["edges"] = edges;
    return out;
}

json derived_json(const DerivedNode& n) {
    json out;
    out["cat"] = n.cat;
    out["kind"] = node_kind_str(n.kind);
    if (!n.fs.empty()) {
        json fs = json::object();
        for (const auto& [attr, v] : n.fs) fs[attr] = v.str();
        out["fs"] = fs;
    }
    if (!n.children.empty()) {
        json children = json::array();
        for (const auto& c : n.children) children.push_back(derived_json(c));
        out["children"] = children;
    }
    return out;
}

}  // namespace

std::string report_text(const ParseReport& r) {
    std::ostringstream os;
    os << "status: " << status_str(r.status);
    if (!r.gapTokens.empty()) {
        os << " (unknown tokens:";
        for (const auto& t : r.gapTokens) os << ' ' << t;
        os << ')';
    }
    os << '\n';
    os << "tokens:";
    for (const auto& t : r.tokens) os << ' ' << t;
    os << '\n';
    os << "candidates:";
    for (std::size_t i = 0; i < r.candidateCounts.size(); ++i)
        os << ' ' << r.tokens[i] << '=' << r.candidateCounts[i];
    os << '\n';
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    if (r.filterUsed)
        os << "valid sets: " << r.validSetCount << '\n';
    else
        os << "valid sets: - (filter " << (r.filterFellBack ? "fell back" : "off") << ")\n";
    for (std::size_t i = 0; i < r.sets.size(); ++i)
        os << "set " << i << ": facts=" << r.sets[i].facts
           << " rcg-derivations=" << r.sets[i].rcgDerivations << '\n';
    os << "derivations: " << r.derivations.size() << '\n';
    for (std::size_t i = 0; i < r.derivations.size(); ++i) {
        const auto& dr = r.derivations[i];
        os << "derivation " << i + 1 << " (set " << dr.setIndex << "):\n";
        derivation_text(os, dr.derivation);
        os << "  derived: ";
        derived_text(os, dr.derived.root);
        os << '\n';
        for (const auto& f : dr.failures) os << "  failure: " << f.str() << '\n';
        if (!dr.semantics.empty()) os << "  semantics: " << render(dr.semantics) << '\n';
    }
    os << "timing-ms:";
    for (const auto& [stage, ms] : r.timingMs) {
        os << ' ' << stage << '=' << static_cast<long>(ms * 1000) / 1000.0;
    }
    os << '\n';
    return os.str();
}

std::string report_json(const ParseReport& r) {
    json doc;
    doc["status"] = status_str(r.status);
    doc["tokens"] = r.tokens;
    doc["candidates"] = r.candidateCounts;
    doc["gapTokens"] = r.gapTokens;
    doc["validSets"] = r.validSetCount;
    doc["filterUsed"] = r.filterUsed;
    doc["filterFellBack"] = r.filterFellBack;
    doc["warnings"] = r.warnings;
    json sets = json::array();
    for (const auto& s : r.sets)
        sets.push_back(json::object({{"facts", s.facts}, {"rcgDerivations", s.rcgDerivations}}));
    doc["sets"] = sets;
    json derivations = json::array();
    for (const auto& dr : r.derivations) {
        json jd;
        jd["set"] = dr.setIndex;
        jd["derivation"] = derivation_json(dr.derivation);
        jd["derived"] = derived_json(dr.derived.root);
        json failures = json::array();
        for (const auto& f : dr.failures) {
            json jf;
            jf["tree"] = f.base;
            jf["instance"] = f.instanceId;
            jf["site"] = gorn_str(f.site);
            jf["op"] = f.op;
            jf["attribute"] = f.clash.attribute;
            jf["left"] = f.clash.left;
            jf["right"] = f.clash.right;
            failures.push_back(jf);
        }
        jd["failures"] = failures;
        json sem = json::array();
        for (const auto& lit : dr.semantics)
            sem.push_back(json::object({{"pred", lit.pred}, {"args", lit.args}}));
        jd["semantics"] = sem;
        json deps = json::array();
        for (const auto& dep : dependency_view(dr.derivation))
            deps.push_back(json::object(
                {{"head", dep.head}, {"dependent", dep.dependent}, {"label", dep.label}}));
        jd["dependencies"] = deps;
        derivations.push_back(jd);
    }
    doc["derivations"] = derivations;
    json timing = json::object();
    for (const auto& [stage, ms] : r.timingMs) timing[stage] = ms;
    doc["timingMs"] = timing;
    return doc.dump(2) + "\n";
}

std::string report_dot(const ParseReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.derivations.size(); ++i) {
        const auto& dr = r.derivations[i];
        std::string suffix = std::to_string(i + 1);
        os << derivation_dot(dr.derivation, "derivation_" + suffix);
        os << derived_dot(dr.derived, "derived_" + suffix);
        os << dependency_dot(dr.derivation, "dependencies_" + suffix);
    }
    return os.str();
}

namespace {

/// Shared front part of the dump commands: anchor + filter.
struct DumpContext {
    std::vector<std::string> tokens;
    AnchorResult anchored;
    Selections selections;
    std::string axiom;
};

DumpContext dump_context(const ParseRequest& req, const Grammar& grammar,
                         const Lexicon& lexicon) {
    DumpContext ctx;
    ctx.tokens = tokenize(req.sentence);
    ctx.axiom = req.axiom.empty() ? grammar.axiom : req.axiom;
    ctx.anchored = anchor(ctx.tokens, grammar, lexicon);
    if (!ctx.anchored.gapTokens.empty())
        throw Error("unknown tokens: cannot reach this stage");
    ctx.selections = select_sets(ctx.anchored, ctx.axiom, req.noFilter);
    return ctx;
}

}  // namespace

std::string dump_rcg(const ParseRequest& req, const Grammar& grammar, const Lexicon& lexicon) {
    DumpContext ctx = dump_context(req, grammar, lexicon);
    std::ostringstream os;
    for (std::size_t i = 0; i < ctx.selections.sets.size(); ++i) {
        if (ctx.selections.sets.size() > 1) os << "% set " << i << '\n';
        os << dump(convert(ctx.selections.sets[i], ctx.axiom));
    }
    return os.str();
}

std::string dump_automaton(const ParseRequest& req, const Grammar& grammar,
                           const Lexicon& lexicon) {
    auto tokens = tokenize(req.sentence);
    const std::string axiom = req.axiom.empty() ? grammar.axiom : req.axiom;
    AnchorResult anchored = anchor(tokens, grammar, lexicon);
    if (!anchored.gapTokens.empty()) throw Error("unknown tokens: cannot build the automaton");
    PolarityAutomaton automaton = build_automaton(anchored.perToken, axiom);
    return automaton_dot(automaton);
}

std::string dump_forest(const ParseRequest& req, const Grammar& grammar,
                        const Lexicon& lexicon) {
    DumpContext ctx = dump_context(req, grammar, lexicon);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < ctx.selections.sets.size(); ++i) {
        SimpleRCG rcg = convert(ctx.selections.sets[i], ctx.axiom);
        Forest forest = parse(rcg, ctx.tokens, rcg.start);
        if (!forest.ok()) continue;
        any = true;
        os << forest.to_json();
    }
    if (!any) throw Error("no parse: the forest stage was not reached");
    return os.str();
}

}  // namespace rcgp
