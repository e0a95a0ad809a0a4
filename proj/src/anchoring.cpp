#include "rcgp/anchoring.hpp"

#include "rcgp/log.hpp"

namespace rcgp {

namespace {

FeatValue freshen_value(const FeatValue& v, const std::string& suffix) {
    if (v.is_var()) return FeatValue::var(v.text + suffix);
    return v;
}

void freshen_fs(FeatureStructure& fs, const std::string& suffix) {
    for (auto& [attr, v] : fs) v = freshen_value(v, suffix);
}

/// Applies a single-attribute unification to one side of a node; false on clash.
bool apply_constraint(FeatureStructure& side, const std::string& attr, const FeatValue& value,
                      Binding& env) {
    FeatureStructure one{{attr, value}};
    auto res = unify_fs(side, one, env);
    if (!res.ok) return false;
    side = std::move(res.fs);
    env = std::move(res.env);
    return true;
}

/// Replays the accumulated environment into the instance so the anchored tree
/// is self-contained (bound variables become atoms).
void substitute_env(ElementaryTree& tree, const Binding& env) {
    walk(tree.root, [&](TreeNode& n, const Gorn&) {
        n.top = resolve_fs(n.top, env);
        n.bottom = resolve_fs(n.bottom, env);
    });
    tree.interface = resolve_fs(tree.interface, env);
    for (auto& lit : tree.semantics.literals)
        for (auto& arg : lit.args) arg = env.resolve(arg);
}

}  // namespace

void freshen_variables(ElementaryTree& tree, int instanceId) {
    const std::string suffix = "@" + std::to_string(instanceId);
    walk(tree.root, [&](TreeNode& n, const Gorn&) {
        freshen_fs(n.top, suffix);
        freshen_fs(n.bottom, suffix);
    });
    freshen_fs(tree.interface, suffix);
    for (auto& lit : tree.semantics.literals)
        for (auto& arg : lit.args) arg = freshen_value(arg, suffix);
}

AnchoredTree make_instance(const ElementaryTree& tree, int instanceId) {
    AnchoredTree inst;
    inst.base = tree.name;
    inst.instanceId = instanceId;
    inst.tree = tree;
    freshen_variables(inst.tree, instanceId);
    inst.semantics = inst.tree.semantics;
    return inst;
}

namespace {

/// Builds one candidate, or returns false when lexical selection excludes the
/// tree (filter/morph/equation clash).
bool build_candidate(const ElementaryTree& schema, const MorphEntry& morph,
                     const LemmaEntry& lemma, int tokenIndex, int instanceId,
                     AnchoredTree& out) {
    const std::string suffix = "@" + std::to_string(instanceId);

    out = AnchoredTree{};
    out.base = schema.name;
    out.instanceId = instanceId;
    out.tokenIndex = tokenIndex;
    out.lexItem = morph.word;
    out.tree = schema;
    freshen_variables(out.tree, instanceId);

    Binding env;

    // filters constrain the tree-level interface
    FeatureStructure filters = lemma.filters;
    freshen_fs(filters, suffix);
    auto filterRes = unify_fs(out.tree.interface, filters, env);
    if (!filterRes.ok) return false;
    out.tree.interface = std::move(filterRes.fs);
    env = std::move(filterRes.env);

    // morph features land on the anchor's top
    TreeNode* anchorNode = find_anchor(out.tree.root);
    if (!anchorNode) return false;
    {
        FeatureStructure morphFs = morph.features;
        freshen_fs(morphFs, suffix);
        auto res = unify_fs(anchorNode->top, morphFs, env);
        if (!res.ok) return false;
        anchorNode->top = std::move(res.fs);
        env = std::move(res.env);
    }

    for (const auto& eq : lemma.equations) {
        TreeNode* target = find_named(out.tree.root, eq.node);
        if (!target) throw UnknownNodeName(schema.name, eq.node);
        FeatureStructure& side = eq.side == FsSide::Top ? target->top : target->bottom;
        if (!apply_constraint(side, eq.attr, freshen_value(eq.value, suffix), env)) return false;
    }

    for (const auto& co : lemma.coanchors) {
        TreeNode* target = find_named(out.tree.root, co.node);
        if (!target) throw UnknownNodeName(schema.name, co.node);
        if (!target->children.empty())
            throw UnknownNodeName(schema.name, co.node + " (coanchor target has children)");
        if (!co.cat.empty() && target->cat != co.cat)
            throw UnknownNodeName(schema.name,
                                  co.node + " (coanchor category '" + co.cat +
                                      "' does not match node category '" + target->cat + "')");
        TreeNode word;
        word.cat = co.word;
        word.kind = NodeKind::Lexical;
        target->children.push_back(std::move(word));
    }

    // the anchor node is filled with the surface form
    {
        TreeNode word;
        word.cat = morph.word;
        word.kind = NodeKind::Lexical;
        anchorNode->children.push_back(std::move(word));
    }

    // semantics: inline template plus the lemma's class expansion
    out.semantics = out.tree.semantics;
    if (!lemma.sem.empty()) {
        SemTemplate cls = instantiate_class(lemma.sem);
        for (auto& lit : cls.literals) {
            for (auto& arg : lit.args) arg = freshen_value(arg, suffix);
            out.semantics.literals.push_back(std::move(lit));
        }
        out.semantics.cls = lemma.sem;
    }
    out.tree.semantics = out.semantics;

    substitute_env(out.tree, env);
    for (auto& lit : out.semantics.literals)
        for (auto& arg : lit.args) arg = env.resolve(arg);

    out.applied = {lemma.entry, morph.features, lemma.filters, lemma.equations, lemma.coanchors};
    return true;
}

}  // namespace

AnchorResult anchor(const std::vector<std::string>& tokens, const Grammar& grammar,
                    const Lexicon& lexicon) {
    AnchorResult result;
    result.perToken.resize(tokens.size());
    int nextInstance = 0;

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const std::string& token = tokens[t];
        bool known = false;

        for (const auto& morph : lexicon.morph) {
            if (morph.word != token) continue;
            known = true;
            for (const auto& lemma : lexicon.lemmas) {
                if (lemma.entry != morph.lemma) continue;
                auto famIt = grammar.families.find(lemma.fam);
                if (famIt == grammar.families.end()) continue;
                for (const auto& treeName : famIt->second) {
                    auto treeIt = grammar.trees.find(treeName);
                    if (treeIt == grammar.trees.end()) continue;
                    const ElementaryTree& schema = treeIt->second;
                    const TreeNode* anchorNode = find_anchor(schema.root);
                    if (!anchorNode || anchorNode->cat != lemma.cat) continue;
                    AnchoredTree cand;
                    if (build_candidate(schema, morph, lemma, static_cast<int>(t),
                                        nextInstance, cand)) {
                        ++nextInstance;
                        result.perToken[t].push_back(std::move(cand));
                    }
                }
            }
        }

        if (!known && !lexicon.is_coanchor_word(token)) result.gapTokens.push_back(token);
        log::debug("anchor: token ", t, " '", token, "': ", result.perToken[t].size(),
                   " candidate trees");
    }
    return result;
}

}  // namespace rcgp
