#include "rcgp/tag2rcg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rcgp {

namespace {

const std::string kTreeOpen = "\xe2\x9f\xa8";   // ⟨
const std::string kTreeClose = "\xe2\x9f\xa9";  // ⟩

std::optional<Gorn> parse_gorn(const std::string& s) {
    if (s == "eps") return Gorn{};
    Gorn g;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t dot = s.find('.', pos);
        std::string part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        g.push_back(std::stoi(part));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return g;
}

}  // namespace

std::string PredName::render() const {
    switch (kind) {
        case Kind::Tree:
            return kTreeOpen + "t" + std::to_string(instance) + kTreeClose;
        case Kind::Subst:
            return "sub_" + category;
        case Kind::Adj:
            return "adj_t" + std::to_string(instance) + "_" + gorn_str(gorn);
        case Kind::Start:
            return category + "_ax";
    }
    return "?";
}

std::optional<PredName> PredName::parse(const std::string& name) {
    if (name.size() > kTreeOpen.size() + kTreeClose.size() &&
        name.compare(0, kTreeOpen.size(), kTreeOpen) == 0 &&
        name.compare(name.size() - kTreeClose.size(), kTreeClose.size(), kTreeClose) == 0) {
        std::string body =
            name.substr(kTreeOpen.size(), name.size() - kTreeOpen.size() - kTreeClose.size());
        if (body.size() < 2 || body[0] != 't' ||
            body.find_first_not_of("0123456789", 1) != std::string::npos)
            return std::nullopt;
        return tree(std::stoi(body.substr(1)));
    }
    if (name.rfind("sub_", 0) == 0 && name.size() > 4) return subst(name.substr(4));
    if (name.rfind("adj_t", 0) == 0) {
        std::size_t sep = name.find('_', 5);
        if (sep == std::string::npos) return std::nullopt;
        std::string id = name.substr(5, sep - 5);
        if (id.empty() || id.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        auto gorn = parse_gorn(name.substr(sep + 1));
        if (!gorn) return std::nullopt;
        return adj(std::stoi(id), std::move(*gorn));
    }
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "_ax") == 0)
        return start(name.substr(0, name.size() - 3));
    return std::nullopt;
}

namespace {

/// Builder for one tree clause: an in-order traversal of the anchored tree
/// emits terminal cells, substitution variables and adjunction wrappers; the
/// foot node switches to the second argument.
struct TreeClauseBuilder {
    const AnchoredTree& inst;
    Clause clause;
    std::vector<std::pair<Gorn, std::string>> adjSites;  // (address, node category)
    int curArg = 0;

    explicit TreeClauseBuilder(const AnchoredTree& t) : inst(t) {
        clause.lhsPred = PredName::tree(t.instanceId).render();
        clause.lhsArgs.emplace_back();
    }

    void emit_cell(Term term) { clause.lhsArgs[curArg].push_back(std::move(term)); }

    void visit(const TreeNode& node, const Gorn& addr) {
        switch (node.kind) {
            case NodeKind::Lexical: {
                if (node.cat.empty()) return;  // empty leaf
                if (clause.anchorArg < 0 && is_anchor_word(node, addr)) {
                    clause.anchorArg = curArg;
                    clause.anchorCell = static_cast<int>(clause.lhsArgs[curArg].size());
                }
                emit_cell(Term::terminal(node.cat));
                return;
            }
            case NodeKind::Substitution: {
                std::string var = "X" + gorn_str(addr);
                emit_cell(Term::var(var));
                clause.rhs.push_back({PredName::subst(node.cat).render(), {var}, addr});
                return;
            }
            case NodeKind::Foot:
                if (clause.lhsArgs.size() > 1)
                    throw ConversionError("tree '" + inst.base + "': more than one foot node");
                clause.lhsArgs.emplace_back();
                curArg = 1;
                return;
            case NodeKind::Internal:
            case NodeKind::Anchor:
                break;
        }
        const bool adjoinable = node.adj != AdjConstraint::Forbidden;
        std::string lv, rv;
        if (adjoinable) {
            lv = "L" + gorn_str(addr);
            rv = "R" + gorn_str(addr);
            emit_cell(Term::var(lv));
            clause.rhs.push_back(
                {PredName::adj(inst.instanceId, addr).render(), {lv, rv}, addr});
            adjSites.emplace_back(addr, node.cat);
        }
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            Gorn childAddr = addr;
            childAddr.push_back(static_cast<int>(i));
            visit(node.children[i], childAddr);
        }
        if (adjoinable) emit_cell(Term::var(rv));
    }

    /// The anchor word is the lexical child of the anchor node.
    bool is_anchor_word(const TreeNode& node, const Gorn& addr) const {
        if (addr.empty()) return false;
        Gorn parentAddr(addr.begin(), addr.end() - 1);
        const TreeNode& parent = node_at(inst.tree, parentAddr);
        return parent.kind == NodeKind::Anchor && node.cat == inst.lexItem;
    }
};

}  // namespace

SimpleRCG convert(const std::vector<const AnchoredTree*>& trees, const std::string& axiom) {
    SimpleRCG g;
    g.start = PredName::start(axiom).render();

    struct Built {
        const AnchoredTree* inst;
        std::vector<std::pair<Gorn, std::string>> adjSites;
    };
    std::vector<Built> built;

    // (a) start dispatch
    for (const auto* t : trees) {
        if (t->tree.type == TreeType::Initial && t->tree.root.cat == axiom) {
            Clause c;
            c.lhsPred = g.start;
            c.lhsArgs = {{Term::var("X")}};
            c.rhs.push_back({PredName::tree(t->instanceId).render(), {"X"}, {}});
            g.clauses.push_back(std::move(c));
        }
    }

    // (b) one clause per tree
    for (const auto* t : trees) {
        TreeClauseBuilder builder(*t);
        builder.visit(t->tree.root, {});
        const bool isAux = t->tree.type == TreeType::Auxiliary;
        if (isAux && builder.clause.lhsArgs.size() != 2)
            throw ConversionError("auxiliary tree '" + t->base + "' has no foot node");
        if (!isAux && builder.clause.lhsArgs.size() != 1)
            throw ConversionError("initial tree '" + t->base + "' contains a foot node");
        g.clauses.push_back(std::move(builder.clause));
        built.push_back({t, std::move(builder.adjSites)});
    }

    // (c) substitution dispatch per initial root category
    std::map<std::string, std::vector<const AnchoredTree*>> initialByCat;
    for (const auto* t : trees)
        if (t->tree.type == TreeType::Initial) initialByCat[t->tree.root.cat].push_back(t);
    for (const auto& [cat, list] : initialByCat) {
        for (const auto* t : list) {
            Clause c;
            c.lhsPred = PredName::subst(cat).render();
            c.lhsArgs = {{Term::var("X")}};
            c.rhs.push_back({PredName::tree(t->instanceId).render(), {"X"}, {}});
            g.clauses.push_back(std::move(c));
        }
    }

    // (d) adjunction dispatch per adjoinable site
    for (const auto& b : built) {
        for (const auto& [addr, cat] : b.adjSites) {
            const std::string pred = PredName::adj(b.inst->instanceId, addr).render();
            for (const auto* beta : trees) {
                if (beta->tree.type != TreeType::Auxiliary || beta->tree.root.cat != cat)
                    continue;
                Clause c;
                c.lhsPred = pred;
                c.lhsArgs = {{Term::var("L")}, {Term::var("R")}};
                c.rhs.push_back({PredName::tree(beta->instanceId).render(), {"L", "R"}, {}});
                g.clauses.push_back(std::move(c));
            }
            const TreeNode& site = node_at(b.inst->tree, addr);
            if (site.adj != AdjConstraint::Obligatory) {
                Clause c;
                c.lhsPred = pred;
                c.lhsArgs = {{}, {}};  // adj(Eps, Eps) -> Eps
                g.clauses.push_back(std::move(c));
            }
        }
    }
    return g;
}

}  // namespace rcgp
