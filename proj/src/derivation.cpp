#include "rcgp/derivation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace rcgp {

namespace {

std::string node_label(const DerivationTree::Node& n) {
    std::string s = n.inst->signature();
    if (n.anchorPos >= 0) s += "@" + std::to_string(n.anchorPos);
    return s;
}

std::string key_of(const DerivationTree& d, int node,
                   const std::vector<std::vector<int>>& edgesOf) {
    std::vector<std::string> parts;
    for (int e : edgesOf[node]) {
        const auto& edge = d.edges[e];
        parts.push_back(gorn_str(edge.site) + ":" + op_str(edge.op) + ":" +
                        key_of(d, edge.child, edgesOf));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = node_label(d.nodes[node]) + "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out + ")";
}

}  // namespace

std::string DerivationTree::canonical_key() const {
    std::vector<std::vector<int>> edgesOf(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) edgesOf[edges[e].parent].push_back(static_cast<int>(e));
    if (nodes.empty()) return "()";
    return key_of(*this, 0, edgesOf);
}

namespace {

/// Recovers the absolute input position of the clause's anchor terminal from
/// the instantiation (fact ranges + variable bindings).
int anchor_position(const Clause& cl, const Fact& fact, const Forest::Step& step) {
    if (cl.anchorArg < 0) return -1;
    int pos = fact.ranges[cl.anchorArg].lo;
    const auto& cells = cl.lhsArgs[cl.anchorArg];
    for (int k = 0; k < cl.anchorCell; ++k) {
        if (cells[k].is_var())
            pos = step.bindings.at(cells[k].text).hi;
        else
            ++pos;
    }
    return pos;
}

struct Decoder {
    const Forest& forest;
    const SimpleRCG& g;
    std::map<int, const AnchoredTree*> byId;

    const AnchoredTree* instance(int id) const {
        auto it = byId.find(id);
        if (it == byId.end())
            throw ProvenanceError("t" + std::to_string(id) + " (unknown instance)");
        return it->second;
    }

    PredName decode(int factId) const {
        const std::string& name = forest.facts[factId].pred;
        auto pn = PredName::parse(name);
        if (!pn) throw ProvenanceError(name);
        return *pn;
    }

    /// d derives a Tree predicate; builds its derivation node and edges.
    int build_tree(const RcgDeriv& d, DerivationTree& out) const {
        PredName pn = decode(d.fact);
        if (pn.kind != PredName::Kind::Tree) throw ProvenanceError(forest.facts[d.fact].pred);

        const auto& step = forest.steps[d.step];
        const Clause& cl = g.clauses[step.clause];
        int nodeIdx = static_cast<int>(out.nodes.size());
        out.nodes.push_back({instance(pn.instance),
                             anchor_position(cl, forest.facts[d.fact], step)});

        for (std::size_t s = 0; s < cl.rhs.size(); ++s) {
            const RcgDeriv& sub = d.children[s];
            PredName callee = decode(sub.fact);
            switch (callee.kind) {
                case PredName::Kind::Subst: {
                    // sub_C fact → its chosen tree expansion
                    const auto& dispatch = forest.steps[sub.step];
                    const Clause& dcl = g.clauses[dispatch.clause];
                    if (dcl.rhs.size() != 1 || sub.children.size() != 1)
                        throw ProvenanceError(forest.facts[sub.fact].pred);
                    int child = build_tree(sub.children[0], out);
                    out.edges.push_back({nodeIdx, child, OpKind::Substitution, cl.rhs[s].site});
                    break;
                }
                case PredName::Kind::Adj: {
                    const auto& dispatch = forest.steps[sub.step];
                    const Clause& dcl = g.clauses[dispatch.clause];
                    if (dcl.rhs.empty()) break;  // null adjunction
                    if (dcl.rhs.size() != 1 || sub.children.size() != 1)
                        throw ProvenanceError(forest.facts[sub.fact].pred);
                    int child = build_tree(sub.children[0], out);
                    out.edges.push_back({nodeIdx, child, OpKind::Adjunction, cl.rhs[s].site});
                    break;
                }
                default:
                    throw ProvenanceError(forest.facts[sub.fact].pred);
            }
        }
        return nodeIdx;
    }
};

}  // namespace

DerivationTree to_tag_derivation(const RcgDeriv& d, const Forest& forest, const SimpleRCG& g,
                                 const std::vector<const AnchoredTree*>& trees) {
    Decoder dec{forest, g, {}};
    for (const auto* t : trees) dec.byId.emplace(t->instanceId, t);

    DerivationTree out;
    PredName root = dec.decode(d.fact);
    if (root.kind == PredName::Kind::Start) {
        const auto& step = forest.steps[d.step];
        const Clause& cl = g.clauses[step.clause];
        if (cl.rhs.size() != 1 || d.children.size() != 1)
            throw ProvenanceError(forest.facts[d.fact].pred);
        dec.build_tree(d.children[0], out);
    } else {
        dec.build_tree(d, out);
    }
    return out;
}

std::string UnifFailure::str() const {
    std::ostringstream os;
    os << op << " at " << base << "#" << instanceId << " @" << gorn_str(site) << ": "
       << clash.attribute << ": '" << clash.left << "' vs '" << clash.right << "'";
    return os.str();
}

std::vector<std::string> DerivedTree::yield() const {
    std::vector<std::string> out;
    std::function<void(const DerivedNode&)> walk = [&](const DerivedNode& n) {
        if (n.kind == NodeKind::Lexical) {
            if (!n.cat.empty()) out.push_back(n.cat);
            return;
        }
        for (const auto& c : n.children) walk(c);
    };
    walk(root);
    return out;
}

namespace {

/// Mutable derived-tree node; pointers stay valid across splices so that
/// later operations can target nodes by identity.
struct WorkNode {
    std::string cat;
    NodeKind kind = NodeKind::Internal;
    FeatureStructure top, bottom;
    std::vector<WorkNode*> children;
    WorkNode* parent = nullptr;
    int derivNode = -1;  // derivation node the elementary node came from
    Gorn gorn;           // address within its elementary tree
};

struct Builder {
    const DerivationTree& d;
    bool robust;
    std::deque<WorkNode> arena;
    std::vector<std::map<Gorn, WorkNode*>> nodeOf;  // per derivation node
    std::vector<WorkNode*> roots;                   // current root per derivation node
    std::vector<std::vector<int>> edgesOf;
    Binding env;
    std::vector<UnifFailure> failures;
    bool aborted = false;

    explicit Builder(const DerivationTree& deriv, bool robustMode)
        : d(deriv), robust(robustMode) {
        nodeOf.resize(d.nodes.size());
        roots.resize(d.nodes.size());
        edgesOf.resize(d.nodes.size());
        for (std::size_t e = 0; e < d.edges.size(); ++e)
            edgesOf[d.edges[e].parent].push_back(static_cast<int>(e));
        for (auto& list : edgesOf) {
            std::sort(list.begin(), list.end(), [&](int a, int b) {
                if (d.edges[a].site != d.edges[b].site) return d.edges[a].site < d.edges[b].site;
                return a < b;
            });
        }
    }

    WorkNode* clone(int derivNode, const TreeNode& n, const Gorn& addr, WorkNode* parent) {
        arena.push_back({n.cat, n.kind, n.top, n.bottom, {}, parent, derivNode, addr});
        WorkNode* wn = &arena.back();
        nodeOf[derivNode][addr] = wn;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            Gorn childAddr = addr;
            childAddr.push_back(static_cast<int>(i));
            wn->children.push_back(clone(derivNode, n.children[i], childAddr, wn));
        }
        return wn;
    }

    bool unify_into(FeatureStructure& target, const FeatureStructure& other, int derivNode,
                    const Gorn& site, const std::string& op) {
        if (robust) {
            auto res = unify_fs_robust(target, other, env);
            target = std::move(res.fs);
            env = std::move(res.env);
            for (auto& clash : res.clashes)
                failures.push_back({d.nodes[derivNode].inst->base,
                                    d.nodes[derivNode].inst->instanceId, site, op,
                                    std::move(clash)});
            return true;
        }
        auto res = unify_fs(target, other, env);
        if (!res.ok) {
            failures.push_back({d.nodes[derivNode].inst->base,
                                d.nodes[derivNode].inst->instanceId, site, op, res.clash});
            aborted = true;
            return false;
        }
        target = std::move(res.fs);
        env = std::move(res.env);
        return true;
    }

    void replace_in_parent(WorkNode* oldNode, WorkNode* newNode, int parentDerivNode) {
        newNode->parent = oldNode->parent;
        if (oldNode->parent) {
            for (auto& slot : oldNode->parent->children)
                if (slot == oldNode) slot = newNode;
        } else {
            roots[parentDerivNode] = newNode;
        }
    }

    void apply(const DerivationTree::Edge& edge) {
        if (aborted) return;
        WorkNode* target = nodeOf[edge.parent].at(edge.site);
        if (edge.op == OpKind::Substitution) {
            WorkNode* childRoot = roots[edge.child];
            if (!unify_into(childRoot->top, target->top, edge.parent, edge.site,
                            "substitution"))
                return;
            replace_in_parent(target, childRoot, edge.parent);
            return;
        }
        // adjunction
        WorkNode* auxRoot = roots[edge.child];
        WorkNode* auxFoot = nullptr;
        for (const auto& [addr, wn] : nodeOf[edge.child]) {
            (void)addr;
            if (wn->kind == NodeKind::Foot) auxFoot = wn;
        }
        if (!auxFoot) return;  // validated earlier; defensive
        if (auxRoot == auxFoot) {
            // degenerate single-node auxiliary: both unifications on the site
            if (!unify_into(target->top, auxRoot->top, edge.parent, edge.site, "adjunction"))
                return;
            unify_into(target->bottom, auxFoot->bottom, edge.parent, edge.site, "adjunction");
            return;
        }
        if (!unify_into(auxRoot->top, target->top, edge.parent, edge.site, "adjunction")) return;
        if (!unify_into(target->bottom, auxFoot->bottom, edge.parent, edge.site, "adjunction"))
            return;
        // splice: the auxiliary replaces the site; the site (with its children
        // and bottom features) moves to the foot position, taking the foot's top
        replace_in_parent(target, auxRoot, edge.parent);
        target->top = auxFoot->top;
        replace_in_parent(auxFoot, target, edge.child);
    }

    void process(int node) {
        for (int e : edgesOf[node]) {
            if (aborted) return;
            process(d.edges[e].child);
            apply(d.edges[e]);
        }
    }

    DerivedNode materialize(WorkNode* wn) {
        DerivedNode out;
        out.cat = wn->cat;
        out.kind = wn->kind;
        if (!aborted)
            unify_into(wn->top, wn->bottom, wn->derivNode, wn->gorn, "top-bottom");
        out.fs = resolve_fs(wn->top, env);
        for (WorkNode* c : wn->children) out.children.push_back(materialize(c));
        return out;
    }
};

}  // namespace

BuildResult build_derived(const DerivationTree& d, bool robust) {
    BuildResult result;
    if (d.nodes.empty()) return result;

    Builder b(d, robust);
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        b.roots[i] = b.clone(static_cast<int>(i), d.nodes[i].inst->tree.root, {}, nullptr);

    b.process(0);
    result.tree.root = b.materialize(b.roots[0]);
    result.tree.binding = b.env;
    result.failures = std::move(b.failures);
    result.ok = result.failures.empty();
    return result;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string derivation_dot(const DerivationTree& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& n = d.nodes[i];
        std::string label = n.inst->base;
        if (!n.inst->lexItem.empty()) label += "[" + n.inst->lexItem + "]";
        if (n.anchorPos >= 0) label += "@" + std::to_string(n.anchorPos);
        os << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (const auto& e : d.edges) {
        os << "  n" << e.parent << " -> n" << e.child << " [label=\""
           << (e.op == OpKind::Substitution ? "subst" : "adj") << "@" << gorn_str(e.site)
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

void derived_dot_node(std::ostream& os, const DerivedNode& n, int& counter, int parent) {
    int id = counter++;
    std::string label = n.kind == NodeKind::Lexical ? (n.cat.empty() ? "eps" : n.cat) : n.cat;
    if (!n.fs.empty()) label += " " + fs_str(n.fs);
    os << "  n" << id << " [label=\"" << dot_escape(label) << "\""
       << (n.kind == NodeKind::Lexical ? ", shape=plaintext" : "") << "];\n";
    if (parent >= 0) os << "  n" << parent << " -> n" << id << ";\n";
    for (const auto& c : n.children) derived_dot_node(os, c, counter, id);
}

}  // namespace

std::string derived_dot(const DerivedTree& t, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=ellipse];\n";
    int counter = 0;
    derived_dot_node(os, t.root, counter, -1);
    os << "}\n";
    return os.str();
}

std::vector<DependencyEdge> dependency_view(const DerivationTree& d) {
    std::vector<DependencyEdge> out;
    for (const auto& e : d.edges) {
        out.push_back({d.nodes[e.parent].inst->lexItem, d.nodes[e.child].inst->lexItem,
                       op_str(e.op) + "@" + gorn_str(e.site)});
    }
    return out;
}

std::string dependency_dot(const DerivationTree& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& n = d.nodes[i];
        std::string label = n.inst->lexItem.empty() ? n.inst->base : n.inst->lexItem;
        if (n.anchorPos >= 0) label += "/" + std::to_string(n.anchorPos);
        os << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (const auto& e : d.edges) {
        os << "  n" << e.parent << " -> n" << e.child << " [label=\""
           << op_str(e.op) << "@" << gorn_str(e.site) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rcgp
