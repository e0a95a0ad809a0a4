#include "rcgp/tree.hpp"

#include <sstream>

namespace rcgp {

std::string node_kind_str(NodeKind k) {
    switch (k) {
        case NodeKind::Internal: return "internal";
        case NodeKind::Anchor: return "anchor";
        case NodeKind::Substitution: return "substitution";
        case NodeKind::Foot: return "foot";
        case NodeKind::Lexical: return "lexical";
    }
    return "?";
}

std::string adj_constraint_str(AdjConstraint a) {
    switch (a) {
        case AdjConstraint::Allowed: return "allowed";
        case AdjConstraint::Forbidden: return "forbidden";
        case AdjConstraint::Obligatory: return "obligatory";
    }
    return "?";
}

std::string gorn_str(const Gorn& g) {
    if (g.empty()) return "eps";
    std::ostringstream os;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) os << '.';
        os << g[i];
    }
    return os.str();
}

const TreeNode& node_at(const TreeNode& root, const Gorn& gorn) {
    const TreeNode* cur = &root;
    for (std::size_t depth = 0; depth < gorn.size(); ++depth) {
        int idx = gorn[depth];
        if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children.size()) {
            Gorn prefix(gorn.begin(), gorn.begin() + depth + 1);
            throw AddressError("no node at address " + gorn_str(prefix) + " (child " +
                               std::to_string(idx) + " of a node with " +
                               std::to_string(cur->children.size()) + " children)");
        }
        cur = &cur->children[idx];
    }
    return *cur;
}

TreeNode& node_at(TreeNode& root, const Gorn& gorn) {
    return const_cast<TreeNode&>(node_at(static_cast<const TreeNode&>(root), gorn));
}

const TreeNode& node_at(const ElementaryTree& tree, const Gorn& gorn) {
    return node_at(tree.root, gorn);
}

namespace {

template <typename Node, typename Fn>
void walk_impl(Node& node, Gorn& addr, const Fn& fn) {
    fn(node, addr);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        addr.push_back(static_cast<int>(i));
        walk_impl(node.children[i], addr, fn);
        addr.pop_back();
    }
}

}  // namespace

void walk(const TreeNode& root, const std::function<void(const TreeNode&, const Gorn&)>& fn) {
    Gorn addr;
    walk_impl(root, addr, fn);
}

void walk(TreeNode& root, const std::function<void(TreeNode&, const Gorn&)>& fn) {
    Gorn addr;
    walk_impl(root, addr, fn);
}

TreeNode* find_named(TreeNode& root, const std::string& name) {
    TreeNode* found = nullptr;
    walk(root, [&](TreeNode& n, const Gorn&) {
        if (!found && n.name == name && !name.empty()) found = &n;
    });
    return found;
}

const TreeNode* find_anchor(const TreeNode& root) {
    const TreeNode* found = nullptr;
    walk(root, [&](const TreeNode& n, const Gorn&) {
        if (!found && n.kind == NodeKind::Anchor) found = &n;
    });
    return found;
}

TreeNode* find_anchor(TreeNode& root) {
    return const_cast<TreeNode*>(find_anchor(static_cast<const TreeNode&>(root)));
}

const TreeNode* find_foot(const TreeNode& root) {
    const TreeNode* found = nullptr;
    walk(root, [&](const TreeNode& n, const Gorn&) {
        if (!found && n.kind == NodeKind::Foot) found = &n;
    });
    return found;
}

std::vector<Diagnostic> validate(const Grammar& grammar) {
    std::vector<Diagnostic> out;
    auto report = [&](const std::string& tree, const Gorn& addr, const std::string& rule,
                      const std::string& msg) {
        out.push_back({tree, gorn_str(addr), rule, msg});
    };

    for (const auto& [name, tree] : grammar.trees) {
        int feet = 0;
        int anchors = 0;
        std::string footCat;
        walk(tree.root, [&](const TreeNode& n, const Gorn& addr) {
            switch (n.kind) {
                case NodeKind::Substitution:
                case NodeKind::Lexical:
                    if (!n.children.empty())
                        report(name, addr, "leaf-children",
                               node_kind_str(n.kind) + " node has children");
                    break;
                case NodeKind::Foot:
                    ++feet;
                    footCat = n.cat;
                    if (!n.children.empty())
                        report(name, addr, "leaf-children", "foot node has children");
                    break;
                case NodeKind::Anchor:
                    ++anchors;
                    break;
                case NodeKind::Internal:
                    break;
            }
            if ((n.kind == NodeKind::Lexical || n.kind == NodeKind::Foot) && !n.bottom.empty())
                report(name, addr, "leaf-bottom",
                       node_kind_str(n.kind) + " node carries a bottom feature structure");
            if (n.cat.empty() && n.kind != NodeKind::Lexical)
                report(name, addr, "empty-category",
                       node_kind_str(n.kind) + " node has no category");
        });
        if (tree.type == TreeType::Auxiliary) {
            if (feet != 1)
                report(name, {}, "foot-count",
                       "auxiliary tree has " + std::to_string(feet) + " foot nodes");
            else if (footCat != tree.root.cat)
                report(name, {}, "foot-category", "foot category '" + footCat +
                                                      "' differs from root category '" +
                                                      tree.root.cat + "'");
        } else if (feet != 0) {
            report(name, {}, "foot-count", "initial tree has a foot node");
        }
        if (anchors > 1)
            report(name, {}, "anchor-count",
                   "tree has " + std::to_string(anchors) + " anchor nodes");
    }

    for (const auto& [family, members] : grammar.families) {
        for (const auto& member : members) {
            if (!grammar.trees.count(member))
                out.push_back({family, "", "family-member",
                               "family references missing tree '" + member + "'"});
        }
    }
    return out;
}

}  // namespace rcgp
