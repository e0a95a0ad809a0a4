#pragma once

// Small tree-building DSL shared by the unit tests.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcgp/grammar_json.hpp"
#include "rcgp/tree.hpp"

namespace th {

inline rcgp::TreeNode lex(const std::string& word) {
    rcgp::TreeNode n;
    n.cat = word;
    n.kind = rcgp::NodeKind::Lexical;
    return n;
}

inline rcgp::TreeNode subst(const std::string& cat, const std::string& name = "",
                            const std::string& top = "") {
    rcgp::TreeNode n;
    n.cat = cat;
    n.kind = rcgp::NodeKind::Substitution;
    n.name = name;
    if (!top.empty()) n.top = rcgp::parse_fs(top);
    return n;
}

inline rcgp::TreeNode foot(const std::string& cat) {
    rcgp::TreeNode n;
    n.cat = cat;
    n.kind = rcgp::NodeKind::Foot;
    return n;
}

inline rcgp::TreeNode anchor(const std::string& cat, const std::string& name = "",
                             rcgp::AdjConstraint adj = rcgp::AdjConstraint::Forbidden) {
    rcgp::TreeNode n;
    n.cat = cat;
    n.kind = rcgp::NodeKind::Anchor;
    n.name = name;
    n.adj = adj;
    return n;
}

inline rcgp::TreeNode internal(const std::string& cat, std::vector<rcgp::TreeNode> children,
                               rcgp::AdjConstraint adj = rcgp::AdjConstraint::Allowed,
                               const std::string& top = "", const std::string& bottom = "") {
    rcgp::TreeNode n;
    n.cat = cat;
    n.kind = rcgp::NodeKind::Internal;
    n.children = std::move(children);
    n.adj = adj;
    if (!top.empty()) n.top = rcgp::parse_fs(top);
    if (!bottom.empty()) n.bottom = rcgp::parse_fs(bottom);
    return n;
}

inline rcgp::ElementaryTree tree(const std::string& name, const std::string& family,
                                 rcgp::TreeType type, rcgp::TreeNode root) {
    rcgp::ElementaryTree t;
    t.name = name;
    t.family = family;
    t.type = type;
    t.root = std::move(root);
    return t;
}

inline rcgp::Grammar grammar(const std::string& axiom,
                             std::vector<rcgp::ElementaryTree> trees) {
    rcgp::Grammar g;
    g.axiom = axiom;
    for (auto& t : trees) {
        g.families[t.family].insert(t.name);
        g.trees.emplace(t.name, std::move(t));
    }
    return g;
}

inline std::string data_path(const std::string& rel) {
    return std::string(RCGP_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
    std::ifstream ifs(path);
    REQUIRE(ifs.good());
    std::ostringstream os;
    os << ifs.rdbuf();
    return os.str();
}

}  // namespace th
