#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rcgp/errors.hpp"
#include "rcgp/feature.hpp"
#include "rcgp/semantics.hpp"

namespace rcgp {

enum class NodeKind { Internal, Anchor, Substitution, Foot, Lexical };
enum class AdjConstraint { Allowed, Forbidden, Obligatory };
enum class TreeType { Initial, Auxiliary };

std::string node_kind_str(NodeKind k);
std::string adj_constraint_str(AdjConstraint a);

/// Gorn address: path of 0-based child indices from the root (root = empty).
using Gorn = std::vector<int>;

/// "1.2"; the root address renders as "eps".
std::string gorn_str(const Gorn& g);

/// A node of an elementary tree. Lexical nodes carry their surface word in
/// `cat`; an empty word is the empty leaf.
struct TreeNode {
    std::string cat;
    NodeKind kind = NodeKind::Internal;
    FeatureStructure top;
    FeatureStructure bottom;
    std::vector<TreeNode> children;
    AdjConstraint adj = AdjConstraint::Forbidden;
    std::string name;  // optional target for equations/coanchors

    bool operator==(const TreeNode&) const = default;
};

struct ElementaryTree {
    std::string name;
    std::string family;
    TreeType type = TreeType::Initial;
    TreeNode root;
    FeatureStructure interface;  // tree-level features targeted by lexicon filters
    SemTemplate semantics;

    bool operator==(const ElementaryTree&) const = default;
};

struct Grammar {
    std::string axiom;
    std::map<std::string, ElementaryTree> trees;
    std::map<std::string, std::set<std::string>> families;
};

/// Node lookup by Gorn address. Throws AddressError when an index exceeds the
/// child count.
const TreeNode& node_at(const ElementaryTree& tree, const Gorn& gorn);
const TreeNode& node_at(const TreeNode& root, const Gorn& gorn);
TreeNode& node_at(TreeNode& root, const Gorn& gorn);

/// Preorder walk handing each node with its address.
void walk(const TreeNode& root, const std::function<void(const TreeNode&, const Gorn&)>& fn);
void walk(TreeNode& root, const std::function<void(TreeNode&, const Gorn&)>& fn);

/// First node carrying the given equation/coanchor name, or nullptr.
TreeNode* find_named(TreeNode& root, const std::string& name);

/// The unique anchor node, or nullptr when the tree is not anchorable.
const TreeNode* find_anchor(const TreeNode& root);
TreeNode* find_anchor(TreeNode& root);

/// The unique foot node of an auxiliary tree, or nullptr.
const TreeNode* find_foot(const TreeNode& root);

/// Checks every structural invariant; returns one diagnostic per violation
/// (empty = well-formed). Never throws.
std::vector<Diagnostic> validate(const Grammar& grammar);

}  // namespace rcgp
