#pragma once

#include <string>
#include <vector>

#include "rcgp/anchoring.hpp"
#include "rcgp/rcg_parser.hpp"
#include "rcgp/tag2rcg.hpp"

namespace rcgp {

enum class OpKind { Substitution, Adjunction };

inline std::string op_str(OpKind op) {
    return op == OpKind::Substitution ? "substitution" : "adjunction";
}

/// TAG derivation tree: nodes are uses of anchored tree instances, edges
/// record which tree combined into which, by which operation, at which
/// address of the parent's elementary tree.
struct DerivationTree {
    struct Node {
        const AnchoredTree* inst = nullptr;
        int anchorPos = -1;  // input position consumed by the anchor, -1 if none
    };
    struct Edge {
        int parent = 0;
        int child = 0;
        OpKind op = OpKind::Substitution;
        Gorn site;
    };

    std::vector<Node> nodes;  // [0] = root
    std::vector<Edge> edges;

    /// Structure-identifying key: schema/lemma/anchor-position labels plus
    /// recursively sorted edges. Two derivations with equal keys describe the
    /// same TAG derivation.
    std::string canonical_key() const;
};

/// Decodes an RCG derivation over a tag2rcg grammar back into a TAG
/// derivation tree. Throws ProvenanceError when a predicate name does not
/// decode or the derivation shape does not match the conversion scheme.
DerivationTree to_tag_derivation(const RcgDeriv& d, const Forest& forest, const SimpleRCG& g,
                                 const std::vector<const AnchoredTree*>& trees);

/// A feature clash with its location in the derivation.
struct UnifFailure {
    std::string base;  // schema name of the tree the site belongs to
    int instanceId = -1;
    Gorn site;
    std::string op;  // substitution | adjunction | top-bottom
    UnifClash clash;

    std::string str() const;
};

/// Phrase-structure result of a derivation; every node carries its unified
/// (top ⊔ bottom) feature structure.
struct DerivedNode {
    std::string cat;
    NodeKind kind = NodeKind::Internal;
    FeatureStructure fs;
    std::vector<DerivedNode> children;
};

struct DerivedTree {
    DerivedNode root;
    Binding binding;

    std::vector<std::string> yield() const;
};

struct BuildResult {
    bool ok = false;  // true when no unification failed
    DerivedTree tree;
    std::vector<UnifFailure> failures;
};

/// Performs the derivation's substitutions and adjunctions bottom-up with
/// feature unification (substitution: top⊔top; adjunction: node.top⊔root.top
/// and node.bottom⊔foot.bottom; finally top⊔bottom everywhere). In strict
/// mode the first failure aborts (ok=false, one failure); in robust mode all
/// failures are collected and the derived tree is still produced.
BuildResult build_derived(const DerivationTree& d, bool robust);

/// Exports.
std::string derivation_dot(const DerivationTree& d, const std::string& name);
std::string derived_dot(const DerivedTree& t, const std::string& name);
std::string dependency_dot(const DerivationTree& d, const std::string& name);

struct DependencyEdge {
    std::string head;       // parent's anchor token
    std::string dependent;  // child's anchor token
    std::string label;      // opKind + Gorn address
};

/// Dependency view: one edge per derivation edge.
std::vector<DependencyEdge> dependency_view(const DerivationTree& d);

}  // namespace rcgp
