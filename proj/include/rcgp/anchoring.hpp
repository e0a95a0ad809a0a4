#pragma once

#include <string>
#include <vector>

#include "rcgp/lexicon.hpp"
#include "rcgp/tree.hpp"

namespace rcgp {

/// Record of what anchoring applied to an instance, kept for reporting.
struct AppliedRecord {
    std::string lemma;
    FeatureStructure morph;
    FeatureStructure filters;
    std::vector<Equation> equations;
    std::vector<Coanchor> coanchors;
};

/// An elementary tree instantiated for one input token: variables are
/// freshened per instance, morph features / equations / coanchors applied,
/// the anchor node filled with the token as a lexical child, and the
/// semantics template expanded from the lemma's class.
struct AnchoredTree {
    std::string base;  // schema name
    int instanceId = 0;
    int tokenIndex = -1;
    std::string lexItem;
    ElementaryTree tree;
    AppliedRecord applied;
    SemTemplate semantics;

    /// "schema|lemma": disambiguates content-distinct instances of one schema.
    std::string signature() const { return base + "|" + applied.lemma; }
};

struct AnchorResult {
    std::vector<std::vector<AnchoredTree>> perToken;
    /// tokens absent from the morph layer and not reachable as coanchors
    std::vector<std::string> gapTokens;
};

/// Selects and instantiates the subgrammar for the token sequence. For each
/// token: morph entries → lemma entries → family trees whose anchor category
/// matches the lemma's *CAT; trees whose interface fails the entry's filters
/// (or whose features clash with morph/equations) are excluded. Unknown
/// tokens yield empty candidate sets and are listed in gapTokens.
/// Throws UnknownNodeName when an equation/coanchor targets a missing name.
AnchorResult anchor(const std::vector<std::string>& tokens, const Grammar& grammar,
                    const Lexicon& lexicon);

/// Wraps a bare elementary tree as an instance (grammar-only pipelines and
/// tests); variables are freshened but no lexicon information is applied.
AnchoredTree make_instance(const ElementaryTree& tree, int instanceId);

/// Renames every variable of the tree (node features, interface, semantics)
/// to "name@id", giving the instance its own variable scope.
void freshen_variables(ElementaryTree& tree, int instanceId);

}  // namespace rcgp
