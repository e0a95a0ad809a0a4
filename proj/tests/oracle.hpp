#pragma once

// Independent brute-force TAG oracle used by the unit and acceptance tests.
//
// It enumerates every derivation of a tree set by direct combination
// (substitution of initial trees at substitution nodes, optional adjunction
// of auxiliary trees at adjoinable nodes), bounds the search by total yield
// length, realizes each derivation as a phrase-structure tree with its own
// mini feature unifier, and reports canonical derivation keys comparable
// with rcgp::DerivationTree::canonical_key(). It never touches the RCG
// pipeline (tag2rcg / rcg parser / interpret).

#include <map>
#include <random>
#include <string>
#include <vector>

#include "rcgp/lexicon.hpp"
#include "rcgp/tree.hpp"

namespace oracle {

/// One anchorable schema: the tree plus its (single) anchor word. An empty
/// word means the tree is already lexicalized (its lexical leaves are all it
/// yields).
struct OracleTree {
    const rcgp::ElementaryTree* tree = nullptr;
    std::string word;
    std::string lemma;  // identity label; defaults to word
};

struct OracleDerivation {
    std::vector<std::string> yield;
    std::string key;       // canonical derivation key
    bool featuresOk = true;  // strict FTAG unification survived
};

struct OracleResult {
    std::vector<OracleDerivation> derivations;

    /// Keys of feature-surviving derivations with the given yield, sorted.
    std::vector<std::string> keys_for(const std::vector<std::string>& tokens) const;

    /// True when some feature-surviving derivation yields the tokens.
    bool recognizes(const std::vector<std::string>& tokens) const;
};

/// Enumerates all derivations with yield length <= maxLen whose root is an
/// initial tree of the axiom category.
OracleResult enumerate_tag(const std::vector<OracleTree>& trees, const std::string& axiom,
                           int maxLen);

/// A randomized feature-TAG with its trivial word-per-tree lexicon.
struct RandomTag {
    rcgp::Grammar grammar;
    rcgp::Lexicon lexicon;
    std::vector<std::string> alphabet;  // distinct anchor words
    std::vector<OracleTree> oracleTrees;
};

/// Generates a small well-formed random TAG: <= maxTrees trees of <= 7 nodes,
/// one anchor word per tree drawn from a 2-3 letter alphabet, optional
/// features, occasional forbidden/obligatory adjunction constraints.
RandomTag random_tag(std::mt19937& rng, bool withFeatures);

}  // namespace oracle
