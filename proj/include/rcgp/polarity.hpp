#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcgp/anchoring.hpp"

namespace rcgp {

/// Signed resource counts per category; zero entries are dropped (canonical).
struct PolarityVector {
    std::map<std::string, int> counts;

    void add(const std::string& cat, int delta);
    PolarityVector plus(const PolarityVector& other) const;

    /// "S+ NP-" style rendering: the axiom category first (when present),
    /// remaining categories alphabetically; counts beyond ±1 render as "NP+2".
    /// The neutral vector renders as "0".
    std::string render(const std::string& axiom) const;

    auto operator<=>(const PolarityVector&) const = default;
};

/// +1 for the root category, -1 per substitution node category, -1 for the
/// foot category; lexical material contributes nothing.
PolarityVector tree_polarity(const AnchoredTree& t);

/// Word-position automaton: states are (consumed token count, accumulated
/// polarity), edges consume one token by selecting one of its candidates.
struct PolarityAutomaton {
    struct State {
        int token = 0;
        PolarityVector polarity;
    };
    struct Edge {
        int from = 0;
        int to = 0;
        const AnchoredTree* tree = nullptr;
    };

    std::vector<State> states;  // index 0 = initial (0, neutral)
    std::vector<Edge> edges;
    std::vector<int> accepting;  // states at (n, {axiom:+1})
    int tokenCount = 0;
    std::string axiom;
};

/// Builds the automaton by breadth-first summation, merging states with equal
/// (token, polarity). Throws FilterError for a token with no candidates.
PolarityAutomaton build_automaton(const std::vector<std::vector<AnchoredTree>>& candidates,
                                  const std::string& axiom);

/// All accepting label sequences: one candidate tree per token. Empty when no
/// state accepts.
std::vector<std::vector<const AnchoredTree*>> valid_sets(const PolarityAutomaton& a);

/// Graphviz view; states are labeled with their polarity rendering.
std::string automaton_dot(const PolarityAutomaton& a);

}  // namespace rcgp
