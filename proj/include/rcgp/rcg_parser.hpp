#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcgp/rcg.hpp"

namespace rcgp {

/// Half-open span of inter-token positions, 0 <= lo <= hi <= n.
struct Range {
    int lo = 0;
    int hi = 0;

    auto operator<=>(const Range&) const = default;
};

/// Instantiated predicate: one range per argument.
struct Fact {
    std::string pred;
    std::vector<Range> ranges;

    std::string str() const;
    auto operator<=>(const Fact&) const = default;
};

/// Shared and/or derivation forest. Facts are or-nodes; steps (instantiated
/// clauses) are and-nodes hanging off the fact they derive.
struct Forest {
    struct Step {
        int clause = 0;                        // index into the grammar
        std::map<std::string, Range> bindings;  // every clause variable
        std::vector<int> premises;              // fact ids, RHS order
        int fact = 0;                           // fact id this step derives
    };

    std::vector<Fact> facts;
    std::vector<Step> steps;
    std::vector<std::vector<int>> factSteps;  // fact id → step ids
    std::vector<int> roots;                   // start facts over (0, n)
    int inputLen = 0;

    bool ok() const { return !roots.empty(); }
    std::string to_json() const;
};

/// Bottom-up agenda-driven deductive closure. The forest holds exactly the
/// derivable facts; roots is nonempty iff `start` spans the whole input
/// (a no-parse still returns the chart for debugging).
/// Precondition: check_simple(g) is empty.
Forest parse(const SimpleRCG& g, const std::vector<std::string>& tokens,
             const std::string& start);

/// One resolved derivation of the forest: a step choice per fact.
struct RcgDeriv {
    int fact = 0;
    int step = 0;
    std::vector<RcgDeriv> children;  // premise derivations, RHS order
};

/// Up to `limit` distinct derivations of the (single) root, in deterministic
/// order: per fact, steps ordered by (clause id, binding ranges); choices
/// expand lexicographically.
std::vector<RcgDeriv> enumerate(const Forest& f, int limit);

/// Re-derives the root by replaying the derivation's steps bottom-up; used by
/// tests to certify enumerated derivations.
bool revalidate(const Forest& f, const SimpleRCG& g, const RcgDeriv& d,
                const std::vector<std::string>& tokens);

}  // namespace rcgp
