#pragma once

#include <string>
#include <vector>

#include "rcgp/feature.hpp"

namespace rcgp {

struct DerivationTree;  // derivation.hpp

/// One flat-semantics literal: pred(arg1, ..., argN). Arguments are constants
/// or unification variables shared with the owning tree's node features.
struct SemLiteral {
    std::string pred;
    std::vector<FeatValue> args;

    auto operator<=>(const SemLiteral&) const = default;
};

/// A semantic class reference from the lexicon, e.g. BinaryRel[pred=vergessen].
struct SemClassSpec {
    std::string name;  // empty = no class
    FeatureStructure params;

    bool empty() const { return name.empty(); }
    auto operator<=>(const SemClassSpec&) const = default;
};

/// A tree's semantics: inline literals plus an optional lexicon class that is
/// expanded at anchoring time.
struct SemTemplate {
    std::vector<SemLiteral> literals;
    SemClassSpec cls;

    auto operator<=>(const SemTemplate&) const = default;
};

/// Expands a semantic class into its literal skeleton.
///
/// Built-in classes:
///   UnaryRel[pred=p]                  → p(?x)
///   BinaryRel[pred=p]                 → p(?x, ?y)
///   NamedEntity[pred=p,const=c,word=w] → p(c, w)
///
/// The skeleton variables (?x, ?y) deliberately live in the anchored tree's
/// variable namespace: co-indexation with node features happens by name.
/// Throws UnknownClass for an unknown class name, FormatError for missing
/// parameters.
SemTemplate instantiate_class(const std::string& name, const FeatureStructure& params);
inline SemTemplate instantiate_class(const SemClassSpec& spec) {
    return instantiate_class(spec.name, spec.params);
}

/// A literal after binding resolution; arguments are display strings
/// ("j", "?x").
struct GroundLiteral {
    std::string pred;
    std::vector<std::string> args;

    std::string str() const;
    auto operator<=>(const GroundLiteral&) const = default;
};

/// Canonically ordered, deduplicated set of resolved literals.
using SemOutput = std::vector<GroundLiteral>;

/// Collects every literal contributed by the derivation's trees and resolves
/// arguments through the binding produced by derived-tree construction.
/// Unresolved variables stay symbolic ("?x").
SemOutput compute(const DerivationTree& d, const Binding& binding);

/// "love(j,m), name(j,john)" rendering.
std::string render(const SemOutput& out);

}  // namespace rcgp
