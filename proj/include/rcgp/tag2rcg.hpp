#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcgp/anchoring.hpp"
#include "rcgp/rcg.hpp"

namespace rcgp {

/// Structured RCG predicate name; rendering is injective so that
/// interpretation can decode provenance from the name alone.
///   Tree  → "⟨t17⟩"      (instance id)
///   Subst → "sub_NP"      (category dispatch)
///   Adj   → "adj_t17_1.2" (instance id + Gorn address, root = "eps")
///   Start → "S_ax"        (axiom)
struct PredName {
    enum class Kind { Tree, Subst, Adj, Start };

    Kind kind = Kind::Tree;
    int instance = -1;    // Tree, Adj
    std::string category;  // Subst (node category), Start (axiom)
    Gorn gorn;             // Adj

    static PredName tree(int id) { return {Kind::Tree, id, "", {}}; }
    static PredName subst(std::string cat) { return {Kind::Subst, -1, std::move(cat), {}}; }
    static PredName adj(int id, Gorn g) { return {Kind::Adj, id, "", std::move(g)}; }
    static PredName start(std::string axiom) { return {Kind::Start, -1, std::move(axiom), {}}; }

    std::string render() const;

    /// Inverse of render; nullopt when the name does not decode.
    static std::optional<PredName> parse(const std::string& name);
};

/// Compiles one compatible set of anchored trees into an equivalent simple
/// RCG. Features are not compiled in: the RCG over-generates and
/// interpretation prunes. Throws ConversionError on an auxiliary tree with no
/// foot node.
SimpleRCG convert(const std::vector<const AnchoredTree*>& trees, const std::string& axiom);

}  // namespace rcgp
