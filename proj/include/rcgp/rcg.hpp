#pragma once

#include <string>
#include <vector>

#include "rcgp/errors.hpp"
#include "rcgp/tree.hpp"

namespace rcgp {

/// One cell of an RCG argument string.
struct Term {
    enum class Kind { Terminal, Var };

    Kind kind = Kind::Terminal;
    std::string text;

    static Term terminal(std::string s) { return {Kind::Terminal, std::move(s)}; }
    static Term var(std::string s) { return {Kind::Var, std::move(s)}; }
    bool is_var() const { return kind == Kind::Var; }

    auto operator<=>(const Term&) const = default;
};

/// An RHS predicate call; arguments are single variables (simple RCG).
/// `site` carries TAG provenance for interpretation (the Gorn address of the
/// substitution/adjunction node that emitted the call); it plays no role in
/// parsing.
struct RhsCall {
    std::string pred;
    std::vector<std::string> vars;
    Gorn site;

    bool operator==(const RhsCall&) const = default;
};

struct Clause {
    std::string lhsPred;
    std::vector<std::vector<Term>> lhsArgs;
    std::vector<RhsCall> rhs;

    // provenance of the anchor terminal cell, set by the TAG conversion
    // (-1 = none): used to recover which input position an instance consumed
    int anchorArg = -1;
    int anchorCell = -1;

    /// "P(a X,Y) -> Q(X) R(Y)"; empty arguments and an empty RHS print "Eps".
    std::string str() const;

    bool operator==(const Clause&) const = default;
};

struct SimpleRCG {
    std::vector<Clause> clauses;
    std::string start;
};

/// Verifies the simple/linear discipline: every variable exactly once in the
/// LHS and exactly once in the RHS, nonempty terminals, globally consistent
/// predicate arities. Empty result = well-formed.
std::vector<Diagnostic> check_simple(const SimpleRCG& g);

/// One clause per line, sorted by predicate name (then clause text).
std::string dump(const SimpleRCG& g);

}  // namespace rcgp
