#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rcgp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (lexicon files, grammar JSON, RCG dumps).
class FormatError : public Error {
public:
    FormatError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    explicit FormatError(const std::string& reason) : Error(reason), line_(0), reason_(reason) {}

    int line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

/// Gorn address does not exist in the tree.
class AddressError : public Error {
public:
    explicit AddressError(const std::string& msg) : Error(msg) {}
};

/// An equation or coanchor targets a node name the tree does not define.
class UnknownNodeName : public Error {
public:
    UnknownNodeName(const std::string& tree, const std::string& node)
        : Error("tree '" + tree + "' has no node named '" + node + "'"), tree_(tree), node_(node) {}

    const std::string& tree() const { return tree_; }
    const std::string& node() const { return node_; }

private:
    std::string tree_, node_;
};

/// A token position with no anchored-tree candidate (polarity filter).
class FilterError : public Error {
public:
    explicit FilterError(int tokenIndex)
        : Error("no candidate trees for token " + std::to_string(tokenIndex)),
          tokenIndex_(tokenIndex) {}

    int token_index() const { return tokenIndex_; }

private:
    int tokenIndex_;
};

/// TAG-to-RCG conversion hit a structurally invalid tree.
class ConversionError : public Error {
public:
    explicit ConversionError(const std::string& msg) : Error(msg) {}
};

/// An RCG predicate name that cannot be decoded back to TAG provenance.
class ProvenanceError : public Error {
public:
    explicit ProvenanceError(const std::string& name)
        : Error("predicate name does not decode: '" + name + "'") {}
};

/// Unknown semantic class in a *SEM field.
class UnknownClass : public Error {
public:
    explicit UnknownClass(const std::string& name)
        : Error("unknown semantic class '" + name + "'"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Strict-mode interpretation failure (wraps the first feature clash).
class UnificationError : public Error {
public:
    explicit UnificationError(const std::string& msg) : Error(msg) {}
};

/// Non-fatal consistency finding (validate, check_simple).
struct Diagnostic {
    std::string subject;  // tree or clause the finding is about
    std::string address;  // node address / argument position, may be empty
    std::string rule;     // short identifier of the violated rule
    std::string message;  // human-readable detail

    std::string str() const {
        std::string s = subject;
        if (!address.empty()) s += " @" + address;
        return s + ": [" + rule + "] " + message;
    }
};

}  // namespace rcgp
