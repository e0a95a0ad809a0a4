#pragma once

#include <string>

#include "rcgp/tree.hpp"

namespace rcgp {

/// Loads a grammar from its JSON document:
///   {"axiom": "S", "trees": [{"name", "family", "type", "root", "interface"?,
///    "semantics"?}]}
/// Node specs: {"cat", "kind"?, "name"?, "top"?, "bot"?, "adj"?, "children"?}.
/// Feature values starting with '?' are variables. Defaults: kind internal,
/// adj "allowed" on internal nodes and "forbidden" elsewhere.
/// Throws FormatError on schema violations (including duplicate tree names).
Grammar grammar_from_json(const std::string& jsonText);

/// Reads the file and delegates to grammar_from_json. Throws FormatError.
Grammar load_grammar(const std::string& path);

/// Serializes back to the document form accepted by grammar_from_json.
std::string grammar_to_json(const Grammar& grammar);

}  // namespace rcgp
