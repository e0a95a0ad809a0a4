#include "rcgp/grammar_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rcgp {

using nlohmann::json;

namespace {

FeatureStructure fs_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": feature structure must be an object");
    FeatureStructure fs;
    for (const auto& [attr, val] : j.items()) {
        if (!val.is_string())
            throw FormatError(where + ": feature '" + attr + "' must be a string");
        fs.emplace(attr, FeatValue::parse(val.get<std::string>()));
    }
    return fs;
}

json fs_to_json(const FeatureStructure& fs) {
    json j = json::object();
    for (const auto& [attr, v] : fs) j[attr] = v.str();
    return j;
}

NodeKind kind_from_string(const std::string& s, const std::string& where) {
    if (s == "internal") return NodeKind::Internal;
    if (s == "anchor") return NodeKind::Anchor;
    if (s == "substitution") return NodeKind::Substitution;
    if (s == "foot") return NodeKind::Foot;
    if (s == "lexical") return NodeKind::Lexical;
    throw FormatError(where + ": unknown node kind '" + s + "'");
}

AdjConstraint adj_from_string(const std::string& s, const std::string& where) {
    if (s == "allowed") return AdjConstraint::Allowed;
    if (s == "forbidden") return AdjConstraint::Forbidden;
    if (s == "obligatory") return AdjConstraint::Obligatory;
    throw FormatError(where + ": unknown adjunction constraint '" + s + "'");
}

TreeNode node_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": node spec must be an object");
    TreeNode n;
    if (!j.contains("cat") || !j.at("cat").is_string())
        throw FormatError(where + ": node needs a string 'cat'");
    n.cat = j.at("cat").get<std::string>();
    n.kind = j.contains("kind")
                 ? kind_from_string(j.at("kind").get<std::string>(), where)
                 : NodeKind::Internal;
    if (j.contains("name")) n.name = j.at("name").get<std::string>();
    if (j.contains("top")) n.top = fs_from_json(j.at("top"), where);
    if (j.contains("bot")) n.bottom = fs_from_json(j.at("bot"), where);
    n.adj = j.contains("adj") ? adj_from_string(j.at("adj").get<std::string>(), where)
                              : (n.kind == NodeKind::Internal ? AdjConstraint::Allowed
                                                              : AdjConstraint::Forbidden);
    if (j.contains("children")) {
        if (!j.at("children").is_array())
            throw FormatError(where + ": 'children' must be an array");
        for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c, where));
    }
    return n;
}

json node_to_json(const TreeNode& n) {
    json j = json::object();
    j["cat"] = n.cat;
    j["kind"] = node_kind_str(n.kind);
    if (!n.name.empty()) j["name"] = n.name;
    if (!n.top.empty()) j["top"] = fs_to_json(n.top);
    if (!n.bottom.empty()) j["bot"] = fs_to_json(n.bottom);
    j["adj"] = adj_constraint_str(n.adj);
    if (!n.children.empty()) {
        json arr = json::array();
        for (const auto& c : n.children) arr.push_back(node_to_json(c));
        j["children"] = arr;
    }
    return j;
}

SemLiteral literal_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("pred"))
        throw FormatError(where + ": semantics literal needs a 'pred'");
    SemLiteral lit;
    lit.pred = j.at("pred").get<std::string>();
    if (j.contains("args")) {
        for (const auto& a : j.at("args")) lit.args.push_back(FeatValue::parse(a.get<std::string>()));
    }
    return lit;
}

}  // namespace

Grammar grammar_from_json(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("grammar JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("axiom") || !doc.contains("trees"))
        throw FormatError("grammar JSON: need top-level 'axiom' and 'trees'");

    Grammar g;
    g.axiom = doc.at("axiom").get<std::string>();
    if (g.axiom.empty()) throw FormatError("grammar JSON: empty axiom");
    for (const auto& t : doc.at("trees")) {
        if (!t.contains("name") || !t.contains("family") || !t.contains("root"))
            throw FormatError("grammar JSON: tree needs 'name', 'family' and 'root'");
        ElementaryTree tree;
        tree.name = t.at("name").get<std::string>();
        tree.family = t.at("family").get<std::string>();
        const std::string where = "tree '" + tree.name + "'";
        std::string type = t.contains("type") ? t.at("type").get<std::string>() : "initial";
        if (type == "initial")
            tree.type = TreeType::Initial;
        else if (type == "auxiliary")
            tree.type = TreeType::Auxiliary;
        else
            throw FormatError(where + ": unknown tree type '" + type + "'");
        tree.root = node_from_json(t.at("root"), where);
        if (t.contains("interface")) tree.interface = fs_from_json(t.at("interface"), where);
        if (t.contains("semantics")) {
            for (const auto& lit : t.at("semantics"))
                tree.semantics.literals.push_back(literal_from_json(lit, where));
        }
        if (g.trees.count(tree.name))
            throw FormatError("grammar JSON: duplicate tree name '" + tree.name + "'");
        g.families[tree.family].insert(tree.name);
        g.trees.emplace(tree.name, std::move(tree));
    }
    return g;
}

Grammar load_grammar(const std::string& path) {
    std::ifstream ifs(path);
    if (!ifs) throw FormatError("cannot open grammar file: " + path);
    std::ostringstream os;
    os << ifs.rdbuf();
    return grammar_from_json(os.str());
}

std::string grammar_to_json(const Grammar& grammar) {
    json doc = json::object();
    doc["axiom"] = grammar.axiom;
    json trees = json::array();
    for (const auto& [name, tree] : grammar.trees) {
        json t = json::object();
        t["name"] = name;
        t["family"] = tree.family;
        t["type"] = tree.type == TreeType::Initial ? "initial" : "auxiliary";
        t["root"] = node_to_json(tree.root);
        if (!tree.interface.empty()) t["interface"] = fs_to_json(tree.interface);
        if (!tree.semantics.literals.empty()) {
            json lits = json::array();
            for (const auto& lit : tree.semantics.literals) {
                json l = json::object();
                l["pred"] = lit.pred;
                json args = json::array();
                for (const auto& a : lit.args) args.push_back(a.str());
                l["args"] = args;
                lits.push_back(l);
            }
            t["semantics"] = lits;
        }
        trees.push_back(t);
    }
    doc["trees"] = trees;
    return doc.dump(2) + "\n";
}

}  // namespace rcgp
