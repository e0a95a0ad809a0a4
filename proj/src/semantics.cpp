#include "rcgp/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rcgp/derivation.hpp"
#include "rcgp/errors.hpp"

namespace rcgp {

namespace {

FeatValue require_param(const std::string& cls, const FeatureStructure& params,
                        const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw FormatError("semantic class " + cls + " needs parameter '" + key + "'");
    return it->second;
}

}  // namespace

SemTemplate instantiate_class(const std::string& name, const FeatureStructure& params) {
    SemTemplate tmpl;
    tmpl.cls = {name, params};
    if (name == "UnaryRel") {
        FeatValue pred = require_param(name, params, "pred");
        tmpl.literals.push_back({pred.text, {FeatValue::var("x")}});
        return tmpl;
    }
    if (name == "BinaryRel") {
        FeatValue pred = require_param(name, params, "pred");
        tmpl.literals.push_back({pred.text, {FeatValue::var("x"), FeatValue::var("y")}});
        return tmpl;
    }
    if (name == "NamedEntity") {
        FeatValue pred = require_param(name, params, "pred");
        FeatValue cnst = require_param(name, params, "const");
        FeatValue word = require_param(name, params, "word");
        tmpl.literals.push_back({pred.text, {cnst, word}});
        return tmpl;
    }
    throw UnknownClass(name);
}

std::string GroundLiteral::str() const {
    std::ostringstream os;
    os << pred << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << args[i];
    }
    os << ')';
    return os.str();
}

SemOutput compute(const DerivationTree& d, const Binding& binding) {
    // gather literals with arguments resolved through the binding
    struct Resolved {
        std::string pred;
        std::vector<FeatValue> args;
    };
    std::vector<Resolved> literals;
    for (const auto& node : d.nodes) {
        for (const auto& lit : node.inst->semantics.literals) {
            Resolved r;
            r.pred = lit.pred;
            for (const auto& arg : lit.args) r.args.push_back(binding.resolve(arg));
            literals.push_back(std::move(r));
        }
    }

    // display names for residual variables: "?base" when the base name is
    // unique among the distinct unresolved variables, "?base#k" otherwise
    std::map<std::string, std::string> display;
    std::map<std::string, int> baseCount;
    std::vector<std::string> varOrder;
    for (const auto& lit : literals) {
        for (const auto& arg : lit.args) {
            if (!arg.is_var() || display.count(arg.text)) continue;
            std::string base = arg.text.substr(0, arg.text.find('@'));
            display.emplace(arg.text, base);
            ++baseCount[base];
            varOrder.push_back(arg.text);
        }
    }
    std::map<std::string, int> seen;
    for (const auto& var : varOrder) {
        std::string base = display[var];
        if (baseCount[base] > 1)
            display[var] = base + "#" + std::to_string(seen[base]++);
    }

    std::set<GroundLiteral> out;
    for (const auto& lit : literals) {
        GroundLiteral g;
        g.pred = lit.pred;
        for (const auto& arg : lit.args)
            g.args.push_back(arg.is_var() ? "?" + display[arg.text] : arg.text);
        out.insert(std::move(g));
    }
    return {out.begin(), out.end()};
}

std::string render(const SemOutput& out) {
    std::ostringstream os;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i) os << ", ";
        os << out[i].str();
    }
    return os.str();
}

}  // namespace rcgp
