#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rcgp {

/// A feature value: an atomic constant or a named unification variable.
///
/// Text inputs spell variables with a leading '?' ("?x"); internally the kind
/// is explicit and the text carries no prefix.
struct FeatValue {
    enum class Kind { Atom, Var };

    Kind kind = Kind::Atom;
    std::string text;

    static FeatValue atom(std::string s) { return {Kind::Atom, std::move(s)}; }
    static FeatValue var(std::string s) { return {Kind::Var, std::move(s)}; }

    /// "?x" → variable x, anything else → atom.
    static FeatValue parse(const std::string& s) {
        if (!s.empty() && s[0] == '?') return var(s.substr(1));
        return atom(s);
    }

    bool is_var() const { return kind == Kind::Var; }
    bool is_atom() const { return kind == Kind::Atom; }

    /// External spelling: atoms verbatim, variables with the '?' prefix.
    std::string str() const { return is_var() ? "?" + text : text; }

    auto operator<=>(const FeatValue&) const = default;
};

/// A flat feature structure: attribute → atom or variable. Attributes are
/// unique by construction; values never nest.
using FeatureStructure = std::map<std::string, FeatValue>;

/// First clashing attribute of a failed unification, with both values
/// resolved through the environment at clash time.
struct UnifClash {
    std::string attribute;
    std::string left;
    std::string right;

    auto operator<=>(const UnifClash&) const = default;
};

/// Union-find style variable environment. A variable links either to an atom
/// or to a representative variable; the representative of a class is its
/// lexicographically smallest member, which keeps resolution deterministic.
class Binding {
public:
    /// Follows links until an atom or an unbound variable.
    FeatValue resolve(const FeatValue& v) const;

    /// Unifies two values. Atom/atom requires equality; var/atom binds;
    /// var/var merges classes. Returns false on an atom clash, in which case
    /// the environment is left unchanged.
    bool unify(const FeatValue& a, const FeatValue& b);

    bool empty() const { return links_.empty(); }
    std::size_t size() const { return links_.size(); }

    auto operator<=>(const Binding&) const = default;

private:
    std::map<std::string, FeatValue> links_;
};

struct UnifyResult {
    bool ok = false;
    FeatureStructure fs;  // union of attributes, values resolved through env
    Binding env;
    UnifClash clash;  // meaningful only when !ok
};

/// Unifies two flat feature structures under an environment. On success the
/// result holds the attribute union with every value resolved through the
/// extended environment; on failure the input environment is untouched and
/// the clash names the first conflicting attribute.
UnifyResult unify_fs(const FeatureStructure& a, const FeatureStructure& b, const Binding& env);

struct RobustUnifyResult {
    FeatureStructure fs;
    Binding env;
    std::vector<UnifClash> clashes;
};

/// Like unify_fs but never fails: a clashing attribute keeps the left
/// operand's value and is reported, letting later unifications proceed.
RobustUnifyResult unify_fs_robust(const FeatureStructure& a, const FeatureStructure& b,
                                  const Binding& env);

/// Resolves every value of fs through env.
FeatureStructure resolve_fs(const FeatureStructure& fs, const Binding& env);

/// "[a=1,b=?x]" rendering, attributes in canonical (sorted) order.
std::string fs_str(const FeatureStructure& fs);

/// Parses "[a=1,b=?x]" (or "a=1,b=?x" without brackets). Throws FormatError.
FeatureStructure parse_fs(const std::string& text);

}  // namespace rcgp
