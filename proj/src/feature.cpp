#include "rcgp/feature.hpp"

#include <sstream>

#include "rcgp/errors.hpp"

namespace rcgp {

FeatValue Binding::resolve(const FeatValue& v) const {
    FeatValue cur = v;
    while (cur.is_var()) {
        auto it = links_.find(cur.text);
        if (it == links_.end()) break;
        cur = it->second;
    }
    return cur;
}

bool Binding::unify(const FeatValue& a, const FeatValue& b) {
    FeatValue ra = resolve(a);
    FeatValue rb = resolve(b);
    if (ra == rb) return true;
    if (ra.is_atom() && rb.is_atom()) return false;
    if (ra.is_var() && rb.is_var()) {
        // smaller name becomes the representative
        if (rb.text < ra.text) std::swap(ra, rb);
        links_[rb.text] = ra;
        return true;
    }
    if (ra.is_var()) {
        links_[ra.text] = rb;
    } else {
        links_[rb.text] = ra;
    }
    return true;
}

UnifyResult unify_fs(const FeatureStructure& a, const FeatureStructure& b, const Binding& env) {
    UnifyResult res;
    Binding e = env;
    FeatureStructure out = a;
    for (const auto& [attr, vb] : b) {
        auto it = out.find(attr);
        if (it == out.end()) {
            out.emplace(attr, vb);
            continue;
        }
        if (!e.unify(it->second, vb)) {
            res.ok = false;
            res.env = env;  // input env unchanged on failure
            res.clash = {attr, e.resolve(it->second).str(), e.resolve(vb).str()};
            return res;
        }
    }
    for (auto& [attr, v] : out) v = e.resolve(v);
    res.ok = true;
    res.fs = std::move(out);
    res.env = std::move(e);
    return res;
}

RobustUnifyResult unify_fs_robust(const FeatureStructure& a, const FeatureStructure& b,
                                  const Binding& env) {
    RobustUnifyResult res;
    res.env = env;
    FeatureStructure out = a;
    for (const auto& [attr, vb] : b) {
        auto it = out.find(attr);
        if (it == out.end()) {
            out.emplace(attr, vb);
            continue;
        }
        if (!res.env.unify(it->second, vb)) {
            // keep the left value, record the mismatch
            res.clashes.push_back(
                {attr, res.env.resolve(it->second).str(), res.env.resolve(vb).str()});
        }
    }
    for (auto& [attr, v] : out) v = res.env.resolve(v);
    res.fs = std::move(out);
    return res;
}

FeatureStructure resolve_fs(const FeatureStructure& fs, const Binding& env) {
    FeatureStructure out;
    for (const auto& [attr, v] : fs) out.emplace(attr, env.resolve(v));
    return out;
}

std::string fs_str(const FeatureStructure& fs) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [attr, v] : fs) {
        if (!first) os << ',';
        first = false;
        os << attr << '=' << v.str();
    }
    os << ']';
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

FeatureStructure parse_fs(const std::string& text) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw FormatError("unclosed bracket in '" + text + "'");
        body = body.substr(1, body.size() - 2);
    } else if (body.find(']') != std::string::npos) {
        throw FormatError("unbalanced bracket in '" + text + "'");
    }
    FeatureStructure fs;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string pair = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? body.size() : comma + 1;
        pair = trim(pair);
        if (pair.empty()) continue;
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw FormatError("expected attr=value, got '" + pair + "'");
        std::string attr = trim(pair.substr(0, eq));
        std::string value = trim(pair.substr(eq + 1));
        if (attr.empty() || value.empty())
            throw FormatError("empty attribute or value in '" + pair + "'");
        if (fs.count(attr)) throw FormatError("duplicate attribute '" + attr + "'");
        fs.emplace(attr, FeatValue::parse(value));
    }
    return fs;
}

}  // namespace rcgp
