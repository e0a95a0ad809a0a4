#include "rcgp/polarity.hpp"

#include <algorithm>
#include <sstream>

#include "rcgp/errors.hpp"

namespace rcgp {

void PolarityVector::add(const std::string& cat, int delta) {
    if (delta == 0) return;
    auto it = counts.find(cat);
    if (it == counts.end()) {
        counts.emplace(cat, delta);
        return;
    }
    it->second += delta;
    if (it->second == 0) counts.erase(it);
}

PolarityVector PolarityVector::plus(const PolarityVector& other) const {
    PolarityVector out = *this;
    for (const auto& [cat, n] : other.counts) out.add(cat, n);
    return out;
}

std::string PolarityVector::render(const std::string& axiom) const {
    if (counts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& cat, int n) {
        if (!first) os << ' ';
        first = false;
        os << cat << (n > 0 ? '+' : '-');
        if (n > 1 || n < -1) os << (n > 0 ? n : -n);
    };
    auto ax = counts.find(axiom);
    if (ax != counts.end()) emit(ax->first, ax->second);
    for (const auto& [cat, n] : counts)
        if (cat != axiom) emit(cat, n);
    return os.str();
}

PolarityVector tree_polarity(const AnchoredTree& t) {
    PolarityVector p;
    p.add(t.tree.root.cat, +1);
    walk(t.tree.root, [&](const TreeNode& n, const Gorn&) {
        if (n.kind == NodeKind::Substitution) p.add(n.cat, -1);
        if (n.kind == NodeKind::Foot) p.add(n.cat, -1);
    });
    return p;
}

PolarityAutomaton build_automaton(const std::vector<std::vector<AnchoredTree>>& candidates,
                                  const std::string& axiom) {
    PolarityAutomaton a;
    a.tokenCount = static_cast<int>(candidates.size());
    a.axiom = axiom;
    a.states.push_back({0, {}});

    for (std::size_t t = 0; t < candidates.size(); ++t)
        if (candidates[t].empty()) throw FilterError(static_cast<int>(t));

    std::map<std::pair<int, PolarityVector>, int> ids;
    ids.emplace(std::make_pair(0, PolarityVector{}), 0);
    std::vector<int> frontier{0};

    for (int t = 0; t < a.tokenCount; ++t) {
        std::vector<int> next;
        for (int from : frontier) {
            for (const auto& cand : candidates[t]) {
                PolarityVector pol = a.states[from].polarity.plus(tree_polarity(cand));
                auto key = std::make_pair(t + 1, pol);
                auto [it, inserted] = ids.emplace(key, static_cast<int>(a.states.size()));
                if (inserted) {
                    a.states.push_back({t + 1, std::move(pol)});
                    next.push_back(it->second);
                }
                a.edges.push_back({from, it->second, &cand});
            }
        }
        frontier = std::move(next);
    }

    PolarityVector goal;
    goal.add(axiom, +1);
    for (std::size_t s = 0; s < a.states.size(); ++s)
        if (a.states[s].token == a.tokenCount && a.states[s].polarity == goal)
            a.accepting.push_back(static_cast<int>(s));
    return a;
}

std::vector<std::vector<const AnchoredTree*>> valid_sets(const PolarityAutomaton& a) {
    // edges grouped by source state, in insertion (candidate) order
    std::vector<std::vector<const PolarityAutomaton::Edge*>> out(a.states.size());
    for (const auto& e : a.edges) out[e.from].push_back(&e);

    std::vector<bool> accepting(a.states.size(), false);
    for (int s : a.accepting) accepting[s] = true;

    std::vector<std::vector<const AnchoredTree*>> sets;
    std::vector<const AnchoredTree*> path;
    std::function<void(int)> dfs = [&](int state) {
        if (a.states[state].token == a.tokenCount) {
            if (accepting[state]) sets.push_back(path);
            return;
        }
        for (const auto* e : out[state]) {
            path.push_back(e->tree);
            dfs(e->to);
            path.pop_back();
        }
    };
    dfs(0);
    return sets;
}

std::string automaton_dot(const PolarityAutomaton& a) {
    std::ostringstream os;
    os << "digraph polarity {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::vector<bool> accepting(a.states.size(), false);
    for (int s : a.accepting) accepting[s] = true;
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        os << "  q" << s << " [label=\"" << a.states[s].polarity.render(a.axiom) << "\"";
        if (accepting[s]) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& e : a.edges) {
        os << "  q" << e.from << " -> q" << e.to << " [label=\"" << e.tree->base << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rcgp
