#include "rcgp/rcg_parser.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcgp/log.hpp"

namespace rcgp {

std::string Fact::str() const {
    std::ostringstream os;
    os << pred << ':';
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (i) os << ',';
        os << '(' << ranges[i].lo << ',' << ranges[i].hi << ')';
    }
    return os.str();
}

namespace {

using Bindings = std::map<std::string, Range>;

/// Exact per-argument instantiation: every variable of the argument is bound.
/// Returns all consistent (lo,hi) spans — a single span when the argument
/// contains a variable, an enumeration for all-terminal or empty arguments.
std::vector<Range> arg_candidates_exact(const std::vector<Term>& cells, const Bindings& binding,
                                        const std::vector<std::string>& tokens) {
    const int n = static_cast<int>(tokens.size());
    int firstVar = -1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].is_var()) {
            firstVar = static_cast<int>(i);
            break;
        }
    }

    if (firstVar < 0) {
        // all terminals (or empty): position is free
        std::vector<Range> out;
        const int m = static_cast<int>(cells.size());
        for (int p = 0; p + m <= n; ++p) {
            bool match = true;
            for (int k = 0; k < m; ++k)
                if (tokens[p + k] != cells[k].text) {
                    match = false;
                    break;
                }
            if (match) out.push_back({p, p + m});
        }
        return out;
    }

    // anchored: walk positions from the first bound variable
    const Range& r0 = binding.at(cells[firstVar].text);
    int start = r0.lo - firstVar;  // cells before the first var are terminals
    if (start < 0) return {};
    int pos = start;
    for (const auto& cell : cells) {
        if (cell.is_var()) {
            const Range& r = binding.at(cell.text);
            if (r.lo != pos) return {};
            pos = r.hi;
        } else {
            if (pos >= n || tokens[pos] != cell.text) return {};
            ++pos;
        }
    }
    return {{start, pos}};
}

/// Feasibility filter used while joining RHS premises: unbound variables act
/// as wildcards of width >= 0; bound variables and terminal widths must stay
/// consistent.
bool arg_feasible(const std::vector<Term>& cells, const Bindings& binding,
                  const std::vector<std::string>& tokens) {
    const int n = static_cast<int>(tokens.size());
    int prevEnd = -1;  // -1 = no anchor seen yet
    int terms = 0;
    int wilds = 0;
    int firstAnchorIdxTerms = 0;

    auto flush_gap = [&](int lo) -> bool {
        if (prevEnd < 0) {
            // before the first anchor
            if (wilds == 0) {
                int start = lo - terms;
                if (start < 0) return false;
                return true;  // exact token check happens at finalization
            }
            return lo >= terms;
        }
        int gap = lo - prevEnd;
        if (gap < 0) return false;
        if (wilds == 0) {
            if (gap != terms) return false;
        } else if (gap < terms) {
            return false;
        }
        return true;
    };

    bool sawAnchor = false;
    for (const auto& cell : cells) {
        if (cell.is_var()) {
            auto it = binding.find(cell.text);
            if (it == binding.end()) {
                ++wilds;
                continue;
            }
            if (!flush_gap(it->second.lo)) return false;
            sawAnchor = true;
            prevEnd = it->second.hi;
            terms = wilds = 0;
        } else {
            ++terms;
        }
    }
    (void)firstAnchorIdxTerms;
    if (!sawAnchor) return terms <= n;
    return prevEnd + terms <= n;
}

struct ClauseInfo {
    std::vector<std::string> allVars;
};

}  // namespace

Forest parse(const SimpleRCG& g, const std::vector<std::string>& tokens,
             const std::string& start) {
    Forest forest;
    const int n = static_cast<int>(tokens.size());
    forest.inputLen = n;

    // (predicate, first-range start) → fact ids
    std::map<std::string, std::map<int, std::vector<int>>> factIndex;
    std::map<Fact, int> chart;
    std::deque<int> agenda;
    std::set<std::tuple<int, Bindings, int>> seenSteps;  // (clause, bindings, fact)

    auto add_fact = [&](Fact fact) -> int {
        auto it = chart.find(fact);
        if (it != chart.end()) return it->second;
        int id = static_cast<int>(forest.facts.size());
        chart.emplace(fact, id);
        int firstLo = fact.ranges.empty() ? 0 : fact.ranges[0].lo;
        factIndex[fact.pred][firstLo].push_back(id);
        forest.facts.push_back(std::move(fact));
        forest.factSteps.emplace_back();
        agenda.push_back(id);
        return id;
    };

    auto add_step = [&](int clauseIdx, const Bindings& binding, std::vector<int> premises,
                        int factId) {
        if (!seenSteps.emplace(clauseIdx, binding, factId).second) return;
        int stepId = static_cast<int>(forest.steps.size());
        forest.steps.push_back({clauseIdx, binding, std::move(premises), factId});
        forest.factSteps[factId].push_back(stepId);
    };

    // pred → (clause, RHS slot) occurrences
    std::map<std::string, std::vector<std::pair<int, int>>> rhsIndex;
    for (std::size_t c = 0; c < g.clauses.size(); ++c)
        for (std::size_t s = 0; s < g.clauses[c].rhs.size(); ++s)
            rhsIndex[g.clauses[c].rhs[s].pred].emplace_back(static_cast<int>(c),
                                                            static_cast<int>(s));

    // completes a fully-bound instantiation of clause c into new facts
    auto finalize = [&](int clauseIdx, const Bindings& binding,
                        const std::vector<int>& premises) {
        const Clause& cl = g.clauses[clauseIdx];
        std::vector<std::vector<Range>> perArg;
        for (const auto& arg : cl.lhsArgs) {
            auto cands = arg_candidates_exact(arg, binding, tokens);
            if (cands.empty()) return;
            perArg.push_back(std::move(cands));
        }
        std::vector<std::size_t> pick(perArg.size(), 0);
        while (true) {
            Fact fact;
            fact.pred = cl.lhsPred;
            for (std::size_t i = 0; i < perArg.size(); ++i)
                fact.ranges.push_back(perArg[i][pick[i]]);
            int id = add_fact(std::move(fact));
            add_step(clauseIdx, binding, premises, id);
            // odometer
            std::size_t k = 0;
            for (; k < pick.size(); ++k) {
                if (++pick[k] < perArg[k].size()) break;
                pick[k] = 0;
            }
            if (k == pick.size()) break;
        }
        if (perArg.empty()) {  // zero-arity predicate (not produced by tag2rcg)
            Fact fact;
            fact.pred = cl.lhsPred;
            int id = add_fact(std::move(fact));
            add_step(clauseIdx, binding, premises, id);
        }
    };

    auto clause_feasible = [&](int clauseIdx, const Bindings& binding) {
        const Clause& cl = g.clauses[clauseIdx];
        for (const auto& arg : cl.lhsArgs)
            if (!arg_feasible(arg, binding, tokens)) return false;
        return true;
    };

    // seed: clauses with an empty RHS
    for (std::size_t c = 0; c < g.clauses.size(); ++c)
        if (g.clauses[c].rhs.empty()) finalize(static_cast<int>(c), {}, {});

    auto bind_call = [&](const RhsCall& call, const Fact& fact, Bindings& binding) -> bool {
        if (call.vars.size() != fact.ranges.size()) return false;
        for (std::size_t i = 0; i < call.vars.size(); ++i)
            binding[call.vars[i]] = fact.ranges[i];
        return true;
    };

    auto unbind_call = [&](const RhsCall& call, Bindings& binding) {
        for (const auto& v : call.vars) binding.erase(v);
    };

    while (!agenda.empty()) {
        int triggerId = agenda.front();
        agenda.pop_front();
        const Fact trigger = forest.facts[triggerId];  // copy: facts vector grows

        auto occIt = rhsIndex.find(trigger.pred);
        if (occIt == rhsIndex.end()) continue;
        for (const auto& [clauseIdx, slot] : occIt->second) {
            const Clause& cl = g.clauses[clauseIdx];
            Bindings binding;
            if (!bind_call(cl.rhs[slot], trigger, binding)) continue;
            if (!clause_feasible(clauseIdx, binding)) continue;

            std::vector<int> premises(cl.rhs.size(), -1);
            premises[slot] = triggerId;

            // join the remaining premises against the chart
            std::function<void(std::size_t)> join = [&](std::size_t j) {
                if (j == cl.rhs.size()) {
                    finalize(clauseIdx, binding, premises);
                    return;
                }
                if (static_cast<int>(j) == slot) {
                    join(j + 1);
                    return;
                }
                auto predIt = factIndex.find(cl.rhs[j].pred);
                if (predIt == factIndex.end()) return;
                for (const auto& [firstLo, ids] : predIt->second) {
                    (void)firstLo;
                    // snapshot size: facts added during the join trigger later
                    const std::size_t count = ids.size();
                    for (std::size_t k = 0; k < count; ++k) {
                        int fid = ids[k];
                        if (!bind_call(cl.rhs[j], forest.facts[fid], binding)) continue;
                        if (clause_feasible(clauseIdx, binding)) {
                            premises[j] = fid;
                            join(j + 1);
                            premises[j] = -1;
                        }
                        unbind_call(cl.rhs[j], binding);
                        // rebind the vars owned by earlier slots that share names?
                        // not possible: simple RCG gives each var a unique RHS slot
                    }
                }
            };
            join(0);
        }
    }

    // roots: start predicate spanning the whole input
    Fact rootFact;
    rootFact.pred = start;
    rootFact.ranges = {{0, n}};
    auto it = chart.find(rootFact);
    if (it != chart.end()) forest.roots.push_back(it->second);

    log::debug("rcg parse: ", forest.facts.size(), " facts, ", forest.steps.size(),
               " steps, roots=", forest.roots.size());
    return forest;
}

std::string Forest::to_json() const {
    nlohmann::json doc;
    nlohmann::json jfacts = nlohmann::json::array();
    for (const auto& f : facts) {
        nlohmann::json jf;
        jf["pred"] = f.pred;
        nlohmann::json ranges = nlohmann::json::array();
        for (const auto& r : f.ranges) ranges.push_back({r.lo, r.hi});
        jf["ranges"] = ranges;
        jfacts.push_back(jf);
    }
    doc["facts"] = jfacts;
    nlohmann::json jsteps = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json js;
        js["clause"] = s.clause;
        nlohmann::json b = nlohmann::json::object();
        for (const auto& [var, r] : s.bindings) b[var] = {r.lo, r.hi};
        js["bindings"] = b;
        js["premises"] = s.premises;
        js["fact"] = s.fact;
        jsteps.push_back(js);
    }
    doc["steps"] = jsteps;
    return doc.dump(2) + "\n";
}

namespace {

std::vector<std::vector<int>> sorted_steps(const Forest& f) {
    std::vector<std::vector<int>> out = f.factSteps;
    for (auto& steps : out) {
        std::sort(steps.begin(), steps.end(), [&](int a, int b) {
            const auto& sa = f.steps[a];
            const auto& sb = f.steps[b];
            if (sa.clause != sb.clause) return sa.clause < sb.clause;
            return sa.bindings < sb.bindings;
        });
    }
    return out;
}

void enum_fact(const Forest& f, const std::vector<std::vector<int>>& order, int fact, int limit,
               std::vector<char>& onStack, std::vector<RcgDeriv>& out) {
    if (limit <= 0 || onStack[fact]) return;
    onStack[fact] = 1;
    for (int stepId : order[fact]) {
        if (static_cast<int>(out.size()) >= limit) break;
        const auto& step = f.steps[stepId];
        std::vector<std::vector<RcgDeriv>> childLists;
        bool dead = false;
        for (int premise : step.premises) {
            std::vector<RcgDeriv> sub;
            enum_fact(f, order, premise, limit, onStack, sub);
            if (sub.empty()) {
                dead = true;
                break;
            }
            childLists.push_back(std::move(sub));
        }
        if (dead) continue;
        std::vector<std::size_t> pick(childLists.size(), 0);
        while (static_cast<int>(out.size()) < limit) {
            RcgDeriv d;
            d.fact = fact;
            d.step = stepId;
            for (std::size_t i = 0; i < childLists.size(); ++i)
                d.children.push_back(childLists[i][pick[i]]);
            out.push_back(std::move(d));
            std::size_t k = childLists.size();
            while (k > 0) {
                --k;
                if (++pick[k] < childLists[k].size()) break;
                pick[k] = 0;
                if (k == 0) {
                    k = childLists.size() + 1;
                    break;
                }
            }
            if (childLists.empty() || k == childLists.size() + 1) break;
        }
    }
    onStack[fact] = 0;
}

}  // namespace

std::vector<RcgDeriv> enumerate(const Forest& f, int limit) {
    std::vector<RcgDeriv> out;
    if (limit <= 0 || f.roots.empty()) return out;
    auto order = sorted_steps(f);
    std::vector<char> onStack(f.facts.size(), 0);
    enum_fact(f, order, f.roots[0], limit, onStack, out);
    return out;
}

namespace {

bool replay(const Forest& f, const SimpleRCG& g, const RcgDeriv& d,
            const std::vector<std::string>& tokens) {
    const auto& step = f.steps[d.step];
    if (step.fact != d.fact) return false;
    if (step.premises.size() != d.children.size()) return false;
    for (std::size_t i = 0; i < d.children.size(); ++i) {
        if (d.children[i].fact != step.premises[i]) return false;
        if (!replay(f, g, d.children[i], tokens)) return false;
    }
    // re-derive the fact from the clause and the step's bindings
    const Clause& cl = g.clauses[step.clause];
    const Fact& fact = f.facts[d.fact];
    if (cl.lhsPred != fact.pred || cl.lhsArgs.size() != fact.ranges.size()) return false;
    for (std::size_t i = 0; i < cl.lhsArgs.size(); ++i) {
        auto cands = arg_candidates_exact(cl.lhsArgs[i], step.bindings, tokens);
        if (std::find(cands.begin(), cands.end(), fact.ranges[i]) == cands.end()) return false;
    }
    // RHS facts must match the bindings
    for (std::size_t s = 0; s < cl.rhs.size(); ++s) {
        const Fact& premise = f.facts[step.premises[s]];
        if (premise.pred != cl.rhs[s].pred) return false;
        for (std::size_t k = 0; k < cl.rhs[s].vars.size(); ++k)
            if (step.bindings.at(cl.rhs[s].vars[k]) != premise.ranges[k]) return false;
    }
    return true;
}

}  // namespace

bool revalidate(const Forest& f, const SimpleRCG& g, const RcgDeriv& d,
                const std::vector<std::string>& tokens) {
    return replay(f, g, d, tokens);
}

}  // namespace rcgp
