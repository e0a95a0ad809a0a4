#include "rcgp/rcg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rcgp {

std::string Clause::str() const {
    std::ostringstream os;
    os << lhsPred << '(';
    for (std::size_t i = 0; i < lhsArgs.size(); ++i) {
        if (i) os << ',';
        const auto& arg = lhsArgs[i];
        if (arg.empty()) {
            os << "Eps";
            continue;
        }
        for (std::size_t k = 0; k < arg.size(); ++k) {
            if (k) os << ' ';
            os << arg[k].text;
        }
    }
    os << ") ->";
    if (rhs.empty()) {
        os << " Eps";
    } else {
        for (const auto& call : rhs) {
            os << ' ' << call.pred << '(';
            for (std::size_t k = 0; k < call.vars.size(); ++k) {
                if (k) os << ',';
                os << call.vars[k];
            }
            os << ')';
        }
    }
    return os.str();
}

std::vector<Diagnostic> check_simple(const SimpleRCG& g) {
    std::vector<Diagnostic> out;
    std::map<std::string, std::size_t> arity;

    auto check_arity = [&](const std::string& pred, std::size_t n, const std::string& where) {
        auto [it, inserted] = arity.emplace(pred, n);
        if (!inserted && it->second != n)
            out.push_back({where, "", "arity",
                           "predicate '" + pred + "' used with arity " + std::to_string(n) +
                               " but defined with arity " + std::to_string(it->second)});
    };

    for (std::size_t c = 0; c < g.clauses.size(); ++c) {
        const Clause& cl = g.clauses[c];
        const std::string where = "clause " + std::to_string(c) + " '" + cl.str() + "'";

        check_arity(cl.lhsPred, cl.lhsArgs.size(), where);
        for (const auto& call : cl.rhs) check_arity(call.pred, call.vars.size(), where);

        std::map<std::string, int> lhsCount, rhsCount;
        for (const auto& arg : cl.lhsArgs) {
            for (const auto& term : arg) {
                if (term.is_var())
                    ++lhsCount[term.text];
                else if (term.text.empty())
                    out.push_back({where, "", "empty-terminal", "terminal token is empty"});
            }
        }
        for (const auto& call : cl.rhs)
            for (const auto& v : call.vars) ++rhsCount[v];

        for (const auto& [v, n] : lhsCount)
            if (n != 1)
                out.push_back({where, "", "linear",
                               "variable '" + v + "' occurs " + std::to_string(n) +
                                   " times in the LHS"});
        for (const auto& [v, n] : rhsCount) {
            if (n != 1)
                out.push_back({where, "", "linear",
                               "variable '" + v + "' occurs " + std::to_string(n) +
                                   " times in the RHS"});
            if (!lhsCount.count(v))
                out.push_back({where, "", "non-erasing",
                               "RHS variable '" + v + "' is missing from the LHS"});
        }
        for (const auto& [v, n] : lhsCount) {
            (void)n;
            if (!rhsCount.count(v))
                out.push_back({where, "", "non-erasing",
                               "LHS variable '" + v + "' is missing from the RHS"});
        }
    }
    return out;
}

std::string dump(const SimpleRCG& g) {
    std::vector<std::string> lines;
    lines.reserve(g.clauses.size());
    std::vector<const Clause*> sorted;
    for (const auto& c : g.clauses) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Clause* a, const Clause* b) {
        if (a->lhsPred != b->lhsPred) return a->lhsPred < b->lhsPred;
        return a->str() < b->str();
    });
    std::ostringstream os;
    for (const auto* c : sorted) os << c->str() << '\n';
    return os.str();
}

}  // namespace rcgp
