#pragma once

#include <stdexcept>
#include <vector>

namespace setlab {

struct Literal {
    int var = 0;
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

/// CNF formula. A clause never mentions the same variable twice.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

inline void validate_formula(const CnfFormula& f) {
    if (f.num_vars < 0) throw std::invalid_argument("negative variable count");
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c)
            if (l.var < 0 || l.var >= f.num_vars)
                throw std::invalid_argument("literal variable out of range");
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i].var == c[j].var)
                    throw std::invalid_argument("clause mentions a variable twice");
    }
}

inline bool clause_satisfied(const Clause& c, const std::vector<bool>& assignment) {
    for (const Literal& l : c)
        if (assignment[l.var] != l.negated) return true;
    return false;
}

inline bool formula_satisfied(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const Clause& c : f.clauses)
        if (!clause_satisfied(c, assignment)) return false;
    return true;
}

/// Number of occurrences of each variable across all clauses.
inline std::vector<int> occurrence_counts(const CnfFormula& f) {
    std::vector<int> counts(static_cast<std::size_t>(f.num_vars), 0);
    for (const Clause& c : f.clauses)
        for (const Literal& l : c) ++counts[l.var];
    return counts;
}

} // namespace setlab
