#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksgen::sat {

/// DIMACS-style literal: nonzero integer, sign is polarity.
using Lit = int;
using Clause = std::vector<Lit>;

inline int var_of(Lit l) { return l < 0 ? -l : l; }

struct Cnf {
    int var_count = 0;
    std::vector<Clause> clauses;
    /// Free-form "c ..." lines written ahead of the problem line; used to
    /// document variable ranges (edge/triangle/counter blocks) so external
    /// tools can interpret models.
    std::vector<std::string> comments;

    void add_clause(Clause c) { clauses.push_back(std::move(c)); }
};

void write_dimacs(std::ostream& out, const Cnf& cnf);
void write_dimacs_file(const std::string& path, const Cnf& cnf);

/// Parses DIMACS CNF. Comment lines are preserved in Cnf::comments.
Cnf read_dimacs(std::istream& in);
Cnf read_dimacs_file(const std::string& path);

} // namespace ksgen::sat
