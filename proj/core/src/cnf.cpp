#include "ksgen/cnf.hpp"

#include <fstream>
#include <sstream>

#include "ksgen/error.hpp"

namespace ksgen::sat {

void write_dimacs(std::ostream& out, const Cnf& cnf) {
    for (const auto& c : cnf.comments)
        out << "c " << c << '\n';
    out << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto& cl : cnf.clauses) {
        for (Lit l : cl) out << l << ' ';
        out << "0\n";
    }
}

void write_dimacs_file(const std::string& path, const Cnf& cnf) {
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot open file for writing: " + path);
    write_dimacs(out, cnf);
}

Cnf read_dimacs(std::istream& in) {
    Cnf cnf;
    std::string line;
    bool have_header = false;
    long declared_clauses = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::string body = line.size() > 1 ? line.substr(line[1] == ' ' ? 2 : 1) : "";
            cnf.comments.push_back(body);
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream hdr(line);
            std::string p, fmt;
            hdr >> p >> fmt >> cnf.var_count >> declared_clauses;
            if (fmt != "cnf" || !hdr)
                throw ParseError("malformed DIMACS problem line", 0);
            have_header = true;
            continue;
        }
        std::istringstream body(line);
        Lit l;
        Clause cl;
        while (body >> l) {
            if (l == 0) {
                cnf.clauses.push_back(cl);
                cl.clear();
            } else {
                if (var_of(l) > cnf.var_count) cnf.var_count = var_of(l);
                cl.push_back(l);
            }
        }
        if (!cl.empty())
            throw ParseError("clause not terminated by 0", 0);
    }
    if (!have_header)
        throw ParseError("missing DIMACS problem line", 0);
    return cnf;
}

Cnf read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open DIMACS file: " + path);
    return read_dimacs(in);
}

} // namespace ksgen::sat
