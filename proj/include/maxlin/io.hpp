#pragma once

#include "maxlin/graphapps.hpp"
#include "maxlin/linsystem.hpp"
#include "maxlin/pseudobool.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace maxlin {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// .lin2: comment lines start with 'c'; header "p lin2 <n> <m>"; then m lines
// "<weight> <rhs> <i1> <i2> ...", weight a positive integer or p/q rational,
// rhs +1/-1, indices 1-based strictly increasing.
LinearSystem parse_lin2(std::istream& in);
LinearSystem parse_lin2_file(const std::string& path);
std::string serialize_lin2(const LinearSystem& s);

// .pbf: header "p pbf <n> <t>"; optional "const <rational>"; t term lines
// "<coef> <i1> <i2> ..." with sorted 1-based indices. Duplicate terms merge.
FourierPolynomial parse_pbf(std::istream& in);
FourierPolynomial parse_pbf_file(const std::string& path);
std::string serialize_pbf(const FourierPolynomial& f);

// .bsg: header "p bsg <n> <m>" with lines "<u> <v> <label>", label '=' or
// '!='; .cut: header "p cut <n> <m>" with lines "<u> <v>" (all-NEQ).
struct ParsedGraph {
    LabeledGraph graph;
    bool cut_format = false;
};
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

} // namespace maxlin
