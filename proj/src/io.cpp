#include "maxlin/io.hpp"

#include <fstream>
#include <sstream>

namespace maxlin {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next significant line as tokens; skips comments and blank lines.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            tokens.clear();
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            if (tokens.front() == "c") continue;
            return true;
        }
        return false;
    }
};

long parse_long(const std::string& tok, const LineReader& r, const char* what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(r.line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Rational parse_weight(const std::string& tok, const LineReader& r, const char* what) {
    try {
        return parse_rational(tok);
    } catch (const std::exception&) {
        throw ParseError(r.line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

int parse_sign(const std::string& tok, const LineReader& r) {
    if (tok == "1" || tok == "+1") return 1;
    if (tok == "-1") return -1;
    throw ParseError(r.line_no, "expected +1 or -1, got '" + tok + "'");
}

std::vector<std::string> header(LineReader& r, const std::string& kind, std::size_t arity) {
    std::vector<std::string> tokens;
    if (!r.next(tokens)) throw ParseError(r.line_no, "missing header line");
    if (tokens.size() != 2 + arity || tokens[0] != "p" || tokens[1] != kind)
        throw ParseError(r.line_no, "expected header 'p " + kind + " ...'");
    return tokens;
}

} // namespace

LinearSystem parse_lin2(std::istream& in) {
    LineReader r{in};
    const auto head = header(r, "lin2", 2);
    const long n = parse_long(head[2], r, "variable count");
    const long m = parse_long(head[3], r, "equation count");
    if (n < 0 || m < 0) throw ParseError(r.line_no, "negative size in header");

    LinearSystem s(static_cast<std::size_t>(n));
    std::vector<std::string> tokens;
    for (long i = 0; i < m; ++i) {
        if (!r.next(tokens)) throw ParseError(r.line_no, "unexpected end of file: expected equation");
        if (tokens.size() < 3) throw ParseError(r.line_no, "equation needs weight, rhs and indices");
        const Rational weight = parse_weight(tokens[0], r, "weight");
        if (weight <= 0) throw ParseError(r.line_no, "weight must be positive");
        const int rhs = parse_sign(tokens[1], r);
        std::vector<int> vars;
        long prev = 0;
        for (std::size_t t = 2; t < tokens.size(); ++t) {
            const long v = parse_long(tokens[t], r, "variable index");
            if (v < 1 || v > n) throw ParseError(r.line_no, "variable index out of range");
            if (v <= prev) throw ParseError(r.line_no, "variable indices must be strictly increasing");
            prev = v;
            vars.push_back(static_cast<int>(v));
        }
        s.add_vars(vars, rhs, weight);
    }
    if (r.next(tokens)) throw ParseError(r.line_no, "trailing content after the last equation");
    return s;
}

std::string serialize_lin2(const LinearSystem& s) {
    std::ostringstream out;
    out << "p lin2 " << s.n_vars() << ' ' << s.size() << '\n';
    for (const auto& e : s.equations()) {
        out << e.weight.str() << ' ' << (e.rhs > 0 ? "1" : "-1");
        for (int v : e.lhs.vars()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

FourierPolynomial parse_pbf(std::istream& in) {
    LineReader r{in};
    const auto head = header(r, "pbf", 2);
    const long n = parse_long(head[2], r, "variable count");
    const long t = parse_long(head[3], r, "term count");
    if (n < 0 || t < 0) throw ParseError(r.line_no, "negative size in header");

    FourierPolynomial f(static_cast<std::size_t>(n));
    std::vector<std::string> tokens;
    long seen_terms = 0;
    bool seen_const = false;
    while (seen_terms < t || !seen_const) {
        if (!r.next(tokens)) {
            if (seen_terms < t) throw ParseError(r.line_no, "unexpected end of file: expected term");
            break;
        }
        if (tokens.front() == "const") {
            if (seen_const) throw ParseError(r.line_no, "duplicate const line");
            if (tokens.size() != 2) throw ParseError(r.line_no, "const needs exactly one value");
            f.set_constant(parse_weight(tokens[1], r, "constant"));
            seen_const = true;
            continue;
        }
        if (seen_terms == t) throw ParseError(r.line_no, "more terms than the header declared");
        if (tokens.size() < 2) throw ParseError(r.line_no, "term needs a coefficient and indices");
        const Rational coef = parse_weight(tokens[0], r, "coefficient");
        if (coef == 0) throw ParseError(r.line_no, "zero coefficients are not stored");
        std::vector<int> vars;
        long prev = 0;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const long v = parse_long(tokens[i], r, "variable index");
            if (v < 1 || v > n) throw ParseError(r.line_no, "variable index out of range");
            if (v <= prev) throw ParseError(r.line_no, "variable indices must be strictly increasing");
            prev = v;
            vars.push_back(static_cast<int>(v));
        }
        f.add_term(vars, coef);
        ++seen_terms;
    }
    std::vector<std::string> tail;
    if (r.next(tail)) throw ParseError(r.line_no, "trailing content after the last term");
    return f;
}

std::string serialize_pbf(const FourierPolynomial& f) {
    std::ostringstream out;
    out << "p pbf " << f.n_vars() << ' ' << f.terms().size() << '\n';
    if (f.constant() != 0) out << "const " << f.constant().str() << '\n';
    for (const auto& [support, coef] : f.terms()) {
        out << coef.str();
        for (int v : support.vars()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

ParsedGraph parse_graph(std::istream& in) {
    LineReader r{in};
    std::vector<std::string> head;
    if (!r.next(head)) throw ParseError(r.line_no, "missing header line");
    if (head.size() != 4 || head[0] != "p" || (head[1] != "bsg" && head[1] != "cut"))
        throw ParseError(r.line_no, "expected header 'p bsg <n> <m>' or 'p cut <n> <m>'");
    const bool cut = head[1] == "cut";
    const long n = parse_long(head[2], r, "vertex count");
    const long m = parse_long(head[3], r, "edge count");
    if (n < 0 || m < 0) throw ParseError(r.line_no, "negative size in header");

    ParsedGraph out;
    out.cut_format = cut;
    out.graph.n_vertices = static_cast<int>(n);
    std::vector<std::string> tokens;
    for (long i = 0; i < m; ++i) {
        if (!r.next(tokens)) throw ParseError(r.line_no, "unexpected end of file: expected edge");
        const std::size_t expected = cut ? 2 : 3;
        if (tokens.size() != expected)
            throw ParseError(r.line_no, cut ? "edge needs two endpoints"
                                            : "edge needs two endpoints and a label");
        const long u = parse_long(tokens[0], r, "vertex");
        const long v = parse_long(tokens[1], r, "vertex");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(r.line_no, "vertex index out of range");
        if (u == v) throw ParseError(r.line_no, "self-loops are not allowed");
        EdgeLabel label = EdgeLabel::neq;
        if (!cut) {
            if (tokens[2] == "=")
                label = EdgeLabel::eq;
            else if (tokens[2] == "!=")
                label = EdgeLabel::neq;
            else
                throw ParseError(r.line_no, "edge label must be '=' or '!='");
        }
        out.graph.add_edge(static_cast<int>(u), static_cast<int>(v), label);
    }
    if (r.next(tokens)) throw ParseError(r.line_no, "trailing content after the last edge");
    return out;
}

namespace {

template <typename T, typename Fn>
T parse_file_with(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return fn(in);
}

} // namespace

LinearSystem parse_lin2_file(const std::string& path) {
    return parse_file_with<LinearSystem>(path, [](std::istream& in) { return parse_lin2(in); });
}

FourierPolynomial parse_pbf_file(const std::string& path) {
    return parse_file_with<FourierPolynomial>(path, [](std::istream& in) { return parse_pbf(in); });
}

ParsedGraph parse_graph_file(const std::string& path) {
    return parse_file_with<ParsedGraph>(path, [](std::istream& in) { return parse_graph(in); });
}

} // namespace maxlin
