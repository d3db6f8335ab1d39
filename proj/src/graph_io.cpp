#include "cuttree/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

// Yields the non-blank, non-comment lines with their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    }
    std::size_t number() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    return tokens;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        fail(line, "integer out of range: '" + tok + "'");
    }
}

Rational parse_weight(const std::string& tok, std::size_t line) {
    try {
        return Rational::parse(tok);
    } catch (const InputError& e) {
        fail(line, e.what());
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw InputError("empty graph file: missing 'n m' header");
    const auto header = split(line);
    if (header.size() != 2) fail(reader.number(), "header must be 'n m'");
    const std::size_t n = parse_index(header[0], reader.number());
    const std::size_t m = parse_index(header[1], reader.number());

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
        const auto tok = split(line);
        if (tok.size() != 3) fail(reader.number(), "edge line must be 'u v w'");
        Edge e{parse_index(tok[0], reader.number()), parse_index(tok[1], reader.number()),
               parse_weight(tok[2], reader.number())};
        if (e.u >= n || e.v >= n) fail(reader.number(), "vertex index out of range 0.." + std::to_string(n) + ")");
        if (e.w.sign() < 0) fail(reader.number(), "negative weight " + tok[2]);
        edges.push_back(std::move(e));
    }
    if (reader.next(line)) fail(reader.number(), "unexpected content after " + std::to_string(m) + " edges");
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph read_graph_file(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g, const NumberFormat& fmt) {
    if (g.has_labels())
        for (Vertex v = 0; v < g.size(); ++v) out << "# vertex " << v << " = " << g.label(v) << '\n';
    out << g.size() << ' ' << g.edges().size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << fmt(e.w) << '\n';
}

GomoryHuTree read_tree(std::istream& in, std::size_t n, Vertex root) {
    LineReader reader(in);
    GomoryHuTree t;
    t.n = n;
    t.root = root;
    for (std::string line; reader.next(line);) {
        const auto tok = split(line);
        if (tok.size() != 3) fail(reader.number(), "tree line must be 'u v lambda'");
        TreeEdge e{parse_index(tok[0], reader.number()), parse_index(tok[1], reader.number()),
                   parse_weight(tok[2], reader.number())};
        if (e.u >= n || e.v >= n) fail(reader.number(), "tree vertex out of range");
        t.edges.push_back(std::move(e));
    }
    return t;
}

GomoryHuTree read_tree_file(const std::string& path, std::size_t n, Vertex root) {
    auto in = open(path);
    return read_tree(in, n, root);
}

void write_tree(std::ostream& out, const GomoryHuTree& t, const NumberFormat& fmt) {
    for (const auto& e : t.edges) out << e.u << ' ' << e.v << ' ' << fmt(e.lambda) << '\n';
}

void write_laminar(std::ostream& out, const LaminarFamily& f, const NumberFormat& fmt) {
    for (const auto& m : f.members)
        out << fmt(m.value) << ' ' << m.s << ' ' << m.t << ' ' << m.cut.to_string() << '\n';
}

}  // namespace cuttree
