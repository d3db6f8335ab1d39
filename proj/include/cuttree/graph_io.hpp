#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cuttree/graph.hpp"
#include "cuttree/tree.hpp"

namespace cuttree {

/// Renders numbers exactly (integers bare, otherwise p/q) unless a number of
/// decimal places is requested.
struct NumberFormat {
    std::optional<int> decimal_places;

    std::string operator()(const Rational& r) const {
        return decimal_places ? r.to_decimal(*decimal_places) : r.to_string();
    }
};

// Graph text format:
//   # comment lines anywhere
//   n m
//   u v w        (m lines; 0-based endpoints; w integer, decimal or p/q)
// Parallel edges merge, loops and zero weights drop (see WeightedGraph).
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
/// Emits labels (if any) as comments, then the canonical normalized edge list.
void write_graph(std::ostream& out, const WeightedGraph& g, const NumberFormat& fmt = {});

// Tree text format: one `u v lambda` line per edge, comments allowed.
GomoryHuTree read_tree(std::istream& in, std::size_t n, Vertex root = 0);
GomoryHuTree read_tree_file(const std::string& path, std::size_t n, Vertex root = 0);
void write_tree(std::ostream& out, const GomoryHuTree& t, const NumberFormat& fmt = {});

// Laminar family text format: one `value s t {members}` line per cut.
void write_laminar(std::ostream& out, const LaminarFamily& f, const NumberFormat& fmt = {});

}  // namespace cuttree
