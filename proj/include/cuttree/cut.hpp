#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cuttree {

using Vertex = std::size_t;

/// A vertex subset over the ground set {0, ..., n-1}, stored as a bit vector.
/// "X is a u-v cut" means u in X and v not in X.
class Cut {
public:
    Cut() = default;
    /// The empty cut over n vertices.
    explicit Cut(std::size_t n);

    static Cut full(std::size_t n);
    static Cut singleton(std::size_t n, Vertex v);
    static Cut of(std::size_t n, std::initializer_list<Vertex> members);
    static Cut of(std::size_t n, std::span<const Vertex> members);
    /// Low n bits of mask; n <= 64.
    static Cut from_mask(std::size_t n, std::uint64_t mask);

    std::size_t size() const { return n_; }
    std::size_t count() const;
    bool empty() const;
    bool is_full() const;

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    bool is_subset_of(const Cut& other) const;
    bool intersects(const Cut& other) const;
    /// u in *this and v not in *this.
    bool is_cut_between(Vertex u, Vertex v) const { return contains(u) && !contains(v); }
    bool separates(Vertex u, Vertex v) const { return contains(u) != contains(v); }

    std::vector<Vertex> members() const;
    /// Requires size() <= 64.
    std::uint64_t to_mask() const;
    /// "{0,3,4}"
    std::string to_string() const;

    Cut complement() const;
    Cut& operator|=(const Cut& o);
    Cut& operator&=(const Cut& o);
    Cut& operator-=(const Cut& o);

    friend Cut operator|(Cut a, const Cut& b) { return a |= b; }
    friend Cut operator&(Cut a, const Cut& b) { return a &= b; }
    friend Cut operator-(Cut a, const Cut& b) { return a -= b; }

    friend bool operator==(const Cut&, const Cut&) = default;
    /// Total order: by size, then by the bit pattern read from the highest vertex
    /// down (so for n <= 64 this agrees with comparing masks).
    friend std::strong_ordering operator<=>(const Cut& a, const Cut& b);

private:
    void require_same_size(const Cut& o) const;
    void require_vertex(Vertex v) const;
    void trim();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Two sets are laminar-compatible when they are disjoint or nested.
bool laminar_pair(const Cut& a, const Cut& b);
/// Cross-free: disjoint, nested, or jointly covering the ground set.
bool cross_free(const Cut& a, const Cut& b);

}  // namespace cuttree
