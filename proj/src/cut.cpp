#include "cuttree/cut.hpp"

#include <bit>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Cut::Cut(std::size_t n) : n_(n), words_(word_count(n), 0) {}

Cut Cut::full(std::size_t n) {
    Cut c(n);
    for (auto& w : c.words_) w = ~std::uint64_t{0};
    c.trim();
    return c;
}

Cut Cut::singleton(std::size_t n, Vertex v) {
    Cut c(n);
    c.insert(v);
    return c;
}

Cut Cut::of(std::size_t n, std::initializer_list<Vertex> members) {
    return of(n, std::span<const Vertex>(members.begin(), members.size()));
}

Cut Cut::of(std::size_t n, std::span<const Vertex> members) {
    Cut c(n);
    for (Vertex v : members) c.insert(v);
    return c;
}

Cut Cut::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > kWordBits) throw InputError("from_mask: ground set larger than 64");
    Cut c(n);
    if (n > 0) c.words_[0] = mask;
    c.trim();
    return c;
}

std::size_t Cut::count() const {
    std::size_t k = 0;
    for (auto w : words_) k += static_cast<std::size_t>(std::popcount(w));
    return k;
}

bool Cut::empty() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

bool Cut::is_full() const { return count() == n_; }

bool Cut::contains(Vertex v) const {
    require_vertex(v);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void Cut::insert(Vertex v) {
    require_vertex(v);
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void Cut::erase(Vertex v) {
    require_vertex(v);
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool Cut::is_subset_of(const Cut& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool Cut::intersects(const Cut& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::vector<Vertex> Cut::members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::uint64_t Cut::to_mask() const {
    if (n_ > kWordBits) throw InputError("to_mask: ground set larger than 64");
    return words_.empty() ? 0 : words_[0];
}

std::string Cut::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : members()) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    s += '}';
    return s;
}

Cut Cut::complement() const {
    Cut c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
}

Cut& Cut::operator|=(const Cut& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Cut& Cut::operator&=(const Cut& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Cut& Cut::operator-=(const Cut& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

void Cut::require_same_size(const Cut& o) const {
    if (n_ != o.n_)
        throw InputError("cut size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

void Cut::require_vertex(Vertex v) const {
    if (v >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range for ground set of size " +
                         std::to_string(n_));
}

void Cut::trim() {
    if (n_ % kWordBits != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (n_ % kWordBits)) - 1;
}

bool laminar_pair(const Cut& a, const Cut& b) {
    return !a.intersects(b) || a.is_subset_of(b) || b.is_subset_of(a);
}

bool cross_free(const Cut& a, const Cut& b) {
    return laminar_pair(a, b) || (a | b).is_full();
}

}  // namespace cuttree
