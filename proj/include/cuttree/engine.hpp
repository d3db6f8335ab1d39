#pragma once

#include <string_view>

#include "cuttree/cut.hpp"
#include "cuttree/rational.hpp"

namespace cuttree {

/// Source of cut values, lambda values and canonical optimal cuts over a fixed
/// ground set. The constructions are written against this interface so they
/// run unchanged on graphs (max-flow) and on abstract set functions
/// (exhaustive enumeration). Implementations must be safe to query from
/// several threads.
class CutEngine {
public:
    virtual ~CutEngine() = default;

    virtual std::size_t size() const = 0;
    virtual ExtRational value(const Cut& x) const = 0;
    /// Minimum value over all u-v cuts.
    virtual ExtRational lambda(Vertex u, Vertex v) const = 0;
    /// The inclusion-smallest optimal u-v cut X_{u,v}.
    virtual Cut smallest(Vertex u, Vertex v) const = 0;
    /// The inclusion-largest optimal u-v cut Y_{u,v}.
    virtual Cut largest(Vertex u, Vertex v) const = 0;
    virtual std::string_view name() const = 0;

    bool is_optimal(const Cut& x, Vertex u, Vertex v) const {
        return x.is_cut_between(u, v) && value(x) == lambda(u, v);
    }
};

}  // namespace cuttree
