#include "cuttree/value_table.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "cuttree/errors.hpp"
#include "cuttree/kernels.hpp"

namespace cuttree {
namespace {

// |scaled| stays below 2^61 so that sums of two entries fit in int64.
const mpz_class kImageLimit = mpz_class(1) << 61;

std::optional<ValueTable::IntegerImage> integer_image(std::span<const ExtRational> values) {
    mpz_class lcm = 1;
    for (const auto& v : values) {
        if (v.is_infinite()) return std::nullopt;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.finite().raw().get_den_mpz_t());
        if (lcm >= kImageLimit) return std::nullopt;
    }
    ValueTable::IntegerImage image;
    image.scaled.reserve(values.size());
    for (const auto& v : values) {
        const mpq_class& q = v.finite().raw();
        mpz_class s = q.get_num() * (lcm / q.get_den());
        if (abs(s) >= kImageLimit) return std::nullopt;
        image.scaled.push_back(s.get_si());
    }
    image.denominator = Rational(mpq_class(lcm));
    return image;
}

}  // namespace

std::size_t enumeration_cap(bool allow_large) {
    if (const char* env = std::getenv("CUTTREE_MAX_ENUM"); env && *env) {
        try {
            const auto cap = std::stoul(env);
            return std::min<std::size_t>(cap, kAbsoluteEnumerationCap);
        } catch (const std::exception&) {
            throw InputError(std::string("CUTTREE_MAX_ENUM is not a number: '") + env + "'");
        }
    }
    return allow_large ? kOptInEnumerationCap : kDefaultEnumerationCap;
}

void require_enumerable(std::size_t n, bool allow_large, const char* what) {
    const auto cap = enumeration_cap(allow_large);
    if (n > cap)
        throw EnumerationCapError(std::string(what) + ": ground set of " + std::to_string(n) +
                                  " exceeds the exhaustive-enumeration cap of " + std::to_string(cap) +
                                  (allow_large ? "" : " (opt in to raise it to 20, or set CUTTREE_MAX_ENUM)"));
}

ValueTable::ValueTable(std::size_t n, std::vector<ExtRational> values)
    : n_(n), values_(std::move(values)), image_(integer_image(values_)) {}

ValueTable ValueTable::from_graph(const WeightedGraph& g, bool allow_large) {
    const std::size_t n = g.size();
    require_enumerable(n, allow_large, "value table");
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<ExtRational> values(size);

    std::uint32_t mask = 0;
    Rational current;
    values[0] = current;
    for (std::uint32_t k = 1; k < size; ++k) {
        const auto x = static_cast<Vertex>(std::countr_zero(k));
        // x enters (or leaves) the set: edges to outside neighbours start (stop)
        // crossing, edges to inside neighbours stop (start) crossing.
        const bool entering = !((mask >> x) & 1U);
        Rational delta;
        for (const auto& [y, idx] : g.incident(x)) {
            const bool inside = (mask >> y) & 1U;
            if (inside) delta -= g.edges()[idx].w;
            else delta += g.edges()[idx].w;
        }
        if (entering) current += delta;
        else current -= delta;
        mask ^= std::uint32_t{1} << x;
        values[mask] = current;
    }
    return ValueTable(n, std::move(values));
}

ValueTable ValueTable::from_function(std::size_t n, const std::function<ExtRational(const Cut&)>& b,
                                     bool allow_large) {
    require_enumerable(n, allow_large, "value table");
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<ExtRational> values;
    values.reserve(size);
    for (std::uint32_t m = 0; m < size; ++m) values.push_back(b(Cut::from_mask(n, m)));
    return ValueTable(n, std::move(values));
}

ValueTable ValueTable::from_values(std::size_t n, std::vector<ExtRational> values, bool allow_large) {
    require_enumerable(n, allow_large, "value table");
    if (values.size() != (std::size_t{1} << n))
        throw InputError("value table for n=" + std::to_string(n) + " needs " + std::to_string(std::size_t{1} << n) +
                         " entries, got " + std::to_string(values.size()));
    return ValueTable(n, std::move(values));
}

const ExtRational& ValueTable::at(const Cut& x) const {
    if (x.size() != n_) throw InputError("cut size does not match value table");
    return values_[static_cast<std::uint32_t>(x.to_mask())];
}

void ValueTable::require_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw InputError("vertex out of range");
    if (u == v) throw InputError("u and v must differ");
}

ExtRational ValueTable::min_between(Vertex u, Vertex v) const {
    require_pair(u, v);
    const std::uint32_t have = std::uint32_t{1} << u;
    const std::uint32_t lack = std::uint32_t{1} << v;
    if (image_) {
        const auto best = kernels::masked_min(image_->scaled, have, lack);
        return ExtRational(Rational(mpq_class(mpz_class(static_cast<long>(best)), image_->denominator.raw().get_num())));
    }
    ExtRational best = ExtRational::infinity();
    bool any = false;
    for (std::uint32_t m = 0; m < values_.size(); ++m)
        if ((m & have) && !(m & lack) && (!any || values_[m] < best)) {
            best = values_[m];
            any = true;
        }
    return best;
}

std::vector<std::uint32_t> ValueTable::minimizers(Vertex u, Vertex v) const {
    require_pair(u, v);
    const std::uint32_t have = std::uint32_t{1} << u;
    const std::uint32_t lack = std::uint32_t{1} << v;
    std::vector<std::uint32_t> out;
    if (image_) {
        const auto best = kernels::masked_min(image_->scaled, have, lack);
        for (std::uint32_t m = 0; m < values_.size(); ++m)
            if ((m & have) && !(m & lack) && image_->scaled[m] == best) out.push_back(m);
        return out;
    }
    const ExtRational best = min_between(u, v);
    for (std::uint32_t m = 0; m < values_.size(); ++m)
        if ((m & have) && !(m & lack) && values_[m] == best) out.push_back(m);
    return out;
}

}  // namespace cuttree
