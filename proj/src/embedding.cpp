#include "mpr/embedding.hpp"

#include <cstdint>

namespace mpr {

bool Embedding::injective() const {
    std::uint64_t seen = 0;
    for (int v : map) {
        if (v < 0 || v >= target_size)
            return false;
        std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit)
            return false;
        seen |= bit;
    }
    return true;
}

Embedding identity_embedding(int n) {
    Embedding e;
    e.target_size = n;
    e.map.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        e.map[a] = a;
    return e;
}

Embedding compose(const Embedding& g, const Embedding& f) {
    if (f.target_size != g.source_size())
        throw input_error("compose: inner target size does not match outer source size");
    Embedding e;
    e.target_size = g.target_size;
    e.map.reserve(f.map.size());
    for (int v : f.map)
        e.map.push_back(g.map[static_cast<size_t>(v)]);
    return e;
}

} // namespace mpr
