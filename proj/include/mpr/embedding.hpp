#ifndef MPR_EMBEDDING_HPP
#define MPR_EMBEDDING_HPP

#include <vector>

#include "mpr/common.hpp"

namespace mpr {

/// An injective map between ground sets, the carrier of a structure
/// embedding. Whether it actually embeds one multiposet into another is
/// checked separately against a concrete (source, target) pair.
struct Embedding {
    int target_size = 0;
    std::vector<int> map; // map[a] = image of a

    int source_size() const { return static_cast<int>(map.size()); }

    int operator()(int a) const { return map[a]; }

    bool injective() const;

    bool operator==(const Embedding& other) const = default;
    /// Lexicographic by map array; the order embedding lists are emitted in.
    bool operator<(const Embedding& other) const { return map < other.map; }
};

Embedding identity_embedding(int n);

/// g after f. f's target size must equal g's source size.
Embedding compose(const Embedding& g, const Embedding& f);

} // namespace mpr

#endif
