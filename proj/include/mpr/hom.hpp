#ifndef MPR_HOM_HPP
#define MPR_HOM_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mpr/embedding.hpp"
#include "mpr/multiposet.hpp"

namespace mpr {

/// f is injective and preserves and reflects every relation slot between a
/// and b. Throws input_error when a and b disagree on slot count or f's
/// sizes do not match.
bool is_embedding(const Embedding& f, const Multiposet& a, const Multiposet& b);

/// Every embedding of a into b, in lexicographic order of the map arrays.
/// Backtracking over partial injections, extending the smallest unmapped
/// source element and trying targets in ascending id.
std::vector<Embedding> enumerate_embeddings(const Multiposet& a, const Multiposet& b);

/// Completions of a partial map (entries -1 unassigned). Unassigned sources
/// never map into `forbidden` targets. With first_only, stops after one.
std::vector<Embedding> enumerate_embeddings_extending(const Multiposet& a, const Multiposet& b,
                                                      const std::vector<int>& partial,
                                                      std::uint64_t forbidden = 0,
                                                      bool first_only = false);

bool embeds(const Multiposet& a, const Multiposet& b);

namespace ref {

/// All injections filtered through is_embedding. Reference route.
std::vector<Embedding> embeddings_by_filter(const Multiposet& a, const Multiposet& b);

} // namespace ref

/// Memoized hom-sets keyed by canonical forms. Cached lists live between the
/// canonical representatives; queries conjugate them back through the
/// canonizing permutations, so isomorphic inputs share one entry.
class HomStore {
public:
    std::vector<Embedding> get(const Multiposet& a, const Multiposet& b);

    std::size_t entry_count() const;

private:
    mutable std::mutex mu_;
    std::map<std::pair<std::string, std::string>, std::vector<Embedding>> cache_;
};

} // namespace mpr

#endif
