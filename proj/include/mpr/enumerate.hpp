#ifndef MPR_ENUMERATE_HPP
#define MPR_ENUMERATE_HPP

#include <utility>
#include <vector>

#include "mpr/multiposet.hpp"

namespace mpr {

inline constexpr int kDefaultEnumBound = 8;
inline constexpr int kMaxPartialPoolSize = 6;
inline constexpr int kMaxLinearPoolSize = 8;

/// The slot-wise shape every supported class reduces to: each slot a partial
/// order, some slots forced linear, plus pairwise inclusion constraints.
struct SlotConstraints {
    int slots = 0;
    std::vector<bool> linear;
    std::vector<std::pair<int, int>> inclusions; // (a, b): slot a contained in slot b
};

SlotConstraints class_constraints(const ClassSpec& spec);

/// All linear orders on {0..n-1}, in permutation order. Memoized.
const std::vector<Relation>& linear_order_pool(int n);

/// All partial orders on {0..n-1}, generated by element-wise extension with
/// closure pruning. Memoized.
const std::vector<Relation>& partial_order_pool(int n);

/// One canonical representative per isomorphism class of size-n members,
/// sorted by canonical byte string. Throws bound_error past the configured
/// bound (and past the hard pool caps above).
std::vector<Multiposet> enumerate_class(const ClassSpec& spec, int n,
                                        int bound = kDefaultEnumBound);

} // namespace mpr

#endif
