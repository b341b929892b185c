#ifndef MPR_RAMSEY_HPP
#define MPR_RAMSEY_HPP

#include <functional>
#include <optional>

#include "mpr/arrow.hpp"
#include "mpr/enumerate.hpp"
#include "mpr/multiposet.hpp"

namespace mpr {

/// A class as the property checkers see it: a membership predicate plus a
/// per-size list of isomorphism-class representatives. Lets tests drive the
/// checkers with classes beyond the built-in specs (negative controls).
struct ClassUniverse {
    int slots = 0;
    std::function<bool(const Multiposet&)> contains;
    std::function<std::vector<Multiposet>(int)> members;
};

ClassUniverse universe_of(const ClassSpec& spec, int enum_bound = kDefaultEnumBound);

struct WitnessSearchOutcome {
    enum class Status {
        found,          // witness below; arrow holds there
        exhausted,      // every class member of size <= max_n fails the arrow
        bound_exceeded, // a size level could not be enumerated within bounds
    };
    Status status = Status::exhausted;
    std::optional<Multiposet> witness;
    std::optional<ArrowResult> arrow;
    int last_size_scanned = 0;
};

/// Scan class members by size from |b| up to max_n, in enumeration order,
/// and return the first C with C -> (B)^A_k. Requires a, b in the class and
/// hom(a,b) nonempty.
WitnessSearchOutcome ramsey_witness_search(const ClassSpec& spec, const Multiposet& a,
                                           const Multiposet& b, int k, int max_n,
                                           int enum_bound = kDefaultEnumBound);
WitnessSearchOutcome ramsey_witness_search(const ClassUniverse& universe, const Multiposet& a,
                                           const Multiposet& b, int k, int max_n);

/// Every induced substructure of every member of size <= n is a member.
bool has_hp_upto(const ClassUniverse& universe, int n);
bool has_hp_upto(const ClassSpec& spec, int n, int enum_bound = kDefaultEnumBound);

/// Every two members of size <= n embed jointly into some member of size at
/// most |A| + |B|.
bool has_jep_upto(const ClassUniverse& universe, int n);
bool has_jep_upto(const ClassSpec& spec, int n, int enum_bound = kDefaultEnumBound);

/// Every span B <- A -> C of members of size <= n completes to a strong
/// amalgam: a member D with embeddings g1, g2 agreeing on A whose images
/// meet exactly in the image of A. A strong amalgam has at least
/// |B| + |C| - |A| points; the search scans sizes up to that plus `extra`.
bool has_sap_upto(const ClassUniverse& universe, int n, int extra = 0);
bool has_sap_upto(const ClassSpec& spec, int n, int extra = 0,
                  int enum_bound = kDefaultEnumBound);

} // namespace mpr

#endif
