#ifndef MPR_CANONICAL_HPP
#define MPR_CANONICAL_HPP

#include <string>
#include <vector>

#include "mpr/multiposet.hpp"

namespace mpr {

struct CanonicalForm {
    std::string bytes;     // equal for two structures iff they are isomorphic
    std::vector<int> perm; // old id -> new id; permute(x, perm) realizes bytes
};

/// Shell-order byte encoding of a structure as labelled: header (n, slots),
/// then for each new element k the bits relating it to elements 0..k across
/// all slots. Injective, so equal encodings mean equal structures.
std::string encode_multiposet(const Multiposet& x);

/// Exact canonical form: the minimum of encode_multiposet over all n!
/// relabellings, found by depth-first placement with prefix pruning.
CanonicalForm canonical_form(const Multiposet& x);

/// permute(x, canonical_form(x).perm).
Multiposet canonicalize(const Multiposet& x);

namespace ref {

/// Same minimum, by scanning every permutation. Reference route for tests
/// and benchmarks.
CanonicalForm canonical_form_by_enumeration(const Multiposet& x);

} // namespace ref

} // namespace mpr

#endif
