#ifndef MPR_ARROW_HPP
#define MPR_ARROW_HPP

#include <optional>
#include <vector>

#include "mpr/hom.hpp"
#include "mpr/multiposet.hpp"

namespace mpr {

/// A k-coloring of the embeddings of A into C, indexed by the position of
/// each embedding in the lexicographic enumeration order. Colors run 1..k.
struct Coloring {
    int k = 2;
    std::vector<int> assignment;

    bool operator==(const Coloring& other) const = default;
};

/// Outcome of deciding C -> (B)^A_k. A positive verdict is certified by
/// search exhaustion; a negative one carries the lexicographically least
/// coloring under which no copy of B is monochromatic.
struct ArrowResult {
    bool holds = false;
    std::optional<Coloring> counterexample;
    int vertices = 0; // |hom(A, C)|
    int copies = 0;   // |hom(B, C)|
};

/// Decide the arrow relation exactly. Vertices are hom(A,C); every
/// w in hom(B,C) spans the hyperedge {w . h : h in hom(A,B)}; the arrow
/// holds iff no k-coloring leaves every hyperedge polychromatic. Exact
/// backtracking with forced-color propagation, most-constrained vertex
/// first. Requires 2 <= k <= 4, equal slot counts, hom(A,B) nonempty.
ArrowResult arrow_check(const Multiposet& c, const Multiposet& b, const Multiposet& a, int k);

/// Independent re-check of a negative certificate: true iff no w in
/// hom(B,C) makes w . hom(A,B) monochromatic under col. Recomputes the hom
/// sets directly and never touches the solver's hypergraph.
bool verify_arrow_counterexample(const Multiposet& c, const Multiposet& b, const Multiposet& a,
                                 int k, const Coloring& col);

namespace ref {

/// Decision by brute force over all k^|hom(A,C)| colorings, in
/// lexicographic coloring order. Reference route; refuses instances beyond
/// about 2^26 colorings.
ArrowResult naive_arrow_check(const Multiposet& c, const Multiposet& b, const Multiposet& a,
                              int k);

} // namespace ref

} // namespace mpr

#endif
