#ifndef MPR_AMALGAM_HPP
#define MPR_AMALGAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpr/enumerate.hpp"
#include "mpr/hom.hpp"
#include "mpr/multiposet.hpp"
#include "mpr/template_poset.hpp"

namespace mpr {

struct DiagramArrow {
    int top = 0; // 0-based index into the repeated top row
    Embedding map; // bottom -> top
};

/// A binary diagram: one repeated bottom object, one repeated top object,
/// and a row of bottom vertices each carrying exactly two arrows into tops.
struct BinaryDiagram {
    Multiposet bottom; // A
    Multiposet top;    // B
    int tops_count = 1;
    std::vector<std::array<DiagramArrow, 2>> bottoms;
};

/// Arrows are embeddings of bottom into top and every top index is in
/// range. Throws input_error otherwise.
void validate_diagram(const BinaryDiagram& d);

/// An apex with one leg per top.
struct Cone {
    Multiposet apex;
    std::vector<Embedding> legs; // top -> apex
};

/// The apex belongs to the class, the legs embed the top, and both arrows
/// of every bottom vertex compose to the same map into the apex.
bool is_compatible_cone(const BinaryDiagram& d, const Cone& cone, const ClassSpec& membership);

struct ConeSearchOutcome {
    enum class Status { found, none_within_bound, bound_exceeded };
    Status status = Status::none_within_bound;
    std::optional<Cone> cone;
};

/// Exhaustive cone search over the superposition class C(s,m): apexes by
/// size then canonical order, leg tuples lexicographically. A miss is
/// reported as "none within bound", never as a disproof beyond it.
ConeSearchOutcome find_cone_csm(const BinaryDiagram& d, int s, int m, int max_size,
                                int enum_bound = kDefaultEnumBound);

struct ConstructedCone {
    Multiposet d;
    std::vector<Embedding> legs; // top -> d
};

/// The explicit amalgamation step: restrict every apex slot to the leg
/// images, unite, transitively close, and fix linear slots by the
/// deterministic linear extension. The result lies in the duplicated-slot
/// class again and the relabelled legs embed. Preconditions: the diagram's
/// top and bottom lie in the duplicated-slot class of `info` and the cone
/// is compatible over the diagram in C(s,m).
ConstructedCone construct_d(const BinaryDiagram& diagram, const Cone& cone,
                            const TemplateInfo& info);

struct TheoremCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Staged verification of one instance of the main construction. Stages run
/// in order and stop at the first failure.
struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool pass = false;

    const TheoremCheck* failed() const;
};

TheoremReport verify_main_theorem_instance(const BinaryDiagram& diagram, const Cone& cone,
                                           const TemplateInfo& info);

struct GeneratedInstance {
    BinaryDiagram diagram;
    Cone cone;
};

/// Cone-first test-instance generation: sample legs from hom(b, seed_apex),
/// then build bottom vertices whose two arrows are compatible by
/// construction. Returns nothing when the sampled legs admit no compatible
/// arrow pair. Deterministic for a fixed rng seed.
std::optional<GeneratedInstance> generate_diagram_from_cone(const Multiposet& seed_apex,
                                                            const Multiposet& b,
                                                            const Multiposet& a, int tops,
                                                            int bottoms,
                                                            std::uint64_t rng_seed);

} // namespace mpr

#endif
