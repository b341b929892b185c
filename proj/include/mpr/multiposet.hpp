#ifndef MPR_MULTIPOSET_HPP
#define MPR_MULTIPOSET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpr/embedding.hpp"
#include "mpr/relation.hpp"
#include "mpr/template_poset.hpp"

namespace mpr {

/// A finite ground set {0..n-1} carrying one binary relation per signature
/// slot. This is the shared carrier for template-constrained multiposets and
/// for their duplicated-slot presentations.
class Multiposet {
public:
    Multiposet(int n, std::vector<Relation> relations);

    int size() const { return n_; }
    int slot_count() const { return static_cast<int>(relations_.size()); }
    const Relation& slot(int i) const { return relations_.at(static_cast<size_t>(i)); }
    const std::vector<Relation>& relations() const { return relations_; }

    /// Replace one slot; sizes must agree. Used by enumeration odometers.
    void set_slot(int i, const Relation& r);

    bool operator==(const Multiposet& other) const = default;

private:
    int n_;
    std::vector<Relation> relations_;
};

/// Relabel all slots through perm (old id -> new id).
Multiposet permute(const Multiposet& x, const std::vector<int>& perm);

/// Keep the selected slots in the given order.
Multiposet reduct(const Multiposet& x, const std::vector<int>& slots);

struct InducedSubstructure {
    Multiposet sub;
    Embedding inclusion; // sub -> x, increasing on element ids
};

/// Restrict to a nonempty element subset, relabelling the survivors in
/// ascending id order.
InducedSubstructure induced_substructure(const Multiposet& x, const std::vector<int>& subset);

/// The three defining conditions of a template-constrained multiposet: every
/// slot a partial order, maximal template slots linear, and slot inclusions
/// along the template order. Throws input_error if x does not have t slots.
bool is_member_k(const Template& t, const Multiposet& x);

/// Conditions MP1-MP4 on a 2s+m-slot structure.
bool is_member_kbar(const TemplateInfo& info, const Multiposet& y);

/// Slots 1..s partial, slots s+1..2s+m linear, slot s+a a linear extension
/// of slot a (1-based numbering as in the defining conditions).
bool is_member_csm(int s, int m, const Multiposet& y);

/// Re-signature a member of K(T) into its duplicated-slot presentation
/// (i-slots, then j-slots, then isolated slots, in the canonical pair order).
Multiposet bar_translate(const Template& t, const Multiposet& x);

/// Inverse of bar_translate on members of the duplicated-slot class.
Multiposet bar_untranslate(const Template& t, const Multiposet& y);

/// Which class a structure is tested against, and the universe enumerations
/// draw from.
struct ClassSpec {
    enum class Kind { chain, epos, csm, k_of_template, kbar_of_template, product };

    Kind kind = Kind::chain;
    std::optional<Template> tmpl;                          // k_of_template, kbar_of_template
    int s = 0, m = 0;                                      // csm
    std::vector<std::pair<std::vector<int>, ClassSpec>> factors; // product: (slot set, class)

    static ClassSpec chain();
    static ClassSpec epos();
    static ClassSpec csm(int s, int m);
    static ClassSpec k_of(const Template& t);
    static ClassSpec kbar_of(const Template& t);
    static ClassSpec product(std::vector<std::pair<std::vector<int>, ClassSpec>> factors);

    int slot_count() const;
    std::string describe() const;
};

/// Membership of y in the class named by spec.
bool class_contains(const ClassSpec& spec, const Multiposet& y);

/// Membership via factor reducts: true iff every factor's reduct lies in its
/// class. spec must be a product whose slot sets partition y's slots.
bool product_membership(const ClassSpec& spec, const Multiposet& y);

/// Convenience builders used all over the tests and the CLI.
Multiposet chain_structure(int n);
Multiposet point_structure();

} // namespace mpr

#endif
