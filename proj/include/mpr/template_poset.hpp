#ifndef MPR_TEMPLATE_POSET_HPP
#define MPR_TEMPLATE_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "mpr/relation.hpp"

namespace mpr {

/// A template: a poset on {1..t} that prescribes, for each multiposet slot,
/// whether it must be linear (maximal elements) and which inclusions hold
/// between slots. Elements are 1-based externally and shifted down by one in
/// the stored relation.
class Template {
public:
    /// `order` is a relation on t elements, 0-shifted. Must be a partial
    /// order; throws input_error otherwise.
    Template(int t, const Relation& order);

    int t() const { return t_; }
    const Relation& order() const { return order_; }

    /// i precedes-or-equals j, 1-based.
    bool leq(int i, int j) const { return order_.contains(i - 1, j - 1); }

    bool operator==(const Template& other) const = default;

private:
    int t_;
    Relation order_;
};

/// The structural decomposition of a template that drives the duplicated-slot
/// presentation: isolated points k_1..k_m, and the pairs (i_a, j_a) of the
/// pruned template with j_a maximal. All ids 1-based. Carries the template
/// order so the duplicated-slot membership conditions can consult it.
struct TemplateInfo {
    Relation order = Relation(1);             // the template order, 0-shifted
    std::vector<int> maximal;                 // maximal elements of T, ascending
    std::vector<int> isolated;                // k_1..k_m, ascending
    std::vector<std::pair<int, int>> pairs;   // (i_a, j_a), sorted by (j, i)

    int s() const { return static_cast<int>(pairs.size()); }
    int m() const { return static_cast<int>(isolated.size()); }
    int bar_slots() const { return 2 * s() + m(); }
    bool leq(int i, int j) const { return order.contains(i - 1, j - 1); }
};

/// Decompose a template into maximal elements, isolated points and the
/// canonical (i_a, j_a) pair list.
TemplateInfo validate_template(const Template& t);

/// Bundled template presets for the five standard shapes:
///   "a"    one relation, linear                        (chains)
///   "b"    1 < 2                                       (poset + linear extension)
///   "c"    1 < 2 plus an isolated 3rd relation
///   "d:n"  n-element antichain                         (n linear orders)
///   "e:n"  n < i for all i < n; the shared partial order is slot n
/// Throws input_error on unknown names or bad n.
Template preset_template(const std::string& name);

} // namespace mpr

#endif
