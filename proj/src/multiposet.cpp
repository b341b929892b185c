#include "mpr/multiposet.hpp"

#include <algorithm>

namespace mpr {

Multiposet::Multiposet(int n, std::vector<Relation> relations)
    : n_(n), relations_(std::move(relations)) {
    if (n < 1)
        throw input_error("multiposet needs a nonempty ground set");
    if (n > kMaxElements)
        throw input_error("multiposet ground set too large");
    for (const Relation& r : relations_)
        if (r.size() != n)
            throw input_error("relation size does not match ground set");
}

void Multiposet::set_slot(int i, const Relation& r) {
    if (r.size() != n_)
        throw input_error("relation size does not match ground set");
    relations_.at(static_cast<size_t>(i)) = r;
}

Multiposet permute(const Multiposet& x, const std::vector<int>& perm) {
    std::vector<Relation> rels;
    rels.reserve(x.relations().size());
    for (const Relation& r : x.relations())
        rels.push_back(r.permuted(perm));
    return Multiposet(x.size(), std::move(rels));
}

Multiposet reduct(const Multiposet& x, const std::vector<int>& slots) {
    std::vector<Relation> rels;
    rels.reserve(slots.size());
    for (int i : slots) {
        if (i < 0 || i >= x.slot_count())
            throw input_error("reduct: slot index out of range");
        rels.push_back(x.slot(i));
    }
    return Multiposet(x.size(), std::move(rels));
}

InducedSubstructure induced_substructure(const Multiposet& x, const std::vector<int>& subset) {
    if (subset.empty())
        throw input_error("induced substructure needs a nonempty subset");
    std::vector<int> keep = subset;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 0 || v >= x.size())
            throw input_error("induced substructure: element out of range");

    std::vector<Relation> rels;
    rels.reserve(x.relations().size());
    for (const Relation& r : x.relations())
        rels.push_back(r.restricted_to(keep));

    Embedding inc;
    inc.target_size = x.size();
    inc.map = keep;
    return InducedSubstructure{Multiposet(static_cast<int>(keep.size()), std::move(rels)),
                               std::move(inc)};
}

bool is_member_k(const Template& t, const Multiposet& x) {
    if (x.slot_count() != t.t())
        throw input_error("structure has " + std::to_string(x.slot_count()) +
                          " slots, template needs " + std::to_string(t.t()));
    TemplateInfo info = validate_template(t);
    for (int i = 0; i < t.t(); ++i)
        if (!is_partial_order(x.slot(i)))
            return false;
    for (int i : info.maximal)
        if (!is_total(x.slot(i - 1)))
            return false;
    for (int i = 1; i <= t.t(); ++i)
        for (int j = 1; j <= t.t(); ++j)
            if (i != j && t.leq(i, j) && !x.slot(i - 1).subset_of(x.slot(j - 1)))
                return false;
    return true;
}

bool is_member_kbar(const TemplateInfo& info, const Multiposet& y) {
    int s = info.s();
    int m = info.m();
    if (y.slot_count() != 2 * s + m)
        throw input_error("structure has " + std::to_string(y.slot_count()) +
                          " slots, expected " + std::to_string(2 * s + m));
    // MP1
    for (int a = 0; a < s; ++a)
        if (!is_partial_order(y.slot(a)))
            return false;
    for (int b = 0; b < s + m; ++b)
        if (!is_linear_order(y.slot(s + b)))
            return false;
    // MP2: slot a contained in slot b whenever i_a precedes i_b
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            if (a != b && info.leq(info.pairs[a].first, info.pairs[b].first) &&
                !y.slot(a).subset_of(y.slot(b)))
                return false;
    // MP3: slot a contained in slot s+b whenever i_a precedes j_b
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            if (info.leq(info.pairs[a].first, info.pairs[b].second) &&
                !y.slot(a).subset_of(y.slot(s + b)))
                return false;
    // MP4: equal j's force equal linear slots
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            if (info.pairs[a].second == info.pairs[b].second &&
                !(y.slot(s + a) == y.slot(s + b)))
                return false;
    return true;
}

bool is_member_csm(int s, int m, const Multiposet& y) {
    if (s < 0 || m < 0)
        throw input_error("negative slot counts");
    if (y.slot_count() != 2 * s + m)
        throw input_error("structure has " + std::to_string(y.slot_count()) +
                          " slots, expected " + std::to_string(2 * s + m));
    for (int b = 0; b < s + m; ++b)
        if (!is_linear_order(y.slot(s + b)))
            return false;
    for (int a = 0; a < s; ++a)
        if (!is_partial_order(y.slot(a)))
            return false;
    for (int a = 0; a < s; ++a)
        if (!y.slot(a).subset_of(y.slot(s + a)))
            return false;
    return true;
}

Multiposet bar_translate(const Template& t, const Multiposet& x) {
    if (!is_member_k(t, x))
        throw input_error("bar_translate: structure is not a member of the template class");
    TemplateInfo info = validate_template(t);
    std::vector<Relation> rels;
    rels.reserve(static_cast<size_t>(info.bar_slots()));
    for (auto [i, j] : info.pairs)
        rels.push_back(x.slot(i - 1));
    for (auto [i, j] : info.pairs)
        rels.push_back(x.slot(j - 1));
    for (int k : info.isolated)
        rels.push_back(x.slot(k - 1));
    return Multiposet(x.size(), std::move(rels));
}

Multiposet bar_untranslate(const Template& t, const Multiposet& y) {
    TemplateInfo info = validate_template(t);
    if (!is_member_kbar(info, y))
        throw input_error("bar_untranslate: structure is not in the duplicated-slot class");
    int s = info.s();
    std::vector<Relation> rels;
    rels.reserve(static_cast<size_t>(t.t()));
    for (int v = 1; v <= t.t(); ++v) {
        int slot = -1;
        for (int c = 0; c < info.m() && slot < 0; ++c)
            if (info.isolated[static_cast<size_t>(c)] == v)
                slot = 2 * s + c;
        for (int a = 0; a < s && slot < 0; ++a)
            if (info.pairs[static_cast<size_t>(a)].first == v)
                slot = a;
        for (int a = 0; a < s && slot < 0; ++a)
            if (info.pairs[static_cast<size_t>(a)].second == v)
                slot = s + a;
        if (slot < 0)
            throw internal_error("template element " + std::to_string(v) + " has no slot role");
        rels.push_back(y.slot(slot));
    }
    return Multiposet(y.size(), std::move(rels));
}

ClassSpec ClassSpec::chain() {
    ClassSpec c;
    c.kind = Kind::chain;
    return c;
}

ClassSpec ClassSpec::epos() {
    ClassSpec c;
    c.kind = Kind::epos;
    return c;
}

ClassSpec ClassSpec::csm(int s, int m) {
    if (s < 0 || m < 0)
        throw input_error("negative slot counts");
    ClassSpec c;
    c.kind = Kind::csm;
    c.s = s;
    c.m = m;
    return c;
}

ClassSpec ClassSpec::k_of(const Template& t) {
    ClassSpec c;
    c.kind = Kind::k_of_template;
    c.tmpl = t;
    return c;
}

ClassSpec ClassSpec::kbar_of(const Template& t) {
    ClassSpec c;
    c.kind = Kind::kbar_of_template;
    c.tmpl = t;
    return c;
}

ClassSpec ClassSpec::product(std::vector<std::pair<std::vector<int>, ClassSpec>> factors) {
    ClassSpec c;
    c.kind = Kind::product;
    c.factors = std::move(factors);
    return c;
}

int ClassSpec::slot_count() const {
    switch (kind) {
    case Kind::chain:
        return 1;
    case Kind::epos:
        return 2;
    case Kind::csm:
        return 2 * s + m;
    case Kind::k_of_template:
        return tmpl->t();
    case Kind::kbar_of_template:
        return validate_template(*tmpl).bar_slots();
    case Kind::product: {
        int total = 0;
        for (const auto& [slots, sub] : factors)
            total += static_cast<int>(slots.size());
        return total;
    }
    }
    throw internal_error("unhandled class kind");
}

std::string ClassSpec::describe() const {
    switch (kind) {
    case Kind::chain:
        return "Ch";
    case Kind::epos:
        return "EPos";
    case Kind::csm:
        return "C(" + std::to_string(s) + "," + std::to_string(m) + ")";
    case Kind::k_of_template:
        return "K(T), t=" + std::to_string(tmpl->t());
    case Kind::kbar_of_template:
        return "Kbar(T), t=" + std::to_string(tmpl->t());
    case Kind::product: {
        std::string out = "Product(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i)
                out += ", ";
            out += factors[i].second.describe();
        }
        return out + ")";
    }
    }
    throw internal_error("unhandled class kind");
}

bool class_contains(const ClassSpec& spec, const Multiposet& y) {
    switch (spec.kind) {
    case ClassSpec::Kind::chain:
        if (y.slot_count() != 1)
            throw input_error("chain class needs exactly one slot");
        return is_linear_order(y.slot(0));
    case ClassSpec::Kind::epos:
        if (y.slot_count() != 2)
            throw input_error("extended-poset class needs exactly two slots");
        return is_partial_order(y.slot(0)) && is_linear_order(y.slot(1)) &&
               y.slot(0).subset_of(y.slot(1));
    case ClassSpec::Kind::csm:
        return is_member_csm(spec.s, spec.m, y);
    case ClassSpec::Kind::k_of_template:
        return is_member_k(*spec.tmpl, y);
    case ClassSpec::Kind::kbar_of_template:
        return is_member_kbar(validate_template(*spec.tmpl), y);
    case ClassSpec::Kind::product:
        return product_membership(spec, y);
    }
    throw internal_error("unhandled class kind");
}

bool product_membership(const ClassSpec& spec, const Multiposet& y) {
    if (spec.kind != ClassSpec::Kind::product)
        throw input_error("product_membership needs a product class");
    std::uint64_t covered = 0;
    for (const auto& [slots, sub] : spec.factors) {
        if (static_cast<int>(slots.size()) != sub.slot_count())
            throw input_error("factor slot set size does not match the factor class");
        for (int i : slots) {
            if (i < 0 || i >= y.slot_count())
                throw input_error("factor slot index out of range");
            std::uint64_t bit = std::uint64_t{1} << i;
            if (covered & bit)
                throw input_error("factor slot sets overlap");
            covered |= bit;
        }
    }
    std::uint64_t all = y.slot_count() >= 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << y.slot_count()) - 1;
    if (covered != all)
        throw input_error("factor slot sets do not cover every slot");
    for (const auto& [slots, sub] : spec.factors)
        if (!class_contains(sub, reduct(y, slots)))
            return false;
    return true;
}

Multiposet chain_structure(int n) {
    Relation r(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            r.set(a, b);
    return Multiposet(n, {r});
}

Multiposet point_structure() {
    return chain_structure(1);
}

} // namespace mpr
