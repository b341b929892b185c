#include "mpr/amalgam.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mpr/canonical.hpp"

namespace mpr {

void validate_diagram(const BinaryDiagram& d) {
    if (d.tops_count < 1)
        throw input_error("diagram needs at least one top");
    if (d.bottom.slot_count() != d.top.slot_count())
        throw input_error("diagram top and bottom disagree on slot count");
    for (const auto& vertex : d.bottoms)
        for (const DiagramArrow& arrow : vertex) {
            if (arrow.top < 0 || arrow.top >= d.tops_count)
                throw input_error("diagram arrow top index out of range");
            if (!is_embedding(arrow.map, d.bottom, d.top))
                throw input_error("diagram arrow is not an embedding");
        }
}

bool is_compatible_cone(const BinaryDiagram& d, const Cone& cone, const ClassSpec& membership) {
    if (static_cast<int>(cone.legs.size()) != d.tops_count)
        throw input_error("cone has " + std::to_string(cone.legs.size()) + " legs, diagram has " +
                          std::to_string(d.tops_count) + " tops");
    if (!class_contains(membership, cone.apex))
        return false;
    for (const Embedding& leg : cone.legs)
        if (!is_embedding(leg, d.top, cone.apex))
            return false;
    for (const auto& vertex : d.bottoms) {
        Embedding via_first = compose(cone.legs[static_cast<size_t>(vertex[0].top)], vertex[0].map);
        Embedding via_second =
            compose(cone.legs[static_cast<size_t>(vertex[1].top)], vertex[1].map);
        if (!(via_first == via_second))
            return false;
    }
    return true;
}

ConeSearchOutcome find_cone_csm(const BinaryDiagram& d, int s, int m, int max_size,
                                int enum_bound) {
    validate_diagram(d);
    ClassSpec csm = ClassSpec::csm(s, m);
    if (d.top.slot_count() != csm.slot_count())
        throw input_error("diagram slots do not match C(s,m)");

    ConeSearchOutcome out;
    for (int size = d.top.size(); size <= max_size; ++size) {
        std::vector<Multiposet> apexes;
        try {
            apexes = enumerate_class(csm, size, enum_bound);
        } catch (const bound_error&) {
            out.status = ConeSearchOutcome::Status::bound_exceeded;
            return out;
        }
        for (const Multiposet& apex : apexes) {
            std::vector<Embedding> hom_ba = enumerate_embeddings(d.top, apex);
            if (hom_ba.empty())
                continue;
            // assign legs one top at a time; a bottom vertex constrains a
            // pair of legs, checked as soon as both ends are placed
            std::vector<int> pick(static_cast<size_t>(d.tops_count), -1);
            auto consistent_up_to = [&](int placed) {
                for (const auto& vertex : d.bottoms) {
                    if (vertex[0].top > placed || vertex[1].top > placed)
                        continue;
                    Embedding lhs =
                        compose(hom_ba[static_cast<size_t>(pick[static_cast<size_t>(
                                    vertex[0].top)])],
                                vertex[0].map);
                    Embedding rhs =
                        compose(hom_ba[static_cast<size_t>(pick[static_cast<size_t>(
                                    vertex[1].top)])],
                                vertex[1].map);
                    if (!(lhs == rhs))
                        return false;
                }
                return true;
            };
            auto descend = [&](auto&& self, int leg) -> bool {
                if (leg == d.tops_count)
                    return true;
                for (int i = 0; i < static_cast<int>(hom_ba.size()); ++i) {
                    pick[static_cast<size_t>(leg)] = i;
                    if (consistent_up_to(leg) && self(self, leg + 1))
                        return true;
                }
                pick[static_cast<size_t>(leg)] = -1;
                return false;
            };
            if (descend(descend, 0)) {
                Cone cone{apex, {}};
                cone.legs.reserve(static_cast<size_t>(d.tops_count));
                for (int t = 0; t < d.tops_count; ++t)
                    cone.legs.push_back(hom_ba[static_cast<size_t>(pick[static_cast<size_t>(t)])]);
                out.status = ConeSearchOutcome::Status::found;
                out.cone = std::move(cone);
                return out;
            }
        }
    }
    out.status = ConeSearchOutcome::Status::none_within_bound;
    return out;
}

namespace {

std::vector<int> union_of_leg_images(const Cone& cone) {
    std::uint64_t mask = 0;
    for (const Embedding& leg : cone.legs)
        for (int v : leg.map)
            mask |= std::uint64_t{1} << v;
    std::vector<int> elements;
    for (int v = 0; v < cone.apex.size(); ++v)
        if ((mask >> v) & 1u)
            elements.push_back(v);
    return elements;
}

} // namespace

ConstructedCone construct_d(const BinaryDiagram& diagram, const Cone& cone,
                            const TemplateInfo& info) {
    validate_diagram(diagram);
    int s = info.s();
    int m = info.m();
    if (!is_member_kbar(info, diagram.top) || !is_member_kbar(info, diagram.bottom))
        throw input_error("construct_d: diagram endpoints must lie in the duplicated-slot class");
    if (!is_compatible_cone(diagram, cone, ClassSpec::csm(s, m)))
        throw input_error("construct_d: cone is not compatible over the diagram in C(s,m)");

    std::vector<int> elements = union_of_leg_images(cone);
    std::vector<int> new_id(static_cast<size_t>(cone.apex.size()), -1);
    for (std::size_t i = 0; i < elements.size(); ++i)
        new_id[static_cast<size_t>(elements[static_cast<size_t>(i)])] = static_cast<int>(i);

    std::vector<std::uint64_t> image_masks;
    image_masks.reserve(cone.legs.size());
    for (const Embedding& leg : cone.legs) {
        std::uint64_t mask = 0;
        for (int v : leg.map)
            mask |= std::uint64_t{1} << v;
        image_masks.push_back(mask);
    }

    std::vector<Relation> slots;
    slots.reserve(static_cast<size_t>(2 * s + m));
    for (int slot = 0; slot < 2 * s + m; ++slot) {
        Relation unioned(cone.apex.size());
        for (std::uint64_t mask : image_masks)
            unioned = unioned.united_with(cone.apex.slot(slot).masked(mask));
        Relation closed = transitive_closure(unioned.restricted_to(elements));
        if (slot < s) {
            // stays inside the apex order restricted to D, so antisymmetry
            // cannot break here
            if (!closed.subset_of(cone.apex.slot(slot).restricted_to(elements)))
                throw internal_error("closure escaped the apex slot restriction");
            slots.push_back(std::move(closed));
        } else {
            if (!is_partial_order(closed))
                throw internal_error("closed union of linear restrictions is not an order");
            slots.push_back(linear_extension_fixed(closed));
        }
    }

    ConstructedCone result{Multiposet(static_cast<int>(elements.size()), std::move(slots)), {}};
    result.legs.reserve(cone.legs.size());
    for (const Embedding& leg : cone.legs) {
        Embedding f;
        f.target_size = result.d.size();
        f.map.reserve(leg.map.size());
        for (int v : leg.map)
            f.map.push_back(new_id[static_cast<size_t>(v)]);
        result.legs.push_back(std::move(f));
    }

    if (!is_member_kbar(info, result.d))
        throw internal_error("constructed structure fell outside the duplicated-slot class");
    for (const Embedding& f : result.legs)
        if (!is_embedding(f, diagram.top, result.d))
            throw internal_error("constructed leg is not an embedding");
    return result;
}

const TheoremCheck* TheoremReport::failed() const {
    for (const TheoremCheck& c : checks)
        if (!c.pass)
            return &c;
    return nullptr;
}

TheoremReport verify_main_theorem_instance(const BinaryDiagram& diagram, const Cone& cone,
                                           const TemplateInfo& info) {
    TheoremReport report;
    auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back(TheoremCheck{name, ok, ok ? "" : detail});
        return ok;
    };

    try {
        validate_diagram(diagram);
        if (!stage("diagram-valid", true, ""))
            return report;
    } catch (const input_error& e) {
        stage("diagram-valid", false, e.what());
        return report;
    }

    int s = info.s();
    int m = info.m();
    if (!stage("endpoints-in-kbar",
               is_member_kbar(info, diagram.top) && is_member_kbar(info, diagram.bottom),
               "diagram top or bottom violates the membership conditions"))
        return report;

    if (!stage("cone-compatible-csm", is_compatible_cone(diagram, cone, ClassSpec::csm(s, m)),
               "cone fails compatibility or membership in C(s,m)"))
        return report;

    ConstructedCone built{Multiposet(1, {}), {}};
    try {
        built = construct_d(diagram, cone, info);
        stage("construction", true, "");
    } catch (const internal_error& e) {
        stage("construction", false, e.what());
        return report;
    }

    if (!stage("d-in-kbar", is_member_kbar(info, built.d),
               "constructed structure violates the membership conditions"))
        return report;

    bool legs_ok = true;
    for (const Embedding& f : built.legs)
        legs_ok = legs_ok && is_embedding(f, diagram.top, built.d);
    if (!stage("legs-embed", legs_ok, "a relabelled leg is not an embedding"))
        return report;

    bool compat = true;
    for (const auto& vertex : diagram.bottoms) {
        Embedding lhs = compose(built.legs[static_cast<size_t>(vertex[0].top)], vertex[0].map);
        Embedding rhs = compose(built.legs[static_cast<size_t>(vertex[1].top)], vertex[1].map);
        compat = compat && lhs == rhs;
    }
    if (!stage("cone-compatible-kbar", compat,
               "constructed legs break a compatibility equation"))
        return report;

    // containment of partial slots in the apex restriction, and per-image
    // restriction equality for every slot
    std::vector<int> elements = union_of_leg_images(cone);
    bool contained = true;
    for (int slot = 0; slot < s; ++slot)
        contained = contained &&
                    built.d.slot(slot).subset_of(cone.apex.slot(slot).restricted_to(elements));
    if (!stage("partial-slot-containment", contained,
               "a partial slot escapes the apex restriction"))
        return report;

    bool restrictions = true;
    for (std::size_t i = 0; i < cone.legs.size() && restrictions; ++i)
        for (int slot = 0; slot < 2 * s + m && restrictions; ++slot)
            for (int x = 0; x < diagram.top.size() && restrictions; ++x)
                for (int y = 0; y < diagram.top.size(); ++y) {
                    bool in_d = built.d.slot(slot).contains(built.legs[i](x), built.legs[i](y));
                    bool in_apex =
                        cone.apex.slot(slot).contains(cone.legs[i](x), cone.legs[i](y));
                    if (in_d != in_apex) {
                        restrictions = false;
                        break;
                    }
                }
    stage("image-restrictions-equal", restrictions,
          "a slot restricted to a leg image differs from the apex restriction");

    report.pass = report.failed() == nullptr;
    return report;
}

std::optional<GeneratedInstance> generate_diagram_from_cone(const Multiposet& seed_apex,
                                                            const Multiposet& b,
                                                            const Multiposet& a, int tops,
                                                            int bottoms,
                                                            std::uint64_t rng_seed) {
    if (tops < 1 || bottoms < 0)
        throw input_error("generator needs tops >= 1 and bottoms >= 0");
    std::vector<Embedding> hom_ba = enumerate_embeddings(b, seed_apex);
    std::vector<Embedding> hom_ab = enumerate_embeddings(a, b);
    if (hom_ba.empty() || hom_ab.empty())
        throw input_error("generator needs hom(b, apex) and hom(a, b) nonempty");

    // mt19937_64 is pinned by the standard, so fixed seeds replay everywhere
    std::mt19937_64 rng(rng_seed);
    auto draw = [&rng](std::size_t bound) {
        return static_cast<std::size_t>(rng() % bound);
    };

    Cone cone{seed_apex, {}};
    cone.legs.reserve(static_cast<size_t>(tops));
    for (int t = 0; t < tops; ++t)
        cone.legs.push_back(hom_ba[draw(hom_ba.size())]);

    // composites of each leg with each candidate arrow, for pair matching
    std::vector<std::vector<Embedding>> composite(static_cast<size_t>(tops));
    for (int t = 0; t < tops; ++t) {
        composite[static_cast<size_t>(t)].reserve(hom_ab.size());
        for (const Embedding& h : hom_ab)
            composite[static_cast<size_t>(t)].push_back(
                compose(cone.legs[static_cast<size_t>(t)], h));
    }

    auto matches = [&](int t1, int t2) {
        std::vector<std::pair<int, int>> out;
        for (int h1 = 0; h1 < static_cast<int>(hom_ab.size()); ++h1)
            for (int h2 = 0; h2 < static_cast<int>(hom_ab.size()); ++h2)
                if (composite[static_cast<size_t>(t1)][static_cast<size_t>(h1)] ==
                    composite[static_cast<size_t>(t2)][static_cast<size_t>(h2)])
                    out.emplace_back(h1, h2);
        return out;
    };

    BinaryDiagram diagram{a, b, tops, {}};
    diagram.bottoms.reserve(static_cast<size_t>(bottoms));
    for (int v = 0; v < bottoms; ++v) {
        int t1 = static_cast<int>(draw(static_cast<size_t>(tops)));
        int t2 = static_cast<int>(draw(static_cast<size_t>(tops)));
        std::vector<std::pair<int, int>> pairs = matches(t1, t2);
        if (pairs.empty()) {
            // walk all top pairs in a fixed order before giving up
            for (int u1 = 0; u1 < tops && pairs.empty(); ++u1)
                for (int u2 = 0; u2 < tops; ++u2) {
                    pairs = matches(u1, u2);
                    if (!pairs.empty()) {
                        t1 = u1;
                        t2 = u2;
                        break;
                    }
                }
            if (pairs.empty())
                return std::nullopt;
        }
        auto [h1, h2] = pairs[draw(pairs.size())];
        diagram.bottoms.push_back(
            {DiagramArrow{t1, hom_ab[static_cast<size_t>(h1)]},
             DiagramArrow{t2, hom_ab[static_cast<size_t>(h2)]}});
    }

    // compatibility holds by construction; fail loudly if it ever does not
    for (const auto& vertex : diagram.bottoms) {
        Embedding lhs = compose(cone.legs[static_cast<size_t>(vertex[0].top)], vertex[0].map);
        Embedding rhs = compose(cone.legs[static_cast<size_t>(vertex[1].top)], vertex[1].map);
        if (!(lhs == rhs))
            throw internal_error("generator emitted an incompatible arrow pair");
    }
    return GeneratedInstance{std::move(diagram), std::move(cone)};
}

} // namespace mpr
