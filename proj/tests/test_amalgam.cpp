#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpr/amalgam.hpp"
#include "mpr/canonical.hpp"
#include "test_util.hpp"

using namespace mpr;
using test_util::antichain_rel;
using test_util::chain_rel;
using test_util::epos_structure;

namespace {

// the smallest members of the duplicated-slot class for the two-slot
// template: one point, and the extended antichain pair
Multiposet kbar_point() {
    return Multiposet(1, {chain_rel(1), chain_rel(1)});
}
Multiposet extended_antichain2() {
    return epos_structure(antichain_rel(2), chain_rel(2));
}

BinaryDiagram single_top_diagram(const Multiposet& a, const Multiposet& b, const Embedding& f) {
    BinaryDiagram d{a, b, 1, {}};
    d.bottoms.push_back({DiagramArrow{0, f}, DiagramArrow{0, f}});
    return d;
}

} // namespace

TEST_CASE("cone compatibility") {
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();
    Embedding f{2, {0}};
    BinaryDiagram d = single_top_diagram(a, b, f);

    Cone trivial{b, {identity_embedding(2)}};
    CHECK(is_compatible_cone(d, trivial, ClassSpec::csm(1, 0)));

    // two tops into a larger apex, meeting at different points
    BinaryDiagram two{a, b, 2, {}};
    two.bottoms.push_back({DiagramArrow{0, Embedding{2, {1}}}, DiagramArrow{1, Embedding{2, {0}}}});
    Multiposet apex = epos_structure(antichain_rel(3), chain_rel(3));
    Cone good{apex, {Embedding{3, {0, 1}}, Embedding{3, {1, 2}}}};
    CHECK(is_compatible_cone(two, good, ClassSpec::csm(1, 0)));
    Cone bad{apex, {Embedding{3, {0, 1}}, Embedding{3, {0, 2}}}};
    CHECK_FALSE(is_compatible_cone(two, bad, ClassSpec::csm(1, 0)));

    Cone short_cone{apex, {Embedding{3, {0, 1}}}};
    CHECK_THROWS_AS(is_compatible_cone(two, short_cone, ClassSpec::csm(1, 0)), input_error);
}

TEST_CASE("cone search finds the top itself for single-top diagrams") {
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();
    BinaryDiagram d = single_top_diagram(a, b, Embedding{2, {1}});

    ConeSearchOutcome out = find_cone_csm(d, 1, 0, 4);
    REQUIRE(out.status == ConeSearchOutcome::Status::found);
    CHECK(out.cone->apex.size() == b.size());
    CHECK(canonical_form(out.cone->apex).bytes == canonical_form(b).bytes);
    CHECK(is_compatible_cone(d, *out.cone, ClassSpec::csm(1, 0)));
}

TEST_CASE("cone search golden instance with two tops") {
    Multiposet a = kbar_point();
    Multiposet b = epos_structure(chain_rel(2), chain_rel(2));
    BinaryDiagram d{a, b, 2, {}};
    Embedding f{2, {0}};
    d.bottoms.push_back({DiagramArrow{0, f}, DiagramArrow{1, f}});

    ConeSearchOutcome out = find_cone_csm(d, 1, 0, 3);
    REQUIRE(out.status == ConeSearchOutcome::Status::found);
    CHECK(out.cone->apex.size() <= 3);
    CHECK(is_compatible_cone(d, *out.cone, ClassSpec::csm(1, 0)));
    // the two-point chain pair already serves as its own apex here
    CHECK(out.cone->apex.size() == 2);
}

TEST_CASE("contradictory arrow pairs admit no cone at any size") {
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();
    BinaryDiagram d{a, b, 1, {}};
    // same top, different maps: monic legs make compatibility impossible
    d.bottoms.push_back({DiagramArrow{0, Embedding{2, {0}}}, DiagramArrow{0, Embedding{2, {1}}}});

    ConeSearchOutcome out = find_cone_csm(d, 1, 0, 4);
    CHECK(out.status == ConeSearchOutcome::Status::none_within_bound);
    CHECK_FALSE(out.cone.has_value());
}

TEST_CASE("single-top construction returns the top unchanged") {
    TemplateInfo info = validate_template(preset_template("b"));
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();
    BinaryDiagram d = single_top_diagram(a, b, Embedding{2, {0}});
    Cone cone{b, {identity_embedding(2)}};

    ConstructedCone built = construct_d(d, cone, info);
    CHECK(built.d == b);
    CHECK(built.legs == std::vector<Embedding>{identity_embedding(2)});
}

TEST_CASE("overlapping images glue into a larger structure") {
    TemplateInfo info = validate_template(preset_template("b"));
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();

    BinaryDiagram d{a, b, 2, {}};
    d.bottoms.push_back({DiagramArrow{0, Embedding{2, {1}}}, DiagramArrow{1, Embedding{2, {0}}}});
    Multiposet apex = epos_structure(antichain_rel(3), chain_rel(3));
    Cone cone{apex, {Embedding{3, {0, 1}}, Embedding{3, {1, 2}}}};
    REQUIRE(is_compatible_cone(d, cone, ClassSpec::csm(1, 0)));

    ConstructedCone built = construct_d(d, cone, info);
    CHECK(built.d.size() == 3);
    CHECK(is_member_kbar(info, built.d));
    for (const Embedding& leg : built.legs)
        CHECK(is_embedding(leg, b, built.d));
    // the linear slot restricted to each image is the image's own order
    for (std::size_t i = 0; i < built.legs.size(); ++i)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                CHECK(built.d.slot(1).contains(built.legs[i](x), built.legs[i](y)) ==
                      b.slot(1).contains(x, y));

    TheoremReport report = verify_main_theorem_instance(d, cone, info);
    CHECK(report.pass);
    CHECK(report.checks.size() == 9);
}

TEST_CASE("transitive closure genuinely adds pairs and membership survives") {
    TemplateInfo info = validate_template(preset_template("b"));
    Multiposet a = kbar_point();
    Multiposet b = epos_structure(chain_rel(2), chain_rel(2));

    BinaryDiagram d{a, b, 2, {}};
    d.bottoms.push_back({DiagramArrow{0, Embedding{2, {1}}}, DiagramArrow{1, Embedding{2, {0}}}});
    Multiposet apex = epos_structure(chain_rel(3), chain_rel(3));
    Cone cone{apex, {Embedding{3, {0, 1}}, Embedding{3, {1, 2}}}};
    REQUIRE(is_compatible_cone(d, cone, ClassSpec::csm(1, 0)));

    ConstructedCone built = construct_d(d, cone, info);
    // 0<1 and 1<2 close to the full chain: the closure added 0<2
    CHECK(built.d.slot(0).contains(0, 2));
    Relation plain_union =
        apex.slot(0).masked(0b011).united_with(apex.slot(0).masked(0b110)).restricted_to(
            {0, 1, 2});
    CHECK_FALSE(plain_union.contains(0, 2));
    CHECK(is_member_kbar(info, built.d));

    TheoremReport report = verify_main_theorem_instance(d, cone, info);
    CHECK(report.pass);
}

TEST_CASE("tampering is caught at the right stage") {
    TemplateInfo info = validate_template(preset_template("b"));
    Multiposet a = kbar_point();
    Multiposet b = extended_antichain2();
    BinaryDiagram d{a, b, 2, {}};
    d.bottoms.push_back({DiagramArrow{0, Embedding{2, {1}}}, DiagramArrow{1, Embedding{2, {0}}}});
    Multiposet apex = epos_structure(antichain_rel(3), chain_rel(3));
    Cone cone{apex, {Embedding{3, {0, 1}}, Embedding{3, {1, 2}}}};

    // perturb one leg: compatibility breaks before anything else
    Cone tampered = cone;
    tampered.legs[1] = Embedding{3, {0, 2}};
    TheoremReport r1 = verify_main_theorem_instance(d, tampered, info);
    CHECK_FALSE(r1.pass);
    REQUIRE(r1.failed() != nullptr);
    CHECK(r1.failed()->name == "cone-compatible-csm");

    CHECK_THROWS_AS(construct_d(d, tampered, info), input_error);
}

TEST_CASE("a wrong pair list is caught at the membership stage") {
    TemplateInfo info = validate_template(preset_template("e:3"));
    // two distinct linear slots over a duplicated trivial partial order
    Multiposet a(1, {chain_rel(1), chain_rel(1), chain_rel(1), chain_rel(1)});
    Multiposet b(2, {antichain_rel(2), antichain_rel(2), chain_rel(2), chain_rel(2, {1, 0})});
    REQUIRE(is_member_kbar(info, b));

    BinaryDiagram d{a, b, 1, {}};
    Embedding f{2, {0}};
    d.bottoms.push_back({DiagramArrow{0, f}, DiagramArrow{0, f}});
    Cone cone{b, {identity_embedding(2)}};
    REQUIRE(verify_main_theorem_instance(d, cone, info).pass);

    // claim both pairs share one maximal element: the duplicated linear
    // slots would have to coincide, and here they do not
    TemplateInfo tampered = info;
    tampered.pairs = {{3, 1}, {3, 1}};
    TheoremReport report = verify_main_theorem_instance(d, cone, tampered);
    CHECK_FALSE(report.pass);
    REQUIRE(report.failed() != nullptr);
    CHECK(report.failed()->name == "endpoints-in-kbar");
}

TEST_CASE("cone-first generation always yields compatible instances") {
    TemplateInfo info = validate_template(preset_template("b"));
    Multiposet b = extended_antichain2();
    Multiposet a = kbar_point();
    Multiposet seed = epos_structure(antichain_rel(4), chain_rel(4));

    int produced = 0;
    for (std::uint64_t seed_val = 1; seed_val <= 30; ++seed_val) {
        auto inst = generate_diagram_from_cone(seed, b, a, 3, 4, seed_val);
        if (!inst)
            continue;
        ++produced;
        CHECK(is_compatible_cone(inst->diagram, inst->cone, ClassSpec::csm(1, 0)));
        TheoremReport report = verify_main_theorem_instance(inst->diagram, inst->cone, info);
        CHECK(report.pass);
    }
    CHECK(produced > 0);

    // deterministic replay
    auto first = generate_diagram_from_cone(seed, b, a, 2, 3, 42);
    auto second = generate_diagram_from_cone(seed, b, a, 2, 3, 42);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(first->cone.apex == second->cone.apex);
    CHECK(first->cone.legs == second->cone.legs);
    CHECK(first->diagram.tops_count == second->diagram.tops_count);
    for (std::size_t i = 0; i < first->diagram.bottoms.size(); ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(first->diagram.bottoms[i][static_cast<size_t>(j)].top ==
                  second->diagram.bottoms[i][static_cast<size_t>(j)].top);
            CHECK(first->diagram.bottoms[i][static_cast<size_t>(j)].map ==
                  second->diagram.bottoms[i][static_cast<size_t>(j)].map);
        }
}

TEST_CASE("legs all equal lets any arrow pair repeat") {
    Multiposet b = extended_antichain2();
    Multiposet a = kbar_point();
    // apex = b forces every leg to be the identity-like embedding
    auto inst = generate_diagram_from_cone(b, b, a, 2, 2, 7);
    REQUIRE(inst.has_value());
    CHECK(is_compatible_cone(inst->diagram, inst->cone, ClassSpec::csm(1, 0)));
}
