#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mpr/canonical.hpp"
#include "mpr/enumerate.hpp"
#include "test_util.hpp"

using namespace mpr;
using test_util::for_all_labelled;

namespace {

// brute-force class count up to isomorphism: orbit representatives by
// minimal encoding over all permutations, fully independent of
// canonical_form and enumerate_class internals
int count_classes_by_orbit(int n, const std::vector<bool>& linear,
                           const std::function<bool(const Multiposet&)>& member) {
    std::set<std::string> orbit_minima;
    for_all_labelled(n, linear, [&](const Multiposet& x) {
        if (!member(x))
            return;
        std::vector<int> sigma(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            sigma[static_cast<size_t>(i)] = i;
        std::string least;
        do {
            std::string enc = encode_multiposet(permute(x, sigma));
            if (least.empty() || enc < least)
                least = std::move(enc);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        orbit_minima.insert(least);
    });
    return static_cast<int>(orbit_minima.size());
}

} // namespace

TEST_CASE("order pools have the classical counts") {
    CHECK(linear_order_pool(1).size() == 1);
    CHECK(linear_order_pool(3).size() == 6);
    CHECK(linear_order_pool(4).size() == 24);
    for (const Relation& r : linear_order_pool(4))
        CHECK(is_linear_order(r));

    CHECK(partial_order_pool(1).size() == 1);
    CHECK(partial_order_pool(2).size() == 3);
    CHECK(partial_order_pool(3).size() == 19);
    CHECK(partial_order_pool(4).size() == 219);
    CHECK(partial_order_pool(5).size() == 4231);
    std::set<std::string> distinct;
    for (const Relation& r : partial_order_pool(4)) {
        CHECK(is_partial_order(r));
        distinct.insert(encode_multiposet(Multiposet(4, {r})));
    }
    CHECK(distinct.size() == 219);
}

TEST_CASE("chains enumerate to one class per size") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Multiposet> reps = enumerate_class(ClassSpec::chain(), n);
        REQUIRE(reps.size() == 1);
        CHECK(class_contains(ClassSpec::chain(), reps[0]));
    }
}

TEST_CASE("extended posets at small sizes match the brute-force orbit count") {
    auto epos_member = [](const Multiposet& x) {
        return class_contains(ClassSpec::epos(), x);
    };
    int expect2 = count_classes_by_orbit(2, {false, true}, epos_member);
    CHECK(expect2 == 2);
    CHECK(enumerate_class(ClassSpec::epos(), 2).size() == 2);

    int expect3 = count_classes_by_orbit(3, {false, true}, epos_member);
    CHECK(enumerate_class(ClassSpec::epos(), 3).size() == static_cast<size_t>(expect3));

    int expect4 = count_classes_by_orbit(4, {false, true}, epos_member);
    CHECK(enumerate_class(ClassSpec::epos(), 4).size() == static_cast<size_t>(expect4));
}

TEST_CASE("two independent orders on two points give two classes") {
    Template d2 = preset_template("d:2");
    ClassSpec spec = ClassSpec::k_of(d2);
    int expect = count_classes_by_orbit(
        2, {true, true}, [&](const Multiposet& x) { return is_member_k(d2, x); });
    CHECK(expect == 2);
    CHECK(enumerate_class(spec, 2).size() == 2);
}

TEST_CASE("representatives are canonical, sorted, members, and complete") {
    Template e3 = preset_template("e:3");
    for (const ClassSpec& spec :
         {ClassSpec::epos(), ClassSpec::csm(1, 1), ClassSpec::k_of(e3),
          ClassSpec::kbar_of(e3)}) {
        for (int n = 1; n <= 3; ++n) {
            std::vector<Multiposet> reps = enumerate_class(spec, n);
            std::string prev;
            std::set<std::string> bytes;
            for (const Multiposet& x : reps) {
                CHECK(class_contains(spec, x));
                CanonicalForm cf = canonical_form(x);
                CHECK(permute(x, cf.perm) == x); // already canonical
                CHECK(cf.bytes > prev);          // strictly sorted
                prev = cf.bytes;
                bytes.insert(cf.bytes);
            }
            // completeness: every labelled member canonicalizes into the list
            SlotConstraints cons = class_constraints(spec);
            for_all_labelled(n, cons.linear, [&](const Multiposet& x) {
                if (class_contains(spec, x))
                    CHECK(bytes.count(canonical_form(x).bytes) == 1);
            });
        }
    }
}

TEST_CASE("constraint reduction matches class membership") {
    Template e3 = preset_template("e:3");
    for (const ClassSpec& spec :
         {ClassSpec::chain(), ClassSpec::epos(), ClassSpec::csm(2, 1), ClassSpec::k_of(e3),
          ClassSpec::kbar_of(e3),
          ClassSpec::product({{{1, 0}, ClassSpec::epos()}, {{2}, ClassSpec::chain()}})}) {
        SlotConstraints cons = class_constraints(spec);
        REQUIRE(cons.slots == spec.slot_count());
        for (int n = 1; n <= 2; ++n)
            for_all_labelled(n, std::vector<bool>(static_cast<size_t>(cons.slots), false),
                             [&](const Multiposet& x) {
                                 bool by_constraints = true;
                                 for (int i = 0; i < cons.slots; ++i)
                                     if (cons.linear[static_cast<size_t>(i)] &&
                                         !is_linear_order(x.slot(i)))
                                         by_constraints = false;
                                 for (auto [a, b] : cons.inclusions)
                                     if (!x.slot(a).subset_of(x.slot(b)))
                                         by_constraints = false;
                                 CHECK(by_constraints == class_contains(spec, x));
                             });
    }
}

TEST_CASE("repeated enumeration is bit-identical") {
    ClassSpec spec = ClassSpec::kbar_of(preset_template("e:3"));
    std::vector<Multiposet> first = enumerate_class(spec, 3);
    std::vector<Multiposet> second = enumerate_class(spec, 3);
    CHECK(first == second);
}

TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(enumerate_class(ClassSpec::chain(), 4, 3), bound_error);
    CHECK_THROWS_AS(enumerate_class(ClassSpec::epos(), 7), bound_error);
    CHECK_THROWS_AS(enumerate_class(ClassSpec::chain(), 0), input_error);
}
