#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpr/canonical.hpp"
#include "mpr/ramsey.hpp"
#include "test_util.hpp"

using namespace mpr;
using test_util::chain_rel;

namespace {

// chains of even size: hereditarily broken on purpose
ClassUniverse even_chains() {
    ClassUniverse u;
    u.slots = 1;
    u.contains = [](const Multiposet& x) {
        return x.size() % 2 == 0 && is_linear_order(x.slot(0));
    };
    u.members = [](int n) {
        std::vector<Multiposet> out;
        if (n % 2 == 0)
            out.push_back(chain_structure(n));
        return out;
    };
    return u;
}

// chains and discrete orders side by side: no joint extensions across kinds
ClassUniverse chains_or_antichains() {
    ClassUniverse u;
    u.slots = 1;
    u.contains = [](const Multiposet& x) {
        const Relation& r = x.slot(0);
        return is_linear_order(r) || r == Relation::diagonal(x.size());
    };
    u.members = [](int n) {
        std::vector<Multiposet> out;
        Multiposet chain = chain_structure(n);
        Multiposet flat(n, {Relation::diagonal(n)});
        for (const Multiposet& x : {canonicalize(chain), canonicalize(flat)})
            if (std::find(out.begin(), out.end(), x) == out.end())
                out.push_back(x);
        return out;
    };
    return u;
}

} // namespace

TEST_CASE("pigeonhole witnesses") {
    WitnessSearchOutcome two = ramsey_witness_search(ClassSpec::chain(), point_structure(),
                                                     chain_structure(2), 2, 6);
    REQUIRE(two.status == WitnessSearchOutcome::Status::found);
    CHECK(two.witness->size() == 3);

    // explicit failure below the witness size
    CHECK_FALSE(arrow_check(chain_structure(2), chain_structure(2), point_structure(), 2).holds);
}

TEST_CASE("the six-chain is the least witness for coloring pairs in triples") {
    WitnessSearchOutcome out = ramsey_witness_search(ClassSpec::chain(), chain_structure(2),
                                                     chain_structure(3), 2, 7);
    REQUIRE(out.status == WitnessSearchOutcome::Status::found);
    CHECK(out.witness->size() == 6);
    CHECK(out.arrow->holds);
}

TEST_CASE("two agreeing orders on two points find a three-point witness") {
    Template d2 = preset_template("d:2");
    Multiposet point(1, {chain_rel(1), chain_rel(1)});
    Multiposet agree(2, {chain_rel(2), chain_rel(2)});
    WitnessSearchOutcome out =
        ramsey_witness_search(ClassSpec::k_of(d2), point, agree, 2, 4);
    REQUIRE(out.status == WitnessSearchOutcome::Status::found);
    CHECK(out.witness->size() == 3);

    // size 2 fails for every class member
    for (const Multiposet& c : enumerate_class(ClassSpec::k_of(d2), 2))
        if (!enumerate_embeddings(agree, c).empty())
            CHECK_FALSE(arrow_check(c, agree, point, 2).holds);
}

TEST_CASE("search outcome statuses") {
    WitnessSearchOutcome exhausted = ramsey_witness_search(
        ClassSpec::chain(), chain_structure(2), chain_structure(3), 2, 5);
    CHECK(exhausted.status == WitnessSearchOutcome::Status::exhausted);
    CHECK(exhausted.last_size_scanned == 5);

    WitnessSearchOutcome blocked = ramsey_witness_search(
        ClassSpec::chain(), chain_structure(2), chain_structure(3), 2, 9, 4);
    CHECK(blocked.status == WitnessSearchOutcome::Status::bound_exceeded);

    CHECK_THROWS_AS(ramsey_witness_search(ClassSpec::chain(), chain_structure(3),
                                          chain_structure(2), 2, 6),
                    input_error); // hom(A,B) empty
    Multiposet flat(2, {Relation::diagonal(2)});
    CHECK_THROWS_AS(ramsey_witness_search(ClassSpec::chain(), flat, chain_structure(3), 2, 6),
                    input_error); // A outside the class
}

TEST_CASE("chains and extended posets have the three closure properties") {
    CHECK(has_hp_upto(ClassSpec::chain(), 3));
    CHECK(has_jep_upto(ClassSpec::chain(), 3));
    CHECK(has_sap_upto(ClassSpec::chain(), 3));

    CHECK(has_hp_upto(ClassSpec::epos(), 2));
    CHECK(has_jep_upto(ClassSpec::epos(), 2));
    CHECK(has_sap_upto(ClassSpec::epos(), 2));
}

TEST_CASE("even chains fail heredity") {
    CHECK_FALSE(has_hp_upto(even_chains(), 3));
    // but they do embed jointly
    CHECK(has_jep_upto(even_chains(), 3));
}

TEST_CASE("mixing chains and antichains breaks joint embedding") {
    ClassUniverse u = chains_or_antichains();
    CHECK_FALSE(has_jep_upto(u, 2));
    CHECK(has_hp_upto(u, 3));
}
