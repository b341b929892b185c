#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpr/enumerate.hpp"
#include "mpr/relation.hpp"
#include "test_util.hpp"

using namespace mpr;
using test_util::chain_rel;
using test_util::rel;

TEST_CASE("transitive closure adds exactly the forced pairs") {
    Relation r = rel(4, {{1, 2}, {2, 3}}, false);
    Relation c = transitive_closure(r);
    CHECK(c.contains(1, 3));
    CHECK(c.pair_count() == r.pair_count() + 1);

    CHECK(transitive_closure(Relation(3)) == Relation(3));

    Relation cyc = rel(2, {{0, 1}, {1, 0}}, false);
    Relation closed = transitive_closure(cyc);
    CHECK(closed.contains(0, 0));
    CHECK(closed.contains(1, 1));
    CHECK(closed.pair_count() == 4);
}

TEST_CASE("reflexive closure") {
    CHECK(reflexive_closure(Relation(2)) == Relation::diagonal(2));
    Relation r = rel(3, {{0, 1}});
    CHECK(reflexive_closure(r) == r);
    Relation one = rel(2, {{0, 1}}, false);
    CHECK(reflexive_closure(one) == rel(2, {{0, 1}}));
}

TEST_CASE("order predicates") {
    CHECK(is_partial_order(Relation::diagonal(3)));
    CHECK_FALSE(is_linear_order(Relation::diagonal(3)));

    Relation chain = chain_rel(3);
    CHECK(is_partial_order(chain));
    CHECK(is_linear_order(chain));

    Relation sym = rel(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(is_partial_order(sym));
    CHECK_FALSE(is_linear_order(sym));

    CHECK_FALSE(is_partial_order(rel(3, {{0, 1}, {1, 2}}))); // not transitive
    CHECK_FALSE(is_reflexive(rel(2, {{0, 1}}, false)));
}

TEST_CASE("extends is containment of pair sets") {
    Relation v = rel(3, {{0, 2}, {1, 2}});
    Relation chain = chain_rel(3);
    CHECK(extends(v, chain));
    CHECK_FALSE(extends(chain, v));
    CHECK(extends(v, v));
    CHECK_THROWS_AS(extends(v, Relation::diagonal(2)), input_error);
}

TEST_CASE("fixed linear extension picks smallest-id minimal elements") {
    CHECK(linear_extension_fixed(Relation::diagonal(3)) == chain_rel(3));

    Relation c = chain_rel(3, {2, 0, 1});
    CHECK(linear_extension_fixed(c) == c);

    Relation v = rel(3, {{0, 2}, {1, 2}});
    CHECK(linear_extension_fixed(v) == chain_rel(3));

    CHECK_THROWS_AS(linear_extension_fixed(rel(2, {{0, 1}, {1, 0}})), input_error);
}

TEST_CASE("closure properties on random relations") {
    test_util::Rng rng(20260809);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + rng.below(8);
        Relation r = test_util::random_relation(rng, n, rng.below(2 * n * n + 1));
        Relation c = transitive_closure(r);

        CHECK(r.subset_of(c));               // extensive
        CHECK(transitive_closure(c) == c);   // idempotent
        CHECK(is_transitive(c));

        Relation q = test_util::random_relation(rng, n, rng.below(n * n + 1));
        Relation ru = r.united_with(q);
        CHECK(c.subset_of(transitive_closure(ru))); // monotone

        // the least-superset property: r inside transitive q forces the
        // closure inside q
        Relation tq = transitive_closure(ru);
        CHECK(r.subset_of(tq));
        CHECK(transitive_closure(r).subset_of(tq));
    }
}

TEST_CASE("linear extension properties on all small posets") {
    for (int n = 1; n <= 5; ++n) {
        for (const Relation& p : partial_order_pool(n)) {
            Relation lin = linear_extension_fixed(p);
            CHECK(is_linear_order(lin));
            CHECK(p.subset_of(lin));
            // pure function of the pair set
            Relation again = linear_extension_fixed(Relation::from_pairs(n, p.pairs()));
            CHECK(lin == again);
            // restriction to already-comparable pairs is unchanged
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (p.contains(a, b))
                        CHECK(lin.contains(a, b));
        }
    }
}
