#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpr/canonical.hpp"
#include "mpr/hom.hpp"
#include "test_util.hpp"

using namespace mpr;
using test_util::antichain_rel;
using test_util::chain_rel;
using test_util::epos_structure;

namespace {

Multiposet random_structure(test_util::Rng& rng, int n, int slots) {
    std::vector<Relation> rels;
    for (int s = 0; s < slots; ++s) {
        const auto& pool = partial_order_pool(n);
        rels.push_back(pool[static_cast<size_t>(rng.below(static_cast<int>(pool.size())))]);
    }
    return Multiposet(n, rels);
}

} // namespace

TEST_CASE("embedding predicate") {
    Multiposet c2 = chain_structure(2);
    CHECK(is_embedding(identity_embedding(2), c2, c2));

    Embedding reversing{2, {1, 0}};
    CHECK_FALSE(is_embedding(reversing, c2, c2));

    // antichain with extension into the larger one, increasing positions
    Multiposet small = epos_structure(antichain_rel(2), chain_rel(2));
    Multiposet big = epos_structure(antichain_rel(3), chain_rel(3));
    CHECK(is_embedding(Embedding{3, {0, 2}}, small, big));
    CHECK_FALSE(is_embedding(Embedding{3, {2, 0}}, small, big));

    Embedding repeated{3, {1, 1}};
    CHECK_FALSE(is_embedding(repeated, small, big));

    CHECK_THROWS_AS(is_embedding(identity_embedding(2), c2, chain_structure(3)), input_error);
    CHECK_THROWS_AS(is_embedding(identity_embedding(2), c2, epos_structure(antichain_rel(2), chain_rel(2))),
                    input_error);
}

TEST_CASE("embedding counts on known instances") {
    CHECK(enumerate_embeddings(chain_structure(2), chain_structure(4)).size() == 6);
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_embeddings(point_structure(), chain_structure(n)).size() ==
              static_cast<size_t>(n));

    Multiposet small = epos_structure(antichain_rel(2), chain_rel(2));
    Multiposet big = epos_structure(antichain_rel(3), chain_rel(3));
    std::vector<Embedding> maps = enumerate_embeddings(small, big);
    CHECK(maps.size() == 3);
    CHECK(maps == ref::embeddings_by_filter(small, big));
}

TEST_CASE("enumeration agrees with the all-injections filter") {
    test_util::Rng rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        int na = 1 + rng.below(3);
        int nb = na + rng.below(3);
        int slots = 1 + rng.below(2);
        Multiposet a = random_structure(rng, na, slots);
        Multiposet b = random_structure(rng, nb, slots);
        std::vector<Embedding> fast = enumerate_embeddings(a, b);
        std::vector<Embedding> slow = ref::embeddings_by_filter(a, b);
        CHECK(fast == slow);
        for (const Embedding& f : fast)
            CHECK(is_embedding(f, a, b));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
}

TEST_CASE("composition laws") {
    Multiposet c3 = chain_structure(3);
    Multiposet c5 = chain_structure(5);
    std::vector<Embedding> inner = enumerate_embeddings(chain_structure(2), c3);
    std::vector<Embedding> outer = enumerate_embeddings(c3, c5);
    for (const Embedding& f : inner) {
        CHECK(compose(f, identity_embedding(2)) == f);
        CHECK(compose(identity_embedding(3), f) == f);
        for (const Embedding& g : outer) {
            Embedding gf = compose(g, f);
            CHECK(is_embedding(gf, chain_structure(2), c5));
            for (const Embedding& h : enumerate_embeddings(point_structure(), chain_structure(2)))
                CHECK(compose(compose(g, f), h) == compose(g, compose(f, h)));
        }
    }
    CHECK_THROWS_AS(compose(inner[0], outer[0]), input_error);
}

TEST_CASE("embeddings are monic") {
    test_util::Rng rng(55);
    Multiposet b = chain_structure(3);
    Multiposet c = chain_structure(5);
    Multiposet a = chain_structure(2);
    for (const Embedding& w : enumerate_embeddings(b, c)) {
        std::vector<Embedding> lower = enumerate_embeddings(a, b);
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = i + 1; j < lower.size(); ++j)
                CHECK(!(compose(w, lower[i]) == compose(w, lower[j])));
    }
    (void)rng;
}

TEST_CASE("hom size is isomorphism invariant") {
    test_util::Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int na = 1 + rng.below(3);
        int nb = na + rng.below(2);
        Multiposet a = random_structure(rng, na, 2);
        Multiposet b = random_structure(rng, nb, 2);
        Multiposet pa = permute(a, test_util::random_permutation(rng, na));
        Multiposet pb = permute(b, test_util::random_permutation(rng, nb));
        CHECK(enumerate_embeddings(a, b).size() == enumerate_embeddings(pa, pb).size());
    }
}

TEST_CASE("partial-map completion") {
    Multiposet a = chain_structure(2);
    Multiposet b = chain_structure(4);
    std::vector<int> blank{-1, -1};
    CHECK(enumerate_embeddings_extending(a, b, blank) == enumerate_embeddings(a, b));

    std::vector<int> pinned{0, -1};
    std::vector<Embedding> some = enumerate_embeddings_extending(a, b, pinned);
    CHECK(some.size() == 3); // 0 -> {1,2,3}
    for (const Embedding& f : some)
        CHECK(f.map[0] == 0);

    // forbidden targets only constrain the free entries
    std::vector<Embedding> constrained =
        enumerate_embeddings_extending(a, b, pinned, /*forbidden=*/0b0110);
    CHECK(constrained.size() == 1);
    CHECK(constrained[0].map == std::vector<int>{0, 3});

    CHECK(enumerate_embeddings_extending(a, b, pinned, 0, true).size() == 1);
    CHECK_THROWS_AS(enumerate_embeddings_extending(a, b, {5, -1}), input_error);
    CHECK_THROWS_AS(enumerate_embeddings_extending(a, b, {-1}), input_error);
}

TEST_CASE("store answers match direct enumeration and share entries") {
    HomStore store;
    Multiposet a = epos_structure(antichain_rel(2), chain_rel(2));
    Multiposet b = epos_structure(antichain_rel(3), chain_rel(3));

    CHECK(store.get(a, b) == enumerate_embeddings(a, b));
    CHECK(store.entry_count() == 1);

    // relabelled isomorphic inputs: cache hit, conjugated answers
    test_util::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Multiposet pa = permute(a, test_util::random_permutation(rng, a.size()));
        Multiposet pb = permute(b, test_util::random_permutation(rng, b.size()));
        CHECK(store.get(pa, pb) == enumerate_embeddings(pa, pb));
        CHECK(store.entry_count() == 1);
    }

    // same slot count, but the antichain pair cannot land in a chain
    Multiposet chain_pair = epos_structure(chain_rel(2), chain_rel(2));
    CHECK(store.get(a, chain_pair).empty());
    CHECK(store.entry_count() == 2);
}
