#ifndef MPR_RELATION_HPP
#define MPR_RELATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mpr/common.hpp"

namespace mpr {

/// A binary relation on {0..n-1}, stored as one 64-bit row word per element.
/// Row i holds the successor set of i, so containment, union and closure are
/// word-parallel. Values are immutable in spirit: every operation below
/// returns a fresh relation.
class Relation {
public:
    explicit Relation(int n) : n_(check_size(n)), rows_(static_cast<size_t>(n), 0) {}

    static Relation diagonal(int n);
    static Relation full(int n);
    static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }

    bool contains(int a, int b) const {
        check_range(a);
        check_range(b);
        return (rows_[a] >> b) & 1u;
    }

    void set(int a, int b) {
        check_range(a);
        check_range(b);
        rows_[a] |= std::uint64_t{1} << b;
    }

    std::uint64_t row(int a) const { return rows_[a]; }

    /// Ascending (a, b) list; the canonical external form of the relation.
    std::vector<std::pair<int, int>> pairs() const;

    std::size_t pair_count() const;

    bool subset_of(const Relation& other) const;

    Relation united_with(const Relation& other) const;

    /// Pairs with both endpoints in `mask`, on the same ground set.
    Relation masked(std::uint64_t mask) const;

    /// Relabel through `perm` (old id -> new id) onto a ground set of the
    /// same size.
    Relation permuted(const std::vector<int>& perm) const;

    /// Restrict to the ascending element list `keep` and renumber its
    /// elements 0..|keep|-1 in that order.
    Relation restricted_to(const std::vector<int>& keep) const;

    bool operator==(const Relation& other) const = default;

private:
    static int check_size(int n) {
        if (n < 0 || n > kMaxElements)
            throw input_error("relation size out of range: " + std::to_string(n));
        return n;
    }
    void check_range(int a) const {
        if (a < 0 || a >= n_)
            throw input_error("element out of range: " + std::to_string(a));
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

bool is_reflexive(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_total(const Relation& r);

bool is_partial_order(const Relation& r);
bool is_linear_order(const Relation& r);

/// Smallest transitive superset (Warshall over row words).
Relation transitive_closure(const Relation& r);

Relation reflexive_closure(const Relation& r);

/// inner as a pair set is contained in outer. Sizes must match.
bool extends(const Relation& inner, const Relation& outer);

/// Deterministic linear extension: Kahn's scheme, always removing the
/// smallest-id minimal element. A pure function of the pair set, which the
/// duplicated-slot stability of the amalgamation construction depends on.
/// Throws input_error unless p is a partial order.
Relation linear_extension_fixed(const Relation& p);

} // namespace mpr

#endif
