#include "mpr/relation.hpp"

#include <bit>

namespace mpr {

namespace {

std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

Relation Relation::diagonal(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
        r.rows_[i] = std::uint64_t{1} << i;
    return r;
}

Relation Relation::full(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
        r.rows_[i] = low_mask(n);
    return r;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs)
        r.set(a, b);
    return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int a = 0; a < n_; ++a)
        for (std::uint64_t m = rows_[a]; m; m &= m - 1)
            out.emplace_back(a, std::countr_zero(m));
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t c = 0;
    for (auto row : rows_)
        c += static_cast<std::size_t>(std::popcount(row));
    return c;
}

bool Relation::subset_of(const Relation& other) const {
    if (n_ != other.n_)
        throw input_error("relation size mismatch in subset test");
    for (int a = 0; a < n_; ++a)
        if (rows_[a] & ~other.rows_[a])
            return false;
    return true;
}

Relation Relation::united_with(const Relation& other) const {
    if (n_ != other.n_)
        throw input_error("relation size mismatch in union");
    Relation r(n_);
    for (int a = 0; a < n_; ++a)
        r.rows_[a] = rows_[a] | other.rows_[a];
    return r;
}

Relation Relation::masked(std::uint64_t mask) const {
    Relation r(n_);
    for (int a = 0; a < n_; ++a)
        r.rows_[a] = ((mask >> a) & 1u) ? (rows_[a] & mask) : 0;
    return r;
}

Relation Relation::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw input_error("permutation length mismatch");
    Relation r(n_);
    for (int a = 0; a < n_; ++a)
        for (std::uint64_t m = rows_[a]; m; m &= m - 1)
            r.set(perm[a], perm[std::countr_zero(m)]);
    return r;
}

Relation Relation::restricted_to(const std::vector<int>& keep) const {
    Relation r(static_cast<int>(keep.size()));
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
            if (contains(keep[i], keep[j]))
                r.set(i, j);
    return r;
}

bool is_reflexive(const Relation& r) {
    for (int a = 0; a < r.size(); ++a)
        if (!((r.row(a) >> a) & 1u))
            return false;
    return true;
}

bool is_antisymmetric(const Relation& r) {
    for (int a = 0; a < r.size(); ++a)
        for (std::uint64_t m = r.row(a); m; m &= m - 1) {
            int b = std::countr_zero(m);
            if (b != a && ((r.row(b) >> a) & 1u))
                return false;
        }
    return true;
}

bool is_transitive(const Relation& r) {
    for (int a = 0; a < r.size(); ++a)
        for (std::uint64_t m = r.row(a); m; m &= m - 1)
            if (r.row(std::countr_zero(m)) & ~r.row(a))
                return false;
    return true;
}

bool is_total(const Relation& r) {
    for (int a = 0; a < r.size(); ++a)
        for (int b = a; b < r.size(); ++b)
            if (!((r.row(a) >> b) & 1u) && !((r.row(b) >> a) & 1u))
                return false;
    return true;
}

bool is_partial_order(const Relation& r) {
    return is_reflexive(r) && is_antisymmetric(r) && is_transitive(r);
}

bool is_linear_order(const Relation& r) {
    return is_partial_order(r) && is_total(r);
}

Relation transitive_closure(const Relation& r) {
    Relation c = r;
    int n = c.size();
    for (int k = 0; k < n; ++k) {
        std::uint64_t through = c.row(k);
        for (int a = 0; a < n; ++a)
            if ((c.row(a) >> k) & 1u)
                for (std::uint64_t m = through & ~c.row(a); m; m &= m - 1)
                    c.set(a, std::countr_zero(m));
    }
    return c;
}

Relation reflexive_closure(const Relation& r) {
    return r.united_with(Relation::diagonal(r.size()));
}

bool extends(const Relation& inner, const Relation& outer) {
    if (inner.size() != outer.size())
        throw input_error("relation size mismatch in extends");
    return inner.subset_of(outer);
}

Relation linear_extension_fixed(const Relation& p) {
    if (!is_partial_order(p))
        throw input_error("linear_extension_fixed requires a partial order");
    int n = p.size();
    std::uint64_t remaining = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<int> sequence;
    sequence.reserve(n);
    while (remaining) {
        int pick = -1;
        for (std::uint64_t m = remaining; m; m &= m - 1) {
            int a = std::countr_zero(m);
            // minimal among remaining: no remaining strict predecessor
            bool minimal = true;
            for (std::uint64_t q = remaining; q; q &= q - 1) {
                int b = std::countr_zero(q);
                if (b != a && p.contains(b, a)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                pick = a;
                break;
            }
        }
        sequence.push_back(pick);
        remaining &= ~(std::uint64_t{1} << pick);
    }
    Relation lin(n);
    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i; j < sequence.size(); ++j)
            lin.set(sequence[i], sequence[j]);
    return lin;
}

} // namespace mpr
