#include "mpr/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace mpr {

namespace {

// Bit layout: shell k holds, per slot, the row bits (pos_i, pos_k) for
// i = 0..k followed by the column bits (pos_k, pos_j) for j = 0..k-1.
// Shells are concatenated for k = 0..n-1; shell k starts at bit S*k*k.

std::string pack(int n, int slots, const std::vector<std::uint8_t>& bits) {
    std::string out;
    out.reserve(2 + (bits.size() + 7) / 8);
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(slots));
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::uint8_t b : bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | (b & 1));
        if (++filled == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled)
        out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
}

void shell_bits(const Multiposet& x, const std::vector<int>& placement, int k,
                std::vector<std::uint8_t>& out) {
    out.clear();
    for (const Relation& r : x.relations()) {
        for (int i = 0; i <= k; ++i)
            out.push_back(r.contains(placement[i], placement[k]) ? 1 : 0);
        for (int j = 0; j < k; ++j)
            out.push_back(r.contains(placement[k], placement[j]) ? 1 : 0);
    }
}

struct Canonizer {
    const Multiposet& x;
    int n;
    int slots;
    std::vector<std::uint8_t> best;     // full bit string of the current minimum
    std::vector<int> best_placement;
    bool have_best = false;
    std::vector<int> placement;         // placement[k] = old element at new id k
    std::vector<bool> used;
    std::vector<std::uint8_t> shell;

    explicit Canonizer(const Multiposet& mx)
        : x(mx), n(mx.size()), slots(mx.slot_count()),
          best(static_cast<size_t>(slots) * n * n, 0), used(static_cast<size_t>(n), false) {
        placement.reserve(static_cast<size_t>(n));
    }

    void run() { descend(0, false); }

    // Invariant: on entry the bits of the current prefix equal best's prefix
    // (or no best exists yet). `changed` records whether this path overwrote
    // best, in which case the leaf must re-record the placement.
    void descend(int k, bool changed) {
        if (k == n) {
            if (!have_best || changed) {
                best_placement = placement;
                have_best = true;
            }
            return;
        }
        std::size_t offset = static_cast<size_t>(slots) * k * k;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand])
                continue;
            placement.push_back(cand);
            shell_bits(x, placement, k, shell);
            bool child_changed = changed;
            bool prune = false;
            if (have_best) {
                int cmp = 0;
                for (std::size_t i = 0; i < shell.size(); ++i) {
                    if (shell[i] != best[offset + i]) {
                        cmp = shell[i] < best[offset + i] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0) {
                    prune = true;
                } else if (cmp < 0) {
                    // Every completion below beats best: adopt the prefix and
                    // let the subtree minimum fill in the rest.
                    std::copy(shell.begin(), shell.end(), best.begin() + offset);
                    std::fill(best.begin() + offset + shell.size(), best.end(), 1);
                    child_changed = true;
                }
            } else {
                std::copy(shell.begin(), shell.end(), best.begin() + offset);
                child_changed = true;
            }
            if (!prune) {
                used[cand] = true;
                descend(k + 1, child_changed);
                used[cand] = false;
            }
            placement.pop_back();
        }
    }
};

std::vector<int> invert(const std::vector<int>& placement) {
    std::vector<int> perm(placement.size());
    for (std::size_t k = 0; k < placement.size(); ++k)
        perm[static_cast<size_t>(placement[k])] = static_cast<int>(k);
    return perm;
}

} // namespace

std::string encode_multiposet(const Multiposet& x) {
    std::vector<int> id(static_cast<size_t>(x.size()));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<size_t>(x.slot_count()) * x.size() * x.size());
    std::vector<std::uint8_t> shell;
    for (int k = 0; k < x.size(); ++k) {
        shell_bits(x, id, k, shell);
        bits.insert(bits.end(), shell.begin(), shell.end());
    }
    return pack(x.size(), x.slot_count(), bits);
}

CanonicalForm canonical_form(const Multiposet& x) {
    Canonizer c(x);
    c.run();
    CanonicalForm out;
    out.bytes = pack(x.size(), x.slot_count(), c.best);
    out.perm = invert(c.best_placement);
    return out;
}

Multiposet canonicalize(const Multiposet& x) {
    return permute(x, canonical_form(x).perm);
}

namespace ref {

CanonicalForm canonical_form_by_enumeration(const Multiposet& x) {
    std::vector<int> sigma(static_cast<size_t>(x.size()));
    std::iota(sigma.begin(), sigma.end(), 0);
    CanonicalForm out;
    do {
        std::string bytes = encode_multiposet(permute(x, sigma));
        if (out.bytes.empty() || bytes < out.bytes) {
            out.bytes = std::move(bytes);
            out.perm = sigma;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace ref

} // namespace mpr
