#include "mpr/hom.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mpr/canonical.hpp"

namespace mpr {

namespace {

void check_compatible(const Multiposet& a, const Multiposet& b) {
    if (a.slot_count() != b.slot_count())
        throw input_error("embedding endpoints disagree on slot count");
}

// Can source element k go to target v given the earlier assignments?
bool assignment_ok(const Multiposet& a, const Multiposet& b, const std::vector<int>& map,
                   int k, int v) {
    for (int s = 0; s < a.slot_count(); ++s) {
        const Relation& ra = a.slot(s);
        const Relation& rb = b.slot(s);
        if (ra.contains(k, k) != rb.contains(v, v))
            return false;
        for (int u = 0; u < k; ++u) {
            if (map[u] < 0)
                continue;
            if (ra.contains(u, k) != rb.contains(map[u], v))
                return false;
            if (ra.contains(k, u) != rb.contains(v, map[u]))
                return false;
        }
        // entries after k exist only when completing a partial map
        for (int u = k + 1; u < a.size(); ++u) {
            if (map[u] < 0)
                continue;
            if (ra.contains(u, k) != rb.contains(map[u], v))
                return false;
            if (ra.contains(k, u) != rb.contains(v, map[u]))
                return false;
        }
    }
    return true;
}

struct Searcher {
    const Multiposet& a;
    const Multiposet& b;
    std::uint64_t forbidden;
    bool first_only;
    std::vector<Embedding>& out;
    std::vector<int> map;
    std::uint64_t used = 0;

    bool extend(int k) {
        while (k < a.size() && map[k] >= 0)
            ++k;
        if (k == a.size()) {
            Embedding e;
            e.target_size = b.size();
            e.map = map;
            out.push_back(std::move(e));
            return first_only;
        }
        for (int v = 0; v < b.size(); ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if ((used & bit) || (forbidden & bit))
                continue;
            if (!assignment_ok(a, b, map, k, v))
                continue;
            map[k] = v;
            used |= bit;
            bool done = extend(k + 1);
            used &= ~bit;
            map[k] = -1;
            if (done)
                return true;
        }
        return false;
    }
};

std::vector<Embedding> search(const Multiposet& a, const Multiposet& b,
                              const std::vector<int>& partial, std::uint64_t forbidden,
                              bool first_only) {
    std::vector<Embedding> out;
    Searcher s{a, b, forbidden, first_only, out, partial, 0};
    for (int u = 0; u < a.size(); ++u) {
        int v = partial[u];
        if (v < 0)
            continue;
        std::uint64_t bit = std::uint64_t{1} << v;
        if (v >= b.size() || (s.used & bit))
            throw input_error("partial map is not injective into the target");
        s.used |= bit;
    }
    // validate the forced part once up front
    for (int u = 0; u < a.size(); ++u) {
        if (partial[u] < 0)
            continue;
        std::vector<int> others = partial;
        others[u] = -1;
        if (!assignment_ok(a, b, others, u, partial[u]))
            return out;
    }
    s.extend(0);
    return out;
}

} // namespace

bool is_embedding(const Embedding& f, const Multiposet& a, const Multiposet& b) {
    check_compatible(a, b);
    if (f.source_size() != a.size() || f.target_size != b.size())
        throw input_error("embedding sizes do not match the structures");
    if (!f.injective())
        return false;
    for (int s = 0; s < a.slot_count(); ++s) {
        const Relation& ra = a.slot(s);
        const Relation& rb = b.slot(s);
        for (int u = 0; u < a.size(); ++u)
            for (int v = 0; v < a.size(); ++v)
                if (ra.contains(u, v) != rb.contains(f(u), f(v)))
                    return false;
    }
    return true;
}

std::vector<Embedding> enumerate_embeddings(const Multiposet& a, const Multiposet& b) {
    check_compatible(a, b);
    if (a.size() > b.size())
        return {};
    std::vector<int> blank(static_cast<size_t>(a.size()), -1);

#ifdef _OPENMP
    // Split on the image of element 0; branch results concatenate in target
    // order, which is exactly the serial lexicographic order.
    if (a.size() >= 2 && b.size() >= 8 && !omp_in_parallel()) {
        std::vector<std::vector<Embedding>> parts(static_cast<size_t>(b.size()));
#pragma omp parallel for schedule(dynamic)
        for (int v = 0; v < b.size(); ++v) {
            if (!assignment_ok(a, b, blank, 0, v))
                continue;
            std::vector<int> partial = blank;
            partial[0] = v;
            parts[static_cast<size_t>(v)] = search(a, b, partial, 0, false);
        }
        std::vector<Embedding> out;
        for (auto& p : parts)
            out.insert(out.end(), std::make_move_iterator(p.begin()),
                       std::make_move_iterator(p.end()));
        return out;
    }
#endif
    return search(a, b, blank, 0, false);
}

std::vector<Embedding> enumerate_embeddings_extending(const Multiposet& a, const Multiposet& b,
                                                      const std::vector<int>& partial,
                                                      std::uint64_t forbidden, bool first_only) {
    check_compatible(a, b);
    if (static_cast<int>(partial.size()) != a.size())
        throw input_error("partial map length does not match the source");
    return search(a, b, partial, forbidden, first_only);
}

bool embeds(const Multiposet& a, const Multiposet& b) {
    if (a.slot_count() != b.slot_count() || a.size() > b.size())
        return false;
    std::vector<int> blank(static_cast<size_t>(a.size()), -1);
    return !search(a, b, blank, 0, true).empty();
}

namespace ref {

std::vector<Embedding> embeddings_by_filter(const Multiposet& a, const Multiposet& b) {
    std::vector<Embedding> out;
    if (a.size() > b.size())
        return out;
    // odometer over all injections, in lexicographic order
    std::vector<int> map(static_cast<size_t>(a.size()), -1);
    int k = 0;
    std::uint64_t used = 0;
    while (k >= 0) {
        if (k == a.size()) {
            Embedding e;
            e.target_size = b.size();
            e.map = map;
            if (is_embedding(e, a, b))
                out.push_back(std::move(e));
            --k;
            continue;
        }
        int v = map[k] + 1;
        if (map[k] >= 0)
            used &= ~(std::uint64_t{1} << map[k]);
        while (v < b.size() && (used & (std::uint64_t{1} << v)))
            ++v;
        if (v >= b.size()) {
            map[k] = -1;
            --k;
            continue;
        }
        map[k] = v;
        used |= std::uint64_t{1} << v;
        ++k;
    }
    return out;
}

} // namespace ref

std::vector<Embedding> HomStore::get(const Multiposet& a, const Multiposet& b) {
    if (a.slot_count() != b.slot_count())
        throw input_error("embedding endpoints disagree on slot count");
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    auto key = std::make_pair(ca.bytes, cb.bytes);

    std::vector<Embedding> canon_maps;
    bool hit = false;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            canon_maps = it->second;
            hit = true;
        }
    }
    if (!hit) {
        canon_maps = enumerate_embeddings(permute(a, ca.perm), permute(b, cb.perm));
        std::lock_guard<std::mutex> lock(mu_);
        cache_[key] = canon_maps;
    }

    std::vector<int> inv_b(static_cast<size_t>(b.size()));
    for (int old = 0; old < b.size(); ++old)
        inv_b[static_cast<size_t>(cb.perm[static_cast<size_t>(old)])] = old;

    std::vector<Embedding> out;
    out.reserve(canon_maps.size());
    for (const Embedding& e : canon_maps) {
        Embedding conj;
        conj.target_size = b.size();
        conj.map.resize(static_cast<size_t>(a.size()));
        for (int x = 0; x < a.size(); ++x)
            conj.map[static_cast<size_t>(x)] =
                inv_b[static_cast<size_t>(e.map[static_cast<size_t>(ca.perm[static_cast<size_t>(x)])])];
        out.push_back(std::move(conj));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t HomStore::entry_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

} // namespace mpr
