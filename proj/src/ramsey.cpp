#include "mpr/ramsey.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpr {

ClassUniverse universe_of(const ClassSpec& spec, int enum_bound) {
    ClassUniverse u;
    u.slots = spec.slot_count();
    u.contains = [spec](const Multiposet& x) { return class_contains(spec, x); };
    // property checkers revisit the same size levels many times over
    auto cache = std::make_shared<std::map<int, std::vector<Multiposet>>>();
    auto mu = std::make_shared<std::mutex>();
    u.members = [spec, enum_bound, cache, mu](int n) {
        std::lock_guard<std::mutex> lock(*mu);
        auto it = cache->find(n);
        if (it == cache->end())
            it = cache->emplace(n, enumerate_class(spec, n, enum_bound)).first;
        return it->second;
    };
    return u;
}

namespace {

std::vector<Multiposet> members_up_to(const ClassUniverse& u, int n) {
    std::vector<Multiposet> all;
    for (int size = 1; size <= n; ++size)
        for (Multiposet& x : u.members(size))
            all.push_back(std::move(x));
    return all;
}

} // namespace

WitnessSearchOutcome ramsey_witness_search(const ClassUniverse& universe, const Multiposet& a,
                                           const Multiposet& b, int k, int max_n) {
    if (!universe.contains(a) || !universe.contains(b))
        throw input_error("witness search: A and B must belong to the class");
    if (!embeds(a, b))
        throw input_error("witness search: hom(A,B) must be nonempty");

    WitnessSearchOutcome out;
    for (int size = b.size(); size <= max_n; ++size) {
        std::vector<Multiposet> level;
        try {
            level = universe.members(size);
        } catch (const bound_error&) {
            out.status = WitnessSearchOutcome::Status::bound_exceeded;
            return out;
        }
        for (const Multiposet& c : level) {
            ArrowResult r = arrow_check(c, b, a, k);
            if (r.holds) {
                out.status = WitnessSearchOutcome::Status::found;
                out.witness = c;
                out.arrow = std::move(r);
                out.last_size_scanned = size;
                return out;
            }
        }
        out.last_size_scanned = size;
    }
    out.status = WitnessSearchOutcome::Status::exhausted;
    return out;
}

WitnessSearchOutcome ramsey_witness_search(const ClassSpec& spec, const Multiposet& a,
                                           const Multiposet& b, int k, int max_n,
                                           int enum_bound) {
    return ramsey_witness_search(universe_of(spec, enum_bound), a, b, k, max_n);
}

bool has_hp_upto(const ClassUniverse& universe, int n) {
    for (const Multiposet& x : members_up_to(universe, n)) {
        std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < x.size(); ++v)
                if ((mask >> v) & 1u)
                    subset.push_back(v);
            if (!universe.contains(induced_substructure(x, subset).sub))
                return false;
        }
    }
    return true;
}

bool has_jep_upto(const ClassUniverse& universe, int n) {
    std::vector<Multiposet> all = members_up_to(universe, n);
    for (const Multiposet& a : all)
        for (const Multiposet& b : all) {
            bool joined = false;
            for (int size = std::max(a.size(), b.size());
                 size <= a.size() + b.size() && !joined; ++size)
                for (const Multiposet& c : universe.members(size))
                    if (embeds(a, c) && embeds(b, c)) {
                        joined = true;
                        break;
                    }
            if (!joined)
                return false;
        }
    return true;
}

namespace {

// One strong-amalgamation instance: does some member D of the given size
// complete the span (f1: A -> B, f2: A -> C)?
bool strong_amalgam_exists(const ClassUniverse& universe, const Multiposet& a,
                           const Multiposet& b, const Multiposet& c, const Embedding& f1,
                           const Embedding& f2, int max_size, int extra) {
    int least = b.size() + c.size() - a.size();
    for (int size = least; size <= least + extra && size <= max_size; ++size) {
        for (const Multiposet& d : universe.members(size)) {
            for (const Embedding& g1 : enumerate_embeddings(b, d)) {
                // g2 is forced on the image of A and must avoid g1(B)
                // elsewhere: that is exactly the strong intersection
                // condition.
                std::vector<int> partial(static_cast<size_t>(c.size()), -1);
                std::uint64_t g1_image = 0;
                for (int v : g1.map)
                    g1_image |= std::uint64_t{1} << v;
                for (int x = 0; x < a.size(); ++x)
                    partial[static_cast<size_t>(f2(x))] = g1(f1(x));
                if (!enumerate_embeddings_extending(c, d, partial, g1_image,
                                                    /*first_only=*/true)
                         .empty())
                    return true;
            }
        }
    }
    return false;
}

} // namespace

bool has_sap_upto(const ClassUniverse& universe, int n, int extra) {
    std::vector<Multiposet> all = members_up_to(universe, n);

    struct Span {
        const Multiposet* a;
        const Multiposet* b;
        const Multiposet* c;
        Embedding f1, f2;
    };
    std::vector<Span> spans;
    for (const Multiposet& a : all)
        for (const Multiposet& b : all) {
            std::vector<Embedding> into_b = enumerate_embeddings(a, b);
            if (into_b.empty())
                continue;
            for (const Multiposet& c : all) {
                std::vector<Embedding> into_c = enumerate_embeddings(a, c);
                for (const Embedding& f1 : into_b)
                    for (const Embedding& f2 : into_c)
                        spans.push_back(Span{&a, &b, &c, f1, f2});
            }
        }

    std::atomic<bool> all_ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
#endif
    for (int i = 0; i < static_cast<int>(spans.size()); ++i) {
        if (!all_ok.load(std::memory_order_relaxed))
            continue;
        const Span& s = spans[static_cast<size_t>(i)];
        if (!strong_amalgam_exists(universe, *s.a, *s.b, *s.c, s.f1, s.f2,
                                   2 * n + extra, extra))
            all_ok.store(false, std::memory_order_relaxed);
    }
    return all_ok.load();
}

bool has_hp_upto(const ClassSpec& spec, int n, int enum_bound) {
    return has_hp_upto(universe_of(spec, enum_bound), n);
}

bool has_jep_upto(const ClassSpec& spec, int n, int enum_bound) {
    return has_jep_upto(universe_of(spec, enum_bound), n);
}

bool has_sap_upto(const ClassSpec& spec, int n, int extra, int enum_bound) {
    return has_sap_upto(universe_of(spec, enum_bound), n, extra);
}

} // namespace mpr
