#include "mpr/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mpr/canonical.hpp"

namespace mpr {

namespace {

void merge_constraints(const ClassSpec& spec, const std::vector<int>& slot_map,
                       SlotConstraints& out) {
    switch (spec.kind) {
    case ClassSpec::Kind::chain:
        out.linear[static_cast<size_t>(slot_map[0])] = true;
        return;
    case ClassSpec::Kind::epos:
        out.linear[static_cast<size_t>(slot_map[1])] = true;
        out.inclusions.emplace_back(slot_map[0], slot_map[1]);
        return;
    case ClassSpec::Kind::csm: {
        for (int b = 0; b < spec.s + spec.m; ++b)
            out.linear[static_cast<size_t>(slot_map[static_cast<size_t>(spec.s + b)])] = true;
        for (int a = 0; a < spec.s; ++a)
            out.inclusions.emplace_back(slot_map[static_cast<size_t>(a)],
                                        slot_map[static_cast<size_t>(spec.s + a)]);
        return;
    }
    case ClassSpec::Kind::k_of_template: {
        const Template& t = *spec.tmpl;
        TemplateInfo info = validate_template(t);
        for (int i : info.maximal)
            out.linear[static_cast<size_t>(slot_map[static_cast<size_t>(i - 1)])] = true;
        for (int i = 1; i <= t.t(); ++i)
            for (int j = 1; j <= t.t(); ++j)
                if (i != j && t.leq(i, j))
                    out.inclusions.emplace_back(slot_map[static_cast<size_t>(i - 1)],
                                                slot_map[static_cast<size_t>(j - 1)]);
        return;
    }
    case ClassSpec::Kind::kbar_of_template: {
        TemplateInfo info = validate_template(*spec.tmpl);
        int s = info.s();
        for (int b = 0; b < s + info.m(); ++b)
            out.linear[static_cast<size_t>(slot_map[static_cast<size_t>(s + b)])] = true;
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                if (a != b && info.leq(info.pairs[static_cast<size_t>(a)].first,
                                       info.pairs[static_cast<size_t>(b)].first))
                    out.inclusions.emplace_back(slot_map[static_cast<size_t>(a)],
                                                slot_map[static_cast<size_t>(b)]);
                if (info.leq(info.pairs[static_cast<size_t>(a)].first,
                             info.pairs[static_cast<size_t>(b)].second))
                    out.inclusions.emplace_back(slot_map[static_cast<size_t>(a)],
                                                slot_map[static_cast<size_t>(s + b)]);
                if (a < b && info.pairs[static_cast<size_t>(a)].second ==
                                 info.pairs[static_cast<size_t>(b)].second) {
                    out.inclusions.emplace_back(slot_map[static_cast<size_t>(s + a)],
                                                slot_map[static_cast<size_t>(s + b)]);
                    out.inclusions.emplace_back(slot_map[static_cast<size_t>(s + b)],
                                                slot_map[static_cast<size_t>(s + a)]);
                }
            }
        return;
    }
    case ClassSpec::Kind::product: {
        for (const auto& [slots, sub] : spec.factors) {
            std::vector<int> remapped;
            remapped.reserve(slots.size());
            for (int i : slots)
                remapped.push_back(slot_map[static_cast<size_t>(i)]);
            merge_constraints(sub, remapped, out);
        }
        return;
    }
    }
    throw internal_error("unhandled class kind");
}

} // namespace

SlotConstraints class_constraints(const ClassSpec& spec) {
    SlotConstraints out;
    out.slots = spec.slot_count();
    out.linear.assign(static_cast<size_t>(out.slots), false);
    std::vector<int> identity(static_cast<size_t>(out.slots));
    std::iota(identity.begin(), identity.end(), 0);
    merge_constraints(spec, identity, out);
    std::sort(out.inclusions.begin(), out.inclusions.end());
    out.inclusions.erase(std::unique(out.inclusions.begin(), out.inclusions.end()),
                         out.inclusions.end());
    return out;
}

const std::vector<Relation>& linear_order_pool(int n) {
    if (n < 1 || n > kMaxLinearPoolSize)
        throw bound_error("linear order pool limited to " +
                          std::to_string(kMaxLinearPoolSize) + " elements");
    static std::mutex mu;
    static std::map<int, std::vector<Relation>> pools;
    std::lock_guard<std::mutex> lock(mu);
    auto it = pools.find(n);
    if (it != pools.end())
        return it->second;

    std::vector<Relation> pool;
    std::vector<int> seq(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    do {
        Relation r(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                r.set(seq[static_cast<size_t>(i)], seq[static_cast<size_t>(j)]);
        pool.push_back(std::move(r));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return pools.emplace(n, std::move(pool)).first->second;
}

const std::vector<Relation>& partial_order_pool(int n) {
    if (n < 1 || n > kMaxPartialPoolSize)
        throw bound_error("partial order pool limited to " +
                          std::to_string(kMaxPartialPoolSize) + " elements");
    static std::mutex mu;
    static std::map<int, std::vector<Relation>> pools;
    std::lock_guard<std::mutex> lock(mu);
    auto it = pools.find(n);
    if (it != pools.end())
        return it->second;

    // Extend element by element. The new element's predecessor set must be
    // downward closed, its successor set upward closed, the two disjoint,
    // and every predecessor already below every successor; exactly then the
    // extension is again a partial order, and each partial order arises from
    // exactly one (down, up) choice.
    std::vector<Relation> frontier{Relation::diagonal(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Relation> next;
        std::uint64_t everyone = (std::uint64_t{1} << k) - 1;
        for (const Relation& r : frontier) {
            for (std::uint64_t down = 0; down <= everyone; ++down) {
                bool down_ok = true;
                for (int d = 0; d < k && down_ok; ++d)
                    if ((down >> d) & 1u)
                        for (int d2 = 0; d2 < k; ++d2)
                            if (r.contains(d2, d) && !((down >> d2) & 1u)) {
                                down_ok = false;
                                break;
                            }
                if (!down_ok)
                    continue;
                for (std::uint64_t up = 0; up <= everyone; ++up) {
                    if (up & down)
                        continue;
                    bool ok = true;
                    for (int u = 0; u < k && ok; ++u)
                        if ((up >> u) & 1u)
                            for (int u2 = 0; u2 < k; ++u2)
                                if (r.contains(u, u2) && !((up >> u2) & 1u)) {
                                    ok = false;
                                    break;
                                }
                    for (int d = 0; d < k && ok; ++d)
                        if ((down >> d) & 1u)
                            for (int u = 0; u < k; ++u)
                                if (((up >> u) & 1u) && !r.contains(d, u)) {
                                    ok = false;
                                    break;
                                }
                    if (!ok)
                        continue;
                    Relation ext(k + 1);
                    for (auto [a, b] : r.pairs())
                        ext.set(a, b);
                    ext.set(k, k);
                    for (int d = 0; d < k; ++d)
                        if ((down >> d) & 1u)
                            ext.set(d, k);
                    for (int u = 0; u < k; ++u)
                        if ((up >> u) & 1u)
                            ext.set(k, u);
                    next.push_back(std::move(ext));
                }
            }
        }
        frontier = std::move(next);
    }
    return pools.emplace(n, std::move(frontier)).first->second;
}

std::vector<Multiposet> enumerate_class(const ClassSpec& spec, int n, int bound) {
    if (n < 1)
        throw input_error("enumeration needs n >= 1");
    if (n > bound)
        throw bound_error("enumeration bound " + std::to_string(bound) + " exceeded by n = " +
                          std::to_string(n));
    SlotConstraints cons = class_constraints(spec);

    // a structure with no relations: one isomorphism class per size
    if (cons.slots == 0)
        return {Multiposet(n, {})};

    std::vector<const std::vector<Relation>*> pools(static_cast<size_t>(cons.slots));
    for (int i = 0; i < cons.slots; ++i)
        pools[static_cast<size_t>(i)] =
            cons.linear[static_cast<size_t>(i)] ? &linear_order_pool(n) : &partial_order_pool(n);

    // inclusion checks become available once both endpoints are assigned
    std::vector<std::vector<std::pair<int, int>>> checks(static_cast<size_t>(cons.slots));
    for (auto [a, b] : cons.inclusions)
        checks[static_cast<size_t>(std::max(a, b))].emplace_back(a, b);

    std::map<std::string, Multiposet> classes;
    std::mutex classes_mu;

    const std::vector<Relation>& first_pool = *pools[0];
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
#endif
    for (int first = 0; first < static_cast<int>(first_pool.size()); ++first) {
        std::vector<Relation> chosen;
        chosen.reserve(static_cast<size_t>(cons.slots));
        chosen.push_back(first_pool[static_cast<size_t>(first)]);
        std::map<std::string, Multiposet> local;

        auto check_new = [&](int slot) {
            for (auto [a, b] : checks[static_cast<size_t>(slot)])
                if (!chosen[static_cast<size_t>(a)].subset_of(chosen[static_cast<size_t>(b)]))
                    return false;
            return true;
        };

        auto descend = [&](auto&& self, int slot) -> void {
            if (slot == cons.slots) {
                Multiposet x(n, chosen);
                CanonicalForm cf = canonical_form(x);
                local.try_emplace(std::move(cf.bytes), permute(x, cf.perm));
                return;
            }
            for (const Relation& r : *pools[static_cast<size_t>(slot)]) {
                chosen.push_back(r);
                if (check_new(slot))
                    self(self, slot + 1);
                chosen.pop_back();
            }
        };

        if (check_new(0))
            descend(descend, 1);

        std::lock_guard<std::mutex> lock(classes_mu);
        for (auto& [bytes, x] : local)
            classes.try_emplace(bytes, std::move(x));
    }

    std::vector<Multiposet> out;
    out.reserve(classes.size());
    for (auto& [bytes, x] : classes)
        out.push_back(std::move(x));
    return out;
}

} // namespace mpr
