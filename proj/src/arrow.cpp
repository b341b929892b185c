#include "mpr/arrow.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpr {

namespace {

constexpr int kMaxColors = 4;

void check_arrow_inputs(const Multiposet& c, const Multiposet& b, const Multiposet& a, int k) {
    if (k < 2)
        throw input_error("arrow needs at least 2 colors");
    if (k > kMaxColors)
        throw input_error("arrow supports at most " + std::to_string(kMaxColors) + " colors");
    if (a.slot_count() != b.slot_count() || b.slot_count() != c.slot_count())
        throw input_error("arrow structures disagree on slot count");
}

struct ArrowInstance {
    int vertices = 0;                    // |hom(A,C)|
    int copies = 0;                      // |hom(B,C)|
    std::vector<std::vector<int>> edges; // minimal, deduplicated, sorted
};

int index_of(const std::vector<Embedding>& sorted_homs, const Embedding& e) {
    auto it = std::lower_bound(sorted_homs.begin(), sorted_homs.end(), e);
    if (it == sorted_homs.end() || !(*it == e))
        throw internal_error("composite embedding missing from hom set");
    return static_cast<int>(it - sorted_homs.begin());
}

ArrowInstance build_instance(const Multiposet& c, const Multiposet& b, const Multiposet& a) {
    std::vector<Embedding> hom_ab = enumerate_embeddings(a, b);
    if (hom_ab.empty())
        throw input_error("arrow needs hom(A,B) nonempty");
    std::vector<Embedding> hom_ac = enumerate_embeddings(a, c);
    std::vector<Embedding> hom_bc = enumerate_embeddings(b, c);

    ArrowInstance inst;
    inst.vertices = static_cast<int>(hom_ac.size());
    inst.copies = static_cast<int>(hom_bc.size());

    std::set<std::vector<int>> dedup;
    for (const Embedding& w : hom_bc) {
        std::vector<int> edge;
        edge.reserve(hom_ab.size());
        for (const Embedding& h : hom_ab)
            edge.push_back(index_of(hom_ac, compose(w, h)));
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        dedup.insert(std::move(edge));
    }
    // A superset edge is polychromatic whenever its subset is; keep minimal
    // edges only.
    std::vector<std::vector<int>> all(dedup.begin(), dedup.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& e : all) {
        bool dominated = false;
        for (const auto& kept : inst.edges)
            if (std::includes(e.begin(), e.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        if (!dominated)
            inst.edges.push_back(e);
    }
    return inst;
}

// Backtracking search for a coloring that leaves every edge polychromatic.
struct ColoringSearch {
    const ArrowInstance& inst;
    int k;
    bool lex_mode; // static vertex order, for extracting the least coloring

    std::vector<std::vector<int>> vertex_edges;
    std::vector<std::uint8_t> domain; // bit c-1 = color c still possible
    std::vector<int> color;           // 0 = uncolored
    std::vector<int> edge_uncolored;
    std::vector<std::array<int, kMaxColors>> edge_count;
    std::vector<std::pair<int, std::uint8_t>> trail; // domain overwrites
    int uncolored_total;
    const std::atomic<bool>* stop = nullptr;

    ColoringSearch(const ArrowInstance& i, int colors, bool lex)
        : inst(i), k(colors), lex_mode(lex), vertex_edges(static_cast<size_t>(i.vertices)),
          domain(static_cast<size_t>(i.vertices),
                 static_cast<std::uint8_t>((1u << colors) - 1)),
          color(static_cast<size_t>(i.vertices), 0),
          edge_uncolored(i.edges.size()), edge_count(i.edges.size(), {0, 0, 0, 0}),
          uncolored_total(i.vertices) {
        for (std::size_t e = 0; e < inst.edges.size(); ++e) {
            edge_uncolored[e] = static_cast<int>(inst.edges[e].size());
            for (int v : inst.edges[e])
                vertex_edges[static_cast<size_t>(v)].push_back(static_cast<int>(e));
        }
    }

    // Edges already down to one uncolored vertex force that vertex away from
    // completing a monochromatic edge.
    bool initial_propagation() {
        for (std::size_t e = 0; e < inst.edges.size(); ++e)
            if (edge_uncolored[e] == 1 && !forbid_last(static_cast<int>(e)))
                return false;
        return true;
    }

    bool forbid_last(int e) {
        int size = static_cast<int>(inst.edges[static_cast<size_t>(e)].size());
        for (int d = 0; d < k; ++d) {
            if (edge_count[static_cast<size_t>(e)][static_cast<size_t>(d)] != size - 1)
                continue;
            for (int u : inst.edges[static_cast<size_t>(e)]) {
                if (color[static_cast<size_t>(u)])
                    continue;
                std::uint8_t bit = static_cast<std::uint8_t>(1u << d);
                if (domain[static_cast<size_t>(u)] & bit) {
                    trail.emplace_back(u, domain[static_cast<size_t>(u)]);
                    domain[static_cast<size_t>(u)] =
                        static_cast<std::uint8_t>(domain[static_cast<size_t>(u)] & ~bit);
                    if (!domain[static_cast<size_t>(u)])
                        return false;
                }
            }
        }
        return true;
    }

    // Counter updates always run to completion so unassign can roll back
    // every edge symmetrically; conflicts only flip the flag.
    bool assign(int v, int c) {
        color[static_cast<size_t>(v)] = c;
        --uncolored_total;
        bool ok = true;
        for (int e : vertex_edges[static_cast<size_t>(v)]) {
            auto& counts = edge_count[static_cast<size_t>(e)];
            ++counts[static_cast<size_t>(c - 1)];
            if (--edge_uncolored[static_cast<size_t>(e)] == 0) {
                if (counts[static_cast<size_t>(c - 1)] ==
                    static_cast<int>(inst.edges[static_cast<size_t>(e)].size()))
                    ok = false; // monochromatic
            } else if (ok && edge_uncolored[static_cast<size_t>(e)] == 1) {
                if (!forbid_last(e))
                    ok = false;
            }
        }
        return ok;
    }

    void unassign(int v, int c, std::size_t trail_mark) {
        while (trail.size() > trail_mark) {
            auto [u, mask] = trail.back();
            trail.pop_back();
            domain[static_cast<size_t>(u)] = mask;
        }
        for (int e : vertex_edges[static_cast<size_t>(v)]) {
            --edge_count[static_cast<size_t>(e)][static_cast<size_t>(c - 1)];
            ++edge_uncolored[static_cast<size_t>(e)];
        }
        color[static_cast<size_t>(v)] = 0;
        ++uncolored_total;
    }

    int pick_vertex(int color_cap) const {
        int best = -1;
        int best_width = kMaxColors + 1;
        std::uint8_t cap = static_cast<std::uint8_t>((1u << color_cap) - 1);
        for (int v = 0; v < inst.vertices; ++v) {
            if (color[static_cast<size_t>(v)])
                continue;
            if (lex_mode)
                return v;
            int width = std::popcount(static_cast<unsigned>(domain[static_cast<size_t>(v)] & cap));
            if (width < best_width) {
                best_width = width;
                best = v;
            }
        }
        return best;
    }

    // max_used caps fresh colors to the first unused one: unused colors are
    // interchangeable, so one representative branch suffices.
    bool solve(int max_used) {
        if (stop && stop->load(std::memory_order_relaxed))
            return false;
        if (uncolored_total == 0)
            return true;
        int cap = std::min(k, max_used + 1);
        int v = pick_vertex(cap);
        for (int c = 1; c <= cap; ++c) {
            if (!(domain[static_cast<size_t>(v)] & (1u << (c - 1))))
                continue;
            std::size_t mark = trail.size();
            if (assign(v, c)) {
                if (solve(std::max(max_used, c)))
                    return true;
            }
            unassign(v, c, mark);
        }
        return false;
    }
};

std::optional<Coloring> find_least_coloring(const ArrowInstance& inst, int k) {
    ColoringSearch s(inst, k, /*lex_mode=*/true);
    if (!s.initial_propagation())
        return std::nullopt;
    if (!s.solve(0))
        return std::nullopt;
    Coloring col;
    col.k = k;
    col.assignment = s.color;
    return col;
}

bool polychromatic_coloring_exists(const ArrowInstance& inst, int k) {
    ColoringSearch probe(inst, k, /*lex_mode=*/false);
    if (!probe.initial_propagation())
        return false;

#ifdef _OPENMP
    if (inst.vertices >= 24 && !omp_in_parallel()) {
        // Expand a frontier of forced-consistent partial assignments, then
        // race the subtrees. The verdict is an OR, so scheduling cannot
        // change it.
        struct Node {
            std::vector<std::pair<int, int>> assigned;
            int max_used = 0;
        };
        std::vector<Node> frontier{Node{}};
        int target = 4 * omp_get_max_threads();
        bool sat_while_expanding = false;
        for (int round = 0; round < 8 && static_cast<int>(frontier.size()) < target; ++round) {
            std::vector<Node> next;
            for (const Node& node : frontier) {
                ColoringSearch s(inst, k, false);
                bool dead = !s.initial_propagation();
                for (auto [v, c] : node.assigned) {
                    if (dead)
                        break;
                    dead = !s.assign(v, c);
                }
                if (dead)
                    continue;
                if (s.uncolored_total == 0) {
                    sat_while_expanding = true;
                    break;
                }
                int cap = std::min(k, node.max_used + 1);
                int v = s.pick_vertex(cap);
                for (int c = 1; c <= cap; ++c) {
                    if (!(s.domain[static_cast<size_t>(v)] & (1u << (c - 1))))
                        continue;
                    Node child = node;
                    child.assigned.emplace_back(v, c);
                    child.max_used = std::max(node.max_used, c);
                    next.push_back(std::move(child));
                }
            }
            if (sat_while_expanding)
                return true;
            if (next.empty())
                return false;
            frontier = std::move(next);
        }

        std::atomic<bool> found{false};
        std::atomic<bool> cancel{false};
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < static_cast<int>(frontier.size()); ++i) {
            if (cancel.load(std::memory_order_relaxed))
                continue;
            ColoringSearch s(inst, k, false);
            s.stop = &cancel;
            bool dead = !s.initial_propagation();
            for (auto [v, c] : frontier[static_cast<size_t>(i)].assigned) {
                if (dead)
                    break;
                dead = !s.assign(v, c);
            }
            if (!dead && s.solve(frontier[static_cast<size_t>(i)].max_used)) {
                found.store(true, std::memory_order_relaxed);
                cancel.store(true, std::memory_order_relaxed);
            }
        }
        return found.load();
    }
#endif
    return probe.solve(0);
}

} // namespace

ArrowResult arrow_check(const Multiposet& c, const Multiposet& b, const Multiposet& a, int k) {
    check_arrow_inputs(c, b, a, k);
    ArrowInstance inst = build_instance(c, b, a);

    ArrowResult result;
    result.vertices = inst.vertices;
    result.copies = inst.copies;
    if (!polychromatic_coloring_exists(inst, k)) {
        result.holds = true;
        return result;
    }
    result.holds = false;
    result.counterexample = find_least_coloring(inst, k);
    if (!result.counterexample)
        throw internal_error("decision found a coloring the extraction pass cannot");
    return result;
}

bool verify_arrow_counterexample(const Multiposet& c, const Multiposet& b, const Multiposet& a,
                                 int k, const Coloring& col) {
    check_arrow_inputs(c, b, a, k);
    std::vector<Embedding> hom_ab = enumerate_embeddings(a, b);
    if (hom_ab.empty())
        throw input_error("arrow needs hom(A,B) nonempty");
    std::vector<Embedding> hom_ac = enumerate_embeddings(a, c);
    std::vector<Embedding> hom_bc = enumerate_embeddings(b, c);

    if (col.k != k || col.assignment.size() != hom_ac.size())
        throw input_error("coloring does not cover hom(A,C)");
    for (int v : col.assignment)
        if (v < 1 || v > k)
            throw input_error("coloring value out of range");

    for (const Embedding& w : hom_bc) {
        int seen = 0;
        bool mono = true;
        for (const Embedding& h : hom_ab) {
            int cv = col.assignment[static_cast<size_t>(index_of(hom_ac, compose(w, h)))];
            if (seen == 0) {
                seen = cv;
            } else if (cv != seen) {
                mono = false;
                break;
            }
        }
        if (mono)
            return false;
    }
    return true;
}

namespace ref {

ArrowResult naive_arrow_check(const Multiposet& c, const Multiposet& b, const Multiposet& a,
                              int k) {
    check_arrow_inputs(c, b, a, k);
    std::vector<Embedding> hom_ab = enumerate_embeddings(a, b);
    if (hom_ab.empty())
        throw input_error("arrow needs hom(A,B) nonempty");
    std::vector<Embedding> hom_ac = enumerate_embeddings(a, c);
    std::vector<Embedding> hom_bc = enumerate_embeddings(b, c);

    int vertices = static_cast<int>(hom_ac.size());
    double cost = 1;
    for (int i = 0; i < vertices; ++i) {
        cost *= k;
        if (cost > static_cast<double>(1u << 26))
            throw bound_error("naive arrow check: too many colorings");
    }

    std::vector<std::vector<int>> edges;
    edges.reserve(hom_bc.size());
    for (const Embedding& w : hom_bc) {
        std::vector<int> edge;
        edge.reserve(hom_ab.size());
        for (const Embedding& h : hom_ab)
            edge.push_back(index_of(hom_ac, compose(w, h)));
        edges.push_back(std::move(edge));
    }

    ArrowResult result;
    result.vertices = vertices;
    result.copies = static_cast<int>(hom_bc.size());

    std::vector<int> assignment(static_cast<size_t>(vertices), 1);
    while (true) {
        bool some_mono = false;
        for (const auto& edge : edges) {
            bool mono = true;
            for (std::size_t i = 1; i < edge.size(); ++i)
                if (assignment[static_cast<size_t>(edge[i])] !=
                    assignment[static_cast<size_t>(edge[0])]) {
                    mono = false;
                    break;
                }
            if (mono) {
                some_mono = true;
                break;
            }
        }
        if (!some_mono) {
            result.holds = false;
            result.counterexample = Coloring{k, assignment};
            return result;
        }
        // next coloring in lexicographic order
        int pos = vertices - 1;
        while (pos >= 0 && assignment[static_cast<size_t>(pos)] == k) {
            assignment[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0)
            break;
        ++assignment[static_cast<size_t>(pos)];
    }
    result.holds = true;
    return result;
}

} // namespace ref

} // namespace mpr
