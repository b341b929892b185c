#include "mpr/template_poset.hpp"

#include <algorithm>

namespace mpr {

Template::Template(int t, const Relation& order) : t_(t), order_(order) {
    if (t < 1)
        throw input_error("template needs t >= 1");
    if (order.size() != t)
        throw input_error("template order size does not match t");
    if (!is_partial_order(order))
        throw input_error("template order is not a partial order");
}

TemplateInfo validate_template(const Template& t) {
    int n = t.t();
    const Relation& ord = t.order();

    TemplateInfo info;
    info.order = ord;
    std::vector<bool> iso(n, true);
    for (int a = 0; a < n; ++a) {
        bool maximal = true;
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            if (ord.contains(a, b)) {
                maximal = false;
                iso[a] = false;
            }
            if (ord.contains(b, a))
                iso[a] = false;
        }
        if (maximal)
            info.maximal.push_back(a + 1);
    }
    for (int a = 0; a < n; ++a)
        if (iso[a])
            info.isolated.push_back(a + 1);

    // T' = T minus isolated points. Removing isolated points cannot create
    // new ones, so every maximal element of T' lies strictly above some
    // element of T' and shows up as a j in the pair list.
    for (int j = 0; j < n; ++j) {
        if (iso[j])
            continue;
        bool maximal = true;
        for (int b = 0; b < n; ++b)
            if (b != j && !iso[b] && ord.contains(j, b)) {
                maximal = false;
                break;
            }
        if (!maximal)
            continue;
        for (int i = 0; i < n; ++i)
            if (i != j && !iso[i] && ord.contains(i, j))
                info.pairs.emplace_back(i + 1, j + 1);
    }
    std::sort(info.pairs.begin(), info.pairs.end(),
              [](const auto& p, const auto& q) {
                  return std::pair(p.second, p.first) < std::pair(q.second, q.first);
              });
    return info;
}

Template preset_template(const std::string& name) {
    auto antichain = [](int n) { return Template(n, Relation::diagonal(n)); };
    if (name == "a")
        return antichain(1);
    if (name == "b") {
        Relation r = Relation::diagonal(2);
        r.set(0, 1);
        return Template(2, r);
    }
    if (name == "c") {
        Relation r = Relation::diagonal(3);
        r.set(0, 1);
        return Template(3, r);
    }
    auto parse_n = [&](std::size_t prefix) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(name.substr(prefix), &used);
            if (used != name.size() - prefix)
                n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n < 1 || n > kMaxElements)
            throw input_error("bad element count in template preset: " + name);
        return n;
    };
    if (name.rfind("d:", 0) == 0)
        return antichain(parse_n(2));
    if (name.rfind("e:", 0) == 0) {
        int n = parse_n(2);
        if (n < 2)
            throw input_error("preset e:n needs n >= 2");
        // the shared partial order is the last slot, below every linear one
        Relation r = Relation::diagonal(n);
        for (int i = 0; i + 1 < n; ++i)
            r.set(n - 1, i);
        return Template(n, r);
    }
    throw input_error("unknown template preset: " + name);
}

} // namespace mpr
