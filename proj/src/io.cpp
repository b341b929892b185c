#include "mpr/io.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>

#include "mpr/canonical.hpp"

namespace mpr::io {

namespace fs = std::filesystem;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& value) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write " + path);
    out << value.dump(2) << '\n';
}

namespace {

std::vector<std::pair<int, int>> pair_list(const json& j, const std::string& what) {
    std::vector<std::pair<int, int>> pairs;
    if (!j.is_array())
        throw input_error(what + " must be an array of [a, b] pairs");
    for (const json& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            throw input_error(what + " must be an array of [a, b] pairs");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return pairs;
}

Embedding embedding_from_json(const json& j, int target_size) {
    if (!j.is_array())
        throw input_error("embedding must be an integer array");
    Embedding e;
    e.target_size = target_size;
    for (const json& v : j) {
        if (!v.is_number_integer())
            throw input_error("embedding must be an integer array");
        e.map.push_back(v.get<int>());
    }
    return e;
}

json embedding_to_json(const Embedding& e) {
    return json(e.map);
}

} // namespace

Template template_from_json(const json& j) {
    if (!j.contains("t") || !j["t"].is_number_integer())
        throw input_error("template needs an integer field t");
    int t = j["t"].get<int>();
    if (t < 1 || t > kMaxElements)
        throw input_error("template size out of range");
    Relation r(t);
    if (j.contains("order"))
        for (auto [a, b] : pair_list(j["order"], "template order")) {
            if (a < 1 || a > t || b < 1 || b > t)
                throw input_error("template order pair out of range");
            r.set(a - 1, b - 1);
        }
    r = transitive_closure(reflexive_closure(r));
    if (!is_antisymmetric(r))
        throw input_error("template order violates antisymmetry");
    return Template(t, r);
}

json template_to_json(const Template& t) {
    json order = json::array();
    for (auto [a, b] : t.order().pairs())
        if (a != b)
            order.push_back(json::array({a + 1, b + 1}));
    return json{{"t", t.t()}, {"order", order}};
}

Template load_template(const std::string& path) {
    return template_from_json(read_json_file(path));
}

Multiposet structure_from_json(const json& j, bool close) {
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw input_error("structure needs an integer field size");
    int n = j["size"].get<int>();
    if (n < 1 || n > kMaxElements)
        throw input_error("structure size out of range");
    std::vector<Relation> slots;
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw input_error("relations must be an array of pair lists");
        for (const json& rel : j["relations"]) {
            Relation r(n);
            for (auto [a, b] : pair_list(rel, "relation")) {
                if (a < 0 || a >= n || b < 0 || b >= n)
                    throw input_error("relation pair out of range");
                r.set(a, b);
            }
            r = reflexive_closure(r);
            if (close)
                r = transitive_closure(r);
            if (!is_partial_order(r))
                throw input_error(close ? "relation is not antisymmetric after closure"
                                        : "relation is not a partial order; pass --close to "
                                          "take the transitive closure first");
            slots.push_back(std::move(r));
        }
    }
    return Multiposet(n, std::move(slots));
}

json structure_to_json(const Multiposet& x) {
    json rels = json::array();
    for (const Relation& r : x.relations()) {
        json pairs = json::array();
        for (auto [a, b] : r.pairs())
            if (a != b)
                pairs.push_back(json::array({a, b}));
        rels.push_back(std::move(pairs));
    }
    return json{{"size", x.size()}, {"relations", rels}};
}

Multiposet load_structure(const std::string& path, bool close) {
    return structure_from_json(read_json_file(path), close);
}

BinaryDiagram diagram_from_json(const json& j, const std::string& base_dir) {
    auto load_part = [&](const char* inline_key, const char* file_key) {
        if (j.contains(inline_key))
            return structure_from_json(j[inline_key]);
        if (j.contains(file_key)) {
            fs::path p = j[file_key].get<std::string>();
            if (p.is_relative() && !base_dir.empty())
                p = fs::path(base_dir) / p;
            return load_structure(p.string());
        }
        throw input_error(std::string("diagram needs ") + inline_key + " or " + file_key);
    };
    Multiposet bottom = load_part("bottom", "bottom_file");
    Multiposet top = load_part("top", "top_file");
    if (!j.contains("tops") || !j["tops"].is_number_integer())
        throw input_error("diagram needs an integer field tops");

    BinaryDiagram d{std::move(bottom), std::move(top), j["tops"].get<int>(), {}};
    if (j.contains("bottoms")) {
        if (!j["bottoms"].is_array())
            throw input_error("bottoms must be an array");
        for (const json& vertex : j["bottoms"]) {
            if (!vertex.contains("arrows") || !vertex["arrows"].is_array() ||
                vertex["arrows"].size() != 2)
                throw input_error("each bottom vertex carries exactly two arrows");
            std::array<DiagramArrow, 2> arrows;
            for (int i = 0; i < 2; ++i) {
                const json& a = vertex["arrows"][static_cast<size_t>(i)];
                if (!a.contains("top") || !a["top"].is_number_integer() || !a.contains("map"))
                    throw input_error("arrow needs fields top and map");
                arrows[static_cast<size_t>(i)] =
                    DiagramArrow{a["top"].get<int>() - 1,
                                 embedding_from_json(a["map"], d.top.size())};
            }
            d.bottoms.push_back(std::move(arrows));
        }
    }
    validate_diagram(d);
    return d;
}

json diagram_to_json(const BinaryDiagram& d) {
    json bottoms = json::array();
    for (const auto& vertex : d.bottoms) {
        json arrows = json::array();
        for (const DiagramArrow& a : vertex)
            arrows.push_back(json{{"top", a.top + 1}, {"map", embedding_to_json(a.map)}});
        bottoms.push_back(json{{"arrows", arrows}});
    }
    return json{{"tops", d.tops_count},
                {"bottom", structure_to_json(d.bottom)},
                {"top", structure_to_json(d.top)},
                {"bottoms", bottoms}};
}

BinaryDiagram load_diagram(const std::string& path) {
    return diagram_from_json(read_json_file(path), fs::path(path).parent_path().string());
}

Cone cone_from_json(const json& j) {
    if (!j.contains("apex"))
        throw input_error("cone needs an apex structure");
    Multiposet apex = structure_from_json(j["apex"]);
    Cone c{std::move(apex), {}};
    if (!j.contains("legs") || !j["legs"].is_array())
        throw input_error("cone needs a legs array");
    for (const json& leg : j["legs"])
        c.legs.push_back(embedding_from_json(leg, c.apex.size()));
    return c;
}

json cone_to_json(const Cone& c) {
    json legs = json::array();
    for (const Embedding& leg : c.legs)
        legs.push_back(embedding_to_json(leg));
    return json{{"apex", structure_to_json(c.apex)}, {"legs", legs}};
}

Cone load_cone(const std::string& path) {
    return cone_from_json(read_json_file(path));
}

json coloring_to_json(const Coloring& col) {
    return json{{"k", col.k}, {"assignment", col.assignment}};
}

Coloring coloring_from_json(const json& j) {
    if (!j.contains("k") || !j.contains("assignment") || !j["assignment"].is_array())
        throw input_error("coloring needs k and an assignment array");
    Coloring col;
    col.k = j["k"].get<int>();
    for (const json& v : j["assignment"])
        col.assignment.push_back(v.get<int>());
    return col;
}

json arrow_certificate(const Multiposet& c, const Multiposet& b, const Multiposet& a, int k,
                       const ArrowResult& result) {
    json cert{{"type", "arrow"},
              {"k", k},
              {"canonical_a", to_hex(canonical_form(a).bytes)},
              {"canonical_b", to_hex(canonical_form(b).bytes)},
              {"canonical_c", to_hex(canonical_form(c).bytes)},
              {"vertices", result.vertices},
              {"copies", result.copies},
              {"holds", result.holds}};
    if (result.counterexample)
        cert["counterexample"] = coloring_to_json(*result.counterexample);
    return cert;
}

ArrowCertificate parse_arrow_certificate(const json& j) {
    if (!j.contains("type") || j["type"] != "arrow")
        throw input_error("not an arrow certificate");
    ArrowCertificate cert{decode_multiposet(from_hex(j.at("canonical_a").get<std::string>())),
                          decode_multiposet(from_hex(j.at("canonical_b").get<std::string>())),
                          decode_multiposet(from_hex(j.at("canonical_c").get<std::string>())),
                          j.at("k").get<int>(),
                          j.at("holds").get<bool>(),
                          std::nullopt};
    if (j.contains("counterexample"))
        cert.counterexample = coloring_from_json(j["counterexample"]);
    return cert;
}

json theorem_report_to_json(const TheoremReport& report) {
    json checks = json::array();
    for (const TheoremCheck& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return json{{"type", "amalgamation"}, {"pass", report.pass}, {"checks", checks}};
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char ch : bytes) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 15]);
    }
    return out;
}

std::string from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw input_error("bad hex digit");
    };
    if (hex.size() % 2)
        throw input_error("odd hex length");
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return out;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

Multiposet decode_multiposet(const std::string& bytes) {
    if (bytes.size() < 2)
        throw input_error("truncated structure encoding");
    int n = static_cast<unsigned char>(bytes[0]);
    int slots = static_cast<unsigned char>(bytes[1]);
    if (n < 1 || n > kMaxElements)
        throw input_error("structure encoding has a bad size");
    std::size_t bits = static_cast<size_t>(slots) * n * n;
    if (bytes.size() != 2 + (bits + 7) / 8)
        throw input_error("structure encoding has the wrong length");
    auto bit_at = [&](std::size_t idx) {
        unsigned char byte = static_cast<unsigned char>(bytes[2 + idx / 8]);
        return (byte >> (7 - idx % 8)) & 1;
    };
    std::vector<Relation> rels(static_cast<size_t>(slots), Relation(n));
    std::size_t pos = 0;
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < slots; ++s) {
            for (int i = 0; i <= k; ++i, ++pos)
                if (bit_at(pos))
                    rels[static_cast<size_t>(s)].set(i, k);
            for (int j = 0; j < k; ++j, ++pos)
                if (bit_at(pos))
                    rels[static_cast<size_t>(s)].set(k, j);
        }
    return Multiposet(n, std::move(rels));
}

std::optional<json> cache_lookup(const std::string& dir, const std::string& key) {
    fs::path p = fs::path(dir) / (key + ".json");
    if (!fs::exists(p))
        return std::nullopt;
    try {
        return read_json_file(p.string());
    } catch (const input_error&) {
        return std::nullopt; // a corrupt entry is a miss
    }
}

void cache_store(const std::string& dir, const std::string& key, const json& value) {
    fs::create_directories(dir);
    fs::path target = fs::path(dir) / (key + ".json");
    fs::path tmp = target;
    tmp += ".tmp";
    write_json_file(tmp.string(), value);
    fs::rename(tmp, target);
}

} // namespace mpr::io
