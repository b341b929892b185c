#ifndef MPR_IO_HPP
#define MPR_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mpr/amalgam.hpp"
#include "mpr/arrow.hpp"
#include "mpr/multiposet.hpp"
#include "mpr/template_poset.hpp"

namespace mpr::io {

using nlohmann::json;

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& value);

/// Template files: fields `t` and `order` (1-based [i, j] pairs meaning
/// i precedes j). The loader closes the order reflexively and transitively
/// and rejects antisymmetry violations.
Template template_from_json(const json& j);
json template_to_json(const Template& t);
Template load_template(const std::string& path);

/// Structure files: `size` plus `relations`, one 0-based pair list per slot
/// ([a, b] meaning a below b). The diagonal may be omitted. Without `close`
/// non-transitive input is rejected; with it the transitive closure is taken
/// first. Either way every slot must come out a partial order.
Multiposet structure_from_json(const json& j, bool close = false);
json structure_to_json(const Multiposet& x);
Multiposet load_structure(const std::string& path, bool close = false);

/// Diagram files: `tops`, the shared `bottom` and `top` structures (inline
/// or via `bottom_file` / `top_file`), and `bottoms` as per-vertex arrow
/// pairs with 1-based top indices.
BinaryDiagram diagram_from_json(const json& j, const std::string& base_dir = "");
json diagram_to_json(const BinaryDiagram& d);
BinaryDiagram load_diagram(const std::string& path);

Cone cone_from_json(const json& j);
json cone_to_json(const Cone& c);
Cone load_cone(const std::string& path);

json coloring_to_json(const Coloring& col);
Coloring coloring_from_json(const json& j);

/// Self-contained arrow certificate: the canonical byte strings identify
/// (and reconstruct) the instance, so a certificate can be re-checked
/// without the original files.
json arrow_certificate(const Multiposet& c, const Multiposet& b, const Multiposet& a, int k,
                       const ArrowResult& result);

struct ArrowCertificate {
    Multiposet a, b, c;
    int k = 2;
    bool holds = false;
    std::optional<Coloring> counterexample;
};
ArrowCertificate parse_arrow_certificate(const json& j);

json theorem_report_to_json(const TheoremReport& report);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

/// FNV-1a 64 digest, the instance key of the result cache.
std::string fnv1a_hex(const std::string& data);

/// Inverse of encode_multiposet.
Multiposet decode_multiposet(const std::string& bytes);

std::optional<json> cache_lookup(const std::string& dir, const std::string& key);
/// Atomic write-then-rename under dir/<key>.json.
void cache_store(const std::string& dir, const std::string& key, const json& value);

} // namespace mpr::io

#endif
