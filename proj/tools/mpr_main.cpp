#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mpr/amalgam.hpp"
#include "mpr/arrow.hpp"
#include "mpr/canonical.hpp"
#include "mpr/enumerate.hpp"
#include "mpr/io.hpp"
#include "mpr/ramsey.hpp"

using mpr::io::json;

namespace {

struct GlobalOptions {
    std::string format = "human";
    int threads = 0;

    bool structured() const { return format == "json"; }
};

void emit(const GlobalOptions& g, const json& record, const std::string& human) {
    if (g.structured())
        std::cout << record.dump() << '\n';
    else
        std::cout << human << '\n';
}

mpr::Template resolve_template(const std::string& arg) {
    if (arg.rfind("preset:", 0) == 0)
        return mpr::preset_template(arg.substr(7));
    return mpr::io::load_template(arg);
}

mpr::Multiposet resolve_structure(const std::string& arg, bool close) {
    if (arg == "point")
        return mpr::point_structure();
    if (arg.rfind("chain:", 0) == 0) {
        int n = std::stoi(arg.substr(6));
        if (n < 1 || n > mpr::kMaxElements)
            throw mpr::input_error("bad chain size: " + arg);
        return mpr::chain_structure(n);
    }
    return mpr::io::load_structure(arg, close);
}

struct ClassOptions {
    std::string name;
    std::string template_arg;
    int s = 0;
    int m = 0;

    mpr::ClassSpec spec() const {
        if (name == "ch")
            return mpr::ClassSpec::chain();
        if (name == "epos")
            return mpr::ClassSpec::epos();
        if (name == "csm")
            return mpr::ClassSpec::csm(s, m);
        if (name == "k" || name == "kbar") {
            if (template_arg.empty())
                throw mpr::input_error("class " + name + " needs --template");
            mpr::Template t = resolve_template(template_arg);
            return name == "k" ? mpr::ClassSpec::k_of(t) : mpr::ClassSpec::kbar_of(t);
        }
        throw mpr::input_error("unknown class: " + name +
                               " (expected ch, epos, csm, k, or kbar)");
    }
};

void add_class_options(CLI::App* cmd, ClassOptions& opts) {
    cmd->add_option("--class", opts.name, "class: ch, epos, csm, k, kbar")->required();
    cmd->add_option("--template", opts.template_arg, "template file or preset:<name>");
    cmd->add_option("--s", opts.s, "partial/linear pair count for csm");
    cmd->add_option("--m", opts.m, "free linear order count for csm");
}

json template_info_record(const mpr::TemplateInfo& info) {
    json pairs = json::array();
    for (auto [i, j] : info.pairs)
        pairs.push_back(json::array({i, j}));
    return json{{"maximal", info.maximal},
                {"isolated", info.isolated},
                {"pairs", pairs},
                {"s", info.s()},
                {"m", info.m()}};
}

std::string describe_pairs(const mpr::TemplateInfo& info) {
    std::string out = "[";
    for (std::size_t i = 0; i < info.pairs.size(); ++i) {
        if (i)
            out += ", ";
        out += "(" + std::to_string(info.pairs[i].first) + "," +
               std::to_string(info.pairs[i].second) + ")";
    }
    return out + "]";
}

int run_validate(const GlobalOptions& g, const std::string& template_arg) {
    mpr::Template t = resolve_template(template_arg);
    mpr::TemplateInfo info = mpr::validate_template(t);
    json record = template_info_record(info);
    record["command"] = "validate";
    record["t"] = t.t();
    emit(g, record,
         "t=" + std::to_string(t.t()) + " s=" + std::to_string(info.s()) +
             " m=" + std::to_string(info.m()) + " pairs=" + describe_pairs(info));
    return 0;
}

int run_member(const GlobalOptions& g, const ClassOptions& cls, const std::string& structure,
               bool close) {
    mpr::Multiposet x = resolve_structure(structure, close);
    bool verdict = mpr::class_contains(cls.spec(), x);
    emit(g, json{{"command", "member"}, {"class", cls.spec().describe()}, {"member", verdict}},
         std::string("member: ") + (verdict ? "true" : "false"));
    return 0;
}

int run_enumerate(const GlobalOptions& g, const ClassOptions& cls, int n, int bound, bool full,
                  const std::string& out_path) {
    std::vector<mpr::Multiposet> reps = mpr::enumerate_class(cls.spec(), n, bound);
    json list = json::array();
    for (const mpr::Multiposet& x : reps) {
        json entry{{"canonical", mpr::io::to_hex(mpr::encode_multiposet(x))}};
        if (full || !out_path.empty())
            entry["structure"] = mpr::io::structure_to_json(x);
        list.push_back(std::move(entry));
    }
    if (!out_path.empty())
        mpr::io::write_json_file(out_path, list);
    if (g.structured()) {
        std::cout << json{{"command", "enumerate"}, {"count", reps.size()}}.dump() << '\n';
        for (const json& entry : list)
            std::cout << entry.dump() << '\n';
    } else {
        std::cout << reps.size() << " classes of size " << n << '\n';
        for (const json& entry : list)
            std::cout << "  " << entry["canonical"].get<std::string>() << '\n';
    }
    return 0;
}

int run_embeddings(const GlobalOptions& g, const std::string& source,
                   const std::string& target, bool close, bool count_only) {
    mpr::Multiposet a = resolve_structure(source, close);
    mpr::Multiposet b = resolve_structure(target, close);
    std::vector<mpr::Embedding> maps = mpr::enumerate_embeddings(a, b);
    if (g.structured()) {
        std::cout << json{{"command", "embeddings"}, {"count", maps.size()}}.dump() << '\n';
        if (!count_only)
            for (const mpr::Embedding& f : maps)
                std::cout << json(f.map).dump() << '\n';
    } else {
        std::cout << maps.size() << " embeddings\n";
        if (!count_only)
            for (const mpr::Embedding& f : maps) {
                std::cout << " ";
                for (int v : f.map)
                    std::cout << ' ' << v;
                std::cout << '\n';
            }
    }
    return 0;
}

int run_arrow(const GlobalOptions& g, const std::string& a_arg, const std::string& b_arg,
              const std::string& c_arg, int k, bool close,
              const std::optional<ClassOptions>& cls, const std::string& cert_path,
              std::string cache_dir) {
    mpr::Multiposet a = resolve_structure(a_arg, close);
    mpr::Multiposet b = resolve_structure(b_arg, close);
    mpr::Multiposet c = resolve_structure(c_arg, close);
    if (cls) {
        mpr::ClassSpec spec = cls->spec();
        if (!mpr::class_contains(spec, a) || !mpr::class_contains(spec, b) ||
            !mpr::class_contains(spec, c))
            throw mpr::input_error("arrow inputs must belong to " + spec.describe());
    }

    // work on canonical forms so certificates and cache entries are
    // reproducible across runs and relabellings
    mpr::Multiposet ca = mpr::canonicalize(a);
    mpr::Multiposet cb = mpr::canonicalize(b);
    mpr::Multiposet cc = mpr::canonicalize(c);

    if (cache_dir.empty())
        if (const char* env = std::getenv("MPR_CACHE_DIR"))
            cache_dir = env;
    std::string key = mpr::io::fnv1a_hex(mpr::encode_multiposet(ca) + mpr::encode_multiposet(cb) +
                                         mpr::encode_multiposet(cc) + std::to_string(k));

    json cert;
    bool cached = false;
    if (!cache_dir.empty()) {
        if (auto hit = mpr::io::cache_lookup(cache_dir, key)) {
            cert = *hit;
            cached = true;
        }
    }
    if (!cached) {
        mpr::ArrowResult result = mpr::arrow_check(cc, cb, ca, k);
        cert = mpr::io::arrow_certificate(cc, cb, ca, k, result);
        if (!cache_dir.empty())
            mpr::io::cache_store(cache_dir, key, cert);
    }
    if (!cert_path.empty())
        mpr::io::write_json_file(cert_path, cert);

    bool holds = cert["holds"].get<bool>();
    json record = cert;
    record["command"] = "arrow";
    record["cached"] = cached;
    std::string human = std::string("arrow ") + (holds ? "holds" : "fails") + " (vertices=" +
                        std::to_string(cert["vertices"].get<int>()) +
                        ", copies=" + std::to_string(cert["copies"].get<int>()) + ")" +
                        (cached ? " [cached]" : "");
    if (!holds && cert.contains("counterexample")) {
        human += "\n  counterexample coloring:";
        for (const json& v : cert["counterexample"]["assignment"])
            human += " " + std::to_string(v.get<int>());
    }
    emit(g, record, human);
    return 0;
}

int run_search(const GlobalOptions& g, const ClassOptions& cls, const std::string& a_arg,
               const std::string& b_arg, int k, int max_n, int bound, bool close,
               const std::string& out_path) {
    mpr::Multiposet a = resolve_structure(a_arg, close);
    mpr::Multiposet b = resolve_structure(b_arg, close);
    mpr::WitnessSearchOutcome out =
        mpr::ramsey_witness_search(cls.spec(), a, b, k, max_n, bound);

    using Status = mpr::WitnessSearchOutcome::Status;
    if (out.status == Status::bound_exceeded) {
        emit(g,
             json{{"command", "search"},
                  {"status", "bound-exceeded"},
                  {"last_size_scanned", out.last_size_scanned}},
             "enumeration bound exceeded before exhausting size levels");
        return 3;
    }
    if (out.status == Status::exhausted) {
        emit(g,
             json{{"command", "search"},
                  {"status", "exhausted"},
                  {"last_size_scanned", out.last_size_scanned}},
             "no witness up to size " + std::to_string(out.last_size_scanned));
        return 0;
    }
    if (!out_path.empty())
        mpr::io::write_json_file(out_path, mpr::io::structure_to_json(*out.witness));
    emit(g,
         json{{"command", "search"},
              {"status", "found"},
              {"size", out.witness->size()},
              {"canonical", mpr::io::to_hex(mpr::encode_multiposet(*out.witness))}},
         "witness of size " + std::to_string(out.witness->size()) + " found");
    return 0;
}

int run_classprops(const GlobalOptions& g, const ClassOptions& cls, int n, int sap_extra,
                   int bound) {
    mpr::ClassSpec spec = cls.spec();
    bool hp = mpr::has_hp_upto(spec, n, bound);
    bool jep = mpr::has_jep_upto(spec, n, bound);
    bool sap = mpr::has_sap_upto(spec, n, sap_extra, bound);
    emit(g,
         json{{"command", "classprops"},
              {"class", spec.describe()},
              {"n", n},
              {"hp", hp},
              {"jep", jep},
              {"sap", sap}},
         spec.describe() + " up to n=" + std::to_string(n) + ": hp=" + (hp ? "true" : "false") +
             " jep=" + (jep ? "true" : "false") + " sap=" + (sap ? "true" : "false"));
    return 0;
}

int run_amalgamate(const GlobalOptions& g, const std::string& template_arg,
                   const std::string& diagram_path, const std::string& cone_path,
                   bool find_cone, int max_size, int bound, const std::string& report_path) {
    mpr::Template t = resolve_template(template_arg);
    mpr::TemplateInfo info = mpr::validate_template(t);
    mpr::BinaryDiagram diagram = mpr::io::load_diagram(diagram_path);

    mpr::Cone cone{mpr::point_structure(), {}};
    if (!cone_path.empty()) {
        cone = mpr::io::load_cone(cone_path);
    } else if (find_cone) {
        mpr::ConeSearchOutcome search =
            mpr::find_cone_csm(diagram, info.s(), info.m(), max_size, bound);
        if (search.status == mpr::ConeSearchOutcome::Status::bound_exceeded) {
            emit(g, json{{"command", "amalgamate"}, {"status", "bound-exceeded"}},
                 "enumeration bound exceeded while searching for a cone");
            return 3;
        }
        if (search.status == mpr::ConeSearchOutcome::Status::none_within_bound) {
            emit(g,
                 json{{"command", "amalgamate"},
                      {"status", "no-cone"},
                      {"max_size", max_size}},
                 "no compatible cone with apex size up to " + std::to_string(max_size));
            return 0;
        }
        cone = *search.cone;
    } else {
        throw mpr::input_error("amalgamate needs --cone or --find-cone");
    }

    mpr::TheoremReport report = mpr::verify_main_theorem_instance(diagram, cone, info);
    json record = mpr::io::theorem_report_to_json(report);
    record["command"] = "amalgamate";
    if (!report_path.empty())
        mpr::io::write_json_file(report_path, record);

    std::string human = std::string("verification ") + (report.pass ? "passed" : "FAILED");
    for (const mpr::TheoremCheck& c : report.checks)
        human += "\n  " + c.name + ": " + (c.pass ? "ok" : ("FAIL " + c.detail));
    emit(g, record, human);
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& cert_path) {
    json cert = mpr::io::read_json_file(cert_path);
    mpr::io::ArrowCertificate parsed = mpr::io::parse_arrow_certificate(cert);
    bool valid;
    std::string note;
    if (parsed.holds) {
        // positive certificates certify by exhaustion: recompute
        valid = mpr::arrow_check(parsed.c, parsed.b, parsed.a, parsed.k).holds;
        note = "recomputed decision";
    } else {
        if (!parsed.counterexample)
            throw mpr::input_error("negative certificate lacks a counterexample");
        valid = mpr::verify_arrow_counterexample(parsed.c, parsed.b, parsed.a, parsed.k,
                                                 *parsed.counterexample);
        note = "checked counterexample";
    }
    emit(g,
         json{{"command", "verify"}, {"valid", valid}, {"holds", parsed.holds}, {"note", note}},
         std::string("certificate ") + (valid ? "valid" : "INVALID") + " (" + note + ")");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"template-constrained multiposets: membership, embeddings, arrow "
                 "relations, witness search, and binary-diagram amalgamation"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--threads", g.threads, "worker threads (0 = library default)");

    auto* validate = app.add_subcommand("validate", "decompose a template");
    std::string validate_template_arg;
    validate->add_option("--template", validate_template_arg)->required();

    auto* member = app.add_subcommand("member", "class membership of a structure");
    ClassOptions member_cls;
    add_class_options(member, member_cls);
    std::string member_structure;
    bool member_close = false;
    member->add_option("--structure", member_structure)->required();
    member->add_flag("--close", member_close, "transitively close input relations");

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes at one size");
    ClassOptions enum_cls;
    add_class_options(enumerate, enum_cls);
    int enum_n = 1;
    int enum_bound = mpr::kDefaultEnumBound;
    bool enum_full = false;
    std::string enum_out;
    enumerate->add_option("-n", enum_n)->required();
    enumerate->add_option("--bound", enum_bound);
    enumerate->add_flag("--full", enum_full, "print full structures");
    enumerate->add_option("--out", enum_out, "write representatives to a file");

    auto* embeddings = app.add_subcommand("embeddings", "all embeddings of one structure "
                                                        "into another");
    std::string emb_source, emb_target;
    bool emb_close = false, emb_count_only = false;
    embeddings->add_option("--source", emb_source)->required();
    embeddings->add_option("--target", emb_target)->required();
    embeddings->add_flag("--close", emb_close);
    embeddings->add_flag("--count-only", emb_count_only);

    auto* arrow = app.add_subcommand("arrow", "decide C -> (B)^A_k");
    std::string arrow_a, arrow_b, arrow_c, arrow_cert, arrow_cache;
    int arrow_k = 2;
    bool arrow_close = false;
    ClassOptions arrow_cls;
    arrow->add_option("--a", arrow_a)->required();
    arrow->add_option("--b", arrow_b)->required();
    arrow->add_option("--c", arrow_c)->required();
    arrow->add_option("-k", arrow_k);
    arrow->add_flag("--close", arrow_close);
    arrow->add_option("--class", arrow_cls.name, "check inputs against this class first");
    arrow->add_option("--template", arrow_cls.template_arg);
    arrow->add_option("--s", arrow_cls.s);
    arrow->add_option("--m", arrow_cls.m);
    arrow->add_option("--cert", arrow_cert, "write the certificate here");
    arrow->add_option("--cache", arrow_cache, "result cache directory");

    auto* search = app.add_subcommand("search", "least class member carrying the arrow");
    ClassOptions search_cls;
    add_class_options(search, search_cls);
    std::string search_a, search_b, search_out;
    int search_k = 2, search_max_n = 6, search_bound = mpr::kDefaultEnumBound;
    bool search_close = false;
    search->add_option("--a", search_a)->required();
    search->add_option("--b", search_b)->required();
    search->add_option("-k", search_k);
    search->add_option("--max-n", search_max_n);
    search->add_option("--bound", search_bound);
    search->add_flag("--close", search_close);
    search->add_option("--out", search_out, "write the witness structure here");

    auto* classprops = app.add_subcommand("classprops", "hereditary, joint embedding and "
                                                        "strong amalgamation checks");
    ClassOptions props_cls;
    add_class_options(classprops, props_cls);
    int props_n = 2, props_sap_extra = 0, props_bound = mpr::kDefaultEnumBound;
    classprops->add_option("-n", props_n)->required();
    classprops->add_option("--sap-extra", props_sap_extra,
                           "extra amalgam sizes beyond |B|+|C|-|A|");
    classprops->add_option("--bound", props_bound);

    auto* amalgamate = app.add_subcommand("amalgamate", "construct and verify the "
                                                        "amalgamation instance");
    std::string am_template, am_diagram, am_cone, am_report;
    bool am_find_cone = false;
    int am_max_size = 6, am_bound = mpr::kDefaultEnumBound;
    amalgamate->add_option("--template", am_template)->required();
    amalgamate->add_option("--diagram", am_diagram)->required();
    amalgamate->add_option("--cone", am_cone);
    amalgamate->add_flag("--find-cone", am_find_cone, "search for a compatible cone");
    amalgamate->add_option("--max-size", am_max_size);
    amalgamate->add_option("--bound", am_bound);
    amalgamate->add_option("--report", am_report, "write the verification report here");

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    std::string verify_cert;
    verify->add_option("--cert", verify_cert)->required();

    // --format and --threads may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (g.threads > 0)
        omp_set_num_threads(g.threads);
#endif

    try {
        if (*validate)
            return run_validate(g, validate_template_arg);
        if (*member)
            return run_member(g, member_cls, member_structure, member_close);
        if (*enumerate)
            return run_enumerate(g, enum_cls, enum_n, enum_bound, enum_full, enum_out);
        if (*embeddings)
            return run_embeddings(g, emb_source, emb_target, emb_close, emb_count_only);
        if (*arrow) {
            std::optional<ClassOptions> cls;
            if (arrow->count("--class"))
                cls = arrow_cls;
            return run_arrow(g, arrow_a, arrow_b, arrow_c, arrow_k, arrow_close, cls,
                             arrow_cert, arrow_cache);
        }
        if (*search)
            return run_search(g, search_cls, search_a, search_b, search_k, search_max_n,
                              search_bound, search_close, search_out);
        if (*classprops)
            return run_classprops(g, props_cls, props_n, props_sap_extra, props_bound);
        if (*amalgamate)
            return run_amalgamate(g, am_template, am_diagram, am_cone, am_find_cone,
                                  am_max_size, am_bound, am_report);
        if (*verify)
            return run_verify(g, verify_cert);
    } catch (const mpr::bound_error& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return 3;
    } catch (const mpr::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
