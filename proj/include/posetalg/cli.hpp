#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes the report to `out` (or --out), diagnostics to `err`.
//
// Exit codes: 0 success, 1 bad input or usage, 2 internal invariant failure.

#include "posetalg/algebra.hpp"
#include "posetalg/construct.hpp"
#include "posetalg/derived.hpp"
#include "posetalg/error.hpp"
#include "posetalg/homalg.hpp"
#include "posetalg/io.hpp"
#include "posetalg/modrep.hpp"
#include "posetalg/poset.hpp"
#include "posetalg/simconn.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace posetalg::cli {

using nlohmann::json;

inline constexpr const char* schema_version = "posetalg-report/1";
inline constexpr const char* corpus_env = "POSETALG_CORPUS";

struct Options {
    std::string command;
    std::string input;
    std::string module;
    std::string format = "text";
    unsigned long characteristic = 0;
    std::size_t max_len = 3;
    std::size_t max_mult = 2;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t node_limit = 0;
    std::size_t max_n = default_crown_cap;
    std::string out;
    std::string poset_out;
    std::string weight_type;
    bool weight_type_given = false;
    bool timings = false;
};

inline std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw InvariantError("SHA-256 computation failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

/// The path as given, else relative to $POSETALG_CORPUS, trying a ".json"
/// suffix in both places.
inline std::string resolve_input(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> tries{path, path + ".json"};
    if (const char* dir = std::getenv(corpus_env); dir && *dir && fs::path(path).is_relative()) {
        tries.push_back(fs::path(dir) / path);
        tries.push_back(fs::path(dir) / (path + ".json"));
    }
    for (const auto& t : tries)
        if (fs::is_regular_file(t)) return t.string();
    throw ValidationError("cannot read input file '" + path + "'");
}

namespace payload {

inline json validate(const Poset& p) {
    json covers = json::array();
    for (const auto& [a, b] : p.cover_ids()) covers.push_back({a, b});
    return {{"valid", true},
            {"elements", p.size()},
            {"covers", covers},
            {"connected", !p.empty() && is_connected(p)},
            {"minimal", io::ids(p, p.minimal_elements())},
            {"maximal", io::ids(p, p.maximal_elements())}};
}

inline json hasse(const Poset& p) {
    const Quiver q = hasse_quiver(p);
    json arrows = json::array();
    for (const auto& [a, b] : q.arrows) arrows.push_back({a, b});
    return {{"vertices", q.vertices}, {"arrows", arrows}};
}

inline json cartan(const Poset& p) {
    const IncidenceAlgebra alg(p);
    const CartanData d = cartan_data(alg);
    json basis = json::array();
    for (const auto& [a, b] : alg.basis()) basis.push_back({p.id(a), p.id(b)});
    json poly = json::array();
    for (const auto& c : d.coxeter_polynomial) poly.push_back(c.get_si());
    return {{"dimension", alg.dimension()},
            {"order", io::ids(p, d.order)},
            {"basis", basis},
            {"cartan", io::matrix_to_json(d.cartan)},
            {"moebius", io::matrix_to_json(d.moebius)},
            {"coxeter", io::matrix_to_json(d.coxeter)},
            {"coxeter_polynomial", poly}};
}

inline json gldim(const Poset& p) {
    require_connected(p, "global dimension");
    const Poset op = opposite(p);
    json pd = json::object(), id = json::object();
    std::size_t g = 0;
    for (Element a = 0; a < p.size(); ++a) {
        const std::size_t d = projective_dimension(p, simple_module(p, a));
        g = std::max(g, d);
        pd[p.id(a)] = d;
        id[p.id(a)] = projective_dimension(op, dual(p, op, simple_module(p, a)));
    }
    return {{"global_dimension", g}, {"pd_simple", pd}, {"id_simple", id}};
}

inline json resolutions(const Poset& p) {
    json res = json::object();
    for (Element a = 0; a < p.size(); ++a)
        res[p.id(a)] = io::resolution_to_json(p, minimal_projective_resolution(p, simple_module(p, a)));
    const ExtTable t = ext_dims_between_simples(p);
    json ext = json::array();
    for (std::size_t k = 0; k < t.ext.size(); ++k)
        for (Element a = 0; a < p.size(); ++a)
            for (Element b = 0; b < p.size(); ++b)
                if (t.ext[k][a][b] != 0) ext.push_back({{"k", k}, {"from", p.id(a)}, {"to", p.id(b)}, {"dim", t.ext[k][a][b]}});
    return {{"simples", res}, {"ext_simples", ext}};
}

inline json module_resolution(const Poset& p, const PosetRepresentation& m) {
    const Resolution r = minimal_projective_resolution(p, m);
    json j = io::resolution_to_json(p, r);
    j["injective_dimension"] = injective_dimension(p, m);
    return {{"module", j}};
}

inline json sincere(const Poset& p) {
    const SincereReport r = sincere_check(p);
    return {{"end_dimension", r.end_dimension},
            {"indecomposable", r.indecomposable},
            {"projective_dimension", r.projective_dimension},
            {"self_ext", r.self_ext},
            {"exceptional", r.exceptional}};
}

inline json hh1(const Poset& p, unsigned long characteristic) {
    const H1Data h = h1_order_complex(p);
    const std::size_t dim = hh1_dimension(h, characteristic);
    const Pi1Presentation pres = pi1_presentation(p);
    const H1Data ab = abelianization(pres);
    if (ab.betti1 != h.betti1 || ab.torsion != h.torsion)
        throw InvariantError("abelianized presentation disagrees with H1 of the order complex");
    return {{"characteristic", characteristic},
            {"hh1", dim},
            {"h1", io::h1_to_json(h)},
            {"pi1", {{"generators", pres.generators()}, {"relators", pres.relators.size()}}}};
}

inline json crown(const Poset& p, std::size_t max_n) {
    const auto w = find_crown(p, max_n);
    json j{{"found", w.has_value()}, {"max_n", max_n}};
    j["witness"] = w ? io::crown_to_json(p, *w) : json(nullptr);
    return j;
}

inline json ssc(const Poset& p, std::size_t cap) {
    const SscResult r = is_strongly_simply_connected(p, cap);
    json j{{"strongly_simply_connected", r.strongly_simply_connected}, {"searched_up_to", r.searched_up_to}};
    j["witness"] = r.witness ? io::crown_to_json(p, *r.witness) : json(nullptr);
    return j;
}

inline json qn(const Poset& p, std::size_t max_n) {
    const auto w = find_critical_qn(p, max_n);
    json j{{"found", w.has_value()}, {"max_n", max_n}};
    j["witness"] = w ? io::qn_to_json(p, *w) : json(nullptr);
    return j;
}

inline json probe(const Poset& p, const Options& o) {
    ProbeOptions po;
    po.max_len = o.max_len;
    po.max_mult = o.max_mult;
    po.seed = o.seed;
    po.sample_budget = o.budget;
    po.node_limit = o.node_limit;
    const ProbeReport r = sgldim_probe(p, po);
    json lengths = json::array();
    for (const auto& s : r.by_length) {
        json e{{"length", s.length},
               {"found", s.witness.has_value()},
               {"exhausted", s.exhausted},
               {"nodes", s.nodes},
               {"complexes_checked", s.complexes_checked}};
        if (s.witness) {
            e["source"] = to_string(s.witness->source);
            e["endomorphism_dimension"] = s.witness->endomorphism_dim;
            e["witness"] = io::complex_to_json(p, s.witness->complex);
        }
        lengths.push_back(e);
    }
    json j{{"lengths", lengths},
           {"random_draws", r.random_draws},
           {"random_valid", r.random_valid},
           {"node_limit_hit", r.node_limit_hit},
           {"searched_space", r.searched_space},
           {"note", r.note}};
    j["lower_bound"] = r.max_witness_length ? json(*r.max_witness_length) : json(nullptr);
    return j;
}

inline json extend(const Poset& p) {
    const ExtensionResult r = one_point_extension_by_canonical_sincere(p);
    json added = json::array();
    for (const auto& [a, b] : r.added_covers) added.push_back({a, b});
    return {{"new_element", r.new_element},
            {"added_covers", added},
            {"extended", io::poset_to_json(r.extended_poset)},
            {"extended_opposite", io::poset_to_json(opposite(r.extended_poset))},
            {"dimension", {{"original", r.original_dimension},
                           {"module", r.module_dimension},
                           {"extended", r.extended_dimension},
                           {"identity_holds", r.extended_dimension == r.original_dimension + r.module_dimension + 1}}}};
}

inline json weights(const std::string& text) {
    const WeightType w = WeightType::parse(text);
    return {{"weights", w.weights()},
            {"euler_characteristic", euler_characteristic(w).get_str()},
            {"type", to_string(sheaf_type(w))},
            {"ladkani_admissible", ladkani_admissible(w)}};
}

} // namespace payload

/// Indented key: value rendering of a report.
inline void render_text(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& e : v)
            if (e.is_structured()) return false;
        return true;
    };
    auto inline_array = [&](const json& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
        return s + "]";
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (!v.is_structured()) {
                os << pad << k << ": " << scalar(v) << '\n';
            } else if (flat(v)) {
                os << pad << k << ": " << inline_array(v) << '\n';
            } else if (v.empty()) {
                os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << '\n';
            } else {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_structured()) os << pad << "- " << scalar(v) << '\n';
            else if (flat(v)) os << pad << "- " << inline_array(v) << '\n';
            else {
                os << pad << "-\n";
                render_text(v, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}

namespace detail {

inline void add_common(CLI::App* sub, Options& o, bool needs_input = true) {
    auto* in = sub->add_option("-i,--input", o.input, "poset file (JSON); relative paths also tried under $POSETALG_CORPUS");
    if (needs_input) in->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", o.out, "write the report to this file instead of stdout");
    sub->add_flag("--timings", o.timings, "include wall-clock timings in the report");
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Incidence algebras of finite posets: homological and topological invariants", "posetalg"};
    app.require_subcommand(1, 1);

    auto* validate = app.add_subcommand("validate", "parse and validate a poset");
    auto* hasse = app.add_subcommand("hasse", "Hasse quiver (use --format dot for Graphviz)");
    auto* cartan = app.add_subcommand("cartan", "algebra dimension, Cartan, Moebius and Coxeter data");
    auto* gldim = app.add_subcommand("gldim", "global dimension with pd/id of simples");
    auto* resolutions = app.add_subcommand("resolutions", "minimal projective resolutions of simples or of --module");
    auto* sincere = app.add_subcommand("sincere-check", "End and self-Ext of the canonical sincere module");
    auto* hh1 = app.add_subcommand("hh1", "first Hochschild cohomology via H1 of the order complex");
    auto* crown = app.add_subcommand("crown", "search for a crown");
    auto* ssc = app.add_subcommand("ssc", "strong simple connectedness (no crown)");
    auto* qn = app.add_subcommand("qn", "search for a critical Q_n subposet");
    auto* probe = app.add_subcommand("sgldim-probe", "bounded search for long indecomposable radical complexes");
    auto* extend = app.add_subcommand("extend", "one-point extension by the canonical sincere module");
    auto* weights = app.add_subcommand("weights", "Euler characteristic and type of a weight sequence");
    auto* report_all = app.add_subcommand("report-all", "every poset report in one document");

    for (auto* s : {validate, hasse, cartan, gldim, resolutions, sincere, hh1, crown, ssc, qn, probe, extend, report_all})
        detail::add_common(s, o);
    detail::add_common(weights, o, false);
    resolutions->add_option("--module", o.module, "module file (JSON) to resolve instead of the simples");
    for (auto* s : {hh1, report_all}) s->add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
    for (auto* s : {crown, ssc, qn, report_all}) s->add_option("--max-n", o.max_n, "largest crown size searched")->check(CLI::Range(2, 64));
    for (auto* s : {probe, report_all}) {
        s->add_option("--max-len", o.max_len, "largest complex length searched");
        s->add_option("--max-mult", o.max_mult, "summands per degree")->check(CLI::Range(1, 16));
        s->add_option("--seed", o.seed, "seed for random draws");
        s->add_option("--budget", o.budget, "number of random draws");
        s->add_option("--node-limit", o.node_limit, "stop enumerating after this many search nodes (0 = no limit)");
    }
    extend->add_option("--poset-out", o.poset_out, "also write the extended poset file here");
    for (auto* s : {weights, report_all})
        s->add_option("--type", o.weight_type, "comma-separated weights, e.g. 2,3,7");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    CLI::App* sub = app.get_subcommands().front();
    o.command = sub->get_name();
    const auto* type_opt = sub->get_option_no_throw("--type");
    o.weight_type_given = type_opt && type_opt->count() > 0;
    if (o.format == "dot" && o.command != "hasse") {
        err << "error: --format dot is only available for hasse\n";
        return 1;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        json report{{"schema", schema_version}};
        json command{{"name", o.command}};
        json flags = json::object();
        for (const auto* opt : sub->get_options()) {
            if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--out") continue;
            const auto& r = opt->results();
            flags[opt->get_name()] = r.empty() ? std::string("true") : r.back();
        }
        command["flags"] = flags;
        report["command"] = command;

        std::optional<io::PosetFile> pf;
        if (!o.input.empty()) {
            const std::string bytes = io::read_file(resolve_input(o.input));
            report["input_digest"] = "sha256:" + sha256_hex(bytes);
            pf = io::parse_poset(bytes);
            if (!pf->name.empty()) report["poset"] = pf->name;
        }
        if (o.command == "weights" && !o.weight_type_given) throw ValidationError("weights needs --type");
        if (o.command == "weights" && pf) throw ValidationError("weights does not take an input poset");

        json results = json::object();
        const Poset* p = pf ? &pf->poset : nullptr;
        auto want = [&](const char* name) { return o.command == name || o.command == "report-all"; };

        if (o.command == "hasse" && o.format == "dot") {
            const std::string dot = to_dot(*p, pf->name.empty() ? "hasse" : pf->name);
            if (o.out.empty()) out << dot;
            else std::ofstream(o.out, std::ios::binary) << dot;
            return 0;
        }
        if (want("validate")) results["validate"] = payload::validate(*p);
        if (want("hasse")) results["hasse"] = payload::hasse(*p);
        if (want("cartan")) results["cartan"] = payload::cartan(*p);
        if (want("gldim")) results["gldim"] = payload::gldim(*p);
        if (want("resolutions")) {
            if (!o.module.empty()) {
                const auto text = io::read_file(resolve_input(o.module));
                json mj;
                try {
                    mj = json::parse(text);
                } catch (const json::parse_error& e) {
                    throw ValidationError(std::string("malformed module document: ") + e.what());
                }
                results["resolutions"] = payload::module_resolution(*p, io::module_from_json(*p, mj));
            } else {
                results["resolutions"] = payload::resolutions(*p);
            }
        }
        if (want("sincere-check")) results["sincere-check"] = payload::sincere(*p);
        if (want("hh1")) results["hh1"] = payload::hh1(*p, o.characteristic);
        if (want("crown")) results["crown"] = payload::crown(*p, o.max_n);
        if (want("ssc")) results["ssc"] = payload::ssc(*p, o.max_n);
        if (want("qn")) results["qn"] = payload::qn(*p, o.max_n);
        if (want("sgldim-probe")) results["sgldim-probe"] = payload::probe(*p, o);
        if (want("extend")) {
            results["extend"] = payload::extend(*p);
            if (!o.poset_out.empty()) {
                std::ofstream f(o.poset_out, std::ios::binary);
                if (!f) throw ValidationError("cannot write '" + o.poset_out + "'");
                f << results["extend"]["extended"].dump(2) << '\n';
            }
        }
        if (o.command == "weights" || (o.command == "report-all" && o.weight_type_given))
            results["weights"] = payload::weights(o.weight_type);
        report["results"] = results;
        if (o.timings) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            report["timings"] = {{"total_ms", ms.count()}};
        }

        std::ostringstream rendered;
        if (o.format == "json") rendered << report.dump(2) << '\n';
        else render_text(report, rendered);
        if (o.out.empty()) {
            out << rendered.str();
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) throw ValidationError("cannot write '" + o.out + "'");
            f << rendered.str();
        }
        return 0;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        for (const auto& [a, b] : e.offending()) err << "  offending pair: (" << a << ", " << b << ")\n";
        return 1;
    } catch (const json::exception& e) {
        err << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace posetalg::cli
