#pragma once

// JSON encodings of posets, modules, complexes and invariants.
//
// Poset file:  {"elements": [...], "covers": [[a, b], ...]}   (or "relations")
//              optional "name" and "notes"; any other key is rejected.
// Module file: {"dims": {"a": 1, ...},
//               "maps": [{"from": "a", "to": "b", "matrix": [["1", "-1/2"], ...]}]}
//              covers without an entry carry the zero map.

#include "posetalg/derived.hpp"
#include "posetalg/error.hpp"
#include "posetalg/linalg.hpp"
#include "posetalg/modrep.hpp"
#include "posetalg/poset.hpp"
#include "posetalg/simconn.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace posetalg::io {

using nlohmann::json;

struct PosetFile {
    Poset poset;
    std::string name;
    std::string notes;
};

inline std::vector<std::pair<std::string, std::string>> read_pairs(const json& arr, const char* key) {
    if (!arr.is_array()) throw ValidationError(std::string("'") + key + "' must be a list of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ValidationError(std::string("entries of '") + key + "' must be 2-element lists of element ids");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

inline PosetFile poset_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("poset document must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "elements" && key != "covers" && key != "relations" && key != "name" && key != "notes")
            throw ValidationError("unexpected key '" + key + "' in poset document");
    if (!j.contains("elements") || !j["elements"].is_array())
        throw ValidationError("poset document needs an 'elements' list");
    const bool has_covers = j.contains("covers"), has_relations = j.contains("relations");
    if (has_covers == has_relations) throw ValidationError("poset document needs exactly one of 'covers' or 'relations'");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw ValidationError("element ids must be strings");
        elements.push_back(e.get<std::string>());
    }
    const char* key = has_covers ? "covers" : "relations";
    PosetFile f;
    f.poset = Poset::from_relations(std::move(elements), read_pairs(j[key], key));
    if (j.contains("name")) f.name = j["name"].get<std::string>();
    if (j.contains("notes")) f.notes = j["notes"].get<std::string>();
    return f;
}

inline PosetFile parse_poset(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed poset document: ") + e.what());
    }
    return poset_from_json(j);
}

inline json poset_to_json(const Poset& p, const std::string& name = {}) {
    json j;
    if (!name.empty()) j["name"] = name;
    j["elements"] = p.ids();
    json covers = json::array();
    for (const auto& [a, b] : p.cover_ids()) covers.push_back({a, b});
    j["covers"] = covers;
    return j;
}

inline std::string rational_string(const mpq_class& q) { return q.get_str(); }

inline mpq_class parse_rational(const json& v) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (!v.is_string()) throw ValidationError("matrix entries must be integers or fraction strings");
    mpq_class q;
    const std::string s = v.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw ValidationError("'" + s + "' is not a rational number");
    q.canonicalize();
    return q;
}

inline json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(rational_string(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).get_si());
        rows.push_back(r);
    }
    return rows;
}

inline PosetRepresentation module_from_json(const Poset& p, const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_object())
        throw ValidationError("module document needs a 'dims' object");
    for (const auto& [key, value] : j.items())
        if (key != "dims" && key != "maps" && key != "name" && key != "notes")
            throw ValidationError("unexpected key '" + key + "' in module document");
    PosetRepresentation m = zero_module(p);
    for (const auto& [id, d] : j["dims"].items()) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw ValidationError("dimension of '" + id + "' must be a nonnegative integer");
        m.dims[p.index_of(id)] = d.get<std::size_t>();
    }
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [a, b] = p.covers()[k];
        m.maps[k] = RatMatrix(m.dims[b], m.dims[a]);
    }
    if (j.contains("maps")) {
        for (const auto& e : j["maps"]) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("matrix"))
                throw ValidationError("module maps need 'from', 'to' and 'matrix'");
            const std::string from = e["from"].get<std::string>(), to = e["to"].get<std::string>();
            const auto k = p.cover_index(p.index_of(from), p.index_of(to));
            if (!k) throw ValidationError("module map on a non-cover pair (" + from + ", " + to + ")", {{from, to}});
            const auto& rows = e["matrix"];
            const std::size_t r = m.dims[p.index_of(to)], c = m.dims[p.index_of(from)];
            if (!rows.is_array() || rows.size() != r)
                throw ValidationError("matrix for (" + from + ", " + to + ") must have " + std::to_string(r) + " rows",
                                      {{from, to}});
            RatMatrix mat(r, c);
            for (std::size_t i = 0; i < r; ++i) {
                if (!rows[i].is_array() || rows[i].size() != c)
                    throw ValidationError("matrix for (" + from + ", " + to + ") must have " + std::to_string(c) +
                                              " columns",
                                          {{from, to}});
                for (std::size_t q = 0; q < c; ++q) mat(i, q) = parse_rational(rows[i][q]);
            }
            m.maps[*k] = std::move(mat);
        }
    }
    if (auto bad = commutativity_violation(p, m)) {
        const std::string a = p.id(bad->first), b = p.id(bad->second);
        throw ValidationError("module violates commutativity between " + a + " and " + b, {{a, b}});
    }
    return m;
}

inline json module_to_json(const Poset& p, const PosetRepresentation& m) {
    json dims = json::object();
    for (Element x = 0; x < p.size(); ++x) dims[p.id(x)] = m.dims[x];
    json maps = json::array();
    for (std::size_t k = 0; k < p.covers().size(); ++k) {
        const auto [a, b] = p.covers()[k];
        if (m.maps[k].rows() == 0 || m.maps[k].cols() == 0) continue;
        maps.push_back({{"from", p.id(a)}, {"to", p.id(b)}, {"matrix", matrix_to_json(m.maps[k])}});
    }
    return {{"dims", dims}, {"maps", maps}};
}

inline json ids(const Poset& p, const std::vector<Element>& es) {
    json a = json::array();
    for (Element e : es) a.push_back(p.id(e));
    return a;
}

inline json complex_to_json(const Poset& p, const ProjComplex& c) {
    json terms = json::array(), diffs = json::array();
    for (const auto& t : c.terms) terms.push_back(ids(p, t));
    for (const auto& d : c.diff) diffs.push_back(matrix_to_json(d));
    return {{"lowest_degree", c.lowest_degree},
            {"length", c.terms.size() - 1},
            {"terms", terms},
            {"differentials", diffs}};
}

inline json multiplicities_to_json(const Poset& p, const std::vector<std::size_t>& mult) {
    json o = json::object();
    for (Element x = 0; x < p.size(); ++x)
        if (mult[x] != 0) o[p.id(x)] = mult[x];
    return o;
}

inline json resolution_to_json(const Poset& p, const Resolution& r) {
    json terms = json::array(), diffs = json::array();
    for (const auto& m : r.multiplicities) terms.push_back(multiplicities_to_json(p, m));
    for (const auto& l : r.labels) diffs.push_back(matrix_to_json(l));
    json summands = json::array();
    for (const auto& t : r.terms) summands.push_back(ids(p, t));
    return {{"length", r.length()}, {"terms", terms}, {"summands", summands}, {"differential_labels", diffs}};
}

inline json h1_to_json(const H1Data& h) {
    json torsion = json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.get_str());
    return {{"betti1", h.betti1},
            {"torsion", torsion},
            {"simplices", {h.simplices[0], h.simplices[1], h.simplices[2]}}};
}

inline json crown_to_json(const Poset& p, const CrownWitness& w) {
    return {{"n", w.n},
            {"xs", ids(p, w.xs)},
            {"ys", ids(p, w.ys)},
            {"kind", w.kind == CrownKind::crown ? "crown" : "weak"}};
}

inline json qn_to_json(const Poset& p, const QnWitness& w) {
    return {{"n", w.n}, {"source", p.id(w.source)}, {"xs", ids(p, w.xs)}, {"ys", ids(p, w.ys)}, {"sink", p.id(w.sink)}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace posetalg::io
