#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgk/abelian.hpp"
#include "kgk/construct.hpp"
#include "kgk/errors.hpp"
#include "kgk/family.hpp"
#include "kgk/integer.hpp"
#include "kgk/ktheory.hpp"
#include "kgk/matrix.hpp"
#include "kgk/skeleton.hpp"

namespace kgk {

using json = nlohmann::ordered_json;

inline constexpr const char* matrices_format = "kgraph-matrices-v1";
inline constexpr const char* skeleton_format = "kgraph-skeleton-v1";

namespace jsonio {

// Integers must be exact. Values that fit in 64 bits travel as JSON numbers;
// anything larger travels as a decimal string, never as a float.
inline bigint to_bigint(const json& j, const std::string& where) {
    if (j.is_number_integer()) return bigint(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return bigint(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t at = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (at == s.size()) throw parse_error(where + ": '" + s + "' is not an integer");
        for (std::size_t i = at; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw parse_error(where + ": '" + s + "' is not an integer");
        return bigint(s);
    }
    if (j.is_number_float())
        throw parse_error(where + ": must be an exact integer (floats are not permitted)");
    throw parse_error(where + ": expected an integer");
}

inline json from_bigint(const bigint& x) {
    static const bigint lo = bigint(std::numeric_limits<std::int64_t>::min());
    static const bigint hi = bigint(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return json(x.convert_to<std::int64_t>());
    return json(to_decimal(x));
}

inline const json& field(const json& j, const std::string& key, const std::string& doc) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(doc + ": missing field '" + key + "'");
    return *it;
}

inline std::size_t to_count(const json& j, const std::string& where) {
    bigint v = to_bigint(j, where);
    if (v < 0) throw parse_error(where + ": must be non-negative");
    if (v > 1000000) throw parse_error(where + ": implausibly large");
    return v.convert_to<std::size_t>();
}

}  // namespace jsonio

inline json parse_document(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error(what + ": not valid JSON");
    return j;
}

inline json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

// ---- kgraph-matrices-v1 ----

inline vertex_matrix_family family_from_json(const json& j) {
    const std::string doc = matrices_format;
    if (!j.is_object()) throw parse_error(doc + ": document must be a JSON object");
    if (jsonio::field(j, "format", doc) != matrices_format)
        throw parse_error(doc + ": format field must be \"" + matrices_format + "\"");
    vertex_matrix_family f;
    f.k = jsonio::to_count(jsonio::field(j, "k", doc), doc + ": k");
    if (f.k == 0) throw parse_error(doc + ": k must be at least 1");
    const json& verts = jsonio::field(j, "vertices", doc);
    if (!verts.is_array() || verts.empty())
        throw parse_error(doc + ": vertices must be a nonempty array");
    for (const auto& v : verts) {
        if (!v.is_string()) throw parse_error(doc + ": vertex names must be strings");
        f.vertices.push_back(v.get<std::string>());
    }
    const json& mats = jsonio::field(j, "matrices", doc);
    if (!mats.is_array() || mats.size() != f.k)
        throw parse_error(doc + ": matrices must be an array of k matrices");
    const std::size_t n = f.vertices.size();
    for (std::size_t i = 0; i < f.k; ++i) {
        const json& m = mats[i];
        if (!m.is_array() || m.size() != n)
            throw parse_error(doc + ": M" + std::to_string(i + 1) + " must have " +
                              std::to_string(n) + " rows");
        imat mat(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!m[r].is_array() || m[r].size() != n)
                throw parse_error(doc + ": M" + std::to_string(i + 1) + " row " +
                                  std::to_string(r) + " must have " + std::to_string(n) +
                                  " entries");
            for (std::size_t c = 0; c < n; ++c)
                mat(r, c) = jsonio::to_bigint(
                    m[r][c], doc + ": M" + std::to_string(i + 1) + "(" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
        }
        f.matrices.push_back(std::move(mat));
    }
    // vertex names must be distinct
    {
        auto names = f.vertices;
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw parse_error(doc + ": vertex names must be distinct");
    }
    return f;
}

inline json family_to_json(const vertex_matrix_family& f) {
    json j;
    j["format"] = matrices_format;
    j["k"] = f.k;
    j["vertices"] = f.vertices;
    json mats = json::array();
    for (const auto& m : f.matrices) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(jsonio::from_bigint(m(r, c)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    return j;
}

// ---- kgraph-skeleton-v1 ----

inline skeleton_graph skeleton_from_json(const json& j) {
    const std::string doc = skeleton_format;
    if (!j.is_object()) throw parse_error(doc + ": document must be a JSON object");
    if (jsonio::field(j, "format", doc) != skeleton_format)
        throw parse_error(doc + ": format field must be \"" + skeleton_format + "\"");
    skeleton_graph g;
    g.k = jsonio::to_count(jsonio::field(j, "k", doc), doc + ": k");
    const json& verts = jsonio::field(j, "vertices", doc);
    if (!verts.is_array() || verts.empty())
        throw parse_error(doc + ": vertices must be a nonempty array");
    for (const auto& v : verts) {
        if (!v.is_string()) throw parse_error(doc + ": vertex names must be strings");
        g.vertices.push_back(v.get<std::string>());
    }
    const json& edges = jsonio::field(j, "edges", doc);
    if (!edges.is_array()) throw parse_error(doc + ": edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_object()) throw parse_error(doc + ": each edge must be an object");
        skeleton_edge se;
        se.id = jsonio::field(e, "id", doc).get<std::string>();
        se.color = jsonio::to_count(jsonio::field(e, "color", doc),
                                    doc + ": edge '" + se.id + "' color");
        se.range = jsonio::field(e, "range", doc).get<std::string>();
        se.source = jsonio::field(e, "source", doc).get<std::string>();
        if (e.contains("label")) {
            const json& lab = e["label"];
            if (!lab.is_array())
                throw parse_error(doc + ": edge '" + se.id +
                                  "' label must be an array of residues");
            std::vector<bigint> res;
            for (const auto& x : lab)
                res.push_back(jsonio::to_bigint(x, doc + ": edge '" + se.id + "' label"));
            se.label = std::move(res);
        }
        g.edges.push_back(std::move(se));
    }
    check_skeleton(g);
    return g;
}

inline json skeleton_to_json(const skeleton_graph& g) {
    json j;
    j["format"] = skeleton_format;
    j["k"] = g.k;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je;
        je["id"] = e.id;
        je["color"] = e.color;
        je["range"] = e.range;
        je["source"] = e.source;
        if (e.label) {
            json lab = json::array();
            for (const auto& r : *e.label) lab.push_back(jsonio::from_bigint(r));
            je["label"] = std::move(lab);
        }
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

// ---- group and labelling documents ----

inline finite_abelian_group group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("orders") || !j["orders"].is_array())
        throw parse_error("group: expected an object {\"orders\": [...]}");
    std::vector<bigint> orders;
    for (const auto& x : j["orders"])
        orders.push_back(jsonio::to_bigint(x, "group: orders"));
    return finite_abelian_group(std::move(orders));
}

inline edge_labelling labelling_from_json(const json& j) {
    if (!j.is_object())
        throw parse_error("labelling: expected an object mapping edge ids to residue arrays");
    edge_labelling lab;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_array())
            throw parse_error("labelling: value for edge '" + it.key() +
                              "' must be an array of residues");
        std::vector<bigint> res;
        for (const auto& x : it.value())
            res.push_back(jsonio::to_bigint(x, "labelling: edge '" + it.key() + "'"));
        lab[it.key()] = std::move(res);
    }
    return lab;
}

// ---- matrices for the snf command ----

inline imat matrix_from_json(const json& j) {
    const json* rows = &j;
    if (j.is_object() && j.contains("matrix")) rows = &j["matrix"];
    if (!rows->is_array())
        throw parse_error("matrix: expected a 2D array (or {\"matrix\": [[...]]})");
    const std::size_t m = rows->size();
    std::size_t n = 0;
    if (m > 0) {
        if (!(*rows)[0].is_array()) throw parse_error("matrix: rows must be arrays");
        n = (*rows)[0].size();
    }
    imat a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const json& row = (*rows)[i];
        if (!row.is_array() || row.size() != n)
            throw parse_error("matrix: ragged rows");
        for (std::size_t c = 0; c < n; ++c)
            a(i, c) = jsonio::to_bigint(row[c], "matrix entry");
    }
    return a;
}

inline json matrix_to_json(const imat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(jsonio::from_bigint(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- report serialization ----

inline json presentation_to_json(const group_presentation& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json tor = json::array();
    for (const auto& d : g.torsion) tor.push_back(jsonio::from_bigint(d));
    j["torsion"] = std::move(tor);
    return j;
}

inline json report_to_json(const kgroup_report& rep) {
    json j;
    j["k"] = rep.k;
    j["status"] = {{"k0", to_string(rep.k0_status)}, {"k1", to_string(rep.k1_status)}};
    if (rep.k0) j["k0"] = presentation_to_json(*rep.k0);
    if (rep.k1) j["k1"] = presentation_to_json(*rep.k1);
    if (rep.k0_constraint) {
        json c;
        c["sub"] = presentation_to_json(rep.k0_constraint->sub);
        c["quot"] = presentation_to_json(rep.k0_constraint->quot);
        if (rep.k0_constraint->order)
            c["order"] = jsonio::from_bigint(*rep.k0_constraint->order);
        j["k0_constraint"] = std::move(c);
    }
    json e2 = json::array();
    for (const auto& h : rep.e2.homology) e2.push_back(presentation_to_json(h));
    j["e2"] = std::move(e2);
    j["notes"] = rep.notes;
    return j;
}

inline json e2_to_json(std::size_t k, const e2_page& page) {
    json j;
    j["k"] = k;
    json e2 = json::array();
    for (const auto& h : page.homology) e2.push_back(presentation_to_json(h));
    j["e2"] = std::move(e2);
    return j;
}

inline json validation_to_json(const validation_report& rep) {
    json j;
    j["ok"] = rep.ok;
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"kind", to_string(f.kind)}, {"detail", f.detail}});
    j["failures"] = std::move(fails);
    return j;
}

inline json unit_class_to_json(const unit_class_position& u,
                               const group_presentation& k0) {
    json j;
    j["k0"] = presentation_to_json(k0);
    json fr = json::array();
    for (const auto& x : u.free_coords) fr.push_back(jsonio::from_bigint(x));
    j["free"] = std::move(fr);
    json tr = json::array();
    for (const auto& x : u.torsion_residues) tr.push_back(jsonio::from_bigint(x));
    j["torsion_residues"] = std::move(tr);
    return j;
}

inline json smith_to_json(const smith_decomposition<bigint>& d) {
    json j;
    j["rows"] = d.s.rows();
    j["cols"] = d.s.cols();
    json fac = json::array();
    for (const auto& f : d.invariant_factors) fac.push_back(jsonio::from_bigint(f));
    j["invariant_factors"] = std::move(fac);
    j["s"] = matrix_to_json(d.s);
    j["u"] = matrix_to_json(d.u);
    j["v"] = matrix_to_json(d.v);
    return j;
}

inline json crosscheck_to_json(const crosscheck_result& c) {
    json j;
    j["k"] = 2;
    j["r0_expected"] = c.r0_expected;
    json t0 = json::array(), t1 = json::array();
    for (const auto& d : c.tor_k0_expected) t0.push_back(jsonio::from_bigint(d));
    for (const auto& d : c.tor_k1_expected) t1.push_back(jsonio::from_bigint(d));
    j["tor_k0_expected"] = std::move(t0);
    j["tor_k1_expected"] = std::move(t1);
    j["agrees"] = c.agrees;
    return j;
}

inline json k3_check_to_json(const k3_rank_check& c) {
    json j;
    j["k"] = 3;
    j["applicable"] = c.applicable;
    if (c.m) j["m"] = *c.m;
    if (c.applicable) j["agrees"] = c.agrees;
    return j;
}

inline json comparison_to_json(const comparison_report& rep) {
    json j;
    j["k"] = rep.k;
    j["same_vertex_matrices"] = rep.same_matrices;
    j["kgroups_agree"] = rep.kgroups_agree;
    if (rep.unit_class_agrees) j["unit_class_agrees"] = *rep.unit_class_agrees;
    j["flags"] = {{"simple", rep.simple}, {"purely_infinite", rep.purely_infinite}};
    j["conclusion"] = rep.conclusion;
    return j;
}

/// Canonical rendering used for all emitted documents: two-space indent and a
/// trailing newline, with insertion-ordered keys, so that parsing the output
/// and re-serializing it is byte-identical.
inline std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kgk
