#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kgk/errors.hpp"
#include "kgk/family.hpp"
#include "kgk/integer.hpp"

namespace kgk {

/// One edge of a coloured multigraph. The optional label is a tuple of
/// residues, the value of a group-valued labelling on this edge.
struct skeleton_edge {
    std::string id;
    std::size_t color = 1;  // 1..k
    std::string range;
    std::string source;
    std::optional<std::vector<bigint>> label;
};

/// The 1-skeleton of a k-graph: vertices plus coloured edges, directed
/// range <- source.
struct skeleton_graph {
    std::size_t k = 0;
    std::vector<std::string> vertices;
    std::vector<skeleton_edge> edges;
};

/// Structural check of the skeleton data itself (distinct ids, known
/// endpoints, colours in range). Throws parse_error; these are document
/// problems, not family validation failures.
inline void check_skeleton(const skeleton_graph& g) {
    if (g.k == 0) throw parse_error("skeleton: rank k must be at least 1");
    if (g.vertices.empty()) throw parse_error("skeleton: vertex set must be nonempty");
    std::unordered_set<std::string> seen_vertices;
    for (const auto& v : g.vertices)
        if (!seen_vertices.insert(v).second)
            throw parse_error("skeleton: duplicate vertex name '" + v + "'");
    std::unordered_set<std::string> seen_ids;
    for (const auto& e : g.edges) {
        if (!seen_ids.insert(e.id).second)
            throw parse_error("skeleton: duplicate edge id '" + e.id + "'");
        if (e.color < 1 || e.color > g.k)
            throw parse_error("skeleton: edge '" + e.id + "' has colour " +
                              std::to_string(e.color) + ", valid range is 1.." +
                              std::to_string(g.k));
        if (!seen_vertices.count(e.range))
            throw parse_error("skeleton: edge '" + e.id + "' names unknown range vertex '" +
                              e.range + "'");
        if (!seen_vertices.count(e.source))
            throw parse_error("skeleton: edge '" + e.id + "' names unknown source vertex '" +
                              e.source + "'");
    }
}

/// Counts colour-i edges by (range, source) into vertex matrices, then runs
/// the family validator; failures propagate as invalid_family_error.
inline vertex_matrix_family matrices_from_skeleton(const skeleton_graph& g) {
    check_skeleton(g);
    vertex_matrix_family f;
    f.k = g.k;
    f.vertices = g.vertices;
    const std::size_t n = g.vertices.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[g.vertices[i]] = i;
    f.matrices.assign(g.k, imat(n, n));
    for (const auto& e : g.edges)
        f.matrices[e.color - 1](index[e.range], index[e.source]) += 1;
    ensure_valid(f);
    return f;
}

}  // namespace kgk
