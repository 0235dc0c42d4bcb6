#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgk/errors.hpp"
#include "kgk/integer.hpp"
#include "kgk/skeleton.hpp"

namespace kgk {

/// Z_{m1} x ... x Z_{mr}; elements are residue tuples added componentwise.
/// Only finite groups are representable: every order must be >= 1.
struct finite_abelian_group {
    std::vector<bigint> orders;

    explicit finite_abelian_group(std::vector<bigint> ords = {}) : orders(std::move(ords)) {
        for (const auto& m : orders)
            if (m < 1)
                throw parse_error(
                    "group: order entries must be >= 1; skew products by infinite groups "
                    "(such as Z) are outside the scope of this tool, which requires a "
                    "finite vertex set");
    }

    std::size_t arity() const { return orders.size(); }

    bigint order() const {
        bigint n(1);
        for (const auto& m : orders) n *= m;
        return n;
    }

    bool element_valid(const std::vector<bigint>& e) const {
        if (e.size() != orders.size()) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] >= orders[i]) return false;
        return true;
    }

    std::vector<bigint> zero() const { return std::vector<bigint>(orders.size(), 0); }

    std::vector<bigint> add(const std::vector<bigint>& a,
                            const std::vector<bigint>& b) const {
        std::vector<bigint> r(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
        return r;
    }

    /// All elements in lexicographic order (first coordinate most
    /// significant); the trivial group yields the single empty tuple.
    std::vector<std::vector<bigint>> elements() const {
        std::vector<std::vector<bigint>> out;
        std::vector<bigint> cur = zero();
        for (;;) {
            out.push_back(cur);
            std::size_t i = orders.size();
            while (i > 0) {
                --i;
                if (++cur[i] < orders[i]) break;
                cur[i] = 0;
                if (i == 0) return out;
            }
            if (orders.empty()) return out;
        }
    }

    static std::string element_name(const std::vector<bigint>& e) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += to_decimal(e[i]);
        }
        return s;
    }
};

/// Edge id -> group element; the value of the labelling functor on the edge.
using edge_labelling = std::unordered_map<std::string, std::vector<bigint>>;

/// Product of rank-1 skeletons: vertices are tuples, a colour-i edge pairs a
/// factor-i edge with a fixed vertex in every other factor. Vertex tuples are
/// ordered lexicographically with the first factor most significant.
inline skeleton_graph product(const std::vector<skeleton_graph>& factors) {
    if (factors.empty()) throw unsupported_error("product: needs at least one factor");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        check_skeleton(factors[i]);
        if (factors[i].k != 1)
            throw unsupported_error("product: factor " + std::to_string(i + 1) +
                                    " has rank " + std::to_string(factors[i].k) +
                                    ", only rank-1 factors are supported");
    }
    const std::size_t k = factors.size();
    skeleton_graph out;
    out.k = k;

    // enumerate vertex tuples as mixed-radix counters
    std::vector<std::size_t> radix(k), tup(k, 0);
    for (std::size_t i = 0; i < k; ++i) radix[i] = factors[i].vertices.size();
    auto tuple_name = [&](const std::vector<std::size_t>& t) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i) {
            if (i) s += "|";
            s += factors[i].vertices[t[i]];
        }
        return s;
    };
    for (;;) {
        out.vertices.push_back(tuple_name(tup));
        std::size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (++tup[i] < radix[i]) {
                done = false;
                break;
            }
            tup[i] = 0;
        }
        if (done) break;
    }

    // colour-i edges: one per (factor-i edge, vertex tuple of the others)
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& e : factors[i].edges) {
            std::vector<std::size_t> other(k, 0);
            for (;;) {
                std::string others;
                std::vector<std::size_t> rng = other, src = other;
                for (std::size_t j = 0, first = 1; j < k; ++j) {
                    if (j == i) continue;
                    if (!first) others += ",";
                    first = 0;
                    others += factors[j].vertices[other[j]];
                }
                // substitute the factor-i endpoints into slot i
                auto find_vertex = [&](const std::string& name) {
                    for (std::size_t p = 0; p < factors[i].vertices.size(); ++p)
                        if (factors[i].vertices[p] == name) return p;
                    return std::size_t(0);  // unreachable, check_skeleton passed
                };
                rng[i] = find_vertex(e.range);
                src[i] = find_vertex(e.source);
                skeleton_edge pe;
                pe.id = "c" + std::to_string(i + 1) + ":" + e.id + "@" + others;
                pe.color = i + 1;
                pe.range = tuple_name(rng);
                pe.source = tuple_name(src);
                out.edges.push_back(std::move(pe));

                std::size_t j = k;
                bool done = true;
                while (j > 0) {
                    --j;
                    if (j == i) continue;
                    if (++other[j] < radix[j]) {
                        done = false;
                        break;
                    }
                    other[j] = 0;
                }
                if (done) break;
            }
        }
    }
    return out;
}

/// Skew product by a finite abelian group: vertices (g, v), and each edge e
/// lifts to |G| edges with range (g, r(e)) and source (g + c(e), s(e)).
inline skeleton_graph skew_product(const skeleton_graph& g,
                                   const finite_abelian_group& group,
                                   const edge_labelling& labelling) {
    check_skeleton(g);
    for (const auto& e : g.edges) {
        auto it = labelling.find(e.id);
        if (it == labelling.end())
            throw label_error("skew product: edge '" + e.id + "' has no label");
        if (!group.element_valid(it->second))
            throw label_error("skew product: label of edge '" + e.id +
                              "' is not an element of the given group");
    }
    auto elems = group.elements();
    auto vertex_name = [&](const std::vector<bigint>& h, const std::string& v) {
        return finite_abelian_group::element_name(h) + "|" + v;
    };
    skeleton_graph out;
    out.k = g.k;
    for (const auto& h : elems)
        for (const auto& v : g.vertices) out.vertices.push_back(vertex_name(h, v));
    for (const auto& h : elems)
        for (const auto& e : g.edges) {
            skeleton_edge se;
            se.id = finite_abelian_group::element_name(h) + "|" + e.id;
            se.color = e.color;
            se.range = vertex_name(h, e.range);
            se.source = vertex_name(group.add(h, labelling.at(e.id)), e.source);
            out.edges.push_back(std::move(se));
        }
    return out;
}

/// Pulls inline labels off a skeleton into a labelling map.
inline edge_labelling inline_labelling(const skeleton_graph& g) {
    edge_labelling lab;
    for (const auto& e : g.edges) {
        if (!e.label)
            throw label_error("skeleton edge '" + e.id +
                              "' carries no inline label and no labelling file was given");
        lab[e.id] = *e.label;
    }
    return lab;
}

}  // namespace kgk
