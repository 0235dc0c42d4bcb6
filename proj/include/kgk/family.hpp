#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kgk/matrix.hpp"

namespace kgk {

/// k commuting non-negative square integer matrices over a named finite
/// vertex set. Entry convention: matrices[i](r, c) counts the degree-e_{i+1}
/// morphisms with range = vertex r and source = vertex c.
struct vertex_matrix_family {
    std::size_t k = 0;
    std::vector<std::string> vertices;
    std::vector<imat> matrices;

    std::size_t vertex_count() const { return vertices.size(); }
};

enum class failure_kind { shape_mismatch, negative_entry, zero_row, non_commuting };

inline const char* to_string(failure_kind k) {
    switch (k) {
        case failure_kind::shape_mismatch: return "ShapeMismatch";
        case failure_kind::negative_entry: return "NegativeEntry";
        case failure_kind::zero_row: return "ZeroRow";
        case failure_kind::non_commuting: return "NonCommuting";
    }
    return "?";
}

struct validation_failure {
    failure_kind kind;
    std::string detail;
};

struct validation_report {
    bool ok = true;
    std::vector<validation_failure> failures;

    void fail(failure_kind kind, std::string detail) {
        ok = false;
        failures.push_back({kind, std::move(detail)});
    }
};

/// Checks the necessary conditions for a family to arise from a row-finite
/// k-graph with no sources: non-negative entries, no zero rows, pairwise
/// commutation. These conditions are necessary but are not known to be
/// sufficient; see the README.
inline validation_report validate_family(const vertex_matrix_family& f) {
    validation_report rep;
    const std::size_t n = f.vertex_count();
    if (f.k == 0)
        rep.fail(failure_kind::shape_mismatch, "rank k must be at least 1");
    if (n == 0)
        rep.fail(failure_kind::shape_mismatch, "vertex set must be nonempty");
    if (f.matrices.size() != f.k)
        rep.fail(failure_kind::shape_mismatch,
                 "expected " + std::to_string(f.k) + " matrices, got " +
                     std::to_string(f.matrices.size()));
    for (std::size_t i = 0; i < f.matrices.size(); ++i) {
        const imat& m = f.matrices[i];
        if (m.rows() != n || m.cols() != n)
            rep.fail(failure_kind::shape_mismatch,
                     "M" + std::to_string(i + 1) + " is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
    }
    if (!rep.ok) return rep;  // remaining checks assume consistent shapes

    for (std::size_t i = 0; i < f.k; ++i) {
        const imat& m = f.matrices[i];
        for (std::size_t r = 0; r < n; ++r) {
            bool nonzero_row = false;
            for (std::size_t c = 0; c < n; ++c) {
                if (m(r, c) < 0)
                    rep.fail(failure_kind::negative_entry,
                             "M" + std::to_string(i + 1) + "(" + f.vertices[r] + "," +
                                 f.vertices[c] + ") = " + to_decimal(m(r, c)));
                if (m(r, c) != 0) nonzero_row = true;
            }
            if (!nonzero_row)
                rep.fail(failure_kind::zero_row,
                         "M" + std::to_string(i + 1) + " has a zero row at vertex " +
                             f.vertices[r] + " (a source)");
        }
    }
    for (std::size_t i = 0; i < f.k; ++i)
        for (std::size_t j = i + 1; j < f.k; ++j)
            if (f.matrices[i] * f.matrices[j] != f.matrices[j] * f.matrices[i])
                rep.fail(failure_kind::non_commuting,
                         "M" + std::to_string(i + 1) + " and M" + std::to_string(j + 1) +
                             " do not commute");
    return rep;
}

/// Raised when an operation requires a valid family and validation failed;
/// carries the full report.
class invalid_family_error : public std::runtime_error {
public:
    explicit invalid_family_error(validation_report rep)
        : std::runtime_error(compose(rep)), report(std::move(rep)) {}

    validation_report report;

private:
    static std::string compose(const validation_report& rep) {
        std::string msg = "family fails validation:";
        for (const auto& f : rep.failures)
            msg += std::string("\n  [") + to_string(f.kind) + "] " + f.detail;
        return msg;
    }
};

inline void ensure_valid(const vertex_matrix_family& f) {
    validation_report rep = validate_family(f);
    if (!rep.ok) throw invalid_family_error(std::move(rep));
}

}  // namespace kgk
