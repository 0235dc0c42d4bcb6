#pragma once

// Test-side helpers: independent oracles and random generators. Everything
// here must stay independent of the implementation paths it is used to check
// (the minor-gcd oracle in particular never calls the Smith routine).

#include <random>
#include <vector>

#include "kgk/family.hpp"
#include "kgk/integer.hpp"
#include "kgk/matrix.hpp"

namespace testkit {

using kgk::bigint;
using kgk::imat;

using rng_t = std::mt19937_64;

inline int rand_int(rng_t& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// determinant by cofactor expansion; independent of the Bareiss routine
inline bigint minor_det(const imat& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return a(rows[0], cols[0]);
    bigint det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (a(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        bigint term = a(rows[0], cols[j]) * minor_det(a, sub_rows, sub_cols);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// gcd of all j x j minors of a (zero when all minors vanish)
inline bigint minor_gcd(const imat& a, std::size_t j) {
    bigint g = 0;
    auto gen_subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        if (k > n) return out;
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = i;
        for (;;) {
            out.push_back(cur);
            std::size_t i = k;
            bool done = true;
            while (i > 0) {
                --i;
                if (cur[i] < n - (k - i)) {
                    ++cur[i];
                    for (std::size_t t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        return out;
    };
    const auto row_sets = gen_subsets(a.rows(), j);
    const auto col_sets = gen_subsets(a.cols(), j);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) g = kgk::gcd_val(g, minor_det(a, rs, cs));
    return g;
}

inline imat random_matrix(rng_t& rng, std::size_t rows, std::size_t cols, int lo,
                          int hi) {
    imat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_int(rng, lo, hi);
    return m;
}

inline bool has_zero_row(const imat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) nonzero = true;
        if (!nonzero) return true;
    }
    return false;
}

inline imat random_nonneg_no_zero_row(rng_t& rng, std::size_t n, int max_entry) {
    for (;;) {
        imat m = random_matrix(rng, n, n, 0, max_entry);
        if (!has_zero_row(m)) return m;
    }
}

// non-negative integer polynomial in base, so members commute pairwise
inline imat poly_in(const imat& base, const std::vector<int>& coeffs) {
    const std::size_t n = base.rows();
    imat acc(n, n), pw = imat::identity(n);
    for (int c : coeffs) {
        if (c != 0) {
            imat term = pw;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) term(i, j) *= c;
            acc = acc + term;
        }
        pw = pw * base;
    }
    return acc;
}

/// Random valid family: k commuting non-negative matrices with no zero rows,
/// built as polynomials in one random non-negative matrix.
inline kgk::vertex_matrix_family random_family(rng_t& rng, std::size_t k,
                                               std::size_t n, int max_entry = 2,
                                               int max_coeff = 2) {
    kgk::vertex_matrix_family f;
    f.k = k;
    for (std::size_t i = 0; i < n; ++i) f.vertices.push_back("v" + std::to_string(i));
    for (;;) {
        f.matrices.clear();
        imat base = random_matrix(rng, n, n, 0, max_entry);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> coeffs = {rand_int(rng, 0, max_coeff),
                                       rand_int(rng, 0, max_coeff),
                                       rand_int(rng, 0, max_coeff)};
            f.matrices.push_back(poly_in(base, coeffs));
        }
        bool ok = true;
        for (const auto& m : f.matrices)
            if (has_zero_row(m)) ok = false;
        if (ok) return f;
    }
}

inline kgk::vertex_matrix_family make_family(std::size_t k,
                                             std::vector<imat> matrices) {
    kgk::vertex_matrix_family f;
    f.k = k;
    const std::size_t n = matrices.empty() ? 0 : matrices[0].rows();
    for (std::size_t i = 0; i < n; ++i) f.vertices.push_back("v" + std::to_string(i));
    f.matrices = std::move(matrices);
    return f;
}

// frozen differentials of the two bundled 3-graph examples; complex
// construction is checked against these literal block matrices
inline imat ex4_d1() {
    return imat{{-1, -1, -1, -1, 1, -3}, {-1, -1, -1, -1, -3, 1}};
}
inline imat ex4_d2() {
    return imat{{1, 1, -1, 3, 0, 0},   {1, 1, 3, -1, 0, 0},  {-1, -1, 0, 0, -1, 3},
                {-1, -1, 0, 0, 3, -1}, {0, 0, -1, -1, -1, -1}, {0, 0, -1, -1, -1, -1}};
}
inline imat ex4_d3() {
    return imat{{1, -3}, {-3, 1}, {1, 1}, {1, 1}, {-1, -1}, {-1, -1}};
}
inline imat ex5_d1() {
    return imat{{0, -1, 0, -2, 1, -3}, {-1, 0, -2, 0, -3, 1}};
}
inline imat ex5_d2() {
    return imat{{0, 2, -1, 3, 0, 0},  {2, 0, 3, -1, 0, 0},  {0, -1, 0, 0, -1, 3},
                {-1, 0, 0, 0, 3, -1}, {0, 0, 0, -1, 0, -2}, {0, 0, -1, 0, -2, 0}};
}
inline imat ex5_d3() {
    return imat{{1, -3}, {-3, 1}, {0, 2}, {2, 0}, {0, -1}, {-1, 0}};
}

inline kgk::vertex_matrix_family ex4_family() {
    return make_family(3, {imat{{2, 1}, {1, 2}}, imat{{2, 1}, {1, 2}},
                           imat{{0, 3}, {3, 0}}});
}
inline kgk::vertex_matrix_family ex5_family() {
    return make_family(3, {imat{{1, 1}, {1, 1}}, imat{{1, 2}, {2, 1}},
                           imat{{0, 3}, {3, 0}}});
}

}  // namespace testkit
