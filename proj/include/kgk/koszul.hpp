#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kgk/family.hpp"
#include "kgk/matrix.hpp"

namespace kgk {

/// Strictly increasing tuple of colours from {1..k}; the empty tuple is the
/// single basis element in degree 0.
using index_tuple = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

/// All strictly increasing p-tuples from {1..k} in lexicographic order.
inline std::vector<index_tuple> increasing_tuples(std::size_t k, std::size_t p) {
    std::vector<index_tuple> out;
    if (p > k) return out;
    index_tuple cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        if (p == 0) break;
        std::size_t i = p;
        while (i > 0) {
            --i;
            if (cur[i] < k - (p - 1 - i)) {
                ++cur[i];
                for (std::size_t j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

/// The complex 0 <- D_0 <- D_1 <- ... <- D_k <- 0 with D_p a direct sum of
/// one copy of Z^n per increasing p-tuple, and block differentials built from
/// the signed blocks +-(1 - M_i^t).
struct chain_complex {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<std::size_t> ranks;                    // p = 0..k
    std::vector<imat> differentials;                   // entry p-1 is d_p, p = 1..k
    std::vector<std::vector<index_tuple>> basis_order;  // per degree p

    /// d_p for p = 0..k+1; the ends are empty matrices so that kernels and
    /// images at the boundary degrees need no special cases.
    imat boundary(std::size_t p) const {
        if (p == 0) return imat(0, ranks[0]);
        if (p == k + 1) return imat(ranks[k], 0);
        return differentials[p - 1];
    }
};

/// Builds the complex for a validated family. The block of d_p from column
/// summand mu to row summand lambda is (-1)^{i+1} (1 - M_{mu_i}^t) when
/// lambda is mu with its i-th entry deleted, and zero otherwise.
inline chain_complex build_complex(const vertex_matrix_family& f) {
    ensure_valid(f);
    const std::size_t k = f.k, n = f.vertex_count();
    chain_complex cx;
    cx.k = k;
    cx.n = n;
    const imat id = imat::identity(n);
    std::vector<imat> one_minus_t(k);
    for (std::size_t i = 0; i < k; ++i) one_minus_t[i] = id - f.matrices[i].transpose();

    for (std::size_t p = 0; p <= k; ++p) {
        cx.basis_order.push_back(increasing_tuples(k, p));
        cx.ranks.push_back(cx.basis_order[p].size() * n);
    }
    for (std::size_t p = 1; p <= k; ++p) {
        const auto& cols = cx.basis_order[p];
        const auto& rows = cx.basis_order[p - 1];
        std::map<index_tuple, std::size_t> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
        imat d(rows.size() * n, cols.size() * n);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const index_tuple& mu = cols[c];
            for (std::size_t i = 0; i < p; ++i) {
                index_tuple lambda = mu;
                lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
                const std::size_t r = row_index.at(lambda);
                const imat& blk = one_minus_t[mu[i] - 1];
                d.set_block(r * n, c * n, (i % 2 == 0) ? blk : -blk);
            }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

/// True iff d_p . d_{p+1} = 0 for every p, in exact arithmetic.
inline bool verify_complex(const chain_complex& cx) {
    for (std::size_t p = 1; p < cx.k; ++p)
        if (!(cx.differentials[p - 1] * cx.differentials[p]).is_zero()) return false;
    return true;
}

}  // namespace kgk
