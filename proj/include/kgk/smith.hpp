#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kgk/abelian.hpp"
#include "kgk/errors.hpp"
#include "kgk/integer.hpp"
#include "kgk/matrix.hpp"

namespace kgk {

/// u * a * v = s for the input a, with u, v unimodular and s diagonal with
/// d_1 | d_2 | ... | d_r followed by zeros. invariant_factors = (d_1..d_r).
template <typename T>
struct smith_decomposition {
    basic_matrix<T> s;
    basic_matrix<T> u;
    basic_matrix<T> v;
    std::vector<T> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
};

namespace detail {

// Also tracks v^{-1}, needed to change a vector into the coordinates of the
// column basis that v describes (quotient_presentation uses this).
template <typename T>
struct smith_state {
    basic_matrix<T> s, u, v, v_inv;

    explicit smith_state(const basic_matrix<T>& a)
        : s(a),
          u(basic_matrix<T>::identity(a.rows())),
          v(basic_matrix<T>::identity(a.cols())),
          v_inv(basic_matrix<T>::identity(a.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
    }

    // row dst += coef * row src
    void add_row(std::size_t dst, std::size_t src, const T& coef) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(dst, c) += coef * s(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += coef * u(src, c);
    }

    // col dst += coef * col src, with the matching inverse row operation
    void add_col(std::size_t dst, std::size_t src, const T& coef) {
        for (std::size_t r = 0; r < s.rows(); ++r) s(r, dst) += coef * s(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += coef * v(r, src);
        for (std::size_t c = 0; c < v_inv.cols(); ++c)
            v_inv(src, c) -= coef * v_inv(dst, c);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

// Pivot rule: nonzero entry of minimal absolute value in s[t.., t..], ties
// broken by lowest (row, col). Keeps entries small and the output
// deterministic.
template <typename T>
bool find_pivot(const basic_matrix<T>& s, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
    bool found = false;
    T best{};
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            T a = abs_val(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

template <typename T>
smith_state<T> smith_reduce(const basic_matrix<T>& a) {
    smith_state<T> st(a);
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(st.s, t, pi, pj)) break;
        for (;;) {
            if (pi != t) st.swap_rows(t, pi);
            if (pj != t) st.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (st.s(i, t) == 0) continue;
                T q = floor_div(st.s(i, t), st.s(t, t));
                st.add_row(i, t, -q);
                if (st.s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (st.s(t, j) == 0) continue;
                T q = floor_div(st.s(t, j), st.s(t, t));
                st.add_col(j, t, -q);
                if (st.s(t, j) != 0) clean = false;
            }
            if (clean) {
                // pivot must divide everything below-right of it
                bool divides = true;
                for (std::size_t i = t + 1; i < m && divides; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (st.s(i, j) % st.s(t, t) != 0) {
                            st.add_row(t, i, T(1));
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            if (!find_pivot(st.s, t, pi, pj)) break;
        }
        if (st.s(t, t) < 0) st.negate_row(t);
    }
    return st;
}

}  // namespace detail

template <typename T>
smith_decomposition<T> smith_normal_form(const basic_matrix<T>& a) {
    auto st = detail::smith_reduce(a);
    smith_decomposition<T> d;
    d.s = std::move(st.s);
    d.u = std::move(st.u);
    d.v = std::move(st.v);
    const std::size_t steps = a.rows() < a.cols() ? a.rows() : a.cols();
    for (std::size_t t = 0; t < steps && d.s(t, t) != 0; ++t)
        d.invariant_factors.push_back(d.s(t, t));
    return d;
}

template <typename T>
std::size_t lattice_rank(const basic_matrix<T>& a) {
    return smith_normal_form(a).rank();
}

/// Basis of { x : a*x = 0 } as columns; the kernel of an integer matrix is a
/// saturated sublattice, so these columns extend to a basis of Z^cols.
template <typename T>
basic_matrix<T> kernel_basis(const basic_matrix<T>& a) {
    auto d = smith_normal_form(a);
    const std::size_t n = a.cols(), r = d.rank();
    return d.v.block(0, r, n, n - r);
}

/// Presentation of Z^rows / (column span of a).
template <typename T>
group_presentation cokernel_invariants(const basic_matrix<T>& a) {
    auto d = smith_normal_form(a);
    group_presentation g;
    g.free_rank = a.rows() - d.rank();
    for (const auto& f : d.invariant_factors)
        if (f > 1) g.torsion.push_back(bigint(f));
    return g;
}

/// Presentation of ker(ambient_kernel_of) / (column span of sub_gens).
/// Every column of sub_gens must be annihilated by ambient_kernel_of.
template <typename T>
group_presentation quotient_presentation(const basic_matrix<T>& sub_gens,
                                         const basic_matrix<T>& ambient_kernel_of) {
    const std::size_t n = ambient_kernel_of.cols();
    if (sub_gens.rows() != n)
        throw subgroup_error("quotient_presentation: generator length " +
                             std::to_string(sub_gens.rows()) +
                             " does not match ambient domain rank " + std::to_string(n));
    if (!(ambient_kernel_of * sub_gens).is_zero())
        throw subgroup_error(
            "quotient_presentation: a generator column is not in the kernel of the "
            "ambient map");
    auto st = detail::smith_reduce(ambient_kernel_of);
    std::size_t r = 0;
    {
        const std::size_t steps =
            ambient_kernel_of.rows() < n ? ambient_kernel_of.rows() : n;
        while (r < steps && st.s(r, r) != 0) ++r;
    }
    // kernel basis = last n-r columns of v; coordinates of the generators in
    // that basis are the last n-r rows of v^{-1} * sub_gens
    basic_matrix<T> coords = st.v_inv * sub_gens;
    return cokernel_invariants(coords.block(r, 0, n - r, sub_gens.cols()));
}

/// Canonical presentation of a (+) b. Torsion chains are merged exactly by
/// taking the Smith form of the diagonal matrix of all factors.
inline group_presentation direct_sum(const group_presentation& a,
                                     const group_presentation& b) {
    group_presentation g;
    g.free_rank = a.free_rank + b.free_rank;
    if (a.torsion.empty()) {
        g.torsion = b.torsion;
    } else if (b.torsion.empty()) {
        g.torsion = a.torsion;
    } else {
        std::vector<bigint> all = a.torsion;
        all.insert(all.end(), b.torsion.begin(), b.torsion.end());
        imat diag(all.size(), all.size());
        for (std::size_t i = 0; i < all.size(); ++i) diag(i, i) = all[i];
        g.torsion = cokernel_invariants(diag).torsion;
    }
    return g;
}

}  // namespace kgk
