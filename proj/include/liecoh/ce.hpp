#pragma once

#include <map>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "exterior.hpp"
#include "lie_algebra.hpp"

namespace liecoh {

/// Matrix of d: Λ^k g* -> Λ^{k+1} g* in lexicographic bases. Normative
/// assembly: D[T][S] accumulates, over index pairs t_p < t_q inside the
/// (k+1)-subset T and targets m with (T minus {t_p,t_q}) + {m} = S, the value
/// (-1)^(p+q) * (insertion sign of m) * c[t_p][t_q][m]. Equivalent to the
/// alternating-sum formula for (dη)(ξ_0,...,ξ_k) evaluated on basis tuples;
/// the su(2) module tests pin the resulting signs.
inline Matrix ce_differential(const LieAlgebra& L, size_t k) {
    const size_t n = L.dim();
    if (k > n) throw InputError("degree out of range");
    ExteriorBasis src(n, k);
    if (k == n) return Matrix(0, src.size());
    ExteriorBasis dst(n, k + 1);

    Matrix d(dst.size(), src.size());
    for (size_t row = 0; row < dst.size(); ++row) {
        const auto& T = dst.subset(row);
        for (size_t p = 0; p < T.size(); ++p)
            for (size_t q = p + 1; q < T.size(); ++q) {
                int pair_sign = ((p + q) % 2) ? -1 : 1;
                auto rest = ExteriorBasis::erase_at(ExteriorBasis::erase_at(T, q), p);
                for (size_t m = 0; m < n; ++m) {
                    const Scalar& cc = L.c(T[p], T[q], m);
                    if (cc.is_zero()) continue;
                    bool repeated = false;
                    for (size_t u : rest) repeated |= (u == m);
                    if (repeated) continue;
                    auto [ins_sign, S] = ExteriorBasis::insert(rest, m);
                    Scalar term = cc;
                    if (pair_sign * ins_sign < 0) term = -term;
                    d.at(row, src.position(S)) += term;
                }
            }
    }
    return d;
}

/// Matrix of the contraction ι_X: Λ^k -> Λ^{k-1}.
inline Matrix contraction(const LieAlgebra& L, const std::vector<Scalar>& X, size_t k) {
    const size_t n = L.dim();
    if (X.size() != n) throw InputError("contraction: vector length mismatch");
    if (k > n) throw InputError("degree out of range");
    ExteriorBasis src(n, k);
    if (k == 0) return Matrix(0, 1);
    ExteriorBasis dst(n, k - 1);

    Matrix m(dst.size(), src.size());
    for (size_t col = 0; col < src.size(); ++col) {
        const auto& S = src.subset(col);
        for (size_t a = 0; a < S.size(); ++a) {
            if (X[S[a]].is_zero()) continue;
            Scalar term = X[S[a]];
            if (a % 2) term = -term;
            m.at(dst.position(ExteriorBasis::erase_at(S, a)), col) += term;
        }
    }
    return m;
}

/// Matrix of the coadjoint action ad*(X) on Λ^k: on Λ¹ it is -(ad X)^T,
/// extended to higher degrees as a degree-zero derivation.
inline Matrix coadjoint(const LieAlgebra& L, const std::vector<Scalar>& X, size_t k) {
    const size_t n = L.dim();
    if (X.size() != n) throw InputError("coadjoint: vector length mismatch");
    if (k > n) throw InputError("degree out of range");
    Matrix ad = L.ad(X); // ad[j][m] = coefficient of e_j in [X, e_m]

    ExteriorBasis basis(n, k);
    Matrix out(basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        const auto& S = basis.subset(col);
        for (size_t a = 0; a < S.size(); ++a) {
            // ad*(X) e_{s_a}* = sum_m (-ad[s_a][m]) e_m*
            for (size_t m = 0; m < n; ++m) {
                const Scalar& coeff = ad.at(S[a], m);
                if (coeff.is_zero()) continue;
                if (m == S[a]) {
                    out.at(col, col) -= coeff;
                    continue;
                }
                bool repeated = false;
                for (size_t u : S) repeated |= (u == m);
                if (repeated) continue;
                auto rest = ExteriorBasis::erase_at(S, a);
                auto [ins_sign, T] = ExteriorBasis::insert(rest, m);
                int sign = (a % 2 ? -1 : 1) * ins_sign;
                Scalar term = coeff;
                if (sign > 0) term = -term; // overall minus from ad*
                out.at(basis.position(T), col) += term;
            }
        }
    }
    return out;
}

inline CochainComplex full_complex(const LieAlgebra& L) {
    const size_t n = L.dim();
    CochainComplex c;
    c.label = "full";
    c.dims.resize(n + 1);
    c.diff.resize(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        c.dims[k] = binom(n, k);
        c.diff[k] = ce_differential(L, k);
    }
    return c;
}

namespace detail {

// Restrict the full differentials to per-degree subspaces (rows of sub[k] =
// RREF basis vectors inside Λ^k). Verifies exactly that d maps each subspace
// into the next; the embed matrices are the basis columns.
inline CochainComplex restrict_complex(const LieAlgebra& L, std::vector<Subspace> sub,
                                       std::string label) {
    const size_t n = L.dim();
    CochainComplex c;
    c.label = std::move(label);
    c.dims.resize(n + 1);
    c.diff.resize(n + 1);
    c.embed.resize(n + 1);

    std::vector<Matrix> full(n + 1);
    for (size_t k = 0; k <= n; ++k) full[k] = ce_differential(L, k);

    for (size_t k = 0; k <= n; ++k) {
        c.dims[k] = sub[k].dim();
        c.embed[k] = sub[k].basis().transpose();
    }
    for (size_t k = 0; k <= n; ++k) {
        if (k == n) {
            c.diff[k] = Matrix(0, c.dims[k]);
            continue;
        }
        Matrix d(c.dims[k + 1], c.dims[k]);
        for (size_t a = 0; a < c.dims[k]; ++a) {
            auto w = full[k].apply(sub[k].basis_vector(a));
            // coordinates against the next-degree RREF basis, then verify
            auto coords = solve(c.embed[k + 1], w);
            if (!coords)
                throw Error("internal",
                            "differential does not preserve the subcomplex in degree " +
                                std::to_string(k));
            for (size_t b = 0; b < c.dims[k + 1]; ++b) d.at(b, a) = (*coords)[b];
        }
        c.diff[k] = d;
    }
    return c;
}

} // namespace detail

/// Subcomplex {α : ι_Xα = 0 and ad*(X)α = 0 for all X in h}, per degree the
/// joint kernel of the stacked constraint matrices.
inline CochainComplex relative_complex(const LieAlgebra& L, const Subspace& h) {
    if (!is_subalgebra(L, h))
        throw NotASubalgebra("relative complex requires [h, h] contained in h");
    const size_t n = L.dim();
    std::vector<Subspace> sub(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        Matrix constraints(0, 0);
        for (size_t b = 0; b < h.dim(); ++b) {
            auto X = h.basis_vector(b);
            constraints = Matrix::vstack(constraints, contraction(L, X, k));
            constraints = Matrix::vstack(constraints, coadjoint(L, X, k));
        }
        sub[k] = h.dim() == 0
            ? Subspace::full(binom(n, k))
            : Subspace::from_rows(binom(n, k), rref(constraints).kernel);
    }
    return detail::restrict_complex(L, std::move(sub), "relative");
}

/// Subcomplex of ad*-invariant cochains: joint kernel of ad*(e_i) over the
/// whole basis. Restriction is well defined because d commutes with ad*.
inline CochainComplex invariant_complex(const LieAlgebra& L) {
    const size_t n = L.dim();
    std::vector<Subspace> sub(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        Matrix constraints(0, 0);
        for (size_t i = 0; i < n; ++i) {
            std::vector<Scalar> e(n);
            e[i] = Scalar(1);
            constraints = Matrix::vstack(constraints, coadjoint(L, e, k));
        }
        sub[k] = n == 0 ? Subspace::full(1)
                        : Subspace::from_rows(binom(n, k), rref(constraints).kernel);
    }
    return detail::restrict_complex(L, std::move(sub), "invariant");
}

namespace detail {

inline void enumerate_exponents(size_t n, size_t pos, size_t left, std::vector<size_t>& cur,
                                std::vector<std::vector<size_t>>& out) {
    if (pos + 1 == n) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (size_t v = 0; v <= left; ++v) {
        cur[pos] = v;
        enumerate_exponents(n, pos + 1, left - v, cur, out);
    }
}

} // namespace detail

/// Dimension of the ad*-invariant degree-i symmetric polynomials on g.
/// Monomial basis in lexicographic exponent order; each basis action is the
/// derivation extension of ad* on Λ¹ to S^i.
inline size_t invariant_polynomials_dim(const LieAlgebra& L, size_t i) {
    const size_t n = L.dim();
    if (i == 0) return 1;
    if (n == 0) return 0;
    const size_t nmon = binom(n + i - 1, i);
    if (nmon > 20000)
        throw SizeCapExceeded("symmetric power has " + std::to_string(nmon) +
                              " monomials; cap is 20000");

    // exponent vectors of total degree i, lexicographic
    std::vector<std::vector<size_t>> mons;
    mons.reserve(nmon);
    std::vector<size_t> cur(n, 0);
    detail::enumerate_exponents(n, 0, i, cur, mons);
    if (mons.size() != nmon) throw Error("internal", "monomial count mismatch");
    std::map<std::vector<size_t>, size_t> index;
    for (size_t m = 0; m < mons.size(); ++m) index[mons[m]] = m;

    Matrix stacked(n * nmon, nmon);
    for (size_t b = 0; b < n; ++b) {
        std::vector<Scalar> e(n);
        e[b] = Scalar(1);
        Matrix a1 = coadjoint(L, e, 1); // ad*(e_b) on Λ¹ = S^1
        for (size_t col = 0; col < nmon; ++col) {
            const auto& alpha = mons[col];
            for (size_t j = 0; j < n; ++j) {
                if (alpha[j] == 0) continue;
                for (size_t m = 0; m < n; ++m) {
                    const Scalar& coeff = a1.at(m, j);
                    if (coeff.is_zero()) continue;
                    auto beta = alpha;
                    beta[j] -= 1;
                    beta[m] += 1;
                    stacked.at(b * nmon + index[beta], col) +=
                        Scalar(static_cast<long long>(alpha[j])) * coeff;
                }
            }
        }
    }
    return nmon - rank(stacked);
}

/// E1-page dimension table: entry [i][j] = dim(S^i g*)^g * basic_betti[j - i].
inline std::vector<std::vector<size_t>> e1_table(const LieAlgebra& L,
                                                 const std::vector<size_t>& basic_betti,
                                                 size_t imax) {
    std::vector<size_t> s(imax + 1);
    for (size_t i = 0; i <= imax; ++i) s[i] = invariant_polynomials_dim(L, i);
    const size_t jmax = imax + (basic_betti.empty() ? 0 : basic_betti.size() - 1);
    std::vector<std::vector<size_t>> table(imax + 1, std::vector<size_t>(jmax + 1, 0));
    for (size_t i = 0; i <= imax; ++i)
        for (size_t j = i; j <= jmax; ++j) {
            const size_t off = j - i;
            if (off < basic_betti.size()) table[i][j] = s[i] * basic_betti[off];
        }
    return table;
}

} // namespace liecoh
