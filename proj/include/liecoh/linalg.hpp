#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace liecoh {

namespace detail {

// Working row for fraction-free elimination: denominator-cleared entries.
using PolyRow = std::vector<IntPoly>;

inline PolyRow clear_denominators(const Matrix& m, size_t i) {
    IntPoly l(1);
    for (size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) l = IntPoly::lcm(l, m.at(i, j).den());
    PolyRow row(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
        const Scalar& s = m.at(i, j);
        if (!s.is_zero()) row[j] = s.num() * IntPoly::div_exact(l, s.den());
    }
    return row;
}

// Divide the row by the gcd of its entries (content in Z[t]) and normalize
// the first nonzero entry to positive leading coefficient. Keeps the
// intermediate growth of fraction-free elimination in check.
inline void normalize_row(PolyRow& row) {
    IntPoly g;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : IntPoly::gcd(g, e);
        if (g == IntPoly(1)) break;
    }
    if (g.is_zero()) return;
    int lead_sign = 0;
    for (auto& e : row) {
        if (g != IntPoly(1)) e = IntPoly::div_exact(e, g);
        if (lead_sign == 0 && !e.is_zero()) lead_sign = e.leading_sign();
    }
    if (lead_sign < 0)
        for (auto& e : row) e = -e;
}

struct EchelonResult {
    Matrix rref;                // canonical reduced row echelon form, same shape
    std::vector<size_t> pivots; // pivot column per nonzero row
};

/// Canonical RREF via fraction-free (Bareiss-style) elimination: rows are kept
/// over Z[t], cross-multiplication replaces division, and each update is
/// followed by a content division. The final division by the pivot entry is
/// the only fraction-producing step, so intermediate values never leave Z[t].
inline EchelonResult rref_core(const Matrix& m) {
    const size_t nr = m.rows(), nc = m.cols();
    std::vector<PolyRow> rows(nr);
    for (size_t i = 0; i < nr; ++i) {
        rows[i] = clear_denominators(m, i);
        normalize_row(rows[i]);
    }

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t p = r;
        while (p < nr && rows[p][c].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = r + 1; i < nr; ++i) {
            if (rows[i][c].is_zero()) continue;
            const IntPoly a = rows[r][c], b = rows[i][c];
            for (size_t j = 0; j < nc; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
            normalize_row(rows[i]);
        }
        pivots.push_back(c);
        ++r;
    }

    // back-substitution, still fraction-free
    for (size_t k = pivots.size(); k-- > 0;) {
        const size_t c = pivots[k];
        for (size_t i = 0; i < k; ++i) {
            if (rows[i][c].is_zero()) continue;
            const IntPoly a = rows[k][c], b = rows[i][c];
            for (size_t j = 0; j < nc; ++j) rows[i][j] = a * rows[i][j] - b * rows[k][j];
            normalize_row(rows[i]);
        }
    }

    Matrix out(nr, nc);
    for (size_t i = 0; i < pivots.size(); ++i) {
        const IntPoly& piv = rows[i][pivots[i]];
        for (size_t j = 0; j < nc; ++j)
            if (!rows[i][j].is_zero())
                out.at(i, j) = Scalar::from_polys(rows[i][j], piv);
    }
    return {std::move(out), std::move(pivots)};
}

} // namespace detail

struct RrefResult {
    Matrix rref;
    std::vector<size_t> pivots;
    size_t rank;
    Matrix kernel; // rows form the canonical (RREF) basis of the null space
};

/// Canonical reduced row echelon form plus the canonical kernel basis.
/// Determinism: RREF of a given row space is unique, and the kernel rows are
/// themselves in RREF, so equal inputs give byte-equal outputs.
inline RrefResult rref(const Matrix& m) {
    auto ech = detail::rref_core(m);
    const size_t rank = ech.pivots.size();
    const size_t nc = m.cols();

    std::vector<bool> is_pivot(nc, false);
    for (size_t c : ech.pivots) is_pivot[c] = true;

    Matrix raw_kernel(nc - rank, nc);
    size_t kr = 0;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        raw_kernel.at(kr, f) = Scalar(1);
        for (size_t i = 0; i < rank; ++i)
            raw_kernel.at(kr, ech.pivots[i]) = -ech.rref.at(i, f);
        ++kr;
    }
    auto kech = detail::rref_core(raw_kernel);
    Matrix kernel(kech.pivots.size(), nc);
    for (size_t i = 0; i < kech.pivots.size(); ++i) kernel.set_row(i, kech.rref.row(i));

    return {std::move(ech.rref), std::move(ech.pivots), rank, std::move(kernel)};
}

inline size_t rank(const Matrix& m) { return detail::rref_core(m).pivots.size(); }

/// Determinant by cofactor expansion along the first row, skipping zeros.
/// Intended for the small matrices that arise as wedge minors.
inline Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("det: matrix must be square");
    const size_t n = m.rows();
    if (n == 0) return Scalar::rational(1, 1);
    if (n == 1) return m.at(0, 0);
    Scalar acc;
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Scalar term = m.at(0, j) * det(minor);
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

/// One solution of m x = b (free variables set to zero), or nullopt.
inline std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto ech = detail::rref_core(aug);
    std::vector<Scalar> x(m.cols());
    for (size_t i = 0; i < ech.pivots.size(); ++i) {
        if (ech.pivots[i] == m.cols()) return std::nullopt; // row (0 ... 0 | 1)
        x[ech.pivots[i]] = ech.rref.at(i, m.cols());
    }
    return x;
}

/// Subspace of the ambient coordinate space, stored as the unique RREF basis.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace from_rows(size_t ambient, const Matrix& rows) {
        if (rows.rows() > 0 && rows.cols() != ambient)
            throw InputError("subspace rows have wrong ambient dimension");
        Subspace s;
        s.ambient_ = ambient;
        auto ech = detail::rref_core(rows.rows() ? rows : Matrix(0, ambient));
        s.basis_ = Matrix(ech.pivots.size(), ambient);
        for (size_t i = 0; i < ech.pivots.size(); ++i) s.basis_.set_row(i, ech.rref.row(i));
        s.pivots_ = std::move(ech.pivots);
        return s;
    }

    static Subspace full(size_t ambient) { return from_rows(ambient, Matrix::identity(ambient)); }
    static Subspace zero(size_t ambient) { return from_rows(ambient, Matrix(0, ambient)); }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Scalar> basis_vector(size_t i) const { return basis_.row(i); }

    /// Remainder of v after reduction against the RREF basis; zero iff v lies
    /// in the subspace. The remainder is the canonical coset representative.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        if (v.size() != ambient_) throw InputError("reduce: ambient dimension mismatch");
        for (size_t i = 0; i < basis_.rows(); ++i) {
            const Scalar c = v[pivots_[i]]; // copy: the loop below overwrites v[pivot]
            if (c.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j)
                if (!basis_.at(i, j).is_zero()) v[j] -= c * basis_.at(i, j);
        }
        return v;
    }

    bool contains(const std::vector<Scalar>& v) const { return is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    static Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw InputError("subspace sum: ambient mismatch");
        return from_rows(a.ambient_, Matrix::vstack(a.basis_, b.basis_));
    }

    /// Covectors vanishing on the subspace, as a subspace of the dual.
    Subspace annihilator() const {
        auto res = rref(basis_);
        Subspace s;
        s.ambient_ = ambient_;
        s.basis_ = res.kernel;
        auto ech = detail::rref_core(res.kernel); // recover pivots of the kernel basis
        s.pivots_ = std::move(ech.pivots);
        return s;
    }

private:
    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

enum class Definiteness {
    Zero,
    PosDef,
    NegDef,
    PosSemiDef,
    NegSemiDef,
    Indefinite,
};

inline const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::Zero: return "zero";
        case Definiteness::PosDef: return "positive-definite";
        case Definiteness::NegDef: return "negative-definite";
        case Definiteness::PosSemiDef: return "positive-semidefinite";
        case Definiteness::NegSemiDef: return "negative-semidefinite";
        case Definiteness::Indefinite: return "indefinite";
    }
    return "?";
}

/// Exact definiteness of a symmetric rational matrix via Lagrange-style
/// diagonalization: repeatedly pivot on a nonzero diagonal entry and take the
/// Schur complement. If at some stage every diagonal entry of the active block
/// is zero but some off-diagonal entry is not, the form restricted to that
/// block is a hyperbolic pair, hence indefinite. Sylvester's law makes the
/// (pos, neg) signature independent of pivot order.
inline Definiteness definiteness(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("definiteness: matrix not square");
    if (!m.is_symmetric()) throw InputError("definiteness: matrix not symmetric");
    const size_t n = m.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_rational())
                throw UnorderedScalar("definiteness of a matrix involving t is undefined");

    Matrix s = m;
    std::vector<bool> active(n, true);
    size_t pos = 0, neg = 0;
    while (true) {
        size_t p = n;
        for (size_t i = 0; i < n; ++i)
            if (active[i] && !s.at(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (active[i] && active[j] && !s.at(i, j).is_zero())
                        return Definiteness::Indefinite;
            break; // remaining block is zero
        }
        const Scalar d = s.at(p, p);
        (d.sign() > 0 ? pos : neg) += 1;
        active[p] = false;
        for (size_t i = 0; i < n; ++i) {
            if (!active[i] || s.at(i, p).is_zero()) continue;
            const Scalar f = s.at(i, p) / d;
            for (size_t j = 0; j < n; ++j)
                if (active[j] && !s.at(p, j).is_zero()) s.at(i, j) -= f * s.at(p, j);
        }
    }

    if (pos == 0 && neg == 0) return Definiteness::Zero;
    if (pos > 0 && neg > 0) return Definiteness::Indefinite;
    if (pos == n) return Definiteness::PosDef;
    if (neg == n) return Definiteness::NegDef;
    return pos > 0 ? Definiteness::PosSemiDef : Definiteness::NegSemiDef;
}

} // namespace liecoh
