#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace liecoh {

/// One stored bracket block: [e_i, e_j] = sum_k coeff_k e_k with i < j
/// (0-based). The antisymmetric counterpart is implied.
struct BracketEntry {
    size_t i, j, k;
    Scalar c;
};

/// Finite-dimensional Lie algebra as a structure-constant table over the
/// exact scalar field. The full antisymmetric table c[i][j][k] is stored;
/// construction accepts only the i<j half and fills in the rest. The Jacobi
/// identity is NOT checked here — run jacobi_check (parsers and the catalog
/// do) so that candidate tables can be inspected for violations.
class LieAlgebra {
public:
    LieAlgebra(std::string name, size_t dim, const std::vector<BracketEntry>& entries)
        : name_(std::move(name)), dim_(dim), c_(dim * dim * dim) {
        std::vector<bool> seen(dim * dim * dim, false);
        for (const auto& e : entries) {
            if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
                throw InputError("bracket index out of range");
            if (e.i >= e.j)
                throw InputError("bracket entries must have i < j (antisymmetry is implied)");
            if (seen[idx(e.i, e.j, e.k)])
                throw InputError("duplicate bracket coefficient for (i,j,k)");
            seen[idx(e.i, e.j, e.k)] = true;
            c_[idx(e.i, e.j, e.k)] = e.c;
            c_[idx(e.j, e.i, e.k)] = -e.c;
        }
    }

    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }
    size_t dim() const { return dim_; }

    const Scalar& c(size_t i, size_t j, size_t k) const { return c_[idx(i, j, k)]; }

    std::vector<Scalar> bracket_basis(size_t i, size_t j) const {
        std::vector<Scalar> v(dim_);
        for (size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket: vector length");
        std::vector<Scalar> out(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero() || i == j) continue;
                const Scalar f = x[i] * y[j];
                for (size_t k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
            }
        }
        return out;
    }

    /// Matrix of ad(x): y -> [x, y] in the defining basis.
    Matrix ad(const std::vector<Scalar>& x) const {
        Matrix m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            std::vector<Scalar> e(dim_);
            e[j] = Scalar(1);
            auto col = bracket(x, e);
            for (size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    Matrix ad_basis(size_t i) const {
        Matrix m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
        return m;
    }

    bool tau_free() const {
        for (const auto& s : c_)
            if (!s.is_rational()) return false;
        return true;
    }

private:
    size_t idx(size_t i, size_t j, size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::string name_;
    size_t dim_;
    std::vector<Scalar> c_;
};

struct JacobiViolation {
    size_t i, j, k; // 0-based triple
    std::vector<Scalar> residual;
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 over all
/// triples i<j<k; returns the first violation if any.
inline std::optional<JacobiViolation> jacobi_check(const LieAlgebra& L) {
    const size_t n = L.dim();
    auto basis = [&](size_t i) {
        std::vector<Scalar> e(n);
        e[i] = Scalar(1);
        return e;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                auto r = add(add(L.bracket(L.bracket_basis(i, j), basis(k)),
                                 L.bracket(L.bracket_basis(j, k), basis(i))),
                             L.bracket(L.bracket_basis(k, i), basis(j)));
                if (!is_zero(r)) return JacobiViolation{i, j, k, std::move(r)};
            }
    return std::nullopt;
}

struct StructureInfo {
    Subspace center;  // {x : [x, g] = 0}
    Subspace derived; // span of all brackets
    Matrix killing;   // K[i][j] = tr(ad e_i ad e_j)
    bool unimodular;  // tr(ad e_i) = 0 for all i
};

inline StructureInfo structure(const LieAlgebra& L) {
    const size_t n = L.dim();

    // center = joint kernel of x -> [x, e_j] over all j
    Matrix stacked(n * n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i) stacked.at(j * n + k, i) = L.c(i, j, k);
    Subspace center = Subspace::from_rows(n, rref(stacked).kernel);

    Matrix bracket_rows(n * (n - 1) / 2, n);
    size_t r = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) bracket_rows.set_row(r++, L.bracket_basis(i, j));
    Subspace derived = Subspace::from_rows(n, bracket_rows);

    std::vector<Matrix> ads;
    ads.reserve(n);
    for (size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));

    Matrix killing(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Scalar tr;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) tr += ads[i].at(a, b) * ads[j].at(b, a);
            killing.at(i, j) = tr;
            killing.at(j, i) = tr;
        }

    bool unimodular = true;
    for (size_t i = 0; i < n && unimodular; ++i) {
        Scalar tr;
        for (size_t a = 0; a < n; ++a) tr += ads[i].at(a, a);
        unimodular = tr.is_zero();
    }

    return {std::move(center), std::move(derived), std::move(killing), unimodular};
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
    if (S.ambient() != L.dim()) throw InputError("subspace ambient dimension mismatch");
    for (size_t a = 0; a < S.dim(); ++a)
        for (size_t b = a + 1; b < S.dim(); ++b)
            if (!S.contains(L.bracket(S.basis_vector(a), S.basis_vector(b)))) return false;
    return true;
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& S) {
    if (S.ambient() != L.dim()) throw InputError("subspace ambient dimension mismatch");
    for (size_t i = 0; i < L.dim(); ++i) {
        std::vector<Scalar> e(L.dim());
        e[i] = Scalar(1);
        for (size_t b = 0; b < S.dim(); ++b)
            if (!S.contains(L.bracket(e, S.basis_vector(b)))) return false;
    }
    return true;
}

enum class CompactTypeObstruction {
    None,
    CenterDerivedNotComplementary,
    KillingNotNegDefOnDerived,
};

/// Witness for the compact-type decision: verdict plus either the
/// center/derived splitting with the (negative definite) restricted Killing
/// form, or the obstruction that failed.
struct CompactTypeCertificate {
    bool yes;
    CompactTypeObstruction obstruction;
    Subspace center;
    Subspace derived;
    Matrix killing_on_derived;
};

/// Decides whether the algebra admits an ad-invariant inner product, i.e.
/// splits as center ⊕ derived with the Killing form negative definite on the
/// derived part. Exact: requires structure constants free of t.
inline CompactTypeCertificate compact_type(const LieAlgebra& L) {
    if (!L.tau_free())
        throw UnorderedScalar("compact-type test needs t-free structure constants");
    auto info = structure(L);
    const size_t n = L.dim();

    CompactTypeCertificate cert;
    cert.center = info.center;
    cert.derived = info.derived;

    const bool complementary = info.center.dim() + info.derived.dim() == n &&
                               Subspace::sum(info.center, info.derived).dim() == n;
    if (!complementary) {
        cert.yes = false;
        cert.obstruction = CompactTypeObstruction::CenterDerivedNotComplementary;
        return cert;
    }

    const size_t d = info.derived.dim();
    Matrix kd(d, d);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            kd.at(a, b) = dot(info.derived.basis_vector(a),
                              info.killing.apply(info.derived.basis_vector(b)));
    cert.killing_on_derived = kd;
    if (d > 0 && definiteness(kd) != Definiteness::NegDef) {
        cert.yes = false;
        cert.obstruction = CompactTypeObstruction::KillingNotNegDefOnDerived;
        return cert;
    }
    cert.yes = true;
    cert.obstruction = CompactTypeObstruction::None;
    return cert;
}

/// Quotient by an ideal, in the canonical basis given by the non-pivot
/// coordinates of h's RREF basis. proj is the matrix of the quotient map.
struct Quotient {
    LieAlgebra algebra;
    Matrix proj;                    // (dim L - dim h) x dim L
    std::vector<size_t> complement; // ambient indices of the chosen basis
};

inline Quotient quotient(const LieAlgebra& L, const Subspace& h, std::string name = "") {
    if (!is_ideal(L, h))
        throw NotAnIdeal("quotient requires an ideal; [g, h] is not contained in h");
    const size_t n = L.dim();
    const size_t m = n - h.dim();

    std::vector<bool> pivot(n, false);
    {
        auto ech = detail::rref_core(h.basis());
        for (size_t c : ech.pivots) pivot[c] = true;
    }
    std::vector<size_t> complement;
    for (size_t j = 0; j < n; ++j)
        if (!pivot[j]) complement.push_back(j);

    // reduce(e_j) lands in the span of the complement coordinates, so the
    // quotient coordinates of [x] are just the complement entries of reduce(x)
    Matrix proj(m, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Scalar> e(n);
        e[j] = Scalar(1);
        auto r = h.reduce(e);
        for (size_t a = 0; a < m; ++a) proj.at(a, j) = r[complement[a]];
    }

    std::vector<BracketEntry> entries;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            auto br = proj.apply(L.bracket_basis(complement[a], complement[b]));
            for (size_t k = 0; k < m; ++k)
                if (!br[k].is_zero()) entries.push_back({a, b, k, br[k]});
        }
    if (name.empty()) name = L.name() + "/h";
    LieAlgebra Q(std::move(name), m, entries);

    // the quotient map must be a Lie algebra morphism on the whole basis
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Scalar> ei(n), ej(n);
            ei[i] = Scalar(1);
            ej[j] = Scalar(1);
            auto lhs = proj.apply(L.bracket(ei, ej));
            auto rhs = Q.bracket(proj.apply(ei), proj.apply(ej));
            if (lhs != rhs) throw Error("internal", "quotient bracket incompatibility");
        }

    return {std::move(Q), std::move(proj), std::move(complement)};
}

inline LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B, std::string name = "") {
    const size_t na = A.dim(), nb = B.dim();
    std::vector<BracketEntry> entries;
    for (size_t i = 0; i < na; ++i)
        for (size_t j = i + 1; j < na; ++j)
            for (size_t k = 0; k < na; ++k)
                if (!A.c(i, j, k).is_zero()) entries.push_back({i, j, k, A.c(i, j, k)});
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
            for (size_t k = 0; k < nb; ++k)
                if (!B.c(i, j, k).is_zero())
                    entries.push_back({na + i, na + j, na + k, B.c(i, j, k)});
    if (name.empty()) name = A.name() + "+" + B.name();
    return LieAlgebra(std::move(name), na + nb, entries);
}

} // namespace liecoh
