#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace liecoh {

/// Finite cochain complex 0 -> C^0 -> ... -> C^N -> 0 in fixed bases.
/// diff[k] maps C^k to C^{k+1}; diff[N] is the (0 x dims[N]) zero map.
/// For subcomplexes, embed[k] (ambient_dim x dims[k]) writes the chosen basis
/// of C^k in the coordinates of the ambient complex.
struct CochainComplex {
    std::vector<size_t> dims;
    std::vector<Matrix> diff;
    std::vector<Matrix> embed; // empty when the complex is not embedded
    std::string label;

    size_t top() const { return dims.size() - 1; }
    bool embedded() const { return !embed.empty(); }
};

/// Exact check of D∘D = 0 in every degree.
inline void verify_complex(const CochainComplex& c) {
    if (c.diff.size() != c.dims.size())
        throw Error("internal", "complex has mismatched differential count");
    for (size_t k = 0; k + 1 < c.diff.size(); ++k)
        if (!(c.diff[k + 1] * c.diff[k]).is_zero())
            throw DSquaredNonzero("D∘D != 0 between degrees " + std::to_string(k) + " and " +
                                  std::to_string(k + 2) + " in complex '" + c.label + "'");
}

struct BettiTable {
    std::vector<size_t> betti;
    // per degree: canonical representative cocycles (rows); in the ambient
    // coordinates when the complex is embedded, else in the complex's own basis
    std::vector<std::vector<std::vector<Scalar>>> representatives;
    std::string route;

    long long euler() const {
        long long e = 0;
        for (size_t k = 0; k < betti.size(); ++k)
            e += (k % 2 ? -1 : 1) * static_cast<long long>(betti[k]);
        return e;
    }

    bool operator==(const BettiTable& o) const { return betti == o.betti; }
};

/// Betti number in one degree only (avoids building the whole table).
inline size_t betti_degree(const CochainComplex& c, size_t k) {
    if (k >= c.dims.size()) throw InputError("degree out of range");
    const size_t zk = c.dims[k] - rank(c.diff[k]);
    const size_t bk = k == 0 ? 0 : rank(c.diff[k - 1]);
    return zk - bk;
}

/// Full Betti table with canonical representatives: in degree k, reduce the
/// RREF kernel basis of D_k against the image of D_{k-1} and re-echelonize;
/// the result is basis-canonical, so reports are byte-stable.
inline BettiTable betti(const CochainComplex& c, bool with_representatives = true) {
    verify_complex(c);
    const size_t N = c.top();
    BettiTable t;
    t.route = c.label;
    t.betti.resize(N + 1);
    t.representatives.resize(N + 1);

    for (size_t k = 0; k <= N; ++k) {
        auto zres = rref(c.diff[k]);
        const size_t zdim = c.dims[k] - zres.rank;
        Subspace boundaries = k == 0
            ? Subspace::zero(c.dims[k])
            : Subspace::from_rows(c.dims[k], c.diff[k - 1].transpose());
        t.betti[k] = zdim - boundaries.dim();

        if (!with_representatives || t.betti[k] == 0) continue;
        Matrix reduced(zres.kernel.rows(), c.dims[k]);
        for (size_t i = 0; i < zres.kernel.rows(); ++i)
            reduced.set_row(i, boundaries.reduce(zres.kernel.row(i)));
        Subspace reps = Subspace::from_rows(c.dims[k], reduced);
        if (reps.dim() != t.betti[k])
            throw Error("internal", "representative count mismatch in degree " +
                                        std::to_string(k));
        for (size_t i = 0; i < reps.dim(); ++i) {
            auto v = reps.basis_vector(i);
            t.representatives[k].push_back(c.embedded() ? c.embed[k].apply(v) : v);
        }
    }
    return t;
}

} // namespace liecoh
