#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie_algebra.hpp"

namespace liecoh {

/// Named algebra plus an optional marked subalgebra and an optional advisory
/// note shown in reports (used where a computed table is known to diverge
/// from the underlying quotient space unless extra hypotheses hold).
struct CatalogEntry {
    LieAlgebra algebra;
    std::optional<Matrix> subalgebra; // generator rows for h, if marked
    std::string advisory;
    std::string description;
};

namespace detail {

inline LieAlgebra make_su2(const std::string& name) {
    // cyclic basis: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
    return LieAlgebra(name, 3,
                      {{0, 1, 2, Scalar(1)}, {1, 2, 0, Scalar(1)}, {0, 2, 1, Scalar(-1)}});
}

inline LieAlgebra make_r_plus_su2(const std::string& name) {
    return direct_sum(LieAlgebra("r", 1, {}), make_su2("su2"), name);
}

} // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"abelian1", "abelian2", "abelian3", "abelian4", "abelian5", "abelian6",
            "abelian7", "abelian8", "heis3",    "aff1",     "su2",      "so3",
            "sl2r",     "sl2r_tangent", "paper_ex1", "paper_ex2", "tsu2"};
}

inline CatalogEntry catalog(const std::string& name) {
    using detail::make_r_plus_su2;
    using detail::make_su2;

    if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
        const std::string suffix = name.substr(7);
        if (!suffix.empty() && suffix.size() <= 1 && suffix[0] >= '1' && suffix[0] <= '8') {
            const size_t n = static_cast<size_t>(suffix[0] - '0');
            return {LieAlgebra(name, n, {}), std::nullopt, "",
                    "abelian R^" + suffix + " (zero bracket)"};
        }
    }
    if (name == "heis3")
        return {LieAlgebra("heis3", 3, {{0, 1, 2, Scalar(1)}}), std::nullopt, "",
                "Heisenberg algebra: [x,y] = z"};
    if (name == "aff1")
        return {LieAlgebra("aff1", 2, {{0, 1, 1, Scalar(1)}}), std::nullopt, "",
                "affine line algebra: [x,y] = y"};
    if (name == "su2")
        return {make_su2("su2"), std::nullopt, "", "su(2) in the cyclic basis"};
    if (name == "so3")
        return {make_su2("so3"), std::nullopt, "", "so(3) in the cyclic basis"};
    if (name == "sl2r")
        return {LieAlgebra("sl2r", 3,
                           {{0, 1, 1, Scalar(2)}, {0, 2, 2, Scalar(-2)}, {1, 2, 0, Scalar(1)}}),
                std::nullopt, "", "sl(2,R) in the {h,e,f} basis"};
    if (name == "sl2r_tangent")
        return {make_r_plus_su2("sl2r_tangent"), std::nullopt, "",
                "R + su(2), the base algebra carrying the marked variants"};
    if (name == "paper_ex1") {
        Matrix h(3, 4);
        h.at(0, 1) = Scalar(1);
        h.at(1, 2) = Scalar(1);
        h.at(2, 3) = Scalar(1);
        return {make_r_plus_su2("paper_ex1"), h,
                "marked scenario: G = R x SU(2) with H = SU(2), so G/H = R is "
                "noncompact and H^1_dR(ℝ) = 0, whereas H^1(g/h) ≅ ℝ. The tables "
                "disagree in degree 1, which is why the compact-quotient "
                "hypothesis cannot be dropped.",
                "R + su(2) with h = the su(2) factor (noncompact quotient scenario)"};
    }
    if (name == "paper_ex2") {
        Matrix h(2, 6);
        h.at(0, 0) = Scalar(1);
        h.at(1, 1) = Scalar(1);
        h.at(1, 2) = Scalar::tau();
        return {direct_sum(LieAlgebra("r3", 3, {}), make_su2("su2"), "paper_ex2"), h, "",
                "R^3 + su(2) with a 2-dim central ideal h = span{e1, e2 + t*e3} "
                "winding irrationally in the torus directions"};
    }
    if (name == "tsu2") {
        Matrix h(1, 4);
        h.at(0, 0) = Scalar(1);
        h.at(0, 3) = Scalar(1);
        return {make_r_plus_su2("tsu2"), h, "",
                "R + su(2) with the skew line h = span{(1,0,0,1)}: a dense "
                "one-parameter subgroup scenario (subalgebra, not an ideal)"};
    }
    throw InputError("unknown-catalog", "unknown catalog name '" + name + "'");
}

} // namespace liecoh
