#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "ce.hpp"
#include "lie_algebra.hpp"

namespace liecoh {

/// Topological facts about the pair (G, H) that cannot be decided from the
/// bracket data and must be asserted by the caller. Density of H means the
/// closure of H is all of G, so G/closure(H) is a point and compact_quotient
/// is auto-promoted.
struct Assumptions {
    bool compact_quotient = false;
    bool dense = false;
    bool h_connected = true;

    Assumptions normalized() const {
        Assumptions a = *this;
        if (a.dense) a.compact_quotient = true;
        return a;
    }
};

enum class HypothesisStatus { VerifiedAlgebraically, UserAsserted, Failed };

inline const char* to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::VerifiedAlgebraically: return "verified-algebraically";
        case HypothesisStatus::UserAsserted: return "user-asserted";
        case HypothesisStatus::Failed: return "failed";
    }
    return "?";
}

struct HypothesisRecord {
    std::string hypothesis;
    HypothesisStatus status;
    std::string note; // short detail, e.g. "missing" or the obstruction found
};

struct CrossCheck {
    std::string description;
    std::vector<size_t> left, right;
    bool equal;
};

/// Route labels are part of the report contract and appear verbatim in output.
enum class Theorem { Thm1_5, Thm1_4, ThmA_9, None };

inline const char* to_string(Theorem t) {
    switch (t) {
        case Theorem::Thm1_5: return "Thm1.5";
        case Theorem::Thm1_4: return "Thm1.4";
        case Theorem::ThmA_9: return "ThmA.9";
        case Theorem::None: return "None";
    }
    return "?";
}

/// Outcome of the dispatch: either a Betti table for H_dR(G/H) with the
/// theorem that justified it and a hypothesis audit, or a refusal naming the
/// first failed hypothesis. Refused reports never carry a Betti table.
struct GHReport {
    bool computed = false;
    Theorem theorem = Theorem::None;
    std::vector<HypothesisRecord> audit;
    std::optional<BettiTable> betti_table;
    std::vector<CrossCheck> cross_checks;
    std::string refusal_reason;
    std::string advisory;

    std::string verdict() const { return computed ? "Computed" : "Refused"; }
};

/// Route-agreement records for a pair (g, h): relative vs quotient cohomology
/// (needs an ideal), and full vs invariant complex (agree when g is of
/// compact type; recorded informationally otherwise).
inline std::vector<CrossCheck> cross_validate(const LieAlgebra& L, const Subspace& h) {
    if (!is_subalgebra(L, h))
        throw NotASubalgebra("cross-validation requires a subalgebra");
    std::vector<CrossCheck> out;

    if (is_ideal(L, h)) {
        auto rel = betti(relative_complex(L, h), false).betti;
        auto quo = betti(full_complex(quotient(L, h).algebra), false).betti;
        // the relative complex lives over the big algebra, so its table is
        // longer; the tail must be zero for agreement
        bool equal = true;
        for (size_t k = 0; k < std::max(rel.size(), quo.size()); ++k) {
            const size_t r = k < rel.size() ? rel[k] : 0;
            const size_t q = k < quo.size() ? quo[k] : 0;
            equal = equal && r == q;
        }
        out.push_back({"relative-vs-quotient", rel, quo, equal});
    }

    const bool ct = L.tau_free() && compact_type(L).yes;
    auto full = betti(full_complex(L), false).betti;
    auto inv = betti(invariant_complex(L), false).betti;
    out.push_back({ct ? "full-vs-invariant" : "full-vs-invariant (informational: not compact type)",
                   full, inv, full == inv});
    return out;
}

/// Theorem dispatch, strongest route first:
///   (i)   dense H: h must be an ideal (density forces it, so a failure means
///         the assertion contradicts the bracket data); H(g/h) via ThmA.9;
///   (ii)  h ideal + compact quotient: H(g/h) via Thm1.5;
///   (iii) g compact type + compact quotient: relative H(g,h) via Thm1.4;
///   (iv)  otherwise Refused, naming the first missing hypothesis.
inline GHReport gh_cohomology(const LieAlgebra& L, const Subspace& h, const Assumptions& a_in,
                              const std::string& advisory = "") {
    if (!is_subalgebra(L, h))
        throw NotASubalgebra("the marked subspace is not a subalgebra");
    const Assumptions a = a_in.normalized();

    GHReport rep;
    rep.advisory = advisory;
    rep.audit.push_back({"h is a subalgebra of g", HypothesisStatus::VerifiedAlgebraically, ""});

    if (!a.h_connected) {
        rep.audit.push_back({"H is connected", HypothesisStatus::Failed,
                             "theorem routes need a connected H; component bookkeeping is out "
                             "of scope"});
        rep.refusal_reason = "H is not asserted to be connected";
        return rep;
    }
    rep.audit.push_back({"H is connected", HypothesisStatus::UserAsserted, "default"});

    const bool ideal = is_ideal(L, h);

    auto finish = [&](Theorem thm, CochainComplex cx) {
        rep.theorem = thm;
        rep.computed = true;
        auto t = betti(cx);
        t.route = to_string(thm);
        rep.betti_table = std::move(t);
        rep.cross_checks = cross_validate(L, h);
    };

    if (a.dense) {
        rep.audit.push_back({"H dense in G", HypothesisStatus::UserAsserted, ""});
        if (!ideal) {
            rep.audit.push_back(
                {"h is an ideal of g", HypothesisStatus::Failed,
                 "density forces h to be an ideal; the assertion contradicts the bracket data"});
            rep.refusal_reason =
                "H asserted dense but h is not an ideal; the assumptions are inconsistent";
            return rep;
        }
        rep.audit.push_back({"h is an ideal of g", HypothesisStatus::VerifiedAlgebraically, ""});
        rep.audit.push_back({"G/H̄ compact", HypothesisStatus::UserAsserted,
                             "implied: the closure of H is G itself"});
        finish(Theorem::ThmA_9, full_complex(quotient(L, h).algebra));
        return rep;
    }

    if (ideal && a.compact_quotient) {
        rep.audit.push_back({"h is an ideal of g", HypothesisStatus::VerifiedAlgebraically, ""});
        rep.audit.push_back({"G/H̄ compact", HypothesisStatus::UserAsserted, ""});
        finish(Theorem::Thm1_5, full_complex(quotient(L, h).algebra));
        return rep;
    }

    if (a.compact_quotient) {
        // h is not an ideal here; try the relative route. compact_type makes
        // sign decisions, so structure constants involving t raise
        // UnorderedScalar from this point only.
        rep.audit.push_back({"h is an ideal of g", HypothesisStatus::Failed,
                             "not an ideal; trying the relative route"});
        auto cert = compact_type(L);
        if (cert.yes) {
            rep.audit.push_back(
                {"g is of compact type", HypothesisStatus::VerifiedAlgebraically, ""});
            rep.audit.push_back({"G/H̄ compact", HypothesisStatus::UserAsserted, ""});
            finish(Theorem::Thm1_4, relative_complex(L, h));
            return rep;
        }
        rep.audit.push_back(
            {"g is of compact type", HypothesisStatus::Failed,
             cert.obstruction == CompactTypeObstruction::CenterDerivedNotComplementary
                 ? "center and derived subalgebra are not complementary"
                 : "Killing form is not negative definite on the derived subalgebra"});
        rep.refusal_reason =
            "no applicable route: h is not an ideal and g is not of compact type";
        return rep;
    }

    // no topological assumption at all
    if (ideal)
        rep.audit.push_back({"h is an ideal of g", HypothesisStatus::VerifiedAlgebraically, ""});
    rep.audit.push_back({"G/H̄ compact", HypothesisStatus::Failed, "missing"});
    rep.refusal_reason = "G/H̄ compact: missing";
    return rep;
}

/// Catalog convenience: runs the dispatch on a named entry's marked pair,
/// carrying the entry's advisory into the report.
inline GHReport gh_cohomology(const CatalogEntry& entry, const Assumptions& a) {
    if (!entry.subalgebra)
        throw InputError("catalog entry '" + entry.algebra.name() +
                         "' has no marked subalgebra");
    Subspace h = Subspace::from_rows(entry.algebra.dim(), *entry.subalgebra);
    return gh_cohomology(entry.algebra, h, a, entry.advisory);
}

} // namespace liecoh
