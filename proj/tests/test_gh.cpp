#include <catch2/catch_amalgamated.hpp>

#include "liecoh/gh.hpp"

using namespace liecoh;

namespace {

Subspace span_rows(size_t n, const Matrix& rows) { return Subspace::from_rows(n, rows); }

bool audit_has(const GHReport& r, const std::string& hyp, HypothesisStatus st) {
    for (const auto& a : r.audit)
        if (a.hypothesis == hyp && a.status == st) return true;
    return false;
}

} // namespace

TEST_CASE("product of line and rotations with full compact factor marked") {
    auto entry = catalog("paper_ex1");
    REQUIRE(entry.subalgebra.has_value());

    SECTION("compact quotient asserted: quotient route, table (1,1)") {
        auto rep = gh_cohomology(entry, Assumptions{.compact_quotient = true});
        REQUIRE(rep.computed);
        CHECK(rep.verdict() == "Computed");
        CHECK(rep.theorem == Theorem::Thm1_5);
        REQUIRE(rep.betti_table.has_value());
        CHECK(rep.betti_table->betti == std::vector<size_t>{1, 1});
        CHECK(rep.betti_table->route == "Thm1.5");
        for (const auto& c : rep.cross_checks) CHECK(c.equal);
    }

    SECTION("no assumption: refused, audit names the missing compactness") {
        auto rep = gh_cohomology(entry, Assumptions{});
        REQUIRE_FALSE(rep.computed);
        CHECK(rep.verdict() == "Refused");
        CHECK(rep.theorem == Theorem::None);
        CHECK_FALSE(rep.betti_table.has_value());
        CHECK(rep.cross_checks.empty());
        // the ideal fact is established even though the route is refused
        CHECK(audit_has(rep, "h is an ideal of g", HypothesisStatus::VerifiedAlgebraically));
        CHECK(audit_has(rep, "G/H̄ compact", HypothesisStatus::Failed));
        CHECK(rep.refusal_reason == "G/H̄ compact: missing");
        // the catalog advisory explains what would go wrong without the
        // hypothesis: the algebraic degree-1 answer is a line while the actual
        // noncompact quotient R has trivial first cohomology
        CHECK(rep.advisory.find("H^1_dR(ℝ) = 0") != std::string::npos);
        CHECK(rep.advisory.find("whereas H^1(g/h) ≅ ℝ") != std::string::npos);
    }
}

TEST_CASE("six-dimensional product with a 2-dim marked ideal") {
    auto entry = catalog("paper_ex2");
    auto rep = gh_cohomology(entry, Assumptions{.compact_quotient = true});
    REQUIRE(rep.computed);
    CHECK(rep.theorem == Theorem::Thm1_5);
    REQUIRE(rep.betti_table.has_value());
    CHECK(rep.betti_table->betti == std::vector<size_t>{1, 1, 0, 1, 1});
    CHECK(rep.betti_table->euler() == 0);

    // both the ideal-quotient route and the relative route apply here, so the
    // dispatcher must record their agreement
    bool saw_rel_vs_quot = false;
    for (const auto& c : rep.cross_checks) {
        if (c.description == "relative-vs-quotient") {
            saw_rel_vs_quot = true;
            CHECK(c.right == std::vector<size_t>{1, 1, 0, 1, 1});
        }
        CHECK(c.equal);
    }
    CHECK(saw_rel_vs_quot);

    SECTION("without the flag the same pair is refused with no table") {
        auto ref = gh_cohomology(entry, Assumptions{});
        REQUIRE_FALSE(ref.computed);
        CHECK_FALSE(ref.betti_table.has_value());
        CHECK(audit_has(ref, "G/H̄ compact", HypothesisStatus::Failed));
    }
}

TEST_CASE("dense line in the abelian plane") {
    LieAlgebra plane = catalog("abelian2").algebra;
    Matrix rows(1, 2);
    rows.at(0, 0) = Scalar::rational(1, 1);
    rows.at(0, 1) = Scalar::tau();
    Subspace h = span_rows(2, rows);

    auto rep = gh_cohomology(plane, h, Assumptions{.dense = true});
    REQUIRE(rep.computed);
    CHECK(rep.theorem == Theorem::ThmA_9);
    REQUIRE(rep.betti_table.has_value());
    CHECK(rep.betti_table->betti == std::vector<size_t>{1, 1});
    CHECK(audit_has(rep, "H dense in G", HypothesisStatus::UserAsserted));
    CHECK(audit_has(rep, "h is an ideal of g", HypothesisStatus::VerifiedAlgebraically));
    // density subsumes compactness of G/closure(H)
    CHECK(audit_has(rep, "G/H̄ compact", HypothesisStatus::UserAsserted));
    for (const auto& c : rep.cross_checks) CHECK(c.equal);
}

TEST_CASE("density asserted against a non-ideal is a contradiction, not a computation") {
    auto entry = catalog("tsu2");
    Subspace h = span_rows(entry.algebra.dim(), *entry.subalgebra);
    auto rep = gh_cohomology(entry.algebra, h, Assumptions{.dense = true});
    REQUIRE_FALSE(rep.computed);
    CHECK_FALSE(rep.betti_table.has_value());
    CHECK(audit_has(rep, "h is an ideal of g", HypothesisStatus::Failed));
    CHECK(rep.refusal_reason.find("inconsistent") != std::string::npos);
}

TEST_CASE("non-ideal marked line falls through to the relative route") {
    auto entry = catalog("tsu2");
    Subspace h = span_rows(entry.algebra.dim(), *entry.subalgebra);

    auto rep = gh_cohomology(entry.algebra, h, Assumptions{.compact_quotient = true});
    REQUIRE(rep.computed);
    CHECK(rep.theorem == Theorem::Thm1_4);
    CHECK(audit_has(rep, "h is an ideal of g", HypothesisStatus::Failed));
    CHECK(audit_has(rep, "g is of compact type", HypothesisStatus::VerifiedAlgebraically));
    REQUIRE(rep.betti_table.has_value());
    CHECK(rep.betti_table->route == "Thm1.4");
    CHECK(rep.betti_table->betti ==
          betti(relative_complex(entry.algebra, h), false).betti);

    SECTION("and is refused without the compactness assertion") {
        auto ref = gh_cohomology(entry.algebra, h, Assumptions{});
        REQUIRE_FALSE(ref.computed);
        CHECK(audit_has(ref, "G/H̄ compact", HypothesisStatus::Failed));
    }
}

TEST_CASE("relative route on a non-compact-type algebra is refused with the obstruction") {
    // sl(2,R) is unimodular and semisimple but its Killing form is indefinite
    auto L = catalog("sl2r").algebra;
    Matrix rows = Matrix::from_rows({{0, 1, 0}}); // span{e}: subalgebra, not ideal
    Subspace h = span_rows(3, rows);
    REQUIRE(is_subalgebra(L, h));
    REQUIRE_FALSE(is_ideal(L, h));

    auto rep = gh_cohomology(L, h, Assumptions{.compact_quotient = true});
    REQUIRE_FALSE(rep.computed);
    CHECK_FALSE(rep.betti_table.has_value());
    CHECK(audit_has(rep, "g is of compact type", HypothesisStatus::Failed));
    CHECK(rep.refusal_reason.find("compact type") != std::string::npos);
}

TEST_CASE("disconnected H is refused before any route is tried") {
    auto entry = catalog("paper_ex2");
    auto rep = gh_cohomology(entry, Assumptions{.compact_quotient = true, .h_connected = false});
    REQUIRE_FALSE(rep.computed);
    CHECK_FALSE(rep.betti_table.has_value());
    CHECK(audit_has(rep, "H is connected", HypothesisStatus::Failed));
    CHECK(rep.refusal_reason.find("connected") != std::string::npos);
}

TEST_CASE("sign decisions only happen on the relative route") {
    // bracket [e1,e2] = t*e2: exactness never needs an order on Q(t), but
    // compact-type certification does
    LieAlgebra L("scaled-aff1", 2, {{0, 1, 1, Scalar::tau()}});
    REQUIRE_FALSE(L.tau_free());

    SECTION("ideal quotient route computes without ordering") {
        Subspace h = span_rows(2, Matrix::from_rows({{0, 1}}));
        REQUIRE(is_ideal(L, h));
        auto rep = gh_cohomology(L, h, Assumptions{.compact_quotient = true});
        REQUIRE(rep.computed);
        CHECK(rep.theorem == Theorem::Thm1_5);
        CHECK(rep.betti_table->betti == std::vector<size_t>{1, 1});
    }

    SECTION("non-ideal forces the relative route, which raises") {
        Subspace h = span_rows(2, Matrix::from_rows({{1, 0}}));
        REQUIRE(is_subalgebra(L, h));
        REQUIRE_FALSE(is_ideal(L, h));
        CHECK_THROWS_AS(gh_cohomology(L, h, Assumptions{.compact_quotient = true}),
                        UnorderedScalar);
    }
}

TEST_CASE("marked pairs across the catalog: refusals carry no table, computations audit clean") {
    for (const auto& name : catalog_names()) {
        auto entry = catalog(name);
        if (!entry.subalgebra) continue;
        INFO("catalog entry: " << name);
        Subspace h = span_rows(entry.algebra.dim(), *entry.subalgebra);

        auto refused = gh_cohomology(entry.algebra, h, Assumptions{});
        CHECK_FALSE(refused.computed);
        CHECK_FALSE(refused.betti_table.has_value());
        CHECK_FALSE(refused.refusal_reason.empty());

        auto rep = gh_cohomology(entry.algebra, h, Assumptions{.compact_quotient = true});
        if (rep.computed) {
            REQUIRE(rep.betti_table.has_value());
            // every hypothesis of the route actually used is verified or
            // asserted; failed entries may only document skipped routes
            for (const auto& a : rep.audit) {
                if (a.status == HypothesisStatus::Failed)
                    CHECK(a.hypothesis == "h is an ideal of g");
            }
            for (const auto& c : rep.cross_checks) {
                INFO("cross check: " << c.description);
                if (c.description.find("informational") == std::string::npos) CHECK(c.equal);
            }
        }
    }
}

TEST_CASE("subalgebra precondition and catalog plumbing") {
    auto su2 = catalog("su2");
    CHECK_THROWS_AS(gh_cohomology(su2, Assumptions{}), InputError); // nothing marked

    auto L = su2.algebra;
    Subspace bad = span_rows(3, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE_FALSE(is_subalgebra(L, bad));
    CHECK_THROWS_AS(gh_cohomology(L, bad, Assumptions{.compact_quotient = true}),
                    NotASubalgebra);
}

TEST_CASE("dispatch output is reproducible") {
    auto entry = catalog("paper_ex2");
    auto a = gh_cohomology(entry, Assumptions{.compact_quotient = true});
    auto b = gh_cohomology(entry, Assumptions{.compact_quotient = true});
    REQUIRE(a.computed);
    REQUIRE(b.computed);
    CHECK(a.betti_table->betti == b.betti_table->betti);
    REQUIRE(a.betti_table->representatives.size() == b.betti_table->representatives.size());
    for (size_t k = 0; k < a.betti_table->representatives.size(); ++k) {
        const auto& ra = a.betti_table->representatives[k];
        const auto& rb = b.betti_table->representatives[k];
        REQUIRE(ra.size() == rb.size());
        for (size_t i = 0; i < ra.size(); ++i)
            for (size_t j = 0; j < ra[i].size(); ++j)
                CHECK(ra[i][j].str() == rb[i][j].str());
    }
    REQUIRE(a.audit.size() == b.audit.size());
    for (size_t i = 0; i < a.audit.size(); ++i) {
        CHECK(a.audit[i].hypothesis == b.audit[i].hypothesis);
        CHECK(a.audit[i].status == b.audit[i].status);
    }
}
