#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liecoh/catalog.hpp"
#include "liecoh/lie_algebra.hpp"

using namespace liecoh;

namespace {

Matrix inverse(const Matrix& p) {
    const size_t n = p.rows();
    auto res = rref(Matrix::hstack(p, Matrix::identity(n)));
    REQUIRE(res.rank == n);
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = res.rref.at(i, n + j);
    return inv;
}

// conjugate the bracket by a random invertible rational matrix:
// [x, y]' = P^{-1} [P x, P y]
LieAlgebra change_basis(const LieAlgebra& L, std::mt19937& rng) {
    const size_t n = L.dim();
    std::uniform_int_distribution<int> entry(-3, 3);
    Matrix p(n, n);
    do {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) p.at(i, j) = Scalar(entry(rng));
    } while (rank(p) != n);
    Matrix pinv = inverse(p);

    auto col = [&](size_t j) {
        std::vector<Scalar> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = p.at(i, j);
        return v;
    };
    std::vector<BracketEntry> entries;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto br = pinv.apply(L.bracket(col(i), col(j)));
            for (size_t k = 0; k < n; ++k)
                if (!br[k].is_zero()) entries.push_back({i, j, k, br[k]});
        }
    return LieAlgebra(L.name() + "'", n, entries);
}

std::vector<Scalar> unit(size_t n, size_t i) {
    std::vector<Scalar> e(n);
    e[i] = Scalar(1);
    return e;
}

} // namespace

TEST_CASE("jacobi check") {
    CHECK_FALSE(jacobi_check(catalog("abelian3").algebra).has_value());
    CHECK_FALSE(jacobi_check(catalog("su2").algebra).has_value());
    CHECK_FALSE(jacobi_check(catalog("sl2r").algebra).has_value());

    // [e1,e2]=e3, [e1,e3]=e3, [e2,e3]=e1 violates Jacobi on the first triple
    LieAlgebra bad("bad", 3,
                   {{0, 1, 2, Scalar(1)}, {0, 2, 2, Scalar(1)}, {1, 2, 0, Scalar(1)}});
    auto v = jacobi_check(bad);
    REQUIRE(v.has_value());
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
    CHECK_FALSE(is_zero(v->residual));
}

TEST_CASE("construction validates the stored half of the table") {
    CHECK_THROWS_AS(LieAlgebra("x", 2, {{1, 0, 0, Scalar(1)}}), InputError); // i > j
    CHECK_THROWS_AS(LieAlgebra("x", 2, {{0, 0, 1, Scalar(1)}}), InputError); // i == j
    CHECK_THROWS_AS(LieAlgebra("x", 2, {{0, 1, 2, Scalar(1)}}), InputError); // k range
    CHECK_THROWS_AS(
        LieAlgebra("x", 2, {{0, 1, 1, Scalar(1)}, {0, 1, 1, Scalar(2)}}), InputError);
    // antisymmetry of the filled table
    LieAlgebra L("ok", 3, {{0, 1, 2, Scalar(5)}});
    CHECK(L.c(0, 1, 2) == Scalar(5));
    CHECK(L.c(1, 0, 2) == Scalar(-5));
    CHECK(L.c(0, 0, 2) == Scalar(0));
}

TEST_CASE("structure of the stock algebras") {
    SECTION("abelian") {
        auto s = structure(catalog("abelian4").algebra);
        CHECK(s.center.dim() == 4);
        CHECK(s.derived.dim() == 0);
        CHECK(s.killing.is_zero());
        CHECK(s.unimodular);
    }
    SECTION("sl2r") {
        auto s = structure(catalog("sl2r").algebra);
        CHECK(s.center.dim() == 0);
        CHECK(s.derived.dim() == 3);
        CHECK(s.killing.at(0, 0) == Scalar(8)); // K(h,h)
        CHECK(s.killing.at(1, 2) == Scalar(4)); // K(e,f)
        CHECK(s.killing.at(1, 1) == Scalar(0));
        CHECK(s.unimodular);
    }
    SECTION("heis3") {
        auto s = structure(catalog("heis3").algebra);
        CHECK(s.center.dim() == 1);
        CHECK(s.center.contains({Scalar(0), Scalar(0), Scalar(1)}));
        CHECK(s.derived == s.center);
        CHECK(s.killing.is_zero());
        CHECK(s.unimodular);
    }
    SECTION("aff1 is not unimodular") {
        CHECK_FALSE(structure(catalog("aff1").algebra).unimodular);
    }
    SECTION("su2 killing form is -2 I") {
        auto s = structure(catalog("su2").algebra);
        CHECK(s.killing == Scalar(-2) * Matrix::identity(3));
    }
}

TEST_CASE("subalgebra and ideal predicates") {
    auto sl2r = catalog("sl2r").algebra;
    Subspace e_line = Subspace::from_rows(3, Matrix::from_rows({{0, 1, 0}}));
    CHECK(is_subalgebra(sl2r, e_line));
    CHECK_FALSE(is_ideal(sl2r, e_line));

    CHECK(is_ideal(sl2r, Subspace::zero(3)));
    CHECK(is_ideal(sl2r, Subspace::full(3)));

    auto ex2 = catalog("paper_ex2");
    Subspace h2 = Subspace::from_rows(6, *ex2.subalgebra);
    CHECK(h2.dim() == 2);
    CHECK(is_subalgebra(ex2.algebra, h2));
    CHECK(is_ideal(ex2.algebra, h2));

    auto tsu2 = catalog("tsu2");
    Subspace ht = Subspace::from_rows(4, *tsu2.subalgebra);
    CHECK(is_subalgebra(tsu2.algebra, ht));
    CHECK_FALSE(is_ideal(tsu2.algebra, ht));

    CHECK_THROWS_AS(is_ideal(sl2r, Subspace::zero(2)), InputError);
}

TEST_CASE("compact type decision") {
    SECTION("yes cases") {
        for (const char* name : {"abelian1", "abelian4", "su2", "so3", "sl2r_tangent",
                                 "paper_ex1", "paper_ex2", "tsu2"}) {
            auto cert = compact_type(catalog(name).algebra);
            INFO(name);
            CHECK(cert.yes);
            CHECK(cert.obstruction == CompactTypeObstruction::None);
            CHECK(cert.center.dim() + cert.derived.dim() == catalog(name).algebra.dim());
            if (cert.derived.dim() > 0)
                CHECK(definiteness(cert.killing_on_derived) == Definiteness::NegDef);
        }
    }
    SECTION("sl2r fails on the killing form") {
        auto cert = compact_type(catalog("sl2r").algebra);
        CHECK_FALSE(cert.yes);
        CHECK(cert.obstruction == CompactTypeObstruction::KillingNotNegDefOnDerived);
    }
    SECTION("heis3 and aff1 fail on the splitting") {
        for (const char* name : {"heis3", "aff1"}) {
            auto cert = compact_type(catalog(name).algebra);
            INFO(name);
            CHECK_FALSE(cert.yes);
            CHECK(cert.obstruction == CompactTypeObstruction::CenterDerivedNotComplementary);
        }
    }
    SECTION("t-dependent structure constants are rejected") {
        LieAlgebra L("heis-t", 3, {{0, 1, 2, Scalar::tau()}});
        REQUIRE_FALSE(jacobi_check(L).has_value());
        CHECK_THROWS_AS(compact_type(L), UnorderedScalar);
    }
}

TEST_CASE("quotients") {
    SECTION("heis3 by its center is abelian R^2") {
        auto heis = catalog("heis3").algebra;
        auto q = quotient(heis, structure(heis).center);
        CHECK(q.algebra.dim() == 2);
        for (size_t k = 0; k < 2; ++k) CHECK(q.algebra.c(0, 1, k) == Scalar(0));
        CHECK(q.complement == std::vector<size_t>{0, 1});
    }
    SECTION("full quotient is the zero algebra") {
        auto su2 = catalog("su2").algebra;
        auto q = quotient(su2, Subspace::full(3));
        CHECK(q.algebra.dim() == 0);
    }
    SECTION("marked 6-dim example quotients to R + su(2)") {
        auto ex2 = catalog("paper_ex2");
        Subspace h = Subspace::from_rows(6, *ex2.subalgebra);
        auto q = quotient(ex2.algebra, h);
        REQUIRE(q.algebra.dim() == 4);
        auto model = catalog("sl2r_tangent").algebra; // R + su(2)
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                for (size_t k = 0; k < 4; ++k) CHECK(q.algebra.c(i, j, k) == model.c(i, j, k));
    }
    SECTION("projection is a bracket morphism on random vectors") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> entry(-4, 4);
        auto ex2 = catalog("paper_ex2");
        Subspace h = Subspace::from_rows(6, *ex2.subalgebra);
        auto q = quotient(ex2.algebra, h);
        for (int it = 0; it < 30; ++it) {
            std::vector<Scalar> x(6), y(6);
            for (auto& v : x) v = Scalar(entry(rng));
            for (auto& v : y) v = Scalar(entry(rng));
            CHECK(q.proj.apply(ex2.algebra.bracket(x, y)) ==
                  q.algebra.bracket(q.proj.apply(x), q.proj.apply(y)));
        }
    }
    SECTION("non-ideal input is rejected") {
        auto tsu2 = catalog("tsu2");
        Subspace h = Subspace::from_rows(4, *tsu2.subalgebra);
        CHECK_THROWS_AS(quotient(tsu2.algebra, h), NotAnIdeal);
    }
}

TEST_CASE("direct sums and the catalog") {
    auto s = direct_sum(catalog("abelian1").algebra, catalog("su2").algebra);
    CHECK(s.dim() == 4);
    CHECK_FALSE(jacobi_check(s).has_value());
    CHECK(s.c(1, 2, 3) == Scalar(1)); // su(2) block shifted by one

    for (const auto& name : catalog_names()) {
        INFO(name);
        auto entry = catalog(name);
        CHECK_FALSE(jacobi_check(entry.algebra).has_value());
        if (entry.subalgebra) {
            Subspace h = Subspace::from_rows(entry.algebra.dim(), *entry.subalgebra);
            CHECK(is_subalgebra(entry.algebra, h));
        }
    }
    CHECK_THROWS_AS(catalog("nope"), InputError);
    CHECK_THROWS_AS(catalog("abelian9"), InputError);
    CHECK_THROWS_AS(catalog("abelian0"), InputError);

    auto ex1 = catalog("paper_ex1");
    CHECK_FALSE(ex1.advisory.empty());
    Subspace h1 = Subspace::from_rows(4, *ex1.subalgebra);
    CHECK(is_ideal(ex1.algebra, h1));
    CHECK(compact_type(ex1.algebra).yes);

    auto ex2 = catalog("paper_ex2");
    Subspace h2 = Subspace::from_rows(6, *ex2.subalgebra);
    CHECK(h2.dim() == 2);
    CHECK(is_ideal(ex2.algebra, h2));
    CHECK(ex2.algebra.tau_free()); // t lives only in the marked subalgebra
    CHECK_FALSE(h2.basis().at(1, 2).is_rational());
}

TEST_CASE("compact type implies unimodular") {
    std::mt19937 rng(77);
    for (const auto& name : catalog_names()) {
        auto L = catalog(name).algebra;
        auto cert = compact_type(L);
        auto s = structure(L);
        INFO(name);
        if (cert.yes) CHECK(s.unimodular);
        // verdicts and unimodularity are basis-independent
        for (int it = 0; it < 3; ++it) {
            auto M = change_basis(L, rng);
            CHECK_FALSE(jacobi_check(M).has_value());
            CHECK(compact_type(M).yes == cert.yes);
            CHECK(structure(M).unimodular == s.unimodular);
        }
    }
}

TEST_CASE("compact type passes to quotients by ideals") {
    // across catalog (g, h) pairs with a marked ideal and t-free quotient table
    for (const auto& name : catalog_names()) {
        auto entry = catalog(name);
        if (!entry.subalgebra) continue;
        Subspace h = Subspace::from_rows(entry.algebra.dim(), *entry.subalgebra);
        if (!is_ideal(entry.algebra, h)) continue;
        auto q = quotient(entry.algebra, h);
        if (!q.algebra.tau_free()) continue;
        INFO(name);
        if (compact_type(entry.algebra).yes) CHECK(compact_type(q.algebra).yes);
    }
}

TEST_CASE("ideal implies subalgebra on random subspaces") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (const char* name : {"su2", "sl2r", "heis3", "paper_ex2", "tsu2"}) {
        auto L = catalog(name).algebra;
        const size_t n = L.dim();
        for (int it = 0; it < 25; ++it) {
            Matrix rows(1 + (it % 2), n);
            for (size_t i = 0; i < rows.rows(); ++i)
                for (size_t j = 0; j < n; ++j) rows.at(i, j) = Scalar(entry(rng));
            Subspace s = Subspace::from_rows(n, rows);
            if (is_ideal(L, s)) CHECK(is_subalgebra(L, s));
        }
    }
}

TEST_CASE("bracket bilinearity and ad matrices") {
    auto L = catalog("sl2r").algebra;
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int it = 0; it < 30; ++it) {
        std::vector<Scalar> x(3), y(3);
        for (auto& v : x) v = Scalar(entry(rng));
        for (auto& v : y) v = Scalar(entry(rng));
        CHECK(L.bracket(x, y) == sub(std::vector<Scalar>(3), L.bracket(y, x)));
        CHECK(L.ad(x).apply(y) == L.bracket(x, y));
    }
    for (size_t i = 0; i < 3; ++i) CHECK(L.ad(unit(3, i)) == L.ad_basis(i));
}
