#include "doctest.h"
#include "helpers.hpp"

using namespace lienil;
using tt::GF;
using tt::mat;
using tt::Q;
using tt::span_ints;

TEST_CASE("rref basics") {
    auto f = Q();
    Matrix id = Matrix::identity(f, 3);
    RrefResult rr = rref(id);
    CHECK(rr.mat == id);
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});

    RrefResult zero = rref(Matrix(f, 3, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.pivots.empty());
}

TEST_CASE("rref over GF(2): dependent rows collapse") {
    // rows 110, 011, 101: third = first + second
    auto f = GF(2);
    RrefResult rr = rref(mat(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(rr.rank == 2);
    CHECK(rr.mat.row(2)[0] == Value(i64(0)));
}

TEST_CASE("rref is idempotent and canonical on random input") {
    std::mt19937_64 rng(3);
    for (const auto& f : {Q(), GF(5), tt::GF4()}) {
        for (int iter = 0; iter < 25; ++iter) {
            Matrix m = tt::random_matrix(f, 4, 5, rng);
            RrefResult once = rref(m);
            CHECK(rref(once.mat).mat == once.mat);
            // a row-reversed copy spans the same space, so same RREF
            Matrix shuffled(f, 4, 5);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 5; ++j) shuffled.at(i, j) = m.at(3 - i, j);
            CHECK(rref(shuffled).mat == once.mat);
        }
    }
}

TEST_CASE("subspace sum and intersection") {
    auto f = Q();
    Subspace e1 = span_ints(f, 3, {{1, 0, 0}});
    Subspace e2 = span_ints(f, 3, {{0, 1, 0}});
    CHECK(sum(e1, e2).dim() == 2);
    CHECK(intersect(e1, e1) == e1);
    CHECK(intersect(e1, e2).is_zero());
}

TEST_CASE("intersection matches the hand enumeration over GF(2)") {
    auto f = GF(2);
    Subspace a = span_ints(f, 3, {{1, 1, 0}, {0, 1, 1}});
    Subspace b = span_ints(f, 3, {{1, 0, 0}, {0, 0, 1}});
    // common vectors of the two spans: {000, 101}
    Subspace got = intersect(a, b);
    CHECK(got == span_ints(f, 3, {{1, 0, 1}}));
}

TEST_CASE("subspace ops agree with exhaustive GF(2) vector enumeration") {
    std::mt19937_64 rng(17);
    auto f = GF(2);
    for (int ambient = 2; ambient <= 6; ++ambient) {
        for (int iter = 0; iter < 40; ++iter) {
            Subspace a = Subspace::span(
                tt::random_matrix(f, 1 + static_cast<int>(rng() % 4), ambient, rng));
            Subspace b = Subspace::span(
                tt::random_matrix(f, 1 + static_cast<int>(rng() % 4), ambient, rng));
            auto va = tt::gf2_vectors(a);
            auto vb = tt::gf2_vectors(b);
            std::set<u64> expected_meet;
            for (u64 v : va)
                if (vb.count(v)) expected_meet.insert(v);
            CHECK(tt::gf2_vectors(intersect(a, b)) == expected_meet);
            std::set<u64> expected_sum;
            for (u64 x : va)
                for (u64 y : vb) expected_sum.insert(x ^ y);
            CHECK(tt::gf2_vectors(sum(a, b)) == expected_sum);
            bool expected_contains = true;
            for (u64 v : vb)
                if (!va.count(v)) expected_contains = false;
            CHECK(a.contains(b) == expected_contains);
            CHECK((a == b) == (va == vb));
        }
    }
}

TEST_CASE("grassmann identity on random pairs") {
    std::mt19937_64 rng(23);
    for (const auto& f : {Q(), GF(3), tt::GF4()}) {
        for (int iter = 0; iter < 30; ++iter) {
            int ambient = 3 + static_cast<int>(rng() % 4);
            Subspace a = Subspace::span(
                tt::random_matrix(f, 1 + static_cast<int>(rng() % ambient), ambient, rng));
            Subspace b = Subspace::span(
                tt::random_matrix(f, 1 + static_cast<int>(rng() % ambient), ambient, rng));
            CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
        }
    }
}

TEST_CASE("complement is greedy, exact and deterministic") {
    auto f = Q();
    Subspace inner = span_ints(f, 3, {{0, 1, 0}, {0, 0, 1}});
    Subspace outer = Subspace::full(f, 3);
    Subspace c = complement_within(inner, outer);
    CHECK(c == span_ints(f, 3, {{1, 0, 0}}));

    CHECK(complement_within(outer, outer).is_zero());
    CHECK(complement_within(Subspace::zero(f, 3), outer) == outer);
    CHECK_THROWS_AS(complement_within(span_ints(f, 3, {{1, 1, 1}}),
                                      span_ints(f, 3, {{1, 0, 0}})),
                    error);
}

TEST_CASE("complement properties on random inputs, both strategies") {
    std::mt19937_64 rng(31);
    for (const auto& f : {Q(), GF(2), GF(5)}) {
        for (int iter = 0; iter < 30; ++iter) {
            int ambient = 2 + static_cast<int>(rng() % 5);
            Subspace outer = Subspace::span(tt::random_matrix(f, ambient, ambient, rng));
            Matrix some_rows(f, std::max(1, outer.dim() / 2), ambient);
            for (int i = 0; i < some_rows.rows() && i < outer.dim(); ++i)
                for (int j = 0; j < ambient; ++j) some_rows.at(i, j) = outer.basis().at(i, j);
            Subspace inner = Subspace::span(some_rows);
            Subspace det1 = complement_within(inner, outer);
            Subspace det2 = complement_within(inner, outer);
            CHECK(det1 == det2);  // bit-identical rerun
            CHECK(sum(det1, inner) == outer);
            CHECK(intersect(det1, inner).is_zero());
            std::mt19937_64 sub(rng());
            Subspace seeded = complement_within_seeded(inner, outer, sub);
            CHECK(sum(seeded, inner) == outer);
            CHECK(intersect(seeded, inner).is_zero());
        }
    }
}

TEST_CASE("kernel of the row action") {
    auto f = Q();
    // candidates span{E12} in M_2, rows all of F^2: e1*E12 = e2 != 0
    Subspace cand = span_of_matrices(f, 2, {Matrix::unit(f, 2, 0, 1)});
    CHECK(kernel_of_action(Subspace::full(f, 2), cand, 2).is_zero());
    // empty row set leaves candidates unchanged
    CHECK(kernel_of_action(Subspace::zero(f, 2), cand, 2) == cand);
    // rows span{e1} in F^3, candidates span{E12, E23}: e1 kills E23 only
    Subspace cand2 =
        span_of_matrices(f, 3, {Matrix::unit(f, 3, 0, 1), Matrix::unit(f, 3, 1, 2)});
    Subspace got = kernel_of_action(span_ints(f, 3, {{1, 0, 0}}), cand2, 3);
    CHECK(got == span_of_matrices(f, 3, {Matrix::unit(f, 3, 1, 2)}));
}

TEST_CASE("matrix list to subspace and back") {
    auto f = Q();
    Subspace s = span_of_matrices(f, 2, {Matrix::identity(f, 2)});
    CHECK(s.dim() == 1);
    CHECK(s.basis().row(0)[0] == Value(mpq_class(1)));
    CHECK(s.basis().row(0)[3] == Value(mpq_class(1)));

    CHECK(span_of_matrices(f, 2, {}).is_zero());

    Matrix e12 = Matrix::unit(f, 2, 0, 1);
    CHECK(span_of_matrices(f, 2, {e12, e12.scaled(f->from_int(2))}).dim() == 1);

    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Matrix> ms;
        for (int k = 0; k < 3; ++k) ms.push_back(tt::random_matrix(GF(5), 3, 3, rng));
        Subspace sp = span_of_matrices(GF(5), 3, ms);
        CHECK(span_of_matrices(GF(5), 3, subspace_matrices(sp, 3)) == sp);  // round trip on spans
    }
}

TEST_CASE("matrix inverse") {
    auto f = GF(7);
    std::mt19937_64 rng(5);
    Matrix u = tt::random_invertible(f, 4, rng);
    auto u_inv = inverse(u);
    REQUIRE(u_inv.has_value());
    CHECK(*u_inv * u == Matrix::identity(f, 4));
    CHECK(u * *u_inv == Matrix::identity(f, 4));
    Matrix singular(f, 2, 2);
    singular.at(0, 0) = f->one();
    CHECK(!inverse(singular).has_value());
}
