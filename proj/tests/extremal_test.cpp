#include "doctest.h"
#include "helpers.hpp"
#include "lienil/extremal.hpp"
#include "lienil/lie.hpp"

using namespace lienil;
using tt::GF;
using tt::Q;

namespace {

// every composition of n into exactly `parts` positive parts
void positive_compositions(i64 n, int parts, std::vector<i64>& acc,
                           std::vector<std::vector<i64>>& out) {
    if (parts == 1) {
        if (n >= 1) {
            acc.push_back(n);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (i64 k = 1; k + parts - 1 <= n; ++k) {
        acc.push_back(k);
        positive_compositions(n - k, parts - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<i64>> all_positive_compositions(i64 n) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> acc;
    for (int parts = 2; parts <= n; ++parts) positive_compositions(n, parts, acc, out);
    return out;
}

}  // namespace

TEST_CASE("block arrays") {
    BlockArray single = block_array(CompositionVector({1, 1}));
    CHECK(single.positions == std::vector<std::pair<i64, i64>>{{1, 2}});

    BlockArray two_three = block_array(CompositionVector({2, 3}));
    CHECK(two_three.positions.size() == 6);
    for (auto [i, j] : two_three.positions) {
        CHECK(i <= 2);
        CHECK(j >= 3);
    }

    BlockArray ones = block_array(CompositionVector({1, 1, 1}));
    CHECK(ones.positions == std::vector<std::pair<i64, i64>>{{1, 2}, {1, 3}, {2, 3}});

    CHECK_THROWS_AS(block_array(CompositionVector({1, 0, 2})), error);
    CHECK_THROWS_AS(block_array(CompositionVector({3})), error);
    for (auto [i, j] : block_array(CompositionVector({2, 1, 2})).positions) CHECK(i < j);
}

TEST_CASE("type algebra dimensions") {
    CHECK(type_algebra_dimension(CompositionVector({2, 3})) == 7);
    CHECK(type_algebra_dimension(CompositionVector({1, 2, 2})) == 9);
    for (i64 n = 2; n <= 8; ++n) {
        std::vector<i64> ones(static_cast<size_t>(n), 1);
        CHECK(type_algebra_dimension(CompositionVector(ones)) == (n * n - n) / 2 + 1);
    }
}

TEST_CASE("type algebra construction") {
    CHECK(type_algebra(Q(), CompositionVector({1, 1})).dim() == 2);
    CHECK(type_algebra(GF(5), CompositionVector({1, 1})).dim() == 2);

    MatrixAlgebra u3 = type_algebra(GF(2), CompositionVector({1, 1, 1}));
    CHECK(u3.dim() == 4);
    CHECK(u3.carrier() == tt::triangular_constant(GF(2), 3).carrier());

    CHECK(type_algebra(Q(), CompositionVector({2, 3})).dim() == 7);
}

TEST_CASE("closure dimension equals the formula for every composition") {
    for (i64 n = 2; n <= 5; ++n)
        for (const auto& parts : all_positive_compositions(n))
            for (const auto& f : {GF(2), GF(5), Q()}) {
                CompositionVector k(parts);
                MatrixAlgebra r = type_algebra(f, k);
                CHECK(r.dim() == type_algebra_dimension(k));
            }
}

TEST_CASE("radical nilpotency degree is exactly the part count") {
    for (i64 n = 2; n <= 5; ++n)
        for (const auto& parts : all_positive_compositions(n)) {
            CompositionVector k(parts);
            MatrixAlgebra r = type_algebra(GF(3), k);
            auto deg = nilpotency_degree(radical_triangular(r), r.n());
            REQUIRE(deg.has_value());
            CHECK(*deg == k.length());  // J^l = 0 and J^{l-1} != 0
        }
}

TEST_CASE("lie index stays below the part count and the bound is consistent") {
    for (i64 n = 2; n <= 5; ++n)
        for (const auto& parts : all_positive_compositions(n)) {
            CompositionVector k(parts);
            MatrixAlgebra r = type_algebra(GF(2), k);
            auto m = lie_nilpotence_index(r);
            REQUIRE(m.has_value());
            CHECK(*m <= k.length() - 1);
            CHECK(r.dim() <= m_closed_form(*m + 1, static_cast<i64>(r.n())));
        }
}

TEST_CASE("balanced extremal attains the bound") {
    MatrixAlgebra b24 = balanced_extremal(GF(5), 2, 4);
    CHECK(b24.dim() == 5);
    CHECK(b24.dim() == m_closed_form(2, 4));

    MatrixAlgebra b33 = balanced_extremal(Q(), 3, 3);
    CHECK(b33.dim() == 4);
    CHECK(b33.carrier() == tt::triangular_constant(Q(), 3).carrier());

    MatrixAlgebra b35 = balanced_extremal(GF(2), 3, 5);
    CHECK(b35.dim() == 9);
    auto m = lie_nilpotence_index(b35);
    REQUIRE(m.has_value());
    CHECK(*m <= 2);

    CHECK_THROWS_AS(balanced_extremal(GF(2), 1, 4), error);
    CHECK_THROWS_AS(balanced_extremal(GF(2), 5, 4), error);
}
