#pragma once

// Shared fixtures for the test suites.

#include <set>

#include "lienil/algebra.hpp"

namespace tt {

using namespace lienil;

inline FieldPtr Q() { return FieldSpec::rationals(); }
inline FieldPtr GF(i64 p) { return FieldSpec::prime(p); }
inline FieldPtr GF4() { return FieldSpec::extension(2, 2, {1, 1, 1}); }
inline FieldPtr GF9() { return FieldSpec::extension(3, 2, {2, 2, 1}); }

/// Matrix from an integer grid.
inline Matrix mat(const FieldPtr& f, std::vector<std::vector<i64>> grid) {
    Matrix m(f, static_cast<int>(grid.size()),
             grid.empty() ? 0 : static_cast<int>(grid[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f->from_int(grid[i][j]);
    return m;
}

/// Row vector from integers.
inline std::vector<Value> vec(const FieldPtr& f, std::vector<i64> entries) {
    std::vector<Value> v;
    v.reserve(entries.size());
    for (i64 e : entries) v.push_back(f->from_int(e));
    return v;
}

inline Subspace span_ints(const FieldPtr& f, int ambient, std::vector<std::vector<i64>> rows) {
    Matrix m(f, static_cast<int>(rows.size()), ambient);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < ambient; ++j) m.at(i, j) = f->from_int(rows[i][j]);
    return Subspace::span(m);
}

inline Matrix random_matrix(const FieldPtr& f, int rows, int cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = f->sample(rng);
    return m;
}

inline Matrix random_invertible(const FieldPtr& f, int n, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(f, n, n, rng);
        if (inverse(m)) return m;
    }
    throw error("random_invertible: no invertible sample found");
}

/// Exhaustive list of coordinate tuples in a GF(2) subspace, as bitmasks.
/// Independent oracle for the subspace arithmetic (ambient <= 20).
inline std::set<u64> gf2_vectors(const Subspace& s) {
    const int n = s.ambient();
    std::set<u64> out;
    const int d = s.dim();
    for (u64 combo = 0; combo < (u64(1) << d); ++combo) {
        u64 v = 0;
        for (int i = 0; i < d; ++i) {
            if (!(combo & (u64(1) << i))) continue;
            for (int j = 0; j < n; ++j)
                if (std::get<i64>(s.basis().at(i, j)) != 0) v ^= u64(1) << j;
        }
        out.insert(v);
    }
    return out;
}

/// The constant-diagonal upper triangular algebra on n points.
inline MatrixAlgebra triangular_constant(const FieldPtr& f, int n) {
    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) gens.push_back(Matrix::unit(f, n, i, j));
    return close_generators(f, n, gens, true);
}

}  // namespace tt
