#pragma once

// Dense exact matrices over a FieldSpec, row-major.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/field.hpp"

namespace lienil {

class Matrix {
  public:
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix identity(FieldPtr field, int n);
    /// Matrix unit with a single 1 at (i, j), 0-based.
    static Matrix unit(FieldPtr field, int n, int i, int j);
    static Matrix from_rows(FieldPtr field, std::vector<std::vector<Value>> rows);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Value& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Value& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Scalar entry(int i, int j) const { return Scalar(field_, at(i, j)); }
    void set(int i, int j, Value v) { at(i, j) = std::move(v); }

    std::span<const Value> row(int i) const {
        return {e_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    /// Row-major flattening of all entries (the matrix-space coordinates).
    const std::vector<Value>& flat() const { return e_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Value& c) const;
    Matrix negated() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_upper_triangular() const;
    /// All diagonal entries equal (requires square).
    bool has_constant_diagonal() const;
    bool is_strictly_upper_triangular() const;
    Value trace() const;

    std::string str() const;

  private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Value> e_;
};

struct RrefResult {
    Matrix mat;
    int rank;
    std::vector<int> pivots;
};

/// Unique reduced row echelon form over the matrix's field.
RrefResult rref(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
int matrix_rank(const Matrix& m);

/// Row vector times matrix: result_j = sum_i x_i * A_ij.
std::vector<Value> act_row(std::span<const Value> x, const Matrix& a);

/// Unflatten length-n^2 coordinates back into an n x n matrix.
Matrix unflatten(const FieldPtr& field, int n, std::span<const Value> coords);

}  // namespace lienil
