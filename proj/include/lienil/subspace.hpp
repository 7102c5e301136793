#pragma once

// Linear subspaces of F^N held in canonical RREF basis form, so that equal
// subspaces have structurally equal bases.

#include <random>
#include <span>
#include <vector>

#include "lienil/matrix.hpp"

namespace lienil {

class Subspace {
  public:
    static Subspace zero(FieldPtr field, int ambient);
    static Subspace full(FieldPtr field, int ambient);
    /// Row space of the given matrix.
    static Subspace span(const Matrix& rows);
    static Subspace span_rows(FieldPtr field, int ambient, std::vector<std::vector<Value>> rows);

    const FieldPtr& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    /// RREF basis, one row per basis vector; no zero rows.
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_vector(std::span<const Value> v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Residue of v after reduction against the basis (zero iff contained).
    std::vector<Value> reduce(std::span<const Value> v) const;

  private:
    Subspace(FieldPtr field, int ambient, Matrix basis, std::vector<int> pivots)
        : field_(std::move(field)), ambient_(ambient), basis_(std::move(basis)),
          pivots_(std::move(pivots)) {}

    FieldPtr field_;
    int ambient_ = 0;
    Matrix basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Right null space {x : m x^T = 0} as a subspace of F^cols.
Subspace kernel(const Matrix& m);

/// Deterministic complement: scan outer's RREF basis rows in order, keeping
/// each row that enlarges the span of inner plus the rows kept so far.
Subspace complement_within(const Subspace& inner, const Subspace& outer);

/// Seeded-random complement; same contract, basis drawn from random
/// combinations of outer's basis.
Subspace complement_within_seeded(const Subspace& inner, const Subspace& outer,
                                  std::mt19937_64& rng);

/// Span of the flattened matrices inside F^{n^2}.
Subspace span_of_matrices(const FieldPtr& field, int n, const std::vector<Matrix>& mats);

/// RREF basis of a matrix-space subspace, unflattened.
std::vector<Matrix> subspace_matrices(const Subspace& s, int n);

}  // namespace lienil
