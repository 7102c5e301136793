#pragma once

// Block-staircase constructions: the index arrays, the type algebras
// F I_n + span{matrix units}, and the balanced extremal algebra whose
// dimension attains M(l, n).

#include "lienil/algebra.hpp"
#include "lienil/bound.hpp"

namespace lienil {

struct BlockArray {
    i64 n = 0;
    std::vector<std::pair<i64, i64>> positions;  // 1-based, strictly upper
};

/// Staircase positions of a composition with positive parts: block p covers
/// rows (prefix_{p-1}, prefix_p] and columns (prefix_p, n]. Needs >= 2 parts.
BlockArray block_array(const CompositionVector& k);

/// F I_n + span{E_(i,j) : (i,j) in the block array}; closure, radical and
/// radical nilpotency are verified against the block structure.
MatrixAlgebra type_algebra(const FieldPtr& field, const CompositionVector& k);

/// Dimension of the type algebra, computed through the telescoping block
/// sum, the half-difference form and the pairwise-product form; all three
/// are asserted equal.
i64 type_algebra_dimension(const CompositionVector& k);

/// Type algebra of the balanced composition; dimension checked against
/// m_closed_form(l, n). Requires 2 <= l <= n.
MatrixAlgebra balanced_extremal(const FieldPtr& field, int l, i64 n);

}  // namespace lienil
