#pragma once

// Commutator structure: left-normed brackets, lower central and derived
// series, nilpotence/solvability indices, Engel checks, and the symbolic
// expansion of left-normed brackets into permutation words.

#include <map>
#include <optional>

#include "lienil/algebra.hpp"

namespace lienil {

/// ab - ba.
Matrix bracket(const Matrix& a, const Matrix& b);

/// [[x1,x2,...,x_{m-1}], x_m] recursively; a single element is itself.
Matrix left_normed(std::span<const Matrix> xs);

/// S_1 = carrier, S_{k+1} = span{[a, b] : a in basis(S_k), b in basis(S_1)},
/// iterated until the series vanishes or stabilizes; the full list is
/// returned including the terminal subspace.
std::vector<Subspace> lower_central_series(const MatrixAlgebra& r);

/// Least m with S_{m+1} = 0, or nullopt when the series stabilizes nonzero.
std::optional<int> lie_nilpotence_index(const MatrixAlgebra& r);

/// g_1 = carrier, g_{k+1} = span{[a, b] : a, b in basis(g_k)}.
std::vector<Subspace> derived_series(const MatrixAlgebra& r);

/// Least m with g_{m+1} = 0, or nullopt when the series stabilizes nonzero.
std::optional<int> lie_solvability_index(const MatrixAlgebra& r);

/// Exhaustive check of [x, y, ..., y] = 0 (y repeated m times) over all
/// element pairs of a finite algebra; requires p^dim <= 10^6.
bool engel_check_bruteforce(const MatrixAlgebra& r, int m);

/// Symbolic expansion of the left-normed bracket of length m into signed
/// permutation words: sum over words w of coeff(w) * x_{w1} x_{w2} ... x_{wm}.
struct BracketExpansion {
    int length = 0;
    std::map<std::vector<int>, int> terms;  // word (1-based indices) -> -1 or +1
};

/// Requires 2 <= m <= 8 (term count doubles per step).
BracketExpansion expand_left_normed(int m);

/// Evaluate an expansion on concrete matrices.
Matrix evaluate_expansion(const BracketExpansion& e, std::span<const Matrix> xs);

}  // namespace lienil
