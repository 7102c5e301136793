#include "lienil/extremal.hpp"

#include "lienil/lie.hpp"

namespace lienil {

BlockArray block_array(const CompositionVector& k) {
    if (k.length() < 2) throw error("block_array: needs at least two parts");
    if (!k.all_positive()) throw error("block_array: parts must be positive");
    const i64 n = k.total();
    BlockArray out;
    out.n = n;
    i64 prefix = 0;
    for (int p = 0; p + 1 < k.length(); ++p) {
        i64 lo = prefix;           // rows (lo, lo + k_p]
        prefix += k.parts()[p];    // columns (prefix, n]
        for (i64 i = lo + 1; i <= prefix; ++i)
            for (i64 j = prefix + 1; j <= n; ++j) out.positions.emplace_back(i, j);
    }
    return out;
}

MatrixAlgebra type_algebra(const FieldPtr& field, const CompositionVector& k) {
    BlockArray b = block_array(k);
    const int n = static_cast<int>(b.n);
    std::vector<Matrix> gens;
    gens.reserve(b.positions.size());
    for (auto [i, j] : b.positions)
        gens.push_back(Matrix::unit(field, n, static_cast<int>(i) - 1, static_cast<int>(j) - 1));
    MatrixAlgebra r = close_generators(field, n, gens, /*unital=*/true);
    if (r.dim() != type_algebra_dimension(k))
        throw error("type_algebra: closure dimension disagrees with the block formula");
    Subspace j = radical_triangular(r);
    if (j != span_of_matrices(field, n, gens))
        throw error("type_algebra: radical is not the span of the block units");
    auto deg = nilpotency_degree(j, n);
    if (!deg || *deg > k.length())
        throw error("type_algebra: radical nilpotency degree exceeds the part count");
    return r;
}

i64 type_algebra_dimension(const CompositionVector& k) {
    if (!k.all_positive()) throw error("type_algebra_dimension: parts must be positive");
    const i64 n = k.total();
    // telescoping block sum
    i64 telescoping = 1;
    i64 prefix = 0;
    for (int j = 0; j + 1 < k.length(); ++j) {
        prefix += k.parts()[j];
        telescoping += k.parts()[j] * (n - prefix);
    }
    // half-difference form
    i64 half = (n * n - k.norm_sq()) / 2 + 1;
    // pairwise products
    i64 pairwise = 1;
    for (int i = 0; i < k.length(); ++i)
        for (int j = i + 1; j < k.length(); ++j) pairwise += k.parts()[i] * k.parts()[j];
    if (telescoping != half || half != pairwise)
        throw error("type_algebra_dimension: the three closed forms disagree");
    return half;
}

MatrixAlgebra balanced_extremal(const FieldPtr& field, int l, i64 n) {
    if (l < 2 || n < l) throw error("balanced_extremal: requires 2 <= l <= n");
    CompositionVector d = balanced_composition(l, n);
    MatrixAlgebra r = type_algebra(field, d);
    if (r.dim() != m_closed_form(l, n))
        throw error("balanced_extremal: dimension does not attain the bound");
    auto m = lie_nilpotence_index(r);
    if (!m || *m > l - 1)
        throw error("balanced_extremal: nilpotence index exceeds parts minus one");
    return r;
}

}  // namespace lienil
