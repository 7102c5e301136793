#include "lienil/subspace.hpp"

namespace lienil {

Subspace Subspace::zero(FieldPtr field, int ambient) {
    return Subspace(field, ambient, Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(FieldPtr field, int ambient) {
    std::vector<int> piv(ambient);
    for (int i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(field, ambient, Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Matrix basis(rows.field(), rr.rank, rows.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = rr.mat.at(i, j);
    return Subspace(rows.field(), rows.cols(), std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::span_rows(FieldPtr field, int ambient, std::vector<std::vector<Value>> rows) {
    Matrix m(field, static_cast<int>(rows.size()), ambient);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != ambient) throw error("span_rows: bad row length");
        for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = std::move(rows[i][j]);
    }
    return span(m);
}

std::vector<Value> Subspace::reduce(std::span<const Value> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw error("reduce: ambient mismatch");
    const FieldPtr& f = field_;
    std::vector<Value> w(v.begin(), v.end());
    for (int i = 0; i < dim(); ++i) {
        const Value& c = w[pivots_[i]];
        if (f->is_zero(c)) continue;
        Value factor = c;
        for (int j = pivots_[i]; j < ambient_; ++j)
            w[j] = f->sub(w[j], f->mul(factor, basis_.at(i, j)));
    }
    return w;
}

bool Subspace::contains_vector(std::span<const Value> v) const {
    std::vector<Value> w = reduce(v);
    for (const Value& x : w)
        if (!field_->is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_same_field(field_, other.field_, "subspace contains");
    if (ambient_ != other.ambient_) throw error("subspace contains: ambient mismatch");
    if (other.dim() > dim()) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains_vector(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return same_field(field_, other.field_) && ambient_ == other.ambient_ &&
           basis_ == other.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field(), "subspace sum");
    if (a.ambient() != b.ambient()) throw error("subspace sum: ambient mismatch");
    Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field(), "subspace intersect");
    if (a.ambient() != b.ambient()) throw error("subspace intersect: ambient mismatch");
    const FieldPtr& f = a.field();
    const int n = a.ambient();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n);
    // joint kernel: coefficient pairs (alpha, beta) with alpha*A = beta*B,
    // i.e. left null space of [A; -B], found as kernel of its transpose
    Matrix t(f, n, a.dim() + b.dim());
    for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < n; ++i) t.at(i, j) = a.basis().at(j, i);
    for (int j = 0; j < b.dim(); ++j)
        for (int i = 0; i < n; ++i) t.at(i, a.dim() + j) = f->neg(b.basis().at(j, i));
    Subspace coeff = kernel(t);
    Matrix rows(f, coeff.dim(), n);
    for (int r = 0; r < coeff.dim(); ++r) {
        std::vector<Value> v(n, f->zero());
        for (int j = 0; j < a.dim(); ++j) {
            const Value& c = coeff.basis().at(r, j);
            if (f->is_zero(c)) continue;
            for (int i = 0; i < n; ++i)
                v[i] = f->add(v[i], f->mul(c, a.basis().at(j, i)));
        }
        for (int i = 0; i < n; ++i) rows.at(r, i) = std::move(v[i]);
    }
    return Subspace::span(rows);
}

Subspace kernel(const Matrix& m) {
    const FieldPtr& f = m.field();
    const int n = m.cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    Matrix rows(f, n - rr.rank, n);
    int r = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        rows.at(r, free) = f->one();
        for (int i = 0; i < rr.rank; ++i)
            rows.at(r, rr.pivots[i]) = f->neg(rr.mat.at(i, free));
        ++r;
    }
    return Subspace::span(rows);
}

Subspace complement_within(const Subspace& inner, const Subspace& outer) {
    require_same_field(inner.field(), outer.field(), "complement");
    if (inner.ambient() != outer.ambient()) throw error("complement: ambient mismatch");
    if (!outer.contains(inner)) throw error("complement: inner is not contained in outer");
    const FieldPtr& f = inner.field();
    Matrix kept(f, outer.dim() - inner.dim(), outer.ambient());
    int nkept = 0;
    Subspace acc = inner;
    for (int i = 0; i < outer.dim(); ++i) {
        if (acc.contains_vector(outer.basis().row(i))) continue;
        for (int j = 0; j < outer.ambient(); ++j) kept.at(nkept, j) = outer.basis().at(i, j);
        ++nkept;
        Matrix one_row(f, 1, outer.ambient());
        for (int j = 0; j < outer.ambient(); ++j) one_row.at(0, j) = outer.basis().at(i, j);
        acc = sum(acc, Subspace::span(one_row));
    }
    if (nkept != outer.dim() - inner.dim()) throw error("complement: dimension bookkeeping failed");
    return Subspace::span(kept);
}

Subspace complement_within_seeded(const Subspace& inner, const Subspace& outer,
                                  std::mt19937_64& rng) {
    require_same_field(inner.field(), outer.field(), "complement");
    if (inner.ambient() != outer.ambient()) throw error("complement: ambient mismatch");
    if (!outer.contains(inner)) throw error("complement: inner is not contained in outer");
    const FieldPtr& f = inner.field();
    const int target = outer.dim() - inner.dim();
    Matrix kept(f, target, outer.ambient());
    int nkept = 0;
    Subspace acc = inner;
    u64 attempts = 0;
    const u64 max_attempts = 1024 + 512ULL * static_cast<u64>(target + 1);
    while (nkept < target) {
        if (++attempts > max_attempts)
            throw error("seeded complement: sampling failed to make progress");
        std::vector<Value> v(outer.ambient(), f->zero());
        for (int i = 0; i < outer.dim(); ++i) {
            Value c = f->sample(rng);
            if (f->is_zero(c)) continue;
            for (int j = 0; j < outer.ambient(); ++j)
                v[j] = f->add(v[j], f->mul(c, outer.basis().at(i, j)));
        }
        if (acc.contains_vector(v)) continue;
        for (int j = 0; j < outer.ambient(); ++j) kept.at(nkept, j) = v[j];
        ++nkept;
        Matrix one_row(f, 1, outer.ambient());
        for (int j = 0; j < outer.ambient(); ++j) one_row.at(0, j) = std::move(v[j]);
        acc = sum(acc, Subspace::span(one_row));
    }
    return Subspace::span(kept);
}

Subspace span_of_matrices(const FieldPtr& field, int n, const std::vector<Matrix>& mats) {
    Matrix rows(field, static_cast<int>(mats.size()), n * n);
    for (size_t k = 0; k < mats.size(); ++k) {
        const Matrix& m = mats[k];
        require_same_field(field, m.field(), "span_of_matrices");
        if (m.rows() != n || m.cols() != n) throw error("span_of_matrices: dimension mismatch");
        const auto& flat = m.flat();
        for (int j = 0; j < n * n; ++j) rows.at(static_cast<int>(k), j) = flat[j];
    }
    return Subspace::span(rows);
}

std::vector<Matrix> subspace_matrices(const Subspace& s, int n) {
    if (s.ambient() != n * n) throw error("subspace_matrices: ambient is not n^2");
    std::vector<Matrix> out;
    out.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) out.push_back(unflatten(s.field(), n, s.basis().row(i)));
    return out;
}

}  // namespace lienil
