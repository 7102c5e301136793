#include "lienil/algebra.hpp"

#include <algorithm>

namespace lienil {

namespace {

Subspace strict_upper_subspace(const FieldPtr& field, int n) {
    std::vector<Matrix> units;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) units.push_back(Matrix::unit(field, n, i, j));
    return span_of_matrices(field, n, units);
}

u64 checked_pow(u64 base, int exp, u64 cap) {
    u64 acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > cap / base) return cap + 1;
        acc *= base;
    }
    return acc;
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(FieldPtr field, int n, Subspace carrier, bool unital)
    : field_(std::move(field)), n_(n), carrier_(std::move(carrier)), unital_(unital) {
    if (carrier_.ambient() != n * n) throw error("algebra: carrier ambient must be n^2");
    require_same_field(field_, carrier_.field(), "algebra carrier");
    if (unital_) {
        Matrix id = Matrix::identity(field_, n_);
        if (!carrier_.contains_vector(id.flat()))
            throw error("algebra: unital flag set but I_n is not in the carrier");
    }
    std::vector<Matrix> basis = basis_matrices();
    for (const Matrix& a : basis)
        for (const Matrix& b : basis) {
            Matrix prod = a * b;
            if (!carrier_.contains_vector(prod.flat()))
                throw error("algebra: carrier is not multiplicatively closed");
        }
}

bool MatrixAlgebra::contains(const Matrix& m) const {
    return m.rows() == n_ && m.cols() == n_ && carrier_.contains_vector(m.flat());
}

bool MatrixAlgebra::is_triangular_constant_diagonal() const {
    for (const Matrix& b : basis_matrices())
        if (!b.is_upper_triangular() || !b.has_constant_diagonal()) return false;
    return true;
}

MatrixAlgebra close_generators(const FieldPtr& field, int n, const std::vector<Matrix>& gens,
                               bool unital) {
    std::vector<Matrix> seed = gens;
    for (const Matrix& g : seed) {
        require_same_field(field, g.field(), "close_generators");
        if (g.rows() != n || g.cols() != n) throw error("close_generators: generator shape mismatch");
    }
    if (unital) seed.push_back(Matrix::identity(field, n));
    Subspace acc = span_of_matrices(field, n, seed);
    while (true) {
        std::vector<Matrix> basis = subspace_matrices(acc, n);
        std::vector<Matrix> batch = basis;
        for (const Matrix& a : basis)
            for (const Matrix& b : basis) {
                Matrix prod = a * b;
                if (!acc.contains_vector(prod.flat())) batch.push_back(std::move(prod));
            }
        if (batch.size() == basis.size()) break;
        Subspace bigger = span_of_matrices(field, n, batch);
        if (bigger.dim() == acc.dim()) break;
        acc = std::move(bigger);
    }
    return MatrixAlgebra(field, n, std::move(acc), unital);
}

Subspace kernel_of_action(const Subspace& rows, const Subspace& candidates, int n) {
    require_same_field(rows.field(), candidates.field(), "kernel_of_action");
    if (rows.ambient() != n || candidates.ambient() != n * n)
        throw error("kernel_of_action: shape mismatch");
    const FieldPtr& f = rows.field();
    if (rows.dim() == 0 || candidates.dim() == 0) return candidates;
    const int d = candidates.dim();
    std::vector<Matrix> cand = subspace_matrices(candidates, n);
    Matrix h(f, rows.dim() * n, d);
    for (int i = 0; i < rows.dim(); ++i) {
        for (int k = 0; k < d; ++k) {
            std::vector<Value> image = act_row(rows.basis().row(i), cand[k]);
            for (int t = 0; t < n; ++t) h.at(i * n + t, k) = std::move(image[t]);
        }
    }
    Subspace coeff = kernel(h);
    Matrix out(f, coeff.dim(), n * n);
    for (int r = 0; r < coeff.dim(); ++r) {
        std::vector<Value> v(static_cast<size_t>(n) * n, f->zero());
        for (int k = 0; k < d; ++k) {
            const Value& c = coeff.basis().at(r, k);
            if (f->is_zero(c)) continue;
            const auto& flat = cand[k].flat();
            for (int j = 0; j < n * n; ++j) v[j] = f->add(v[j], f->mul(c, flat[j]));
        }
        for (int j = 0; j < n * n; ++j) out.at(r, j) = std::move(v[j]);
    }
    return Subspace::span(out);
}

Subspace annihilator(const Subspace& ideal, const Subspace& x_rows, int n) {
    return kernel_of_action(x_rows, ideal, n);
}

Subspace module_product(const Subspace& w_rows, const Subspace& s_mats, int n) {
    require_same_field(w_rows.field(), s_mats.field(), "module_product");
    if (w_rows.ambient() != n || s_mats.ambient() != n * n)
        throw error("module_product: shape mismatch");
    const FieldPtr& f = w_rows.field();
    if (w_rows.dim() == 0 || s_mats.dim() == 0) return Subspace::zero(f, n);
    std::vector<Matrix> mats = subspace_matrices(s_mats, n);
    Matrix rows(f, w_rows.dim() * s_mats.dim(), n);
    int r = 0;
    for (int i = 0; i < w_rows.dim(); ++i)
        for (const Matrix& m : mats) {
            std::vector<Value> image = act_row(w_rows.basis().row(i), m);
            for (int j = 0; j < n; ++j) rows.at(r, j) = std::move(image[j]);
            ++r;
        }
    return Subspace::span(rows);
}

Subspace matspace_product(const Subspace& a, const Subspace& b, int n) {
    require_same_field(a.field(), b.field(), "matspace_product");
    if (a.ambient() != n * n || b.ambient() != n * n)
        throw error("matspace_product: shape mismatch");
    const FieldPtr& f = a.field();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n * n);
    std::vector<Matrix> am = subspace_matrices(a, n);
    std::vector<Matrix> bm = subspace_matrices(b, n);
    std::vector<Matrix> prods;
    prods.reserve(am.size() * bm.size());
    for (const Matrix& x : am)
        for (const Matrix& y : bm) prods.push_back(x * y);
    return span_of_matrices(f, n, prods);
}

std::optional<int> nilpotency_degree(const Subspace& s_mats, int n) {
    if (s_mats.dim() == 0) return 1;
    Subspace power = s_mats;
    for (int k = 1; k <= n; ++k) {
        if (power.dim() == 0) return k;
        power = matspace_product(power, s_mats, n);
    }
    return power.dim() == 0 ? std::optional<int>(n + 1) : std::nullopt;
}

Subspace radical_triangular(const MatrixAlgebra& r) {
    for (const Matrix& b : r.basis_matrices())
        if (!b.is_upper_triangular())
            throw error("radical: carrier has a non-triangular basis element; "
                        "triangularize_local first");
    const int n = r.n();
    Subspace j = intersect(r.carrier(), strict_upper_subspace(r.field(), n));
    auto deg = nilpotency_degree(j, n);
    if (!deg) throw error("radical: strict part failed the nilpotency check");
    // two-sided ideal check
    for (const Matrix& a : r.basis_matrices())
        for (const Matrix& x : subspace_matrices(j, n)) {
            if (!j.contains_vector((a * x).flat()) || !j.contains_vector((x * a).flat()))
                throw error("radical: strict part is not an ideal of the carrier");
        }
    if (r.is_triangular_constant_diagonal() && r.contains(Matrix::identity(r.field(), n))) {
        // constant-diagonal case decomposes as F I + radical
        if (j.dim() + 1 != r.dim())
            throw error("radical: carrier is not F I plus its strict part");
    }
    return j;
}

Subspace radical_rational_trace_form(const MatrixAlgebra& r) {
    const FieldPtr& f = r.field();
    if (f->kind() != FieldKind::rational)
        throw error("trace-form radical: rationals only (the form degenerates in positive "
                    "characteristic)");
    const int d = r.dim();
    const int n = r.n();
    if (d == 0) return Subspace::zero(f, n * n);
    std::vector<Matrix> basis = r.basis_matrices();
    Matrix gram(f, d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) gram.at(j, k) = (basis[k] * basis[j]).trace();
    Subspace coeff = kernel(gram);
    Matrix out(f, coeff.dim(), n * n);
    for (int rr = 0; rr < coeff.dim(); ++rr) {
        std::vector<Value> v(static_cast<size_t>(n) * n, f->zero());
        for (int k = 0; k < d; ++k) {
            const Value& c = coeff.basis().at(rr, k);
            if (f->is_zero(c)) continue;
            const auto& flat = basis[k].flat();
            for (int t = 0; t < n * n; ++t) v[t] = f->add(v[t], f->mul(c, flat[t]));
        }
        for (int t = 0; t < n * n; ++t) out.at(rr, t) = std::move(v[t]);
    }
    return Subspace::span(out);
}

Subspace center(const MatrixAlgebra& r) {
    const FieldPtr& f = r.field();
    const int n = r.n();
    const int d = r.dim();
    if (d == 0) return Subspace::zero(f, n * n);
    std::vector<Matrix> basis = r.basis_matrices();
    Matrix h(f, d * n * n, d);
    for (int jx = 0; jx < d; ++jx)
        for (int k = 0; k < d; ++k) {
            Matrix comm = basis[k] * basis[jx] - basis[jx] * basis[k];
            const auto& flat = comm.flat();
            for (int t = 0; t < n * n; ++t) h.at(jx * n * n + t, k) = flat[t];
        }
    Subspace coeff = kernel(h);
    Matrix out(f, coeff.dim(), n * n);
    for (int rr = 0; rr < coeff.dim(); ++rr) {
        std::vector<Value> v(static_cast<size_t>(n) * n, f->zero());
        for (int k = 0; k < d; ++k) {
            const Value& c = coeff.basis().at(rr, k);
            if (f->is_zero(c)) continue;
            const auto& flat = basis[k].flat();
            for (int t = 0; t < n * n; ++t) v[t] = f->add(v[t], f->mul(c, flat[t]));
        }
        for (int t = 0; t < n * n; ++t) out.at(rr, t) = std::move(v[t]);
    }
    return Subspace::span(out);
}

MatrixAlgebra extend_scalars(const MatrixAlgebra& r, const FieldPtr& target) {
    const FieldPtr& base = r.field();
    if (base->kind() != FieldKind::prime)
        throw error("extend_scalars: base field must be a prime field");
    if (target->kind() != FieldKind::extension ||
        target->characteristic() != base->characteristic())
        throw error("extend_scalars: characteristic mismatch");
    const int n = r.n();
    Matrix rows(target, r.dim(), n * n);
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < n * n; ++j)
            rows.at(i, j) = target->embed_from_prime(*base, r.carrier().basis().at(i, j));
    MatrixAlgebra out(target, n, Subspace::span(rows), r.unital());
    if (out.dim() != r.dim()) throw error("extend_scalars: dimension changed");
    return out;
}

MatrixAlgebra conjugate(const MatrixAlgebra& r, const Matrix& u) {
    if (u.rows() != r.n() || u.cols() != r.n()) throw error("conjugate: shape mismatch");
    auto u_inv = inverse(u);
    if (!u_inv) throw error("conjugate: singular matrix");
    std::vector<Matrix> mapped;
    mapped.reserve(r.dim());
    for (const Matrix& b : r.basis_matrices()) mapped.push_back(*u_inv * b * u);
    MatrixAlgebra out(r.field(), r.n(), span_of_matrices(r.field(), r.n(), mapped), r.unital());
    if (out.dim() != r.dim()) throw error("conjugate: dimension changed");
    return out;
}

std::vector<Matrix> enumerate_idempotents(const MatrixAlgebra& r) {
    const FieldPtr& f = r.field();
    if (f->kind() != FieldKind::prime)
        throw error("idempotent enumeration: prime fields only");
    const u64 p = static_cast<u64>(f->characteristic());
    const int d = r.dim();
    if (checked_pow(p, d, 1000000) > 1000000)
        throw error("idempotent enumeration: algebra too large for brute force (p^dim > 10^6)");
    const int n = r.n();
    std::vector<Matrix> basis = r.basis_matrices();
    std::vector<Matrix> found;
    std::vector<u64> digits(d, 0);
    Matrix current(f, n, n);
    const u64 total = checked_pow(p, d, 1000000);
    for (u64 step = 0;; ++step) {
        if (current * current == current) found.push_back(current);
        if (step + 1 == total) break;
        // odometer advance: each digit rollover adds the next basis matrix once
        // (incrementing a digit mod p changes the element by +B_k in either case)
        for (int k = 0; k < d; ++k) {
            current = current + basis[k];
            digits[k] = (digits[k] + 1) % p;
            if (digits[k] != 0) break;
        }
    }
    return found;
}

MatrixAlgebra corner_algebra(const MatrixAlgebra& r, const Matrix& e) {
    const int n = r.n();
    std::vector<Matrix> gens;
    gens.reserve(r.dim());
    for (const Matrix& b : r.basis_matrices()) gens.push_back(e * b * e);
    Subspace carrier = span_of_matrices(r.field(), n, gens);
    bool unital = carrier.contains_vector(Matrix::identity(r.field(), n).flat());
    return MatrixAlgebra(r.field(), n, std::move(carrier), unital);
}

std::vector<PeirceFactor> peirce_decompose(const MatrixAlgebra& r) {
    const FieldPtr& f = r.field();
    const int n = r.n();
    if (!r.unital()) throw error("peirce: algebra must be unital");
    std::vector<Matrix> idems = enumerate_idempotents(r);
    Subspace z = center(r);
    for (const Matrix& e : idems)
        if (!z.contains_vector(e.flat()))
            throw error("peirce: non-central idempotent found (the algebra fails the Engel "
                        "condition); decomposition refused:\n" + e.str());
    std::vector<Matrix> nonzero;
    for (const Matrix& e : idems)
        if (!e.is_zero()) nonzero.push_back(e);
    // atoms of the Boolean algebra of central idempotents
    std::vector<Matrix> atoms;
    for (const Matrix& e : nonzero) {
        bool primitive = true;
        for (const Matrix& g : nonzero) {
            if (g == e) continue;
            if (g * e == g) {
                primitive = false;
                break;
            }
        }
        if (primitive) atoms.push_back(e);
    }
    Matrix total(f, n, n);
    for (size_t i = 0; i < atoms.size(); ++i) {
        total = total + atoms[i];
        for (size_t j = 0; j < atoms.size(); ++j)
            if (i != j && !(atoms[i] * atoms[j]).is_zero())
                throw error("peirce: primitive idempotents are not orthogonal");
    }
    if (total != Matrix::identity(f, n))
        throw error("peirce: primitive idempotents do not sum to the identity");
    std::vector<PeirceFactor> out;
    int rank_total = 0;
    for (const Matrix& e : atoms) {
        int rk = matrix_rank(e);
        rank_total += rk;
        out.push_back(PeirceFactor{e, corner_algebra(r, e), rk});
    }
    if (rank_total != n) throw error("peirce: idempotent ranks do not sum to n");
    return out;
}

Matrix triangularize_local(const MatrixAlgebra& r) {
    const FieldPtr& f = r.field();
    const int n = r.n();
    if (r.is_triangular_constant_diagonal()) return Matrix::identity(f, n);
    Matrix id = Matrix::identity(f, n);
    if (!r.contains(id))
        throw error("triangularize: not split local over this field (I_n not in carrier)");
    // scalar part of each basis element: the unique lambda with (B - lambda I)^n = 0
    auto scalar_part = [&](const Matrix& b) -> Value {
        auto nilpotent = [&](const Matrix& m) {
            Matrix acc = m;
            for (int k = 1; k < n; ++k) acc = acc * m;
            return acc.is_zero();
        };
        if (f->kind() == FieldKind::rational) {
            Value lam = f->div(b.trace(), f->from_int(n));
            if (!nilpotent(b - id.scaled(lam)))
                throw error("triangularize: not split local over this field");
            return lam;
        }
        u64 q = f->order();
        if (q > 1000000) throw error("triangularize: field too large for the eigenvalue scan");
        for (u64 idx = 0; idx < q; ++idx) {
            Value lam = f->element_at(idx);
            if (nilpotent(b - id.scaled(lam))) return lam;
        }
        throw error("triangularize: not split local over this field");
    };
    std::vector<Matrix> nil_gens;
    for (const Matrix& b : r.basis_matrices())
        nil_gens.push_back(b - id.scaled(scalar_part(b)));
    Subspace nil = span_of_matrices(f, n, nil_gens);
    if (nil.dim() != r.dim() - 1 || nil.contains_vector(id.flat()))
        throw error("triangularize: carrier does not split as F I plus nilpotents");
    if (!nilpotency_degree(nil, n))
        throw error("triangularize: nilpotent part fails the nilpotency check; not split local");
    // flag F^n >= V*Nil >= V*Nil^2 >= ... adapted basis, one group per step
    Subspace v = Subspace::full(f, n);
    std::vector<std::vector<Value>> adapted;
    Subspace w = v;
    while (w.dim() > 0) {
        Subspace w_next = module_product(w, nil, n);
        Subspace comp = complement_within(w_next, w);
        for (int i = 0; i < comp.dim(); ++i) {
            auto row = comp.basis().row(i);
            adapted.emplace_back(row.begin(), row.end());
        }
        w = std::move(w_next);
    }
    if (static_cast<int>(adapted.size()) != n)
        throw error("triangularize: flag did not exhaust the space");
    Matrix p(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) = adapted[i][j];
    auto p_inv = inverse(p);
    if (!p_inv) throw error("triangularize: adapted basis is singular");
    Matrix u = *p_inv;
    // post-check before returning
    for (const Matrix& b : r.basis_matrices()) {
        Matrix conj = p * b * u;
        if (!conj.is_upper_triangular() || !conj.has_constant_diagonal())
            throw error("triangularize: conjugated carrier is not triangular");
    }
    return u;
}

}  // namespace lienil
