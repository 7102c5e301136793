#include "lienil/lie.hpp"

namespace lienil {

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix left_normed(std::span<const Matrix> xs) {
    if (xs.empty()) throw error("left_normed: empty argument list");
    Matrix acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
    return acc;
}

namespace {

Subspace bracket_span(const Subspace& a, const Subspace& b, int n) {
    const FieldPtr& f = a.field();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n * n);
    std::vector<Matrix> am = subspace_matrices(a, n);
    std::vector<Matrix> bm = subspace_matrices(b, n);
    std::vector<Matrix> brackets;
    brackets.reserve(am.size() * bm.size());
    for (const Matrix& x : am)
        for (const Matrix& y : bm) brackets.push_back(bracket(x, y));
    return span_of_matrices(f, n, brackets);
}

std::vector<Subspace> series(const MatrixAlgebra& r, bool derived) {
    const int n = r.n();
    std::vector<Subspace> out{r.carrier()};
    while (true) {
        const Subspace& last = out.back();
        if (last.dim() == 0) break;
        Subspace next = derived ? bracket_span(last, last, n) : bracket_span(last, out.front(), n);
        bool stable = next == last;
        out.push_back(std::move(next));
        if (stable || out.back().dim() == 0) break;
    }
    return out;
}

std::optional<int> index_of(const std::vector<Subspace>& s) {
    if (s.back().dim() != 0) return std::nullopt;  // stabilized nonzero
    return static_cast<int>(s.size()) - 1;
}

// enumerate all elements of a finite algebra via an odometer over basis
// coefficients; each advance adds one basis matrix per rolled-over digit
class ElementWalker {
  public:
    explicit ElementWalker(const MatrixAlgebra& r)
        : basis_(r.basis_matrices()), digits_(basis_.size(), 0),
          current_(r.field(), r.n(), r.n()), p_(static_cast<u64>(r.field()->characteristic())) {}

    const Matrix& current() const { return current_; }

    bool advance() {
        for (size_t k = 0; k < digits_.size(); ++k) {
            current_ = current_ + basis_[k];
            digits_[k] = (digits_[k] + 1) % p_;
            if (digits_[k] != 0) return true;
        }
        return false;  // wrapped around to zero
    }

  private:
    std::vector<Matrix> basis_;
    std::vector<u64> digits_;
    Matrix current_;
    u64 p_;
};

}  // namespace

std::vector<Subspace> lower_central_series(const MatrixAlgebra& r) { return series(r, false); }

std::optional<int> lie_nilpotence_index(const MatrixAlgebra& r) {
    return index_of(lower_central_series(r));
}

std::vector<Subspace> derived_series(const MatrixAlgebra& r) { return series(r, true); }

std::optional<int> lie_solvability_index(const MatrixAlgebra& r) {
    return index_of(derived_series(r));
}

bool engel_check_bruteforce(const MatrixAlgebra& r, int m) {
    const FieldPtr& f = r.field();
    if (f->kind() != FieldKind::prime) throw error("engel check: prime fields only");
    if (m < 1) throw error("engel check: index must be positive");
    u64 count = 1;
    for (int i = 0; i < r.dim(); ++i) {
        count *= static_cast<u64>(f->characteristic());
        if (count > 1000000) throw error("engel check: algebra too large for brute force");
    }
    ElementWalker x(r);
    do {
        ElementWalker y(r);
        do {
            Matrix acc = bracket(x.current(), y.current());
            for (int i = 1; i < m && !acc.is_zero(); ++i) acc = bracket(acc, y.current());
            if (!acc.is_zero()) return false;
        } while (y.advance());
    } while (x.advance());
    return true;
}

BracketExpansion expand_left_normed(int m) {
    if (m < 2 || m > 8) throw error("expand_left_normed: length must be between 2 and 8");
    BracketExpansion e;
    e.length = 2;
    e.terms[{1, 2}] = 1;
    e.terms[{2, 1}] = -1;
    for (int k = 3; k <= m; ++k) {
        BracketExpansion next;
        next.length = k;
        for (const auto& [word, coeff] : e.terms) {
            std::vector<int> right = word;
            right.push_back(k);
            next.terms[right] = coeff;
            std::vector<int> left;
            left.reserve(word.size() + 1);
            left.push_back(k);
            left.insert(left.end(), word.begin(), word.end());
            next.terms[left] = -coeff;
        }
        e = std::move(next);
    }
    return e;
}

Matrix evaluate_expansion(const BracketExpansion& e, std::span<const Matrix> xs) {
    if (static_cast<int>(xs.size()) != e.length)
        throw error("evaluate_expansion: argument count mismatch");
    const FieldPtr& f = xs[0].field();
    Matrix acc(f, xs[0].rows(), xs[0].cols());
    for (const auto& [word, coeff] : e.terms) {
        Matrix prod = xs[static_cast<size_t>(word[0]) - 1];
        for (size_t i = 1; i < word.size(); ++i) prod = prod * xs[static_cast<size_t>(word[i]) - 1];
        acc = coeff > 0 ? acc + prod : acc - prod;
    }
    return acc;
}

}  // namespace lienil
