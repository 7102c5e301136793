#include "lienil/matrix.hpp"

#include <sstream>

namespace lienil {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("matrix: negative dimensions");
    e_.assign(static_cast<size_t>(rows) * cols, field_->zero());
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::unit(FieldPtr field, int n, int i, int j) {
    Matrix m(field, n, n);
    m.at(i, j) = field->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::vector<std::vector<Value>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(std::move(field), r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw error("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

static void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    require_same_field(a.field(), b.field(), what);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw error(std::string(what) + ": shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(*this, o, "matrix add");
    Matrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->add(e_[k], o.e_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(*this, o, "matrix sub");
    Matrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->sub(e_[k], o.e_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix mul");
    if (cols_ != o.rows_) throw error("matrix mul: inner dimensions disagree");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Value& a = at(i, k);
            if (field_->is_zero(a)) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_->add(r.at(i, j), field_->mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::scaled(const Value& c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->mul(e_[k], c);
    return r;
}

Matrix Matrix::negated() const {
    Matrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->neg(e_[k]);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!same_field(field_, o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (!field_->eq(e_[k], o.e_[k])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Value& v : e_)
        if (!field_->is_zero(v)) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < std::min(i, cols_); ++j)
            if (!field_->is_zero(at(i, j))) return false;
    return true;
}

bool Matrix::has_constant_diagonal() const {
    if (!is_square()) throw error("constant diagonal: matrix not square");
    for (int i = 1; i < rows_; ++i)
        if (!field_->eq(at(i, i), at(0, 0))) return false;
    return true;
}

bool Matrix::is_strictly_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= std::min(i, cols_ - 1); ++j)
            if (!field_->is_zero(at(i, j))) return false;
    return true;
}

Value Matrix::trace() const {
    if (!is_square()) throw error("trace: matrix not square");
    Value t = field_->zero();
    for (int i = 0; i < rows_; ++i) t = field_->add(t, at(i, i));
    return t;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << field_->to_string(at(i, j));
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    const FieldPtr& f = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!f->is_zero(a.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        Value piv_inv = f->inv(a.at(r, c));
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = f->mul(a.at(r, j), piv_inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || f->is_zero(a.at(i, c))) continue;
            Value factor = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = f->sub(a.at(i, j), f->mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw error("inverse: matrix not square");
    const int n = m.rows();
    const FieldPtr& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f->one();
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

int matrix_rank(const Matrix& m) { return rref(m).rank; }

std::vector<Value> act_row(std::span<const Value> x, const Matrix& a) {
    if (static_cast<int>(x.size()) != a.rows()) throw error("act_row: shape mismatch");
    const FieldPtr& f = a.field();
    std::vector<Value> out(a.cols(), f->zero());
    for (int i = 0; i < a.rows(); ++i) {
        if (f->is_zero(x[i])) continue;
        for (int j = 0; j < a.cols(); ++j)
            out[j] = f->add(out[j], f->mul(x[i], a.at(i, j)));
    }
    return out;
}

Matrix unflatten(const FieldPtr& field, int n, std::span<const Value> coords) {
    if (static_cast<int>(coords.size()) != n * n) throw error("unflatten: expected n^2 coordinates");
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = coords[static_cast<size_t>(i) * n + j];
    return m;
}

}  // namespace lienil
