#pragma once

#include <initializer_list>
#include <vector>

#include "csl/field.hpp"

// Dense exact vectors and matrices of FieldElements sharing one context.
// Sizes of interest are small (n <= ~10); storage is row-major.

namespace csl {

class ExactVector {
public:
    ExactVector() = default;

    explicit ExactVector(std::vector<FieldElement> entries) : e_(std::move(entries)) {
        for (const FieldElement& x : e_) ctx_ = unify(ctx_, x.context());
        for (FieldElement& x : e_) x = x.coerced(ctx_);
    }

    ExactVector(std::initializer_list<FieldElement> entries)
        : ExactVector(std::vector<FieldElement>(entries)) {}

    static ExactVector zero(std::size_t n, const FieldContext& ctx = {}) {
        ExactVector v;
        v.ctx_ = ctx;
        v.e_.assign(n, FieldElement(Rational(0), Rational(0), ctx));
        return v;
    }

    std::size_t size() const { return e_.size(); }
    const FieldContext& context() const { return ctx_; }

    const FieldElement& operator[](std::size_t i) const { return e_[i]; }
    FieldElement& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const {
        for (const FieldElement& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ExactVector& a, const ExactVector& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }

private:
    FieldContext ctx_;
    std::vector<FieldElement> e_;
};

inline ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    std::vector<FieldElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return ExactVector(std::move(out));
}

inline ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    std::vector<FieldElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return ExactVector(std::move(out));
}

inline ExactVector operator*(const FieldElement& c, const ExactVector& v) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(c * v[i]);
    return ExactVector(std::move(out));
}

// Standard inner product (no conjugation; the field is real).
inline FieldElement inner_product(const ExactVector& a, const ExactVector& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sizes differ");
    FieldElement acc(Rational(0), Rational(0), unify(a.context(), b.context()));
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0 || e_.size() != rows_ * cols_)
            throw dimension_mismatch("matrix shape does not match entry count");
        for (const FieldElement& x : e_) ctx_ = unify(ctx_, x.context());
        for (FieldElement& x : e_) x = x.coerced(ctx_);
    }

    ExactMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows)
        : rows_(rows.size()) {
        for (const auto& row : rows) {
            if (cols_ == 0) cols_ = row.size();
            if (row.size() != cols_) throw dimension_mismatch("ragged matrix literal");
            for (const FieldElement& x : row) e_.push_back(x);
        }
        if (rows_ == 0 || cols_ == 0) throw dimension_mismatch("empty matrix literal");
        for (const FieldElement& x : e_) ctx_ = unify(ctx_, x.context());
        for (FieldElement& x : e_) x = x.coerced(ctx_);
    }

    static ExactMatrix identity(std::size_t n, const FieldContext& ctx = {}) {
        ExactMatrix m;
        m.rows_ = m.cols_ = n;
        m.ctx_ = ctx;
        m.e_.assign(n * n, FieldElement(Rational(0), Rational(0), ctx));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(Rational(1), Rational(0), ctx);
        return m;
    }

    static ExactMatrix zero(std::size_t rows, std::size_t cols, const FieldContext& ctx = {}) {
        ExactMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.ctx_ = ctx;
        m.e_.assign(rows * cols, FieldElement(Rational(0), Rational(0), ctx));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const FieldContext& context() const { return ctx_; }

    const FieldElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    FieldElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    ExactVector column(std::size_t j) const {
        std::vector<FieldElement> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
        return ExactVector(std::move(out));
    }

    ExactVector row(std::size_t i) const {
        std::vector<FieldElement> out(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                      e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        return ExactVector(std::move(out));
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (a.e_[k] != b.e_[k]) return false;
        return true;
    }

private:
    FieldContext ctx_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> e_;
};

inline ExactMatrix mat_mul(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols() != y.rows()) throw dimension_mismatch("inner dimensions differ");
    FieldContext ctx = unify(x.context(), y.context());
    ExactMatrix out = ExactMatrix::zero(x.rows(), y.cols(), ctx);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

inline ExactVector mat_vec(const ExactMatrix& x, const ExactVector& v) {
    if (x.cols() != v.size()) throw dimension_mismatch("matrix/vector sizes differ");
    FieldContext ctx = unify(x.context(), v.context());
    std::vector<FieldElement> out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        FieldElement acc(Rational(0), Rational(0), ctx);
        for (std::size_t j = 0; j < x.cols(); ++j) acc += x.at(i, j) * v[j];
        out.push_back(acc);
    }
    return ExactVector(std::move(out));
}

inline ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) { return mat_mul(x, y); }

inline ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw dimension_mismatch("matrix shapes differ");
    FieldContext ctx = unify(x.context(), y.context());
    ExactMatrix out = ExactMatrix::zero(x.rows(), x.cols(), ctx);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
    return out;
}

inline ExactMatrix transpose(const ExactMatrix& x) {
    ExactMatrix out = ExactMatrix::zero(x.cols(), x.rows(), x.context());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.at(j, i) = x.at(i, j);
    return out;
}

inline ExactMatrix scalar_mul(const FieldElement& c, const ExactMatrix& x) {
    ExactMatrix out = ExactMatrix::zero(x.rows(), x.cols(), unify(c.context(), x.context()));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = c * x.at(i, j);
    return out;
}

namespace detail {

// Fraction-free (Bareiss) forward elimination with row pivoting.
// Returns false when the matrix is singular; on success `w` is upper
// triangular on the left block and `det` holds the exact determinant.
inline bool bareiss_forward(ExactMatrix& w, std::size_t n, FieldElement& det) {
    FieldContext ctx = w.context();
    FieldElement one(Rational(1), Rational(0), ctx);
    FieldElement prev = one;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return false;
        if (pivot != k) {
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        if (k + 1 == n) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < w.cols(); ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = FieldElement(Rational(0), Rational(0), ctx);
        }
        prev = w.at(k, k);
    }
    det = w.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return true;
}

} // namespace detail

inline FieldElement determinant(const ExactMatrix& x) {
    if (!x.is_square()) throw dimension_mismatch("determinant needs a square matrix");
    const std::size_t n = x.rows();
    const FieldContext& ctx = x.context();
    // Naive expansion for tiny sizes, Bareiss elimination beyond.
    if (n == 1) return x.at(0, 0);
    if (n == 2) return x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
    if (n == 3)
        return x.at(0, 0) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1)) -
               x.at(0, 1) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0)) +
               x.at(0, 2) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
    ExactMatrix w = x;
    FieldElement det(Rational(0), Rational(0), ctx);
    if (!detail::bareiss_forward(w, n, det)) return FieldElement(Rational(0), Rational(0), ctx);
    return det;
}

inline ExactMatrix inverse(const ExactMatrix& x) {
    if (!x.is_square()) throw dimension_mismatch("inverse needs a square matrix");
    const std::size_t n = x.rows();
    const FieldContext& ctx = x.context();
    // Eliminate the augmented block [x | I], then back-substitute exactly.
    ExactMatrix w = ExactMatrix::zero(n, 2 * n, ctx);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = x.at(i, j);
        w.at(i, n + i) = FieldElement(Rational(1), Rational(0), ctx);
    }
    FieldElement det(Rational(0), Rational(0), ctx);
    if (!detail::bareiss_forward(w, n, det) || det.is_zero())
        throw singular_matrix("matrix is singular");
    ExactMatrix out = ExactMatrix::zero(n, n, ctx);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            FieldElement acc = w.at(i, n + c);
            for (std::size_t j = i + 1; j < n; ++j) acc -= w.at(i, j) * out.at(j, c);
            out.at(i, c) = acc / w.at(i, i);
        }
    }
    return out;
}

// Gram matrix of the column vectors: (X^t X)_{ij} = (a_i, a_j).
inline ExactMatrix gram(const ExactMatrix& x) {
    if (!x.is_square()) throw dimension_mismatch("gram needs a square matrix");
    return mat_mul(transpose(x), x);
}

inline bool is_orthogonal(const ExactMatrix& x) {
    if (!x.is_square()) throw dimension_mismatch("orthogonality needs a square matrix");
    return gram(x) == ExactMatrix::identity(x.rows(), x.context());
}

inline bool is_rational_matrix(const ExactMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!x.at(i, j).is_rational()) return false;
    return true;
}

} // namespace csl
