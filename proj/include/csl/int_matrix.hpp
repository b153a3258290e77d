#pragma once

#include <tuple>
#include <vector>

#include "csl/matrix.hpp"

// Integer-matrix normal forms and the lattice-intersection kernel behind
// the coincidence index [L : L n TL].

namespace csl {

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0 || e_.size() != rows_ * cols_)
            throw dimension_mismatch("matrix shape does not match entry count");
    }

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) : rows_(rows.size()) {
        for (const auto& row : rows) {
            if (cols_ == 0) cols_ = row.size();
            if (row.size() != cols_) throw dimension_mismatch("ragged matrix literal");
            for (const Int& x : row) e_.push_back(x);
        }
        if (rows_ == 0 || cols_ == 0) throw dimension_mismatch("empty matrix literal");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m = zero(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) {
        IntMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.e_.assign(rows * cols, Int(0));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols() != y.rows()) throw dimension_mismatch("inner dimensions differ");
    IntMatrix out = IntMatrix::zero(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

inline std::vector<Int> mat_vec(const IntMatrix& x, const std::vector<Int>& v) {
    if (x.cols() != v.size()) throw dimension_mismatch("matrix/vector sizes differ");
    std::vector<Int> out(x.rows(), Int(0));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x.at(i, j) * v[j];
    return out;
}

inline IntMatrix transpose(const IntMatrix& x) {
    IntMatrix out = IntMatrix::zero(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.at(j, i) = x.at(i, j);
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int int_determinant(const IntMatrix& x) {
    if (!x.is_square()) throw dimension_mismatch("determinant needs a square matrix");
    const std::size_t n = x.rows();
    IntMatrix w = x;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign < 0 ? Int(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

struct HnfResult {
    IntMatrix h; // H = M * U, column-style Hermite normal form
    IntMatrix u; // unimodular
};

// Column-style HNF: H lower-triangular with h_ii > 0 and 0 <= h_ij < h_ii
// for j < i; columns beyond the row count end up zero. Requires full row
// rank (rows <= cols).
inline HnfResult hnf(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows > cols) throw rank_deficient("more rows than columns");
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(cols);

    auto col_combine = [&](std::size_t a, std::size_t b, const Int& p, const Int& q, const Int& r,
                           const Int& s) {
        // (col_a, col_b) <- (p*col_a + q*col_b, r*col_a + s*col_b); p*s - q*r = +-1
        for (IntMatrix* w : {&h, &u}) {
            for (std::size_t i = 0; i < w->rows(); ++i) {
                Int xa = w->at(i, a);
                Int xb = w->at(i, b);
                w->at(i, a) = p * xa + q * xb;
                w->at(i, b) = r * xa + s * xb;
            }
        }
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (IntMatrix* w : {&h, &u})
            for (std::size_t i = 0; i < w->rows(); ++i) w->at(i, dst) += c * w->at(i, src);
    };
    auto col_negate = [&](std::size_t j) {
        for (IntMatrix* w : {&h, &u})
            for (std::size_t i = 0; i < w->rows(); ++i) w->at(i, j) = -w->at(i, j);
    };

    for (std::size_t i = 0; i < rows; ++i) {
        // Fold every column j > i into the pivot column with extended gcd.
        for (std::size_t j = i + 1; j < cols; ++j) {
            if (h.at(i, j) == 0) continue;
            if (h.at(i, i) == 0) {
                col_combine(i, j, 0, 1, 1, 0); // swap
                continue;
            }
            Int a = h.at(i, i);
            Int b = h.at(i, j);
            Int g = gcd_of(a, b);
            // p*a + q*b = g via the extended Euclidean algorithm.
            Int p = 1, q = 0, x = 0, y = 1;
            Int r0 = abs_of(a), r1 = abs_of(b);
            while (r1 != 0) {
                Int quot = r0 / r1;
                Int t = r0 - quot * r1;
                r0 = r1;
                r1 = t;
                t = p - quot * x;
                p = x;
                x = t;
                t = q - quot * y;
                q = y;
                y = t;
            }
            if (a < 0) p = -p;
            if (b < 0) q = -q;
            col_combine(i, j, p, q, -b / g, a / g);
        }
        if (h.at(i, i) == 0) throw rank_deficient("row " + std::to_string(i) + " is dependent");
        if (h.at(i, i) < 0) col_negate(i);
        // Reduce earlier columns of this row into [0, h_ii).
        for (std::size_t j = 0; j < i; ++j) {
            Int quot = h.at(i, j) / h.at(i, i);
            Int rem = h.at(i, j) - quot * h.at(i, i);
            if (rem < 0) {
                rem += h.at(i, i);
                quot -= 1;
            }
            if (quot != 0) col_addmul(j, i, -quot);
        }
    }
    return {h, u};
}

// Invariant factors d_1 | d_2 | ... | d_k (zeros dropped), each positive.
inline std::vector<Int> snf(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    std::vector<Int> divisors;
    std::size_t s = 0;
    while (s < rows && s < cols) {
        // Locate the smallest nonzero entry of the trailing block.
        std::size_t pr = s, pc = s;
        Int best = 0;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                Int v = abs_of(w.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(s, j), w.at(pr, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, s), w.at(i, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (w.at(i, s) == 0) continue;
                Int q = w.at(i, s) / w.at(s, s);
                for (std::size_t j = s; j < cols; ++j) w.at(i, j) -= q * w.at(s, j);
                if (w.at(i, s) != 0) {
                    // Remainder became the new, smaller pivot.
                    for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(s, j), w.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (w.at(s, j) == 0) continue;
                Int q = w.at(s, j) / w.at(s, s);
                for (std::size_t i = s; i < rows; ++i) w.at(i, j) -= q * w.at(i, s);
                if (w.at(s, j) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, s), w.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the rest of the block; fold a violator in.
            for (std::size_t i = s + 1; i < rows && clean; ++i)
                for (std::size_t j = s + 1; j < cols && clean; ++j)
                    if (w.at(i, j) % w.at(s, s) != 0) {
                        for (std::size_t jj = 0; jj < cols; ++jj) w.at(s, jj) += w.at(i, jj);
                        clean = false;
                    }
        }
        if (w.at(s, s) < 0)
            for (std::size_t j = 0; j < cols; ++j) w.at(s, j) = -w.at(s, j);
        divisors.push_back(w.at(s, s));
        ++s;
    }
    return divisors;
}

// Basis of a finite-index sublattice of Z^n, columns of c.
struct SublatticeBasis {
    IntMatrix c;
    Int index; // = |det c|
};

// Scale a rational matrix to integers: returns (N, q) with m = N / q.
inline std::pair<IntMatrix, Int> clear_denominators(const ExactMatrix& m) {
    if (!is_rational_matrix(m)) throw irrational_entries("matrix has surd entries");
    Int q = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q = lcm_of(q, denominator_of(m.at(i, j).as_rational()));
    IntMatrix n = IntMatrix::zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j).as_rational();
            n.at(i, j) = numerator_of(v) * (q / denominator_of(v));
        }
    return {n, q};
}

inline ExactMatrix to_exact(const IntMatrix& m, const FieldContext& ctx = {}) {
    std::vector<FieldElement> entries;
    entries.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            entries.emplace_back(Rational(m.at(i, j)), Rational(0), ctx);
    return ExactMatrix(m.rows(), m.cols(), std::move(entries));
}

// Basis of Z^n n M Z^n for nonsingular rational M, via the dual sum
// (Z^n n M Z^n)* = Z^n + M^{-t} Z^n realized with one HNF. The returned
// basis is itself in HNF so outputs are canonical.
inline SublatticeBasis intersect_with_rational_image(const ExactMatrix& m) {
    if (!m.is_square()) throw dimension_mismatch("need a square matrix");
    if (!is_rational_matrix(m)) throw irrational_entries("matrix has surd entries");
    const std::size_t n = m.rows();
    ExactMatrix minv_t = transpose(inverse(m)); // throws singular_matrix
    auto [nmat, q] = clear_denominators(minv_t);

    IntMatrix block = IntMatrix::zero(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        block.at(i, i) = q;
        for (std::size_t j = 0; j < n; ++j) block.at(i, n + j) = nmat.at(i, j);
    }
    IntMatrix h = hnf(block).h;

    // Dual basis D = H/q; primal basis C = D^{-t} = q * H^{-t}, integral.
    ExactMatrix hn = ExactMatrix::zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hn.at(i, j) = FieldElement(Rational(h.at(i, j)));
    ExactMatrix c_exact = scalar_mul(FieldElement(Rational(q)), transpose(inverse(hn)));

    IntMatrix c = IntMatrix::zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = c_exact.at(i, j).as_rational();
            if (!is_integer(v)) throw irrational_entries("intersection basis not integral");
            c.at(i, j) = numerator_of(v);
        }
    c = hnf(c).h;
    return {c, abs_of(int_determinant(c))};
}

// Brute-force index oracle: with m*M and m*M^{-1} integral, the index of
// Z^n n M Z^n equals m^n over the number of residues x in {0..m-1}^n with
// M^{-1} x integral.
inline Int residue_count_index(const ExactMatrix& mat, const Int& m) {
    if (!mat.is_square()) throw dimension_mismatch("need a square matrix");
    if (m <= 0) throw invalid_clearing_multiple("clearing multiple must be positive");
    if (!is_rational_matrix(mat)) throw irrational_entries("matrix has surd entries");
    const std::size_t n = mat.rows();

    Int qm = clear_denominators(mat).second;
    if (m % qm != 0) throw invalid_clearing_multiple("m*M is not an integer matrix");
    ExactMatrix minv = inverse(mat);
    auto [k, qk] = clear_denominators(minv);
    if (m % qk != 0) throw invalid_clearing_multiple("m*M^{-1} is not an integer matrix");
    // K = m * M^{-1}; residue x lies in M Z^n iff K x == 0 (mod m).
    Int scale = m / qk;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k.at(i, j) *= scale;

    std::vector<Int> x(n, Int(0));
    Int count = 0;
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= m;
    while (true) {
        bool member = true;
        for (std::size_t i = 0; i < n && member; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += k.at(i, j) * x[j];
            if (acc % m != 0) member = false;
        }
        if (member) ++count;
        // Odometer step.
        std::size_t pos = 0;
        while (pos < n) {
            x[pos] += 1;
            if (x[pos] < m) break;
            x[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return total / count; // m Z^n is always counted, so count >= 1
}

} // namespace csl
