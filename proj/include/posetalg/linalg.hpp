#pragma once

// Exact linear algebra over Q (mpq_class) and Z (mpz_class).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetalg {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& entries() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    c(i, j) += aik * b(k, j);
                }
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<mpq_class>;
using IntMatrix = Matrix<mpz_class>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
    return r;
}

/// Horizontal concatenation [a | b]; row counts must agree.
template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

/// Build a matrix whose columns are the given vectors (all of length `rows`).
inline RatMatrix from_columns(std::size_t rows, const std::vector<std::vector<mpq_class>>& cols) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

inline RowEchelon rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const mpq_class inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const mpq_class f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of the right null space of m.
inline RatMatrix kernel_basis(const RatMatrix& m) {
    const auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    RatMatrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -red(i, free[k]);
    }
    return basis;
}

/// One exact solution X of m·X = rhs, or nullopt when the system is inconsistent.
inline std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: row counts differ");
    const auto [red, pivots] = rref(hstack(m, rhs));
    RatMatrix x(m.cols(), rhs.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = red(i, m.cols() + j);
    }
    return x;
}

inline mpq_class determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    mpq_class det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const mpq_class f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, RatMatrix::identity(m.rows()));
}

/// Columns of `vectors` that extend the column space of `base`, chosen greedily left to right.
inline std::vector<std::size_t> independent_extension(const RatMatrix& base, const RatMatrix& vectors) {
    const auto [red, pivots] = rref(hstack(base, vectors));
    std::vector<std::size_t> picked;
    for (auto c : pivots)
        if (c >= base.cols()) picked.push_back(c - base.cols());
    return picked;
}

/// Coefficients of the characteristic polynomial det(tI - m), lowest degree first.
inline std::vector<mpq_class> characteristic_polynomial(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
    // Faddeev-LeVerrier; exact over Q.
    const std::size_t n = m.rows();
    std::vector<mpq_class> coeff(n + 1);
    coeff[n] = 1;
    RatMatrix acc(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeff[n - k + 1];
        const RatMatrix prod = m * acc;
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
        coeff[n - k] = -tr / static_cast<long>(k);
    }
    return coeff;
}

struct SnfResult {
    /// Invariant factors d_1 | d_2 | ..., nonnegative, zeros trailing; length min(rows, cols).
    std::vector<mpz_class> diagonal;
    std::size_t rank = 0;

    std::vector<mpz_class> nonzero_factors() const {
        return {diagonal.begin(), diagonal.begin() + static_cast<std::ptrdiff_t>(rank)};
    }
};

/// Smith normal form by elementary row/column operations, pivoting on the
/// entry of least absolute value.
inline SnfResult smith_normal_form(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t diag = std::min(rows, cols);
    SnfResult out;
    out.diagonal.assign(diag, 0);

    auto least_entry = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        mpz_class best_abs;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                mpz_class v = abs(a(i, j));
                if (!best || v < best_abs) {
                    best = {i, j};
                    best_abs = v;
                    if (best_abs == 1) return best;
                }
            }
        return best;
    };

    std::size_t t = 0;
    for (; t < diag; ++t) {
        auto pos = least_entry(t);
        if (!pos) break;
        for (;;) {
            a.swap_rows(t, pos->first);
            a.swap_cols(t, pos->second);
            const mpz_class pivot = a(t, t);
            bool clean = true;
            mpz_class q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    if (a(t, j) != 0) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    if (a(i, t) != 0) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) {
                // pivot must divide the remaining block
                std::optional<std::size_t> bad_row;
                for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                            bad_row = i;
                            break;
                        }
                if (!bad_row) break;
                for (std::size_t j = t; j < cols; ++j) a(t, j) += a(*bad_row, j);
            }
            // remainders are smaller than the pivot, so this strictly shrinks it
            pos = least_entry(t);
        }
        out.diagonal[t] = abs(a(t, t));
    }
    out.rank = t;
    return out;
}

inline std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

/// Incrementally maintained row space with sparse rows; used where the
/// unknown count is large but each equation touches few unknowns.
class SparseRowSpace {
public:
    using Row = std::map<std::size_t, mpq_class>;

    /// Reduces `row` against the current basis; returns true if it enlarged the span.
    bool insert(Row row) {
        prune(row);
        while (!row.empty()) {
            const std::size_t lead = row.begin()->first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const mpq_class inv = 1 / row.begin()->second;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            const mpq_class f = row.begin()->second;
            for (const auto& [c, v] : it->second) row[c] -= f * v;
            prune(row);
        }
        return false;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    static void prune(Row& row) {
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    }

    std::map<std::size_t, Row> pivots_;
};

} // namespace posetalg
