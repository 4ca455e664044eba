#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nielsen/poly.hpp"
#include "nielsen/rational.hpp"

namespace nielsen {

using QVector = std::vector<Rat>;

/// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match shape");
    }
    /// Row-list literal; all rows must have equal length.
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DomainError("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix diagonal(std::span<const Rat> d) {
        QMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static QMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t nr = rows.size();
        std::size_t nc = nr ? rows.begin()->size() : 0;
        std::vector<Rat> e;
        for (const auto& r : rows) {
            if (r.size() != nc) throw DomainError("ragged matrix literal");
            for (long v : r) e.emplace_back(v);
        }
        return QMatrix(nr, nc, std::move(e));
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] const std::vector<Rat>& entries() const { return a_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        a.require_same_shape(b);
        QMatrix c(a);
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        a.require_same_shape(b);
        QMatrix c(a);
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }
    friend QMatrix operator*(const Rat& s, const QMatrix& a) {
        QMatrix c(a);
        for (auto& x : c.a_) x *= s;
        return c;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
        QMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend QVector operator*(const QMatrix& a, const QVector& v) {
        if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
        QVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    [[nodiscard]] QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Rat trace() const {
        require_square("trace");
        Rat s = 0;
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    [[nodiscard]] bool is_integral() const {
        for (const auto& x : a_)
            if (!is_integer(x)) return false;
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    [[nodiscard]] QMatrix pow(unsigned k) const {
        require_square("pow");
        QMatrix result = identity(rows_);
        QMatrix base = *this;
        while (k) {
            if (k & 1u) result = result * base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return result;
    }

    /// Submatrix on the given row and column index lists.
    [[nodiscard]] QMatrix minor_matrix(std::span<const std::size_t> row_idx,
                                       std::span<const std::size_t> col_idx) const {
        QMatrix m(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    void require_square(const char* what) const {
        if (!is_square()) throw DomainError(std::string(what) + ": matrix is not square");
    }

private:
    void require_same_shape(const QMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/// Determinant by Gaussian elimination over Q.
inline Rat det(QMatrix m) {
    m.require_square("det");
    const std::size_t n = m.rows();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        const Rat pivot = m(c, c);
        d *= pivot;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / pivot;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

/// det(I - M).
inline Rat det_one_minus(const QMatrix& m) { return det(QMatrix::identity(m.rows()) - m); }

inline std::optional<QMatrix> inverse(const QMatrix& m) {
    m.require_square("inverse");
    const std::size_t n = m.rows();
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat s = Rat(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Characteristic polynomial det(tI - M): similarity reduction to upper
/// Hessenberg form followed by the Hessenberg determinant recurrence.
inline QPoly charpoly(const QMatrix& m) {
    if (!m.is_square()) throw DomainError("charpoly: matrix is not square");
    const std::size_t n = m.rows();
    QMatrix h = m;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t i = k;
        while (i < n && h(i, k - 1) == 0) ++i;
        if (i == n) continue;
        if (i != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(k, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, k));
        }
        const Rat t = h(k, k - 1);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (h(r, k - 1) == 0) continue;
            Rat u = h(r, k - 1) / t;
            for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(k, j);
            for (std::size_t j = 0; j < n; ++j) h(j, k) += u * h(j, r);
        }
    }
    const QPoly x = QPoly::monomial(1, 1);
    std::vector<QPoly> p;
    p.reserve(n + 1);
    p.push_back(QPoly::constant(1));
    for (std::size_t s = 1; s <= n; ++s) {
        QPoly next = (x - QPoly::constant(h(s - 1, s - 1))) * p[s - 1];
        Rat chain = 1;
        for (std::size_t i = s - 1; i-- > 0;) {
            chain *= h(i + 1, i);
            if (chain == 0) break;
            Rat coef = h(i, s - 1) * chain;
            if (coef != 0) next = next - coef * p[i];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

/// Lexicographically ordered j-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t j) {
    std::vector<std::vector<std::size_t>> out;
    if (j > n) return out;
    std::vector<std::size_t> cur(j);
    for (std::size_t i = 0; i < j; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = j;
        while (i > 0 && cur[i - 1] == n - j + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t t = i; t < j; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

/// j-th exterior power: the matrix of j x j minors, rows and columns
/// indexed by lexicographically ordered j-subsets. The zeroth power is [1].
inline QMatrix exterior_power(const QMatrix& m, std::size_t j) {
    m.require_square("exterior_power");
    const std::size_t n = m.rows();
    if (j > n) throw DomainError("exterior_power: degree " + std::to_string(j) + " exceeds dimension " + std::to_string(n));
    auto idx = subsets(n, j);
    QMatrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = det(m.minor_matrix(idx[r], idx[c]));
    return out;
}

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row.
inline std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rat s = Rat(1) / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= s;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

/// A solution of A x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

/// Basis of the right null space of A.
inline std::vector<QVector> nullspace(const QMatrix& a) {
    QMatrix r = a;
    auto piv = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(a.cols());
        v[f] = 1;
        for (std::size_t row = 0; row < piv.size(); ++row) v[piv[row]] = -r(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const QMatrix& a) {
    QMatrix r = a;
    return rref(r).size();
}

inline std::string to_string(const QMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

} // namespace nielsen
