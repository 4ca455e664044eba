#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nielsen/poly.hpp"
#include "nielsen/rational.hpp"

namespace nielsen {

/// Power series over Q truncated to `order()` coefficients (z^0 .. z^{order-1}).
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::size_t order) : c_(order) {}
    explicit QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

    static QSeries from_poly(const QPoly& p, std::size_t order) {
        QSeries s(order);
        for (std::size_t i = 0; i < order; ++i) s.c_[i] = p.coeff(i);
        return s;
    }

    [[nodiscard]] std::size_t order() const { return c_.size(); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        QSeries c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) c.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return c;
    }

    /// Multiplicative inverse; constant term must be nonzero.
    [[nodiscard]] QSeries inverse() const {
        if (c_.empty()) return {};
        if (c_[0] == 0) throw DomainError("series inverse: zero constant term");
        QSeries out(order());
        const Rat inv0 = Rat(1) / c_[0];
        out.c_[0] = inv0;
        for (std::size_t n = 1; n < order(); ++n) {
            Rat s = 0;
            for (std::size_t i = 1; i <= n; ++i) s += c_[i] * out.c_[n - i];
            out.c_[n] = -s * inv0;
        }
        return out;
    }

private:
    std::vector<Rat> c_;
};

/// exp(S) from the recurrence n e_n = sum_{i=1..n} i s_i e_{n-i}, i.e. E' = S'E.
inline QSeries series_exp(const QSeries& s) {
    if (s.order() == 0) return {};
    if (s[0] != 0) throw DomainError("series_exp: nonzero constant term");
    QSeries e(s.order());
    e[0] = 1;
    for (std::size_t n = 1; n < s.order(); ++n) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (s[i] == 0) continue;
            acc += Rat(static_cast<long>(i)) * s[i] * e[n - i];
        }
        e[n] = acc / Rat(static_cast<long>(n));
    }
    return e;
}

/// log(S) for S with constant term 1, from L' = S'/S.
inline QSeries series_log(const QSeries& s) {
    if (s.order() == 0) return {};
    if (s[0] != 1) throw DomainError("series_log: constant term must be 1");
    QSeries l(s.order());
    // n s_n = sum_{i=1..n} i l_i s_{n-i}
    for (std::size_t n = 1; n < s.order(); ++n) {
        Rat acc = Rat(static_cast<long>(n)) * s[n];
        for (std::size_t i = 1; i < n; ++i) acc -= Rat(static_cast<long>(i)) * l[i] * s[n - i];
        l[n] = acc / Rat(static_cast<long>(n));
    }
    return l;
}

/// Series sum_{k>=1} a_k z^k / k for a_1 .. a_{order-1}.
inline QSeries log_series_from_counts(const std::vector<Rat>& counts, std::size_t order) {
    QSeries s(order);
    for (std::size_t k = 1; k < order && k - 1 < counts.size(); ++k) s[k] = counts[k - 1] / Rat(static_cast<long>(k));
    return s;
}

} // namespace nielsen
