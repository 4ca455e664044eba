#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nielsen/nielsen.hpp"

namespace oracle {

using nielsen::Int;
using nielsen::QMatrix;
using nielsen::QPoly;
using nielsen::Rat;

/// Leibniz expansion over all permutations.
inline Rat leibniz_det(const QMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Faddeev-LeVerrier: c_{n-k} = -tr(M M_k)/k with M_k = M M_{k-1} + c_{n-k+1} I.
inline QPoly faddeev_leverrier(const QMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * QMatrix::identity(n);
        c[n - k] = -(m * mk).trace() / Rat(static_cast<long>(k));
    }
    return QPoly(c);
}

/// j x j minor with rows r and columns c, by Leibniz.
inline Rat minor(const QMatrix& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
    QMatrix s(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = m(r[i], c[j]);
    return r.empty() ? Rat(1) : leibniz_det(s);
}

inline QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(dist(rng));
    return m;
}

inline QMatrix random_rat_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Rat(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    return m;
}

inline QPoly random_int_poly(std::mt19937_64& rng, std::size_t degree, long range) {
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<Rat> c(degree + 1);
    for (auto& x : c) x = Rat(dist(rng));
    while (c.back() == 0) c.back() = Rat(dist(rng));
    return QPoly(c);
}

} // namespace oracle
