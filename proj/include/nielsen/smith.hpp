#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nielsen/matrix.hpp"
#include "nielsen/rational.hpp"

namespace nielsen {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix to_int_matrix(const QMatrix& m) {
    if (!m.is_integral()) throw DomainError("expected an integer matrix, got " + to_string(m));
    IntMatrix out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num();
    return out;
}

/// U * A * V = diag(d_0, ..., d_{r-1}, 0, ...), d_i > 0, d_i | d_{i+1}.
/// Only the unimodular row transform U is kept.
struct SmithForm {
    std::vector<Int> diagonal; // the r nonzero invariant factors
    IntMatrix left;            // U, rows x rows
    std::size_t rows = 0;
    std::size_t cols = 0;
};

inline SmithForm smith_normal_form(IntMatrix a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    IntMatrix u(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    // row_i -= q * row_j
    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[j][c];
        for (std::size_t c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < m; ++r) a[r][i] -= q * a[r][j];
    };

    SmithForm out;
    out.rows = m;
    out.cols = n;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // smallest nonzero magnitude in the trailing block
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second])))
                        best = {i, j};
            if (!best) break;
            swap_rows(t, best->first);
            swap_cols(t, best->second);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_op(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_op(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            row_op(t, *bad_row, Int(-1));
        }
        if (a[t][t] == 0) break;
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
        out.diagonal.push_back(a[t][t]);
    }
    out.left = std::move(u);
    return out;
}

/// Whether A l = v has an integer solution l.
inline bool integer_solvable(const QMatrix& a, const QVector& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    SmithForm s = smith_normal_form(to_int_matrix(a));
    for (std::size_t i = 0; i < s.rows; ++i) {
        Int w = 0;
        for (std::size_t j = 0; j < s.rows; ++j) w += s.left[i][j] * v[j].get_num();
        if (i < s.diagonal.size()) {
            if (w % s.diagonal[i] != 0) return false;
        } else if (w != 0) {
            return false;
        }
    }
    return true;
}

/// Order of Z^n / A Z^n for square A of full rank; nullopt when infinite.
inline std::optional<Int> cokernel_order(const QMatrix& a) {
    a.require_square("cokernel_order");
    SmithForm s = smith_normal_form(to_int_matrix(a));
    if (s.diagonal.size() < a.rows()) return std::nullopt;
    Int prod = 1;
    for (const auto& d : s.diagonal) prod *= d;
    return prod;
}

} // namespace nielsen
