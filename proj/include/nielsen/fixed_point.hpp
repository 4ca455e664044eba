#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nielsen/group.hpp"
#include "nielsen/maps.hpp"
#include "nielsen/matrix.hpp"
#include "nielsen/parallel.hpp"
#include "nielsen/smith.hpp"
#include "nielsen/spectral.hpp"
#include "nielsen/validation.hpp"

namespace nielsen {

struct EvalOptions {
    bool parallel = false;
};

/// L(f^k) and N(f^k) from the averaging formulas, given the k-th power of D.
struct FixedPointNumbers {
    Int lefschetz;
    Int nielsen;
};

namespace detail {

inline Int exact_average(const Rat& sum, std::size_t count, const char* what) {
    Rat avg = sum / Rat(static_cast<long>(count));
    if (!is_integer(avg))
        throw DomainError(std::string(what) + " average " + to_string(avg) +
                          " is not an integer: input is not a consistent infra-nilmanifold map datum");
    return avg.get_num();
}

} // namespace detail

/// Both averages over the listed elements (all of F when `subset` is empty).
inline FixedPointNumbers averaged_numbers(const HolonomyGroup& f, const QMatrix& dk,
                                          const std::vector<std::size_t>& subset = {}, EvalOptions opt = {}) {
    std::vector<std::size_t> idx = subset;
    if (idx.empty())
        for (std::size_t x = 0; x < f.order(); ++x) idx.push_back(x);
    std::vector<Rat> terms(idx.size());
    for_each_index(idx.size(), opt.parallel, [&](std::size_t i) { terms[i] = det_one_minus(f[idx[i]] * dk); });
    Rat l = 0, n = 0;
    for (const auto& t : terms) {
        l += t;
        n += abs(t);
    }
    return {detail::exact_average(l, idx.size(), "Lefschetz"), detail::exact_average(n, idx.size(), "Nielsen")};
}

inline Int lefschetz_number(const HolonomyGroup& f, const QMatrix& d, unsigned k, EvalOptions opt = {}) {
    if (k == 0) throw DomainError("lefschetz_number: k must be positive");
    return averaged_numbers(f, d.pow(k), {}, opt).lefschetz;
}

inline Int nielsen_number(const HolonomyGroup& f, const QMatrix& d, unsigned k, EvalOptions opt = {}) {
    if (k == 0) throw DomainError("nielsen_number: k must be positive");
    return averaged_numbers(f, d.pow(k), {}, opt).nielsen;
}

/// (L(f^k), N(f^k)) for k = 1 .. kmax over the listed elements.
inline std::vector<FixedPointNumbers> fixed_point_sequence(const HolonomyGroup& f, const QMatrix& d, unsigned kmax,
                                                           const std::vector<std::size_t>& subset = {},
                                                           EvalOptions opt = {}) {
    std::vector<FixedPointNumbers> out;
    QMatrix dk = QMatrix::identity(d.rows());
    for (unsigned k = 1; k <= kmax; ++k) {
        dk = dk * d;
        out.push_back(averaged_numbers(f, dk, subset, opt));
    }
    return out;
}

struct FixedPointRow {
    unsigned k = 0;
    Int lefschetz;
    Int nielsen;
    std::optional<Int> lefschetz_plus;
};

struct FixedPointTable {
    std::vector<FixedPointRow> rows;
    unsigned kmax = 0;
};

inline FixedPointTable fixed_point_table(const HolonomyGroup& f, const QMatrix& d, const PositivePart& part,
                                         unsigned kmax, EvalOptions opt = {}) {
    FixedPointTable t;
    t.kmax = kmax;
    auto full = fixed_point_sequence(f, d, kmax, {}, opt);
    std::vector<FixedPointNumbers> plus;
    if (part.index == 2) plus = fixed_point_sequence(f, d, kmax, part.plus_indices, opt);
    for (unsigned k = 1; k <= kmax; ++k) {
        FixedPointRow row{k, full[k - 1].lefschetz, full[k - 1].nielsen, std::nullopt};
        if (part.index == 2) row.lefschetz_plus = plus[k - 1].lefschetz;
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// N(f^k) from L(f^k) and L(f_+^k):
///   index 1: (-1)^p L          (k odd)   (-1)^(p+n) L          (k even)
///   index 2: (-1)^p (L_+ - L)  (k odd)   (-1)^(p+n) (L_+ - L)  (k even)
inline Int nielsen_via_table(const SpectralSplit& split, std::size_t index, const Int& l_k,
                             const std::optional<Int>& l_plus_k, unsigned k) {
    if (index != 1 && index != 2) throw DomainError("positive part index must be 1 or 2");
    if (index == 2 && !l_plus_k) throw DomainError("nielsen_via_table: index 2 needs L(f_+^k)");
    const std::size_t exponent = split.real.p + (k % 2 == 0 ? split.real.n : 0);
    const Int base = index == 1 ? l_k : Int(*l_plus_k - l_k);
    return exponent % 2 == 0 ? base : Int(-base);
}

/// Number of fixed points of x -> D^k x + delta_k on R^d / Z^d, as the
/// order of the cokernel of I - D^k (Smith normal form).
inline Int torus_fixed_count(const QMatrix& d, const QVector& delta, unsigned k) {
    if (!d.is_square() || delta.size() != d.rows()) throw DomainError("torus_fixed_count: dimension mismatch");
    if (!d.is_integral()) throw DomainError("torus_fixed_count: D must be integral in lattice coordinates");
    if (k == 0) throw DomainError("torus_fixed_count: k must be positive");
    const QMatrix dk = d.pow(k);
    const QMatrix a = QMatrix::identity(d.rows()) - dk;
    auto order = cokernel_order(a);
    if (!order) throw DomainError("degenerate: infinite or non-isolated fixed-point set (det(I - D^k) = 0)");
    // delta_k = sum_{i<k} D^i delta; with det != 0 the congruence is always
    // solvable, so delta_k does not change the count
    QVector dlt(delta.size());
    QMatrix di = QMatrix::identity(d.rows());
    for (unsigned i = 0; i < k; ++i) {
        QVector term = di * delta;
        for (std::size_t j = 0; j < dlt.size(); ++j) dlt[j] += term[j];
        di = di * d;
    }
    if (!solve(a, dlt)) throw DomainError("internal: nondegenerate congruence without solution");
    return *order;
}

/// Sign inequalities for powers k = 1 .. kmax.
inline ValidationReport sign_diagnostics(const HolonomyGroup& f, const QMatrix& d, const SpectralSplit& split,
                                         unsigned kmax) {
    ValidationReport rep;
    std::string parity_fail, product_fail, expanding_fail;
    const bool expanding = split.modulus.inside == 0 && split.modulus.on == 0;
    std::vector<int> det_sign(f.order());
    for (std::size_t x = 0; x < f.order(); ++x) det_sign[x] = sign(det(f[x]));
    QMatrix dk = QMatrix::identity(d.rows());
    for (unsigned k = 1; k <= kmax; ++k) {
        dk = dk * d;
        const Rat base = det_one_minus(dk);
        const std::size_t exponent = split.real.p + (k % 2 == 0 ? split.real.n : 0);
        const int parity_sign = exponent % 2 == 0 ? 1 : -1;
        if (parity_fail.empty() && parity_sign * sign(base) < 0)
            parity_fail = "k=" + std::to_string(k) + ": det(I-D^k)=" + to_string(base);
        for (std::size_t x = 0; x < f.order(); ++x) {
            const Rat term = det_one_minus(f[x] * dk);
            const int s = split.character.values[x] * sign(base) * sign(term);
            if (product_fail.empty() && s < 0)
                product_fail = "k=" + std::to_string(k) + ", x=" + std::to_string(x);
            if (expanding && expanding_fail.empty() && det_sign[x] * sign(base) * sign(term) <= 0)
                expanding_fail = "k=" + std::to_string(k) + ", x=" + std::to_string(x);
        }
    }
    const std::string range = "k <= " + std::to_string(kmax);
    rep.add("sign_parity", parity_fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            parity_fail.empty() ? range : parity_fail);
    rep.add("sign_products", product_fail.empty() ? CheckStatus::pass : CheckStatus::fail,
            product_fail.empty() ? range + ", all elements" : product_fail);
    if (!expanding)
        rep.add("expanding_positivity", CheckStatus::skipped, "D has eigenvalues of modulus <= 1");
    else
        rep.add("expanding_positivity", expanding_fail.empty() ? CheckStatus::pass : CheckStatus::fail,
                expanding_fail.empty() ? range + ", all elements" : expanding_fail);
    return rep;
}

} // namespace nielsen
