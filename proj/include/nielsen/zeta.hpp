#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nielsen/fixed_point.hpp"
#include "nielsen/maps.hpp"
#include "nielsen/matrix.hpp"
#include "nielsen/parallel.hpp"
#include "nielsen/ratfun.hpp"
#include "nielsen/series.hpp"
#include "nielsen/spectral.hpp"
#include "nielsen/validation.hpp"

namespace nielsen {

/// Largest dimension for which the 2^d resolvents are attempted.
inline constexpr std::size_t kMaxZetaDimension = 8;

struct ZetaOptions {
    unsigned k_series = 20;
    unsigned kmax = 10;
    bool parallel = false;
};

struct CertifiedRatFun {
    RatFun value;
    Check certificate;
    std::size_t series_checked = 0;
};

struct TableCase {
    bool p_odd = false;
    bool n_odd = false;
    std::size_t index = 1;
    std::string formula;
};

struct ZetaReport {
    CertifiedRatFun L_f;
    std::optional<CertifiedRatFun> L_f_plus;
    RatFun N_f;
    TableCase table_case;
    FixedPointTable k_table;
    std::size_t n_series_checked = 0;
};

namespace detail {

inline std::vector<std::size_t> all_indices(const HolonomyGroup& f, const std::vector<std::size_t>& subset) {
    if (!subset.empty()) return subset;
    std::vector<std::size_t> idx(f.order());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
}

inline void check_zeta_input(const HolonomyGroup& f, const QMatrix& d) {
    if (!d.is_square() || d.rows() != f.dimension()) throw DomainError("zeta: dimension mismatch between D and the holonomy");
    if (d.rows() > kMaxZetaDimension)
        throw DomainError("zeta: resource cap exceeded, 2^" + std::to_string(d.rows()) + " resolvents (limit d <= " +
                          std::to_string(kMaxZetaDimension) + ")");
}

/// Numerator and denominator of tr(A B (I - zB)^{-1}) = sum_k tr(A B^{k+1}) z^k,
/// the denominator being det(I - zB).
struct Resolvent {
    QPoly num;
    QPoly den;
};

inline Resolvent trace_resolvent(const QMatrix& a, const QMatrix& b) {
    const std::size_t m = b.rows();
    const QPoly den = charpoly(b).reciprocal();
    std::vector<Rat> s(m);
    QMatrix bk = b;
    for (std::size_t k = 0; k < m; ++k) {
        s[k] = (a * bk).trace();
        bk = bk * b;
    }
    // exact because the series times det(I - zB) is a polynomial of degree < m
    return {(den * QPoly(std::move(s))).truncate(m), den};
}

} // namespace detail

/// T(z) = sum_{k>=1} L(f^k) z^{k-1}, averaged over `subset` (all of F when
/// empty), from the exterior-power resolvents.
inline RatFun lefschetz_log_derivative(const HolonomyGroup& f, const QMatrix& d,
                                       const std::vector<std::size_t>& subset = {}, EvalOptions opt = {}) {
    detail::check_zeta_input(f, d);
    const std::size_t dim = d.rows();
    const auto idx = detail::all_indices(f, subset);
    std::vector<detail::Resolvent> terms(dim + 1);
    for_each_index(dim + 1, opt.parallel, [&](std::size_t j) {
        const QMatrix b = exterior_power(d, j);
        QMatrix a(b.rows(), b.cols());
        for (auto x : idx) a = a + exterior_power(f[x], j);
        a = (Rat(1) / Rat(static_cast<long>(idx.size()))) * a;
        terms[j] = detail::trace_resolvent(a, b);
    });
    QPoly num, den = QPoly::constant(1);
    for (std::size_t j = 0; j <= dim; ++j) {
        QPoly nj = j % 2 == 0 ? terms[j].num : Rat(-1) * terms[j].num;
        QPoly g = gcd(den, terms[j].den);
        QPoly other = terms[j].den.exact_div(g);
        num = num * other + nj * den.exact_div(g);
        den = den * other;
    }
    return RatFun::make(num, den);
}

/// (P'Q - PQ') den(T) = num(T) P Q, i.e. T is the log-derivative of P/Q.
inline bool log_derivative_identity(const RatFun& pq, const RatFun& t) {
    const QPoly& p = pq.num();
    const QPoly& q = pq.den();
    return (p.derivative() * q - p * q.derivative()) * t.den() == t.num() * p * q;
}

/// exp(sum L(f^k) z^k / k) fitted with deg <= 2^d and certified against the
/// log-derivative identity (P'Q - PQ') den(T) = num(T) P Q.
inline CertifiedRatFun lefschetz_zeta(const HolonomyGroup& f, const QMatrix& d,
                                      const std::vector<std::size_t>& subset = {}, EvalOptions opt = {}) {
    detail::check_zeta_input(f, d);
    const std::size_t dmax = std::size_t{1} << d.rows();
    const unsigned kmax = static_cast<unsigned>(2 * dmax + 8);
    auto seq = fixed_point_sequence(f, d, kmax, subset, opt);
    std::vector<Rat> counts;
    for (const auto& v : seq) counts.emplace_back(v.lefschetz);
    const QSeries s = series_exp(log_series_from_counts(counts, kmax + 1));

    RatFun fit;
    try {
        fit = pade_fit(s, dmax);
    } catch (const DomainError& e) {
        throw CertificateError(std::string("Lefschetz zeta reconstruction failed: ") + e.what());
    }
    const RatFun t = lefschetz_log_derivative(f, d, subset, opt);
    if (!log_derivative_identity(fit, t) || !fit.is_unit_at_zero())
        throw CertificateError("log-derivative certificate failed for " + pretty(fit));
    Check cert{"log_derivative", CheckStatus::pass, "(P'Q - PQ') den(T) = num(T) PQ", false};
    return {fit, cert, static_cast<std::size_t>(kmax)};
}

/// Table cell selecting N_f from L_f and L_{f+}.
inline TableCase zeta_table_case(const SpectralSplit& split, std::size_t index) {
    TableCase c;
    c.p_odd = split.real.p % 2 == 1;
    c.n_odd = split.real.n % 2 == 1;
    c.index = index;
    if (index == 1) {
        if (!c.p_odd && !c.n_odd) c.formula = "N_f(z) = L_f(z)";
        if (!c.p_odd && c.n_odd) c.formula = "N_f(z) = 1/L_f(-z)";
        if (c.p_odd && !c.n_odd) c.formula = "N_f(z) = 1/L_f(z)";
        if (c.p_odd && c.n_odd) c.formula = "N_f(z) = L_f(-z)";
    } else {
        if (!c.p_odd && !c.n_odd) c.formula = "N_f(z) = L_f+(z)/L_f(z)";
        if (!c.p_odd && c.n_odd) c.formula = "N_f(z) = L_f(-z)/L_f+(-z)";
        if (c.p_odd && !c.n_odd) c.formula = "N_f(z) = L_f(z)/L_f+(z)";
        if (c.p_odd && c.n_odd) c.formula = "N_f(z) = L_f+(-z)/L_f(-z)";
    }
    return c;
}

inline RatFun apply_table(const TableCase& c, const RatFun& l, const RatFun* l_plus) {
    if (c.index == 1) {
        RatFun r = c.n_odd ? negate_argument(l) : l;
        return c.p_odd == c.n_odd ? r : reciprocal(r);
    }
    if (!l_plus) throw DomainError("index 2 table cell needs L_f+");
    const RatFun a = c.n_odd ? negate_argument(*l_plus) : *l_plus;
    const RatFun b = c.n_odd ? negate_argument(l) : l;
    return c.p_odd == c.n_odd ? divide(a, b) : divide(b, a);
}

/// Assembles N_f(z) from the table and cross-checks its log-series against
/// directly averaged N(f^k) for k <= k_series.
inline ZetaReport nielsen_zeta(const HolonomyGroup& f, const QMatrix& d, const SpectralSplit& split,
                               const PositivePart& part, ZetaOptions opt = {}) {
    if (part.index != 1 && part.index != 2) throw DomainError("positive part index must be 1 or 2");
    const EvalOptions eval{opt.parallel};
    ZetaReport rep;
    rep.L_f = lefschetz_zeta(f, d, {}, eval);
    if (part.index == 2) rep.L_f_plus = lefschetz_zeta(f, d, part.plus_indices, eval);
    rep.table_case = zeta_table_case(split, part.index);
    rep.N_f = apply_table(rep.table_case, rep.L_f.value, rep.L_f_plus ? &rep.L_f_plus->value : nullptr);

    const unsigned kcheck = std::max(opt.k_series, opt.kmax);
    FixedPointTable full = fixed_point_table(f, d, part, kcheck, eval);
    const QSeries log_n = series_log(rep.N_f.series(opt.k_series + 1));
    const QSeries log_l = series_log(rep.L_f.value.series(opt.k_series + 1));
    for (unsigned k = 1; k <= opt.k_series; ++k) {
        const auto& row = full.rows[k - 1];
        const Rat kk(static_cast<long>(k));
        if (kk * log_n[k] != Rat(row.nielsen))
            throw CertificateError("N_f series disagrees with N(f^" + std::to_string(k) + ") = " + to_string(row.nielsen));
        if (kk * log_l[k] != Rat(row.lefschetz))
            throw CertificateError("L_f series disagrees with L(f^" + std::to_string(k) + ") = " + to_string(row.lefschetz));
    }
    rep.n_series_checked = opt.k_series;
    full.rows.resize(opt.kmax);
    full.kmax = opt.kmax;
    rep.k_table = std::move(full);
    return rep;
}

} // namespace nielsen
