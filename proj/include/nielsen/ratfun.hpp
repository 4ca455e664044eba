#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nielsen/matrix.hpp"
#include "nielsen/poly.hpp"
#include "nielsen/series.hpp"

namespace nielsen {

/// Rational function num/den in lowest terms with den(0) = 1 and integer
/// coefficients. Construction throws DomainError when the reduced form is
/// not integral: the zeta and log-derivative functions of genuine maps
/// always are, so anything else signals invalid input.
class RatFun {
public:
    RatFun() : num_(QPoly::constant(1)), den_(QPoly::constant(1)) {}

    static RatFun make(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        if (den.coeff(0) == 0) throw DomainError("rational function denominator vanishes at 0");
        RatFun r;
        QPoly g = gcd(num, den);
        r.num_ = num.exact_div(g);
        r.den_ = den.exact_div(g);
        Rat s = Rat(1) / r.den_.coeff(0);
        r.num_ = s * r.num_;
        r.den_ = s * r.den_;
        for (const auto* p : {&r.num_, &r.den_})
            for (const auto& c : p->coeffs())
                if (!is_integer(c))
                    throw DomainError("rational function has non-integer normalized coefficient " + to_string(c));
        return r;
    }

    [[nodiscard]] const QPoly& num() const { return num_; }
    [[nodiscard]] const QPoly& den() const { return den_; }

    /// Both constant terms equal to 1, as required of zeta functions.
    [[nodiscard]] bool is_unit_at_zero() const { return num_.coeff(0) == 1 && den_.coeff(0) == 1; }

    [[nodiscard]] QSeries series(std::size_t order) const {
        return QSeries::from_poly(num_, order) * QSeries::from_poly(den_, order).inverse();
    }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    QPoly num_;
    QPoly den_;
};

enum class Transform { reciprocal, negate_argument, divide };

inline RatFun reciprocal(const RatFun& r) {
    if (r.num().coeff(0) == 0) throw DomainError("reciprocal of a rational function vanishing at 0");
    return RatFun::make(r.den(), r.num());
}

inline RatFun negate_argument(const RatFun& r) {
    return RatFun::make(r.num().negate_argument(), r.den().negate_argument());
}

inline RatFun divide(const RatFun& a, const RatFun& b) {
    if (b.num().coeff(0) == 0) throw DomainError("division by a rational function vanishing at 0");
    return RatFun::make(a.num() * b.den(), a.den() * b.num());
}

inline RatFun ratfun_transform(const RatFun& r, Transform op, const RatFun* other = nullptr) {
    switch (op) {
    case Transform::reciprocal: return reciprocal(r);
    case Transform::negate_argument: return negate_argument(r);
    case Transform::divide:
        if (!other) throw DomainError("divide transform needs a second operand");
        return divide(r, *other);
    }
    throw DomainError("unknown transform");
}

namespace detail {

/// Denominator Q (q_0 = 1, degree <= n) with S*Q having no terms of degree
/// m+1 .. order-1, if one exists.
inline std::optional<QPoly> pade_denominator(const QSeries& s, std::size_t m, std::size_t n) {
    const std::size_t order = s.order();
    if (m + 1 >= order) return QPoly::constant(1);
    const std::size_t eqs = order - (m + 1);
    QMatrix a(eqs, n);
    QVector b(eqs);
    for (std::size_t r = 0; r < eqs; ++r) {
        const std::size_t i = m + 1 + r;
        for (std::size_t j = 1; j <= n; ++j)
            if (i >= j) a(r, j - 1) = s[i - j];
        b[r] = -s[i];
    }
    if (n == 0) {
        for (const auto& v : b)
            if (v != 0) return std::nullopt;
        return QPoly::constant(1);
    }
    auto q = solve(a, b);
    if (!q) return std::nullopt;
    std::vector<Rat> coeffs{Rat(1)};
    coeffs.insert(coeffs.end(), q->begin(), q->end());
    return QPoly(std::move(coeffs));
}

} // namespace detail

/// Minimal-degree rational function P/Q, deg P, deg Q <= dmax, matching S
/// to its full order. With order >= 2 dmax + 2 the feasible types (m, n)
/// form an upper orthant {m >= a, n >= b}, so the staged search (smallest
/// denominator degree at numerator bound dmax, then smallest numerator
/// degree) lands on the unique fit of minimal total degree.
inline RatFun pade_fit(const QSeries& s, std::size_t dmax) {
    if (s.order() == 0 || s[0] != 1) throw DomainError("pade_fit: series must have constant term 1");
    if (s.order() < 2 * dmax + 2)
        throw DomainError("pade_fit: order " + std::to_string(s.order()) + " below 2*dmax+2 = " +
                          std::to_string(2 * dmax + 2));
    std::optional<std::size_t> den_deg;
    for (std::size_t n = 0; n <= dmax && !den_deg; ++n)
        if (detail::pade_denominator(s, dmax, n)) den_deg = n;
    if (!den_deg) throw DomainError("pade_fit: no rational fit with degrees <= " + std::to_string(dmax));
    for (std::size_t m = 0; m <= dmax; ++m) {
        auto q = detail::pade_denominator(s, m, *den_deg);
        if (!q) continue;
        QPoly p = QPoly((QSeries::from_poly(*q, s.order()) * s).coeffs()).truncate(m + 1);
        return RatFun::make(p, *q);
    }
    throw DomainError("pade_fit: inconsistent staged search");
}

namespace detail {

/// Splits an integer polynomial with constant term 1 into linear factors
/// (1 - a z), a integer; returns nullopt if some root is irrational or the
/// leading coefficient is too large to enumerate divisors.
inline std::optional<std::map<Int, int>> linear_factors(QPoly p) {
    std::map<Int, int> factors;
    while (p.degree() > 0) {
        Int lead = abs(p.lead().get_num());
        if (lead > Int("1000000000000")) return std::nullopt;
        std::optional<Int> found;
        for (Int d = 1; d * d <= lead && !found; ++d) {
            if (lead % d != 0) continue;
            for (const Int& c : {d, Int(lead / d)})
                for (int sgn_ : {1, -1}) {
                    if (found) break;
                    Int a = sgn_ * c;
                    if (p(Rat(1) / Rat(a)) == 0) found = a;
                }
        }
        if (!found) return std::nullopt;
        p = p.exact_div(QPoly({Rat(1), Rat(-*found)}));
        ++factors[*found];
    }
    return factors;
}

inline std::string factor_string(const std::map<Int, int>& f) {
    std::string s;
    // ascending |a|, positive before negative
    std::vector<std::pair<Int, int>> items(f.begin(), f.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (abs(x.first) != abs(y.first)) return abs(x.first) < abs(y.first);
        return x.first > y.first;
    });
    for (const auto& [a, mult] : items) {
        s += "(" + to_string(QPoly({Rat(1), Rat(-a)})) + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

inline std::size_t factor_count(const std::map<Int, int>& f) {
    std::size_t n = 0;
    for (const auto& kv : f) n += static_cast<std::size_t>(kv.second);
    return n;
}

} // namespace detail

/// Expanded display form "(num)/(den)".
inline std::string expanded(const RatFun& r) {
    std::string n = to_string(r.num());
    if (r.den().degree() == 0) return n;
    if (r.num().degree() > 0) n = "(" + n + ")";
    return n + "/(" + to_string(r.den()) + ")";
}

/// Display form: factored over the integers when every root is rational,
/// else expanded.
inline std::string pretty(const RatFun& r) {
    auto nf = detail::linear_factors(r.num());
    auto df = detail::linear_factors(r.den());
    if (nf && df && r.num().coeff(0) == 1) {
        std::string n = nf->empty() ? "1" : detail::factor_string(*nf);
        if (df->empty()) return n;
        std::string d = detail::factor_string(*df);
        bool single = detail::factor_count(*df) == 1 && df->begin()->second == 1;
        return n + "/" + (single ? d : "(" + d + ")");
    }
    return expanded(r);
}

} // namespace nielsen
