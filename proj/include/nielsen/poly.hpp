#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nielsen/rational.hpp"

namespace nielsen {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the top coefficient
/// is nonzero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static QPoly constant(const Rat& a) { return QPoly({a}); }
    static QPoly monomial(const Rat& a, std::size_t degree) {
        std::vector<Rat> c(degree + 1);
        c[degree] = a;
        return QPoly(std::move(c));
    }
    static QPoly from_ints(std::initializer_list<long> coeffs) {
        std::vector<Rat> c;
        for (long v : coeffs) c.emplace_back(v);
        return QPoly(std::move(c));
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    [[nodiscard]] Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    [[nodiscard]] Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& a) {
        std::vector<Rat> c(a.c_);
        for (auto& x : c) x = -x;
        return QPoly(std::move(c));
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(c));
    }
    friend QPoly operator*(const Rat& s, const QPoly& a) {
        if (s == 0) return {};
        std::vector<Rat> c(a.c_);
        for (auto& x : c) x *= s;
        return QPoly(std::move(c));
    }

    /// Quotient and remainder; divisor must be nonzero.
    [[nodiscard]] std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const {
        if (divisor.is_zero()) throw DomainError("polynomial division by zero");
        if (degree() < divisor.degree()) return {QPoly{}, *this};
        std::vector<Rat> rem(c_);
        std::vector<Rat> quo(c_.size() - divisor.c_.size() + 1);
        const std::size_t dd = divisor.c_.size() - 1;
        const Rat& dl = divisor.c_.back();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rat q = rem[k + dd] / dl;
            quo[k] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
        }
        rem.resize(dd);
        return {QPoly(std::move(quo)), QPoly(std::move(rem))};
    }

    /// Exact division; throws if the divisor does not divide.
    [[nodiscard]] QPoly exact_div(const QPoly& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero()) throw DomainError("polynomial division is not exact");
        return q;
    }

    [[nodiscard]] QPoly monic() const {
        if (is_zero()) return {};
        return (Rat(1) / lead()) * *this;
    }

    [[nodiscard]] QPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return QPoly(std::move(c));
    }

    /// t^deg * p(1/t).
    [[nodiscard]] QPoly reciprocal() const {
        std::vector<Rat> c(c_.rbegin(), c_.rend());
        return QPoly(std::move(c));
    }

    /// p(-t).
    [[nodiscard]] QPoly negate_argument() const {
        std::vector<Rat> c(c_);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return QPoly(std::move(c));
    }

    /// p(s * t).
    [[nodiscard]] QPoly scale_argument(const Rat& s) const {
        std::vector<Rat> c(c_);
        Rat f = 1;
        for (auto& x : c) {
            x *= f;
            f *= s;
        }
        return QPoly(std::move(c));
    }

    /// Number of factors t dividing p (0 for the zero polynomial).
    [[nodiscard]] std::size_t zero_root_multiplicity() const {
        std::size_t m = 0;
        while (m < c_.size() && c_[m] == 0) ++m;
        return c_.empty() ? 0 : m;
    }

    [[nodiscard]] QPoly shift_down(std::size_t m) const {
        if (m >= c_.size()) return {};
        return QPoly(std::vector<Rat>(c_.begin() + static_cast<long>(m), c_.end()));
    }

    [[nodiscard]] QPoly truncate(std::size_t length) const {
        if (c_.size() <= length) return *this;
        return QPoly(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(length)));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic gcd (zero if both are zero).
inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Squarefree decomposition (Yun): returns s_1, s_2, ... with
/// p = lead * prod s_i^i, each s_i monic squarefree, pairwise coprime.
/// Entry i-1 holds s_i; trailing entries may be constant 1.
inline std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<QPoly> out;
    if (p.degree() == 0) return out;
    QPoly f = p.monic();
    QPoly df = f.derivative();
    QPoly a = gcd(f, df);
    QPoly b = f.exact_div(a);
    QPoly c = df.exact_div(a) - b.derivative();
    while (b.degree() > 0) {
        QPoly d = gcd(b, c);
        out.push_back(d);
        b = b.exact_div(d);
        c = c.exact_div(d) - b.derivative();
    }
    return out;
}

/// Human-readable form in the variable `var`, e.g. "1 - 35z + 150z^2".
inline std::string to_string(const QPoly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rat& a = p.coeffs()[i];
        if (a == 0) continue;
        Rat mag = abs(a);
        if (s.empty())
            s += a < 0 ? "-" : "";
        else
            s += a < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) s += to_string(mag);
        if (i >= 1) s += var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

} // namespace nielsen
