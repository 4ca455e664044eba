#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nielsen/character.hpp"
#include "nielsen/group.hpp"
#include "nielsen/maps.hpp"
#include "nielsen/matrix.hpp"
#include "nielsen/poly.hpp"

namespace nielsen {

/// Roots counted with multiplicity by modulus relative to 1.
struct ModulusCounts {
    std::size_t inside = 0;
    std::size_t on = 0;
    std::size_t outside = 0;

    friend bool operator==(const ModulusCounts&, const ModulusCounts&) = default;
};

/// Real roots (with multiplicity) in (1, inf) and (-inf, -1).
struct RealCounts {
    std::size_t p = 0;
    std::size_t n = 0;

    friend bool operator==(const RealCounts&, const RealCounts&) = default;
};

struct SpectralSplit {
    ModulusCounts modulus;
    RealCounts real;
    Character character;
};

namespace detail {

inline int sign_at(const QPoly& p, const Rat& x) { return sign(p(x)); }

/// Sign changes of a Sturm chain evaluated at x (zeros dropped).
inline std::size_t sign_changes(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline std::size_t variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(sign_at(q, x));
    return sign_changes(s);
}

/// direction +1 for +inf, -1 for -inf.
inline std::size_t variations_at_infinity(const std::vector<QPoly>& chain, int direction) {
    std::vector<int> s;
    for (const auto& q : chain) {
        int lead = sign(q.lead());
        s.push_back(direction < 0 && q.degree() % 2 != 0 ? -lead : lead);
    }
    return sign_changes(s);
}

/// Distinct real roots of squarefree p in the open interval (a, b).
/// Endpoints must not be roots.
inline std::size_t sturm_count(const QPoly& p, const Rat& a, const Rat& b) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

inline std::size_t sturm_count_above(const QPoly& p, const Rat& a) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at_infinity(chain, +1);
}

inline std::size_t sturm_count_below(const QPoly& p, const Rat& b) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_infinity(chain, -1) - variations_at(chain, b);
}

/// For self-reciprocal g of degree 2m, the h with g(t) = t^m h(t + 1/t).
inline QPoly reciprocal_to_trace_form(const QPoly& g) {
    const long deg = g.degree();
    const std::size_t m = static_cast<std::size_t>(deg / 2);
    // t^i + t^-i as a polynomial in u: D_0 = 2, D_1 = u, D_{i+1} = u D_i - D_{i-1}
    const QPoly u = QPoly::monomial(1, 1);
    QPoly prev = QPoly::constant(2);
    QPoly cur = u;
    QPoly h = QPoly::constant(g.coeff(m));
    for (std::size_t i = 1; i <= m; ++i) {
        h = h + g.coeff(m + i) * cur;
        QPoly next = u * cur - prev;
        prev = cur;
        cur = next;
    }
    return h;
}

/// Schur-Cohn Hermitian form K with K(z, w)(1 - zw) = p*(z)p*(w) - p(z)p(w).
/// Its inertia gives (#roots inside, #roots outside) whenever p has no
/// pair of roots symmetric about the unit circle.
inline QMatrix schur_cohn_matrix(const QPoly& p) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    QMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat s = 0;
            for (std::size_t t = 0; t <= std::min(i, j); ++t) {
                const std::size_t a = i - t;
                const std::size_t b = j - t;
                s += p.coeff(n - a) * p.coeff(n - b) - p.coeff(a) * p.coeff(b);
            }
            k(i, j) = s;
        }
    return k;
}

struct InOut {
    std::size_t inside = 0;
    std::size_t outside = 0;
};

/// Roots of p inside/outside the unit circle; p must have no roots
/// symmetric about the circle (in particular none on it).
inline InOut schur_cohn_count(const QPoly& p) {
    InOut r;
    if (p.degree() <= 0) return r;
    QPoly chi = charpoly(schur_cohn_matrix(p));
    if (chi.coeff(0) == 0) throw DomainError("Schur-Cohn form is singular: roots symmetric about the unit circle");
    // real-rooted, so Descartes' rule is exact
    std::vector<int> s;
    for (const auto& c : chi.coeffs()) s.push_back(sign(c));
    r.inside = sign_changes(s);
    r.outside = static_cast<std::size_t>(p.degree()) - r.inside;
    return r;
}

/// Squarefree p with p(0) != 0.
inline ModulusCounts count_squarefree_by_modulus(QPoly s) {
    ModulusCounts c;
    for (int root : {1, -1}) {
        if (s(Rat(root)) == 0) {
            ++c.on;
            s = s.exact_div(QPoly({Rat(-root), Rat(1)}));
        }
    }
    if (s.degree() <= 0) return c;
    // every unit-circle root, and every pair {r, 1/r}, lies in gcd(s, s*)
    QPoly g = gcd(s, s.reciprocal());
    if (g.degree() > 0) {
        if (!(g.reciprocal() == g)) throw DomainError("internal: reciprocal gcd is not self-reciprocal");
        QPoly h = reciprocal_to_trace_form(g);
        const std::size_t pairs = sturm_count(h, Rat(-2), Rat(2));
        const std::size_t rest = static_cast<std::size_t>(g.degree()) - 2 * pairs;
        c.on += 2 * pairs;
        c.inside += rest / 2;
        c.outside += rest / 2;
        s = s.exact_div(g);
    }
    InOut io = schur_cohn_count(s);
    c.inside += io.inside;
    c.outside += io.outside;
    return c;
}

} // namespace detail

/// Exact root census by modulus: zero roots split off, squarefree
/// decomposition for multiplicities, unit-circle roots through the
/// self-reciprocal gcd and the substitution u = t + 1/t, the remainder by
/// the Schur-Cohn form.
inline ModulusCounts count_roots_by_modulus(const QPoly& p) {
    if (p.is_zero()) throw DomainError("count_roots_by_modulus: zero polynomial");
    ModulusCounts c;
    const std::size_t z = p.zero_root_multiplicity();
    c.inside += z;
    QPoly q = p.shift_down(z);
    if (q.degree() <= 0) return c;
    auto parts = squarefree_decomposition(q);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        ModulusCounts part = detail::count_squarefree_by_modulus(parts[i]);
        c.inside += (i + 1) * part.inside;
        c.on += (i + 1) * part.on;
        c.outside += (i + 1) * part.outside;
    }
    return c;
}

inline RealCounts count_real_outside(const QPoly& p) {
    if (p.is_zero()) throw DomainError("count_real_outside: zero polynomial");
    RealCounts c;
    QPoly q = p.shift_down(p.zero_root_multiplicity());
    if (q.degree() <= 0) return c;
    auto parts = squarefree_decomposition(q);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        QPoly s = parts[i];
        if (s.degree() <= 0) continue;
        for (int root : {1, -1})
            if (s(Rat(root)) == 0) s = s.exact_div(QPoly({Rat(-root), Rat(1)}));
        c.p += (i + 1) * detail::sturm_count_above(s, Rat(1));
        c.n += (i + 1) * detail::sturm_count_below(s, Rat(-1));
    }
    return c;
}

struct CharacterOptions {
    /// Largest power tried by the product test; 0 selects 4 * |F| * dim.
    unsigned k_sign = 0;
    /// Powers over which Prop. Sign consistency is re-verified.
    unsigned k_check = 10;
    /// Halvings of s - 1 allowed when locating the shifted radius.
    unsigned max_halvings = 512;
};

namespace detail {

/// Rational s with 1 < s < every expanding root modulus of `cp`.
inline Rat shifted_radius(const QPoly& cp, const ModulusCounts& counts, unsigned max_halvings) {
    Rat step = Rat(1, 2);
    for (unsigned j = 0; j < max_halvings; ++j, step /= 2) {
        Rat s = 1 + step;
        ModulusCounts scaled = count_roots_by_modulus(cp.scale_argument(s));
        if (scaled.on == 0 && scaled.inside == counts.inside + counts.on) return s;
    }
    throw UndecidableError("could not separate the expanding eigenvalues from the unit circle within " +
                           std::to_string(max_halvings) + " halvings");
}

} // namespace detail

/// eps(x) = det(rho_{>1}(x)), decided exactly: trivially when D has no
/// expanding eigenvalue, else by the sign of det(I - rho(x)D^k) det(I - D^k)
/// at the first k where it is nonzero, else by the same product at a shifted
/// radius s in (1, r_min). The result is checked to be a homomorphism and to
/// satisfy the sign inequalities for k <= k_check.
inline Character positive_character(const HolonomyGroup& f, const QMatrix& d, const IntertwinerTable& table,
                                    const ModulusCounts& counts, CharacterOptions opt = {}) {
    if (!d.is_square() || d.rows() != f.dimension()) throw DomainError("positive_character: dimension mismatch");
    if (table.candidates.size() != f.order()) throw DomainError("positive_character: intertwiner table does not match group");
    for (const auto& c : table.candidates)
        if (c.empty()) throw DomainError("positive_character: some element has no intertwiner");

    const std::size_t n = f.order();
    Character eps;
    eps.values.assign(n, 1);
    eps.methods.assign(n, CharacterMethod::trivial_split);
    eps.decided_at.assign(n, 0);
    if (counts.outside == 0) return eps;

    const unsigned k_sign = opt.k_sign ? opt.k_sign : static_cast<unsigned>(4 * n * f.dimension());
    std::vector<bool> decided(n, false);
    std::size_t remaining = n;
    QMatrix dk = QMatrix::identity(d.rows());
    for (unsigned k = 1; k <= k_sign && remaining > 0; ++k) {
        dk = dk * d;
        const Rat base = det_one_minus(dk);
        if (base == 0) continue;
        for (std::size_t x = 0; x < n; ++x) {
            if (decided[x]) continue;
            const Rat prod = det_one_minus(f[x] * dk) * base;
            if (prod == 0) continue;
            eps.values[x] = prod > 0 ? 1 : -1;
            eps.methods[x] = CharacterMethod::product_test;
            eps.decided_at[x] = k;
            decided[x] = true;
            --remaining;
        }
    }
    if (remaining > 0) {
        const QPoly cp = charpoly(d);
        const Rat s = detail::shifted_radius(cp, counts, opt.max_halvings);
        const QMatrix si = s * QMatrix::identity(d.rows());
        const Rat base = det(si - d);
        for (std::size_t x = 0; x < n; ++x) {
            if (decided[x]) continue;
            const Rat prod = det(si - f[x] * d) * base;
            if (prod == 0)
                throw UndecidableError("shifted determinant vanished for element " + std::to_string(x));
            eps.values[x] = prod > 0 ? 1 : -1;
            eps.methods[x] = CharacterMethod::shifted_radius;
        }
    }

    if (eps.values[f.identity_index] != 1) throw DomainError("determinant character is -1 at the identity");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (eps.values[f.mul_table[x][y]] != eps.values[x] * eps.values[y])
                throw DomainError("determinant character is not a homomorphism; the map data is inconsistent");
    dk = QMatrix::identity(d.rows());
    for (unsigned k = 1; k <= opt.k_check; ++k) {
        dk = dk * d;
        const Rat base = det_one_minus(dk);
        if (base == 0) continue;
        for (std::size_t x = 0; x < n; ++x)
            if (sign(det_one_minus(f[x] * dk) * base) * eps.values[x] < 0)
                throw DomainError("sign inequality violated at k = " + std::to_string(k) + " for element " +
                                  std::to_string(x) + "; the map data is inconsistent");
    }
    return eps;
}

inline Character positive_character(const HolonomyGroup& f, const QMatrix& d, const IntertwinerTable& table,
                                    CharacterOptions opt = {}) {
    return positive_character(f, d, table, count_roots_by_modulus(charpoly(d)), opt);
}

inline SpectralSplit spectral_split(const HolonomyGroup& f, const QMatrix& d, const IntertwinerTable& table,
                                    CharacterOptions opt = {}) {
    SpectralSplit s;
    const QPoly cp = charpoly(d);
    s.modulus = count_roots_by_modulus(cp);
    s.real = count_real_outside(cp);
    s.character = positive_character(f, d, table, s.modulus, opt);
    return s;
}

} // namespace nielsen
