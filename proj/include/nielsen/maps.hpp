#pragma once

#include <cstddef>
#include <vector>

#include "nielsen/character.hpp"
#include "nielsen/group.hpp"
#include "nielsen/matrix.hpp"

namespace nielsen {

/// Affine homotopy lift (delta, D). Only D enters the fixed-point
/// formulas; delta is used by the torus oracle and the translation check.
struct MapSpec {
    QMatrix D;
    QVector delta;
};

/// For each x, every y with rho(y) D = D rho(x).
struct IntertwinerTable {
    std::vector<std::vector<std::size_t>> candidates;

    /// True when every candidate set is a singleton.
    [[nodiscard]] bool is_function() const {
        for (const auto& c : candidates)
            if (c.size() != 1) return false;
        return true;
    }
};

inline IntertwinerTable intertwiner_table(const HolonomyGroup& f, const QMatrix& d) {
    if (!d.is_square() || d.rows() != f.dimension())
        throw DomainError("linear part has dimension " + std::to_string(d.rows()) + ", holonomy has " +
                          std::to_string(f.dimension()));
    IntertwinerTable t;
    t.candidates.resize(f.order());
    std::vector<QMatrix> left(f.order());
    for (std::size_t y = 0; y < f.order(); ++y) left[y] = f[y] * d;
    for (std::size_t x = 0; x < f.order(); ++x) {
        QMatrix right = d * f[x];
        for (std::size_t y = 0; y < f.order(); ++y)
            if (left[y] == right) t.candidates[x].push_back(y);
        if (t.candidates[x].empty())
            throw DomainError("no intertwiner: D is not the linear part of any self-map for this holonomy "
                              "(no y with rho(y) D = D rho(x) for x = element " + std::to_string(x) + ")");
    }
    return t;
}

/// F_+ = kernel of the character, with its index in F.
struct PositivePart {
    std::vector<std::size_t> plus_indices;
    std::size_t index = 1;
};

inline PositivePart positive_part(const HolonomyGroup& f, const Character& eps) {
    if (eps.values.size() != f.order()) throw DomainError("character is not defined on every group element");
    for (std::size_t x = 0; x < f.order(); ++x)
        for (std::size_t y = 0; y < f.order(); ++y)
            if (eps.values[f.mul_table[x][y]] != eps.values[x] * eps.values[y])
                throw DomainError("determinant character is not multiplicative (elements " + std::to_string(x) +
                                  ", " + std::to_string(y) + ")");
    PositivePart p;
    for (std::size_t x = 0; x < f.order(); ++x)
        if (eps.values[x] == 1) p.plus_indices.push_back(x);
    if (f.order() % p.plus_indices.size() != 0) throw DomainError("positive part does not divide the group order");
    p.index = f.order() / p.plus_indices.size();
    if (p.index != 1 && p.index != 2) throw DomainError("positive part has index " + std::to_string(p.index));
    return p;
}

} // namespace nielsen
