#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nielsen/matrix.hpp"

namespace nielsen {

/// Finite group of invertible rational matrices with its multiplication
/// and inverse tables. Element 0 is the identity.
struct HolonomyGroup {
    std::vector<QMatrix> elements;
    std::size_t identity_index = 0;
    std::vector<std::vector<std::size_t>> mul_table; // mul_table[x][y] = index of x*y
    std::vector<std::size_t> inv_table;

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] std::size_t dimension() const { return elements.empty() ? 0 : elements[0].rows(); }
    [[nodiscard]] const QMatrix& operator[](std::size_t i) const { return elements[i]; }

    [[nodiscard]] std::optional<std::size_t> index_of(const QMatrix& m) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == m) return i;
        return std::nullopt;
    }

    /// Order of element x, computed from the multiplication table.
    [[nodiscard]] std::size_t element_order(std::size_t x) const {
        std::size_t k = 1;
        std::size_t cur = x;
        while (cur != identity_index) {
            cur = mul_table[cur][x];
            ++k;
        }
        return k;
    }
};

/// Builds the mul/inv tables for a list of matrices known to be closed
/// under multiplication, identity first.
inline HolonomyGroup make_group(std::vector<QMatrix> elements) {
    if (elements.empty()) throw DomainError("empty group");
    const std::size_t d = elements[0].rows();
    if (!(elements[0] == QMatrix::identity(d))) throw DomainError("group element 0 must be the identity");
    HolonomyGroup g;
    std::unordered_map<std::string, std::size_t> lookup;
    for (std::size_t i = 0; i < elements.size(); ++i) lookup.emplace(to_string(elements[i]), i);
    g.elements = std::move(elements);
    const std::size_t n = g.elements.size();
    g.mul_table.assign(n, std::vector<std::size_t>(n));
    g.inv_table.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto it = lookup.find(to_string(g.elements[x] * g.elements[y]));
            if (it == lookup.end()) throw DomainError("matrix set is not closed under multiplication");
            g.mul_table[x][y] = it->second;
            if (it->second == 0) g.inv_table[x] = y;
        }
    return g;
}

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Closure of the generators under multiplication. BFS order, identity at
/// index 0; `word_parent[i]`/`word_generator[i]` record that element i is
/// generator * element parent (for the identity both are unused).
struct GroupClosure {
    HolonomyGroup group;
    std::vector<std::size_t> word_parent;
    std::vector<std::size_t> word_generator;
};

inline GroupClosure close_group_with_words(std::span<const QMatrix> generators, std::size_t cap = kDefaultGroupCap) {
    if (generators.empty()) throw DomainError("close_group needs at least one generator (use the identity for a trivial group)");
    const std::size_t d = generators[0].rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != d) throw DomainError("generators must be square of equal dimension");
        if (det(g) == 0) throw DomainError("non-invertible generator " + to_string(g));
    }
    std::vector<QMatrix> elems{QMatrix::identity(d)};
    std::vector<std::size_t> parent{0}, gen{0};
    std::unordered_map<std::string, std::size_t> lookup{{to_string(elems[0]), 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            QMatrix next = generators[gi] * elems[head];
            std::string key = to_string(next);
            if (lookup.count(key)) continue;
            if (elems.size() >= cap)
                throw DomainError("group order exceeds cap " + std::to_string(cap) +
                                  " (holonomy is infinite or misconfigured)");
            lookup.emplace(std::move(key), elems.size());
            elems.push_back(std::move(next));
            parent.push_back(head);
            gen.push_back(gi);
        }
    }
    GroupClosure out;
    out.group = make_group(std::move(elems));
    out.word_parent = std::move(parent);
    out.word_generator = std::move(gen);
    return out;
}

inline HolonomyGroup close_group(std::span<const QMatrix> generators, std::size_t cap = kDefaultGroupCap) {
    return close_group_with_words(generators, cap).group;
}

inline HolonomyGroup trivial_group(std::size_t d) {
    QMatrix id = QMatrix::identity(d);
    return close_group(std::span<const QMatrix>(&id, 1));
}

/// The subgroup on the given element indices (must contain the identity
/// and be closed), reindexed with the identity first.
inline HolonomyGroup subgroup(const HolonomyGroup& g, std::span<const std::size_t> indices) {
    std::vector<QMatrix> elems{g.elements[g.identity_index]};
    for (auto i : indices)
        if (i != g.identity_index) elems.push_back(g.elements[i]);
    return make_group(std::move(elems));
}

} // namespace nielsen
