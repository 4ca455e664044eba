#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nielsen/group.hpp"
#include "nielsen/maps.hpp"
#include "nielsen/matrix.hpp"
#include "nielsen/smith.hpp"
#include "nielsen/validation.hpp"

namespace nielsen {

/// Matrix-level description of an almost-crystallographic group together
/// with named self-maps. Coordinates are those of `lattice` columns when a
/// lattice is given; holonomy matrices, translations and maps are all
/// expressed in the same ambient basis.
struct CrystalData {
    std::string name;
    std::size_t dimension = 0;
    std::vector<QMatrix> generators;
    HolonomyGroup holonomy;
    /// BFS words from the closure: element i = generators[word_generator[i]] * element word_parent[i].
    std::vector<std::size_t> word_parent;
    std::vector<std::size_t> word_generator;
    std::optional<QMatrix> lattice;
    /// Translation part a of (a, A) for generator indices; missing generators translate by 0.
    std::optional<std::map<std::size_t, QVector>> coset_translations;
    std::map<std::string, MapSpec> maps;
};

inline CrystalData make_crystal(std::string name, std::size_t dimension, std::vector<QMatrix> generators,
                                std::optional<QMatrix> lattice = std::nullopt,
                                std::optional<std::map<std::size_t, QVector>> cosets = std::nullopt,
                                std::map<std::string, MapSpec> maps = {}, std::size_t cap = kDefaultGroupCap) {
    CrystalData c;
    c.name = std::move(name);
    c.dimension = dimension;
    if (generators.empty()) generators.push_back(QMatrix::identity(dimension));
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != dimension)
            throw DomainError("holonomy generator is not " + std::to_string(dimension) + "x" + std::to_string(dimension));
    c.generators = std::move(generators);
    auto closure = close_group_with_words(c.generators, cap);
    c.holonomy = std::move(closure.group);
    c.word_parent = std::move(closure.word_parent);
    c.word_generator = std::move(closure.word_generator);
    c.lattice = std::move(lattice);
    c.coset_translations = std::move(cosets);
    c.maps = std::move(maps);
    return c;
}

namespace detail {

struct LatticeFrame {
    QMatrix basis;
    QMatrix inverse;

    [[nodiscard]] QMatrix to_lattice(const QMatrix& m) const { return inverse * m * basis; }
    [[nodiscard]] QVector to_lattice(const QVector& v) const { return inverse * v; }
};

inline std::optional<LatticeFrame> lattice_frame(const CrystalData& c) {
    QMatrix basis = c.lattice ? *c.lattice : QMatrix::identity(c.dimension);
    if (!basis.is_square() || basis.rows() != c.dimension) return std::nullopt;
    auto inv = inverse(basis);
    if (!inv) return std::nullopt;
    return LatticeFrame{basis, *inv};
}

inline bool is_integral(const QVector& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

inline QVector sub(QVector a, const QVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline QVector add(QVector a, const QVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

} // namespace detail

/// Translation parts for every holonomy element in lattice coordinates,
/// propagated along the closure words (defined modulo the lattice).
inline std::vector<QVector> element_translations(const CrystalData& c, const detail::LatticeFrame& frame) {
    const std::size_t n = c.holonomy.order();
    std::vector<QVector> gen_t(c.generators.size(), QVector(c.dimension));
    if (c.coset_translations)
        for (const auto& [g, a] : *c.coset_translations)
            if (g < gen_t.size() && a.size() == c.dimension) gen_t[g] = frame.to_lattice(a);
    std::vector<QVector> t(n, QVector(c.dimension));
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t g = c.word_generator[i];
        t[i] = detail::add(gen_t[g], frame.to_lattice(c.generators[g]) * t[c.word_parent[i]]);
    }
    return t;
}

/// Structural checks on the group, lattice, coset data and maps. Torsion
/// and the map lattice/translation checks are warnings unless `strict`.
inline ValidationReport validate(const CrystalData& c, bool strict = false) {
    ValidationReport rep;
    const std::size_t d = c.dimension;
    const HolonomyGroup& f = c.holonomy;

    // dimensions
    std::string dim_issue;
    for (const auto& g : c.generators)
        if (g.rows() != d || g.cols() != d) dim_issue = "generator shape";
    if (c.lattice && (c.lattice->rows() != d || c.lattice->cols() != d)) dim_issue = "lattice shape";
    if (c.coset_translations)
        for (const auto& [g, a] : *c.coset_translations) {
            if (g >= c.generators.size()) dim_issue = "coset translation for unknown generator " + std::to_string(g);
            if (a.size() != d) dim_issue = "coset translation length";
        }
    for (const auto& [name, m] : c.maps) {
        if (m.D.rows() != d || m.D.cols() != d) dim_issue = "map '" + name + "' linear part shape";
        if (m.delta.size() != d) dim_issue = "map '" + name + "' translation length";
    }
    rep.add("dimension", dim_issue.empty() ? CheckStatus::pass : CheckStatus::fail,
            dim_issue.empty() ? "d = " + std::to_string(d) : dim_issue);
    if (!dim_issue.empty()) return rep;

    // group tables
    std::string table_issue;
    if (f.order() == 0 || !(f[f.identity_index] == QMatrix::identity(d))) table_issue = "identity missing";
    for (std::size_t x = 0; x < f.order() && table_issue.empty(); ++x) {
        if (f.mul_table[x][f.inv_table[x]] != f.identity_index) table_issue = "inverse table wrong at " + std::to_string(x);
        for (std::size_t y = 0; y < f.order() && table_issue.empty(); ++y)
            if (!(f[f.mul_table[x][y]] == f[x] * f[y])) table_issue = "product table wrong";
    }
    // associativity spot-check on a deterministic sample
    for (std::size_t s = 0; s < 64 && table_issue.empty() && f.order() > 0; ++s) {
        std::size_t x = (s * 7) % f.order(), y = (s * 13 + 1) % f.order(), z = (s * 29 + 2) % f.order();
        if (f.mul_table[f.mul_table[x][y]][z] != f.mul_table[x][f.mul_table[y][z]]) table_issue = "not associative";
    }
    rep.add("group_closure", table_issue.empty() ? CheckStatus::pass : CheckStatus::fail,
            table_issue.empty() ? "|F| = " + std::to_string(f.order()) : table_issue);

    auto frame = detail::lattice_frame(c);
    if (!frame) {
        rep.add("lattice_preservation", CheckStatus::fail, "lattice basis is singular");
        return rep;
    }
    std::string lat_issue;
    for (std::size_t x = 0; x < f.order() && lat_issue.empty(); ++x)
        if (!frame->to_lattice(f[x]).is_integral()) lat_issue = "element " + std::to_string(x) + " does not preserve the lattice";
    rep.add("lattice_preservation", lat_issue.empty() ? CheckStatus::pass : CheckStatus::fail,
            lat_issue.empty() ? (c.lattice ? "supplied lattice" : "standard lattice") : lat_issue);

    std::vector<QVector> trans;
    if (!c.coset_translations) {
        rep.add("coset_consistency", CheckStatus::skipped, "no coset translations");
        rep.add("torsion_free", CheckStatus::skipped, "no coset translations", !strict);
    } else {
        trans = element_translations(c, *frame);
        std::string coset_issue;
        for (std::size_t g = 0; g < c.generators.size() && coset_issue.empty(); ++g) {
            auto gi = f.index_of(c.generators[g]);
            const QMatrix ag = frame->to_lattice(c.generators[g]);
            for (std::size_t x = 0; x < f.order() && coset_issue.empty(); ++x) {
                QVector lhs = detail::add(trans[*gi], ag * trans[x]);
                if (!detail::is_integral(detail::sub(lhs, trans[f.mul_table[*gi][x]])))
                    coset_issue = "translations are inconsistent modulo the lattice (generator " + std::to_string(g) + ")";
            }
        }
        rep.add("coset_consistency", coset_issue.empty() ? CheckStatus::pass : CheckStatus::fail,
                coset_issue.empty() ? "translations define a group extension" : coset_issue);

        std::string torsion;
        for (std::size_t x = 0; x < f.order() && torsion.empty(); ++x) {
            if (x == f.identity_index) continue;
            const QMatrix a = frame->to_lattice(f[x]);
            const std::size_t m = f.element_order(x);
            QMatrix norm(d, d);
            QMatrix ai = QMatrix::identity(d);
            for (std::size_t i = 0; i < m; ++i) {
                norm = norm + ai;
                ai = ai * a;
            }
            // torsion iff norm * (a_x + l) = 0 for some lattice vector l
            QVector rhs = norm * trans[x];
            for (auto& v : rhs) v = -v;
            if (integer_solvable(norm, rhs)) torsion = "element " + std::to_string(x) + " has a torsion lift of order " + std::to_string(m);
        }
        rep.add("torsion_free", torsion.empty() ? CheckStatus::pass : CheckStatus::fail,
                torsion.empty() ? "no coset contains a torsion element" : torsion, !strict);
    }

    for (const auto& [name, m] : c.maps) {
        const std::string prefix = "map:" + name + ":";
        std::optional<IntertwinerTable> table;
        try {
            table = intertwiner_table(f, m.D);
            rep.add(prefix + "intertwiner", CheckStatus::pass,
                    table->is_function() ? "unique intertwiner per element" : "some elements have several intertwiners");
        } catch (const DomainError& e) {
            rep.add(prefix + "intertwiner", CheckStatus::fail, e.what());
        }
        const QMatrix dl = frame->to_lattice(m.D);
        rep.add(prefix + "lattice", dl.is_integral() ? CheckStatus::pass : CheckStatus::fail,
                dl.is_integral() ? "D maps the lattice into itself" : "D is not integral in lattice coordinates", !strict);
        if (!c.coset_translations || !table) {
            rep.add(prefix + "translation", CheckStatus::skipped, table ? "no coset translations" : "no intertwiner", !strict);
            continue;
        }
        const QVector delta = frame->to_lattice(m.delta);
        std::string issue;
        for (std::size_t g = 0; g < c.generators.size() && issue.empty(); ++g) {
            const std::size_t x = *f.index_of(c.generators[g]);
            bool ok = false;
            for (std::size_t y : table->candidates[x]) {
                QVector v = detail::add(delta, dl * trans[x]);
                v = detail::sub(v, frame->to_lattice(f[y]) * delta);
                v = detail::sub(v, trans[y]);
                if (detail::is_integral(v)) ok = true;
            }
            if (!ok) issue = "(delta, D) does not normalize the coset of generator " + std::to_string(g);
        }
        rep.add(prefix + "translation", issue.empty() ? CheckStatus::pass : CheckStatus::fail,
                issue.empty() ? "(delta, D) induces a map on the quotient" : issue, !strict);
    }
    return rep;
}

namespace detail {

inline QMatrix ints(std::initializer_list<std::initializer_list<long>> rows) { return QMatrix::from_ints(rows); }

inline QVector vec(std::initializer_list<Rat> v) { return QVector(v); }

inline MapSpec linear_map(QMatrix d) {
    QVector zero(d.rows());
    return MapSpec{std::move(d), std::move(zero)};
}

inline QMatrix block_with_identity(const QMatrix& a, std::size_t extra) {
    const std::size_t n = a.rows() + extra;
    QMatrix m = QMatrix::identity(n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

} // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"paper-s5",  "torus-1",  "torus-2",          "torus-3",         "torus-4",
            "klein-bottle", "tricosm", "tetracosm",      "hexacosm",        "hantzsche-wendt",
            "dicosm-x-circle", "klein-x-torus"};
}

/// Built-in fixtures. All groups are Bieberbach groups on the standard
/// lattice (hexagonal ones in lattice coordinates).
inline CrystalData catalog(const std::string& name) {
    using detail::ints;
    using detail::linear_map;
    using detail::vec;
    using Cosets = std::map<std::size_t, QVector>;
    const Rat half(1, 2);

    if (name == "paper-s5") {
        std::map<std::string, MapSpec> maps{
            {"f", linear_map(ints({{4, 2, 0}, {-1, 1, 0}, {0, 0, 5}}))},
            {"g", linear_map(ints({{-2, 8, 0}, {-1, 4, 0}, {0, 0, -3}}))},
        };
        return make_crystal(name, 3, {ints({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}})}, std::nullopt,
                            Cosets{{0, vec({0, 0, half})}}, std::move(maps));
    }
    if (name == "torus-1") {
        std::map<std::string, MapSpec> maps{
            {"zero", linear_map(ints({{0}}))},
            {"identity", linear_map(ints({{1}}))},
            {"double", linear_map(ints({{2}}))},
            {"minus-double", linear_map(ints({{-2}}))},
        };
        return make_crystal(name, 1, {}, std::nullopt, std::nullopt, std::move(maps));
    }
    if (name == "torus-2") return make_crystal(name, 2, {});
    if (name == "torus-3") {
        std::map<std::string, MapSpec> maps{{"diag-2-3-5", linear_map(ints({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}))}};
        return make_crystal(name, 3, {}, std::nullopt, std::nullopt, std::move(maps));
    }
    if (name == "torus-4") {
        // companion matrix of the Salem polynomial t^4 - t^3 - t^2 - t + 1
        std::map<std::string, MapSpec> maps{
            {"salem", linear_map(ints({{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}))}};
        return make_crystal(name, 4, {}, std::nullopt, std::nullopt, std::move(maps));
    }
    if (name == "klein-bottle") {
        std::map<std::string, MapSpec> maps{
            {"expanding", linear_map(ints({{3, 0}, {0, 2}}))},
            {"fold", linear_map(ints({{2, 0}, {0, 0}}))},
            {"flip", linear_map(ints({{-1, 0}, {0, 3}}))},
        };
        return make_crystal(name, 2, {ints({{1, 0}, {0, -1}})}, std::nullopt, Cosets{{0, vec({half, 0})}},
                            std::move(maps));
    }
    if (name == "tricosm") {
        std::map<std::string, MapSpec> maps{{"scale-2", linear_map(ints({{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}))}};
        return make_crystal(name, 3, {ints({{0, -1, 0}, {1, -1, 0}, {0, 0, 1}})}, std::nullopt,
                            Cosets{{0, vec({0, 0, Rat(1, 3)})}}, std::move(maps));
    }
    if (name == "tetracosm") {
        std::map<std::string, MapSpec> maps{{"conjugating", linear_map(ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 3}}))}};
        return make_crystal(name, 3, {ints({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}})}, std::nullopt,
                            Cosets{{0, vec({0, 0, Rat(1, 4)})}}, std::move(maps));
    }
    if (name == "hexacosm") {
        std::map<std::string, MapSpec> maps{{"scale-2-7", linear_map(ints({{2, 0, 0}, {0, 2, 0}, {0, 0, 7}}))}};
        return make_crystal(name, 3, {ints({{1, -1, 0}, {1, 0, 0}, {0, 0, 1}})}, std::nullopt,
                            Cosets{{0, vec({0, 0, Rat(1, 6)})}}, std::move(maps));
    }
    if (name == "hantzsche-wendt") {
        std::map<std::string, MapSpec> maps{{"scale-3", linear_map(ints({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}))}};
        return make_crystal(name, 3, {ints({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), ints({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}})},
                            std::nullopt, Cosets{{0, vec({half, half, 0})}, {1, vec({0, half, half})}}, std::move(maps));
    }
    if (name == "dicosm-x-circle") {
        QMatrix a = detail::block_with_identity(ints({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), 1);
        return make_crystal(name, 4, {a}, std::nullopt, Cosets{{0, vec({0, 0, half, 0})}});
    }
    if (name == "klein-x-torus") {
        QMatrix a = detail::block_with_identity(ints({{1, 0}, {0, -1}}), 2);
        return make_crystal(name, 4, {a}, std::nullopt, Cosets{{0, vec({half, 0, 0, 0})}});
    }
    throw DomainError("unknown catalog entry '" + name + "'");
}

} // namespace nielsen
