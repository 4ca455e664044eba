#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "nielsen/crystal.hpp"
#include "nielsen/matrix.hpp"

namespace nielsen {

/// Basis of all D with rho(y_i) D = D rho(x_i) for the given generator
/// images, each vector scaled to a primitive integer matrix.
inline std::vector<QMatrix> intertwiner_basis(const std::vector<QMatrix>& sources, const std::vector<QMatrix>& images) {
    const std::size_t d = sources.empty() ? 0 : sources[0].rows();
    QMatrix eqs(sources.size() * d * d, d * d);
    for (std::size_t g = 0; g < sources.size(); ++g)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                // (Y D - D X)_{rc} as a linear form in the entries of D
                const std::size_t row = (g * d + r) * d + c;
                for (std::size_t k = 0; k < d; ++k) {
                    eqs(row, k * d + c) += images[g](r, k);
                    eqs(row, r * d + k) -= sources[g](k, c);
                }
            }
    std::vector<QMatrix> basis;
    for (auto v : nullspace(eqs)) {
        Int l = 1;
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        Int g = 0;
        for (auto& x : v) {
            x *= Rat(l);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        }
        QMatrix m(d, d);
        for (std::size_t i = 0; i < d * d; ++i) m(i / d, i % d) = v[i] / Rat(g);
        basis.push_back(std::move(m));
    }
    return basis;
}

struct FixtureOptions {
    long coefficient_range = 2;
    long max_entry = 9;
    unsigned max_attempts = 400;
};

/// Random linear parts of self-maps (delta = 0) compatible with the group
/// and its coset translations: pick images y_i for the generators, sample
/// an integer point of the intertwiner space, keep it when D a_{x_i} - a_{y_i}
/// lies in the lattice.
inline std::vector<MapSpec> random_compatible_maps(const CrystalData& c, std::size_t count, std::mt19937_64& rng,
                                                   FixtureOptions opt = {}) {
    const std::size_t d = c.dimension;
    const HolonomyGroup& f = c.holonomy;
    auto frame = detail::lattice_frame(c);
    if (!frame) throw DomainError("fixture generation needs a nonsingular lattice");
    const auto trans = element_translations(c, *frame);
    std::vector<QMatrix> sources;
    std::vector<std::size_t> source_idx;
    for (const auto& g : c.generators) {
        sources.push_back(frame->to_lattice(g));
        source_idx.push_back(*f.index_of(g));
    }
    std::uniform_int_distribution<std::size_t> pick(0, f.order() - 1);
    std::uniform_int_distribution<long> coef(-opt.coefficient_range, opt.coefficient_range);

    std::vector<MapSpec> out;
    for (unsigned attempt = 0; attempt < opt.max_attempts && out.size() < count; ++attempt) {
        std::vector<QMatrix> images;
        std::vector<std::size_t> image_idx;
        for (std::size_t i = 0; i < sources.size(); ++i) {
            image_idx.push_back(attempt == 0 ? source_idx[i] : pick(rng));
            images.push_back(frame->to_lattice(f[image_idx.back()]));
        }
        const auto basis = intertwiner_basis(sources, images);
        if (basis.empty()) continue;
        QMatrix dl(d, d);
        for (const auto& b : basis) dl = dl + Rat(coef(rng)) * b;
        bool small = true;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (abs(dl(i, j)) > opt.max_entry) small = false;
        if (!small) continue;
        bool lifts = true;
        for (std::size_t i = 0; i < sources.size() && lifts; ++i)
            lifts = detail::is_integral(detail::sub(dl * trans[source_idx[i]], trans[image_idx[i]]));
        if (!lifts) continue;
        out.push_back({frame->basis * dl * frame->inverse, QVector(d)});
    }
    return out;
}

} // namespace nielsen
