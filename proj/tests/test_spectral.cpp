#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"

using namespace nielsen;

namespace {

QMatrix df() { return QMatrix::from_ints({{4, 2, 0}, {-1, 1, 0}, {0, 0, 5}}); }
QMatrix dg() { return QMatrix::from_ints({{-2, 8, 0}, {-1, 4, 0}, {0, 0, -3}}); }
QMatrix a_s5() { return QMatrix::from_ints({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}); }

HolonomyGroup worked_group() {
    QMatrix a = a_s5();
    return close_group(std::span<const QMatrix>(&a, 1));
}

// numeric oracle: companion-matrix eigenvalues in double precision
std::vector<std::complex<double>> numeric_roots(const QPoly& p) {
    const long n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.lead().get_d();
    for (long i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (long i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> r;
    for (long i = 0; i < n; ++i) r.push_back(es.eigenvalues()[i]);
    return r;
}

ModulusCounts counts(long inside, long on, long outside) {
    return {static_cast<std::size_t>(inside), static_cast<std::size_t>(on), static_cast<std::size_t>(outside)};
}

} // namespace

TEST(CountRootsByModulus, Examples) {
    EXPECT_EQ(count_roots_by_modulus(QPoly::from_ints({-30, 31, -10, 1})), counts(0, 0, 3));
    EXPECT_EQ(count_roots_by_modulus(QPoly::from_ints({0, -6, 1, 1})), counts(1, 0, 2));
    EXPECT_EQ(count_roots_by_modulus(QPoly::from_ints({0, -1, 0, 1})), counts(1, 2, 0));
    EXPECT_EQ(count_roots_by_modulus(QPoly::from_ints({1, -3, 1})), counts(1, 0, 1));
    EXPECT_THROW(count_roots_by_modulus(QPoly()), DomainError);
}

TEST(CountRootsByModulus, CircleFactorsAndMultiplicity) {
    QPoly salem = QPoly::from_ints({1, -1, -1, -1, 1});
    EXPECT_EQ(count_roots_by_modulus(salem), counts(1, 2, 1));
    EXPECT_EQ(count_roots_by_modulus(salem * salem), counts(2, 4, 2));
    QPoly cyclo = QPoly::from_ints({1, 1, 1}) * QPoly::from_ints({1, 0, 1}) * QPoly::from_ints({-1, 1});
    EXPECT_EQ(count_roots_by_modulus(cyclo * cyclo * QPoly::from_ints({1, 2})), counts(1, 10, 0));
    // t - 1/2 and t - 2 as a reciprocal pair, with no circle roots
    EXPECT_EQ(count_roots_by_modulus(QPoly({Rat(-1, 2), Rat(1)}) * QPoly::from_ints({-2, 1})), counts(1, 0, 1));
    // (t^2 + 1/4): both roots inside
    EXPECT_EQ(count_roots_by_modulus(QPoly({Rat(1, 4), Rat(0), Rat(1)})), counts(2, 0, 0));
    EXPECT_EQ(count_roots_by_modulus(QPoly::from_ints({0, 0, 0, 5})), counts(3, 0, 0));
}

TEST(CountRootsByModulus, AgreesWithNumericOracle) {
    std::mt19937_64 rng(23);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        QPoly p = oracle::random_int_poly(rng, 1 + trial % 7, 6);
        const std::vector<QPoly> extra{QPoly::from_ints({1}), QPoly::from_ints({1, 0, 1}), QPoly::from_ints({1, 1, 1}),
                                       QPoly::from_ints({1, -1, -1, -1, 1}), QPoly::from_ints({1, 1})};
        const QPoly& e = extra[trial % extra.size()];
        ModulusCounts circle = count_roots_by_modulus(e);
        ModulusCounts exact = count_roots_by_modulus(p * e);
        EXPECT_EQ(exact.inside + exact.on + exact.outside, static_cast<std::size_t>((p * e).degree()));
        // numeric classification of the random factor, when well separated
        auto roots = numeric_roots(p);
        bool separated = true;
        std::size_t in = 0, out = 0;
        for (auto r : roots) {
            double m = std::abs(r);
            if (std::abs(m - 1) < 1e-6) separated = false;
            (m < 1 ? in : out)++;
        }
        if (!separated) continue;
        ++compared;
        EXPECT_EQ(exact.inside, in + circle.inside) << to_string(p, "t");
        EXPECT_EQ(exact.outside, out + circle.outside) << to_string(p, "t");
        EXPECT_EQ(exact.on, circle.on) << to_string(p, "t");
    }
    EXPECT_GT(compared, 300);
}

TEST(CountRootsByModulus, ReciprocalSwapsInsideAndOutside) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly p = oracle::random_int_poly(rng, 1 + trial % 6, 5);
        if (trial % 3 == 0) p = p * QPoly::from_ints({1, -1, -1, -1, 1});
        QPoly r = p.reciprocal();
        r = r.shift_down(r.zero_root_multiplicity());
        QPoly q = p.shift_down(p.zero_root_multiplicity());
        ModulusCounts a = count_roots_by_modulus(q), b = count_roots_by_modulus(r);
        EXPECT_EQ(a.inside, b.outside);
        EXPECT_EQ(a.outside, b.inside);
        EXPECT_EQ(a.on, b.on);
    }
}

TEST(CountRealOutside, Examples) {
    EXPECT_EQ(count_real_outside(QPoly::from_ints({-30, 31, -10, 1})), (RealCounts{3, 0}));
    EXPECT_EQ(count_real_outside(QPoly::from_ints({0, -6, 1, 1})), (RealCounts{1, 1}));
    EXPECT_EQ(count_real_outside(QPoly::from_ints({4, 4, 1})), (RealCounts{0, 2}));
    EXPECT_EQ(count_real_outside(QPoly::from_ints({1, -3, 1})), (RealCounts{1, 0}));
    EXPECT_EQ(count_real_outside(QPoly::from_ints({-1, 0, 1})), (RealCounts{0, 0}));
    EXPECT_THROW(count_real_outside(QPoly()), DomainError);
}

TEST(CountRealOutside, AgreesWithNumericOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        QPoly p = oracle::random_int_poly(rng, 1 + trial % 6, 7);
        auto roots = numeric_roots(p);
        bool clear = true;
        std::size_t pos = 0, neg = 0;
        for (auto r : roots) {
            if (std::abs(r.imag()) < 1e-6 && std::abs(r.imag()) > 0) clear = false;
            if (std::abs(std::abs(r.real()) - 1) < 1e-6) clear = false;
            if (r.imag() != 0) continue;
            if (r.real() > 1) ++pos;
            if (r.real() < -1) ++neg;
        }
        if (!clear) continue;
        RealCounts c = count_real_outside(p);
        ModulusCounts m = count_roots_by_modulus(p);
        EXPECT_EQ(c.p, pos) << to_string(p, "t");
        EXPECT_EQ(c.n, neg) << to_string(p, "t");
        EXPECT_LE(c.p + c.n, m.outside);
    }
}

TEST(Character, WorkedMaps) {
    HolonomyGroup f = worked_group();
    EXPECT_EQ(det_one_minus(df()) * det_one_minus(a_s5() * df()), 384);
    EXPECT_EQ(det_one_minus(dg()) * det_one_minus(a_s5() * dg()), -48);

    SpectralSplit sf = spectral_split(f, df(), intertwiner_table(f, df()));
    EXPECT_EQ(sf.modulus, counts(0, 0, 3));
    EXPECT_EQ(sf.real, (RealCounts{3, 0}));
    EXPECT_EQ(sf.character.values, (std::vector<int>{1, 1}));
    EXPECT_EQ(sf.character.methods[1], CharacterMethod::product_test);

    SpectralSplit sg = spectral_split(f, dg(), intertwiner_table(f, dg()));
    EXPECT_EQ(sg.modulus, counts(1, 0, 2));
    EXPECT_EQ(sg.real, (RealCounts{1, 1}));
    EXPECT_EQ(sg.character.values, (std::vector<int>{1, -1}));
    EXPECT_EQ(sg.character.decided_at[1], 1u);
    EXPECT_EQ(positive_character(f, dg(), intertwiner_table(f, dg())).values, sg.character.values);
}

TEST(Character, NoExpandingEigenvalueIsTrivial) {
    HolonomyGroup f = worked_group();
    QMatrix d = QMatrix::from_ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    Character eps = positive_character(f, d, intertwiner_table(f, d));
    EXPECT_TRUE(eps.is_trivial());
    EXPECT_EQ(eps.methods[1], CharacterMethod::trivial_split);
}

TEST(Character, ShiftedRadiusWhenOneIsAnEigenvalue) {
    // det(I - rho(x) D^k) vanishes for every x and k
    QMatrix a = QMatrix::from_ints({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    HolonomyGroup f = close_group(std::span<const QMatrix>(&a, 1));
    QMatrix d = QMatrix::from_ints({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Character eps = positive_character(f, d, intertwiner_table(f, d));
    EXPECT_EQ(eps.values, (std::vector<int>{1, -1}));
    EXPECT_EQ(eps.methods[1], CharacterMethod::shifted_radius);
    EXPECT_EQ(positive_part(f, eps).index, 2u);

    // the flip acts on the neutral direction only
    QMatrix b = QMatrix::from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    HolonomyGroup g = close_group(std::span<const QMatrix>(&b, 1));
    EXPECT_TRUE(positive_character(g, d, intertwiner_table(g, d)).is_trivial());
}

TEST(Character, ShiftedRadiusNearTheCircle) {
    // expanding root 1 + 2^-20 forces many halvings
    Rat r = 1 + Rat(1, 1 << 20);
    QMatrix a = QMatrix::from_ints({{-1, 0}, {0, 1}});
    HolonomyGroup f = close_group(std::span<const QMatrix>(&a, 1));
    QMatrix d(2, 2);
    d(0, 0) = r;
    d(1, 1) = 1;
    Character eps = positive_character(f, d, intertwiner_table(f, d));
    EXPECT_EQ(eps.values, (std::vector<int>{1, -1}));
    CharacterOptions tight;
    tight.max_halvings = 5;
    EXPECT_THROW(positive_character(f, d, intertwiner_table(f, d), tight), UndecidableError);
}

TEST(Character, HomomorphismAndSignConsistencyOnRandomDiagonalMaps) {
    // Z2 x Z2 acting by sign changes commutes with every diagonal D
    std::vector<QMatrix> gens{QMatrix::from_ints({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                              QMatrix::from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})};
    HolonomyGroup f = close_group(gens);
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        QMatrix d = QMatrix::diagonal(std::vector<Rat>{Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng))});
        SpectralSplit s = spectral_split(f, d, intertwiner_table(f, d));
        for (std::size_t x = 0; x < f.order(); ++x) {
            // det(rho_{>1}(x)) is the product of the signs on expanding coordinates
            int expected = 1;
            for (std::size_t i = 0; i < 3; ++i)
                if (abs(d(i, i)) > 1 && f[x](i, i) < 0) expected = -expected;
            EXPECT_EQ(s.character.values[x], expected) << to_string(d);
            for (std::size_t y = 0; y < f.order(); ++y)
                EXPECT_EQ(s.character.values[f.mul_table[x][y]], s.character.values[x] * s.character.values[y]);
        }
        if (s.modulus.outside == 0) EXPECT_TRUE(s.character.is_trivial());
    }
}
