#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"

using namespace nielsen;

namespace {

const CrystalData& worked() {
    static const CrystalData c = catalog("paper-s5");
    return c;
}

RatFun rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFun::make(QPoly::from_ints(num), QPoly::from_ints(den));
}

struct Analysis {
    SpectralSplit split;
    PositivePart part;
};

Analysis analyse(const HolonomyGroup& f, const QMatrix& d) {
    Analysis a;
    a.split = spectral_split(f, d, intertwiner_table(f, d));
    a.part = positive_part(f, a.split.character);
    return a;
}

} // namespace

TEST(LogDerivative, Examples) {
    EXPECT_EQ(lefschetz_log_derivative(worked().holonomy, worked().maps.at("g").D), rf({4}, {1, 2, -3}));
    EXPECT_EQ(lefschetz_log_derivative(trivial_group(1), QMatrix::from_ints({{2}})), rf({-1}, {1, -3, 2}));
    EXPECT_EQ(lefschetz_log_derivative(trivial_group(1), QMatrix::from_ints({{0}})), rf({1}, {1, -1}));
    // T = 0 for the identity
    EXPECT_TRUE(lefschetz_log_derivative(trivial_group(2), QMatrix::identity(2)).num().is_zero());
}

TEST(LogDerivative, SeriesMatchesDirectAveraging) {
    std::mt19937_64 rng(61);
    for (const auto& name : catalog_names()) {
        CrystalData c = catalog(name);
        for (const auto& m : random_compatible_maps(c, 3, rng)) {
            RatFun t = lefschetz_log_derivative(c.holonomy, m.D);
            QSeries s = t.series(12);
            auto seq = fixed_point_sequence(c.holonomy, m.D, 12);
            for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(s[k - 1], Rat(seq[k - 1].lefschetz)) << name;
        }
    }
}

TEST(LogDerivative, ResourceCap) {
    EXPECT_THROW(lefschetz_log_derivative(trivial_group(9), QMatrix::identity(9)), DomainError);
    EXPECT_THROW(lefschetz_zeta(trivial_group(9), QMatrix::identity(9)), DomainError);
}

TEST(LefschetzZeta, WorkedExamples) {
    const auto& f = worked().holonomy;
    CertifiedRatFun lf = lefschetz_zeta(f, worked().maps.at("f").D);
    EXPECT_EQ(lf.value, rf({1, -35, 150}, {1, -7, 6}));
    EXPECT_EQ(pretty(lf.value), "(1 - 5z)(1 - 30z)/((1 - z)(1 - 6z))");
    EXPECT_EQ(lf.certificate.status, CheckStatus::pass);
    EXPECT_EQ(lf.series_checked, 24u);

    EXPECT_EQ(lefschetz_zeta(f, worked().maps.at("g").D).value, rf({1, 3}, {1, -1}));
    std::vector<std::size_t> identity_only{0};
    CertifiedRatFun lgp = lefschetz_zeta(f, worked().maps.at("g").D, identity_only);
    EXPECT_EQ(lgp.value, rf({1, 1, -6}, {1, 5, -6}));
    EXPECT_EQ(pretty(lgp.value), "(1 - 2z)(1 + 3z)/((1 - z)(1 + 6z))");
}

TEST(LefschetzZeta, CertificateRejectsWrongFunctions) {
    const auto& f = worked().holonomy;
    RatFun t = lefschetz_log_derivative(f, worked().maps.at("g").D);
    EXPECT_TRUE(log_derivative_identity(rf({1, 3}, {1, -1}), t));
    EXPECT_FALSE(log_derivative_identity(rf({1, 3}, {1, 1}), t));
    EXPECT_FALSE(log_derivative_identity(rf({1, 2}, {1, -1}), t));
}

TEST(NielsenZeta, WorkedExamples) {
    const auto& f = worked().holonomy;
    const QMatrix& df = worked().maps.at("f").D;
    Analysis af = analyse(f, df);
    ZetaReport zf = nielsen_zeta(f, df, af.split, af.part);
    EXPECT_EQ(zf.N_f, rf({1, -7, 6}, {1, -35, 150}));
    EXPECT_EQ(pretty(zf.N_f), "(1 - z)(1 - 6z)/((1 - 5z)(1 - 30z))");
    EXPECT_TRUE(zf.table_case.p_odd);
    EXPECT_FALSE(zf.table_case.n_odd);
    EXPECT_EQ(zf.table_case.index, 1u);
    EXPECT_FALSE(zf.L_f_plus);
    EXPECT_EQ(zf.n_series_checked, 20u);
    EXPECT_EQ(zf.k_table.rows.size(), 10u);

    const QMatrix& dg = worked().maps.at("g").D;
    Analysis ag = analyse(f, dg);
    ZetaReport zg = nielsen_zeta(f, dg, ag.split, ag.part);
    EXPECT_EQ(zg.N_f, rf({1, 2}, {1, -6}));
    ASSERT_TRUE(zg.L_f_plus);
    EXPECT_EQ(zg.L_f_plus->value, rf({1, 1, -6}, {1, 5, -6}));
    EXPECT_TRUE(zg.table_case.p_odd);
    EXPECT_TRUE(zg.table_case.n_odd);
    EXPECT_EQ(zg.table_case.index, 2u);
}

TEST(NielsenZeta, ZeroMapOnCircle) {
    HolonomyGroup f = trivial_group(1);
    QMatrix d = QMatrix::from_ints({{0}});
    Analysis a = analyse(f, d);
    ZetaReport z = nielsen_zeta(f, d, a.split, a.part);
    EXPECT_EQ(z.N_f, rf({1}, {1, -1}));
    EXPECT_EQ(z.N_f, z.L_f.value);
    EXPECT_FALSE(z.table_case.p_odd || z.table_case.n_odd);
}

TEST(NielsenZeta, EveryTableCellAgreesWithSeries) {
    // torus-1 and Klein bottle maps cover all four index-1 cells and index-2 cells
    std::set<std::tuple<bool, bool, std::size_t>> cells;
    std::mt19937_64 rng(67);
    for (const auto& name : catalog_names()) {
        CrystalData c = catalog(name);
        std::vector<MapSpec> maps;
        for (const auto& kv : c.maps) maps.push_back(kv.second);
        for (const auto& m : random_compatible_maps(c, c.dimension <= 3 ? 6 : 2, rng)) maps.push_back(m);
        for (const auto& m : maps) {
            Analysis a = analyse(c.holonomy, m.D);
            ZetaReport z = nielsen_zeta(c.holonomy, m.D, a.split, a.part);
            cells.insert({z.table_case.p_odd, z.table_case.n_odd, z.table_case.index});
            EXPECT_TRUE(z.N_f.is_unit_at_zero());
            EXPECT_TRUE(z.L_f.value.is_unit_at_zero());
            QSeries logn = series_log(z.N_f.series(21));
            for (unsigned k = 1; k <= 20; ++k)
                EXPECT_EQ(Rat(k) * logn[k], Rat(nielsen_number(c.holonomy, m.D, k))) << name << " " << to_string(m.D);
        }
    }
    EXPECT_GE(cells.size(), 6u);
}

TEST(NielsenZeta, ParallelMatchesSerial) {
    const auto& c = catalog("hantzsche-wendt");
    const QMatrix& d = c.maps.at("scale-3").D;
    Analysis a = analyse(c.holonomy, d);
    ZetaOptions par;
    par.parallel = true;
    EXPECT_EQ(nielsen_zeta(c.holonomy, d, a.split, a.part, par).N_f, nielsen_zeta(c.holonomy, d, a.split, a.part).N_f);
}
