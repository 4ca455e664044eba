#include <gtest/gtest.h>

#include <random>

#include "nielsen/io.hpp"
#include "oracles.hpp"

using namespace nielsen;
using nielsen::io::json;

namespace {

ZetaReport zeta_of(const CrystalData& c, const QMatrix& d) {
    SpectralSplit s = spectral_split(c.holonomy, d, intertwiner_table(c.holonomy, d));
    return nielsen_zeta(c.holonomy, d, s, positive_part(c.holonomy, s.character));
}

} // namespace

TEST(Parse, Entries) {
    EXPECT_EQ(io::parse_entry(json("3/6"), "x"), Rat(1, 2));
    EXPECT_EQ(io::parse_entry(json(-7), "x"), Rat(-7));
    EXPECT_EQ(io::parse_entry(json("-12345678901234567890123"), "x"), Rat(Int("-12345678901234567890123")));
    EXPECT_THROW(io::parse_entry(json(0.5), "x"), ParseError);
    EXPECT_THROW(io::parse_entry(json("1.5"), "x"), ParseError);
    EXPECT_THROW(io::parse_entry(json("1/0"), "x"), ParseError);
    EXPECT_THROW(io::parse_entry(json(true), "x"), ParseError);
    try {
        io::parse_matrix(json::parse(R"([["1", "2"], ["3", 4.0]])"), "D");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("D[1][1]"), std::string::npos);
    }
    EXPECT_THROW(io::parse_matrix(json::parse(R"([["1", "2"], ["3"]])"), "D"), ParseError);
}

TEST(Parse, CrystalDocuments) {
    const char* text = R"({
        "dimension": 2,
        "holonomy_generators": [[["1", "0"], ["0", "-1"]]],
        "coset_translations": {"0": ["1/2", "0"]},
        "maps": {"m": {"D": [["3", "0"], ["0", "2"]]}}
    })";
    CrystalData c = io::parse_crystal(io::parse_json_text(text, "doc"), "doc");
    EXPECT_EQ(c.name, "doc");
    EXPECT_EQ(c.holonomy.order(), 2u);
    EXPECT_EQ(c.maps.at("m").delta, QVector(2));
    EXPECT_TRUE(validate(c, true).overall());

    EXPECT_THROW(io::parse_json_text("{\"dimension\": 2,", "doc"), ParseError);
    EXPECT_THROW(io::parse_crystal(json::parse(R"({"dimension": 0, "holonomy_generators": []})")), ParseError);
    EXPECT_THROW(io::parse_crystal(json::parse(R"({"dimension": 1})")), ParseError);
    EXPECT_THROW(io::parse_crystal(json::parse(R"({"dimension": 1, "holonomy_generators": [],
                                                   "coset_translations": {"x": ["0"]}})")),
                 ParseError);
    EXPECT_THROW(io::parse_crystal(json::parse(R"({"dimension": 1, "holonomy_generators": [],
                                                   "maps": {"m": {"delta": ["0"]}}})")),
                 ParseError);
    EXPECT_THROW(io::load_input("catalog:nope"), ParseError);
    EXPECT_THROW(io::load_input("/nonexistent/input.json"), ParseError);
}

TEST(Parse, CatalogShowRoundTrips) {
    for (const auto& name : catalog_names()) {
        CrystalData c = catalog(name);
        json j = io::crystal_to_json(c);
        CrystalData back = io::parse_crystal(json::parse(j.dump()));
        EXPECT_EQ(io::crystal_to_json(back), j) << name;
        EXPECT_EQ(back.holonomy.order(), c.holonomy.order());
    }
}

TEST(Serialize, Integers) {
    EXPECT_EQ(io::int_to_json(Int(-5)), json(-5));
    Int big = Int("98765432109876543210987");
    EXPECT_TRUE(io::int_to_json(big).is_string());
    EXPECT_EQ(io::int_from_json(io::int_to_json(big)), big);
    EXPECT_EQ(io::int_from_json(json(12)), 12);
    EXPECT_THROW(io::int_from_json(json("12x")), ParseError);
    EXPECT_THROW(io::int_from_json(json(1.5)), ParseError);
}

TEST(Serialize, RatFunUsesAscendingIntegerCoefficients) {
    RatFun r = RatFun::make(QPoly::from_ints({1, 2}), QPoly::from_ints({1, -6}));
    json j = io::ratfun_to_json(r);
    EXPECT_EQ(j["num"], json::parse("[1, 2]"));
    EXPECT_EQ(j["den"], json::parse("[1, -6]"));
    EXPECT_EQ(j["pretty"], "(1 + 2z)/(1 - 6z)");
    EXPECT_EQ(io::ratfun_from_json(j), r);
}

TEST(Serialize, ReportsRoundTrip) {
    std::mt19937_64 rng(71);
    for (const auto& name : catalog_names()) {
        CrystalData c = catalog(name);
        json rep = io::report_to_json(validate(c));
        EXPECT_EQ(io::report_to_json(io::report_from_json(json::parse(rep.dump()))), rep) << name;

        std::vector<MapSpec> maps;
        for (const auto& kv : c.maps) maps.push_back(kv.second);
        for (const auto& m : random_compatible_maps(c, 2, rng)) maps.push_back(m);
        for (const auto& m : maps) {
            SpectralSplit s = spectral_split(c.holonomy, m.D, intertwiner_table(c.holonomy, m.D));
            PositivePart p = positive_part(c.holonomy, s.character);
            json t = io::table_to_json(fixed_point_table(c.holonomy, m.D, p, 10));
            EXPECT_EQ(io::table_to_json(io::table_from_json(json::parse(t.dump()))), t);
            json z = io::zeta_to_json(zeta_of(c, m.D));
            EXPECT_EQ(io::zeta_to_json(io::zeta_from_json(json::parse(z.dump()))), z) << name;
        }
    }
}

TEST(Serialize, ZetaReportContents) {
    CrystalData c = catalog("paper-s5");
    json z = io::zeta_to_json(zeta_of(c, c.maps.at("g").D));
    EXPECT_EQ(z["N_f"]["num"], json::parse("[1, 2]"));
    EXPECT_EQ(z["L_f_plus"]["pretty"], "(1 - 2z)(1 + 3z)/((1 - z)(1 + 6z))");
    EXPECT_EQ(z["L_f"]["certificate"]["status"], "pass");
    EXPECT_EQ(z["table_case"]["index"], 2);
    EXPECT_EQ(z["table_case"]["p_parity"], "odd");
    EXPECT_EQ(z["k_table"]["rows"][2]["N"], 224);
    EXPECT_EQ(z["k_table"]["rows"][2]["L_plus"], (1 - 8) * (1 + 27));
}
