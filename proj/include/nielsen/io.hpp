#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nielsen/crystal.hpp"
#include "nielsen/fixed_point.hpp"
#include "nielsen/spectral.hpp"
#include "nielsen/validation.hpp"
#include "nielsen/zeta.hpp"

namespace nielsen::io {

using json = nlohmann::json;

// ---- input documents ----

inline Rat parse_entry(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<std::uint64_t>())));
        return Rat(Int(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_number_float()) throw ParseError(where + ": floating-point numbers are not accepted, use \"p/q\" strings");
    throw ParseError(where + ": expected a rational number");
}

inline QVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    QVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_entry(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline QMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty list of rows");
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]"));
    const std::size_t cols = rows[0].size();
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ParseError(where + ": ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
    }
    return m;
}

inline CrystalData parse_crystal(const json& j, const std::string& name = "input") {
    if (!j.is_object()) throw ParseError("input document must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer() || j["dimension"].get<long long>() < 1)
        throw ParseError("\"dimension\" must be a positive integer");
    const auto d = static_cast<std::size_t>(j["dimension"].get<long long>());
    if (!j.contains("holonomy_generators") || !j["holonomy_generators"].is_array())
        throw ParseError("\"holonomy_generators\" must be a list of matrices");
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < j["holonomy_generators"].size(); ++i)
        gens.push_back(parse_matrix(j["holonomy_generators"][i], "holonomy_generators[" + std::to_string(i) + "]"));
    std::optional<QMatrix> lattice;
    if (j.contains("lattice")) lattice = parse_matrix(j["lattice"], "lattice");
    std::optional<std::map<std::size_t, QVector>> cosets;
    if (j.contains("coset_translations")) {
        const json& c = j["coset_translations"];
        if (!c.is_object()) throw ParseError("\"coset_translations\" must map generator indices to vectors");
        cosets.emplace();
        for (const auto& [key, val] : c.items()) {
            std::size_t idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("coset_translations: key '" + key + "' is not a generator index");
            }
            (*cosets)[idx] = parse_vector(val, "coset_translations." + key);
        }
    }
    std::map<std::string, MapSpec> maps;
    if (j.contains("maps")) {
        if (!j["maps"].is_object()) throw ParseError("\"maps\" must be an object of named maps");
        for (const auto& [key, val] : j["maps"].items()) {
            if (!val.is_object() || !val.contains("D")) throw ParseError("maps." + key + ": needs a \"D\" matrix");
            MapSpec m;
            m.D = parse_matrix(val["D"], "maps." + key + ".D");
            m.delta = val.contains("delta") ? parse_vector(val["delta"], "maps." + key + ".delta") : QVector(m.D.rows());
            maps.emplace(key, std::move(m));
        }
    }
    return make_crystal(j.value("name", name), d, std::move(gens), std::move(lattice), std::move(cosets),
                        std::move(maps));
}

inline json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(where + ": malformed JSON: " + e.what());
    }
}

/// "catalog:<name>" or a path to a JSON document.
inline CrystalData load_input(const std::string& input) {
    const std::string prefix = "catalog:";
    if (input.rfind(prefix, 0) == 0) {
        const std::string name = input.substr(prefix.size());
        const auto names = catalog_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw ParseError("unknown catalog entry '" + name + "'");
        return catalog(name);
    }
    std::ifstream in(input);
    if (!in) throw ParseError("cannot read input file '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_crystal(parse_json_text(buf.str(), input), input);
}

// ---- output values ----

/// Integers within 64 bits become JSON numbers, larger ones decimal strings.
inline json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.dump());
    if (j.is_string()) {
        Int z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.dump());
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

inline json rat_to_json(const Rat& r) { return to_string(r); }

inline json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json vector_to_json(const QVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline json crystal_to_json(const CrystalData& c) {
    json j;
    j["name"] = c.name;
    j["dimension"] = c.dimension;
    j["holonomy_generators"] = json::array();
    for (const auto& g : c.generators) j["holonomy_generators"].push_back(matrix_to_json(g));
    if (c.lattice) j["lattice"] = matrix_to_json(*c.lattice);
    if (c.coset_translations) {
        j["coset_translations"] = json::object();
        for (const auto& [g, a] : *c.coset_translations) j["coset_translations"][std::to_string(g)] = vector_to_json(a);
    }
    j["maps"] = json::object();
    for (const auto& [name, m] : c.maps) j["maps"][name] = {{"D", matrix_to_json(m.D)}, {"delta", vector_to_json(m.delta)}};
    return j;
}

inline json poly_to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(int_to_json(c.get_num()));
    if (a.empty()) a.push_back(0);
    return a;
}

inline QPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array");
    std::vector<Rat> c;
    for (const auto& x : j) c.emplace_back(int_from_json(x));
    return QPoly(std::move(c));
}

inline json ratfun_to_json(const RatFun& r) {
    return {{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}, {"pretty", pretty(r)}};
}

inline RatFun ratfun_from_json(const json& j) { return RatFun::make(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

inline json check_to_json(const Check& c) {
    return {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"warn_only", c.warn_only}};
}

inline CheckStatus check_status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw ParseError("unknown check status '" + s + "'");
}

inline Check check_from_json(const json& j) {
    return {j.at("name").get<std::string>(), check_status_from_string(j.at("status").get<std::string>()),
            j.at("detail").get<std::string>(), j.at("warn_only").get<bool>()};
}

inline json report_to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return {{"overall", r.overall() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

inline ValidationReport report_from_json(const json& j) {
    ValidationReport r;
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    return r;
}

inline json table_to_json(const FixedPointTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r{{"k", row.k}, {"L", int_to_json(row.lefschetz)}, {"N", int_to_json(row.nielsen)}};
        if (row.lefschetz_plus) r["L_plus"] = int_to_json(*row.lefschetz_plus);
        rows.push_back(std::move(r));
    }
    return {{"kmax", t.kmax}, {"rows", std::move(rows)}};
}

inline FixedPointTable table_from_json(const json& j) {
    FixedPointTable t;
    t.kmax = j.at("kmax").get<unsigned>();
    for (const auto& r : j.at("rows")) {
        FixedPointRow row{r.at("k").get<unsigned>(), int_from_json(r.at("L")), int_from_json(r.at("N")), std::nullopt};
        if (r.contains("L_plus")) row.lefschetz_plus = int_from_json(r.at("L_plus"));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline CharacterMethod character_method_from_string(const std::string& s) {
    for (auto m : {CharacterMethod::trivial_split, CharacterMethod::product_test, CharacterMethod::shifted_radius})
        if (to_string(m) == s) return m;
    throw ParseError("unknown character method '" + s + "'");
}

inline json split_to_json(const SpectralSplit& s, const PositivePart& part, const HolonomyGroup& f) {
    json chars = json::array();
    for (std::size_t x = 0; x < s.character.values.size(); ++x)
        chars.push_back({{"element", x},
                         {"matrix", matrix_to_json(f[x])},
                         {"epsilon", s.character.values[x]},
                         {"method", to_string(s.character.methods[x])},
                         {"decided_at", s.character.decided_at[x]}});
    return {{"modulus", {{"inside", s.modulus.inside}, {"on", s.modulus.on}, {"outside", s.modulus.outside}}},
            {"real", {{"p", s.real.p}, {"n", s.real.n}}},
            {"character", std::move(chars)},
            {"index", part.index},
            {"plus_indices", part.plus_indices}};
}

inline json certified_to_json(const CertifiedRatFun& c) {
    json j = ratfun_to_json(c.value);
    j["certificate"] = check_to_json(c.certificate);
    j["series_checked"] = c.series_checked;
    return j;
}

inline CertifiedRatFun certified_from_json(const json& j) {
    return {ratfun_from_json(j), check_from_json(j.at("certificate")), j.at("series_checked").get<std::size_t>()};
}

inline json table_case_to_json(const TableCase& c) {
    return {{"p_parity", c.p_odd ? "odd" : "even"},
            {"n_parity", c.n_odd ? "odd" : "even"},
            {"index", c.index},
            {"formula", c.formula}};
}

inline TableCase table_case_from_json(const json& j) {
    return {j.at("p_parity").get<std::string>() == "odd", j.at("n_parity").get<std::string>() == "odd",
            j.at("index").get<std::size_t>(), j.at("formula").get<std::string>()};
}

inline json zeta_to_json(const ZetaReport& z) {
    json j;
    j["L_f"] = certified_to_json(z.L_f);
    if (z.L_f_plus) j["L_f_plus"] = certified_to_json(*z.L_f_plus);
    j["N_f"] = ratfun_to_json(z.N_f);
    j["table_case"] = table_case_to_json(z.table_case);
    j["k_table"] = table_to_json(z.k_table);
    j["n_series_checked"] = z.n_series_checked;
    return j;
}

inline ZetaReport zeta_from_json(const json& j) {
    ZetaReport z;
    z.L_f = certified_from_json(j.at("L_f"));
    if (j.contains("L_f_plus")) z.L_f_plus = certified_from_json(j.at("L_f_plus"));
    z.N_f = ratfun_from_json(j.at("N_f"));
    z.table_case = table_case_from_json(j.at("table_case"));
    z.k_table = table_from_json(j.at("k_table"));
    z.n_series_checked = j.at("n_series_checked").get<std::size_t>();
    return z;
}

} // namespace nielsen::io
