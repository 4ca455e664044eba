#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nielsen/nielsen.hpp"

namespace nielsen::cli {

enum ExitCode : int { ok = 0, domain_failure = 1, parse_failure = 2, undecidable = 3, certificate_failure = 4 };

struct RunConfig {
    std::string input;
    std::string map_name;
    std::string matrix;
    unsigned kmax = 10;
    bool json = false;
    bool strict = false;
    bool checks = false;
    bool parallel = false;
};

namespace detail {

using io::json;

struct Selected {
    CrystalData data;
    std::string label;
    MapSpec map;
};

inline Selected select_map(const RunConfig& cfg) {
    Selected s{io::load_input(cfg.input), {}, {}};
    if (!cfg.matrix.empty()) {
        s.map.D = io::parse_matrix(io::parse_json_text(cfg.matrix, "--matrix"), "--matrix");
        s.map.delta = QVector(s.map.D.rows());
        s.label = "D = " + to_string(s.map.D);
        return s;
    }
    if (cfg.map_name.empty()) {
        if (s.data.maps.size() != 1)
            throw DomainError("input has " + std::to_string(s.data.maps.size()) + " maps; choose one with --map");
        s.label = s.data.maps.begin()->first;
        s.map = s.data.maps.begin()->second;
        return s;
    }
    auto it = s.data.maps.find(cfg.map_name);
    if (it == s.data.maps.end()) throw DomainError("no map named '" + cfg.map_name + "' in " + s.data.name);
    s.label = it->first;
    s.map = it->second;
    return s;
}

inline void require_valid(const CrystalData& c, bool strict) {
    ValidationReport r = validate(c, strict);
    if (!r.overall()) {
        std::string why;
        for (const auto& ch : r.checks)
            if (ch.status == CheckStatus::fail && !ch.warn_only) why += "\n  " + ch.name + ": " + ch.detail;
        throw DomainError("input failed validation:" + why);
    }
}

inline void print_report(std::ostream& out, const ValidationReport& r) {
    for (const auto& c : r.checks) {
        std::string tag = to_string(c.status);
        if (c.status == CheckStatus::fail && c.warn_only) tag = "warn";
        out << "  [" << tag << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
}

struct Context {
    Selected sel;
    IntertwinerTable table;
    SpectralSplit split;
    PositivePart part;
};

inline Context analyse(const RunConfig& cfg) {
    Context ctx{select_map(cfg), {}, {}, {}};
    require_valid(ctx.sel.data, cfg.strict);
    ctx.table = intertwiner_table(ctx.sel.data.holonomy, ctx.sel.map.D);
    ctx.split = spectral_split(ctx.sel.data.holonomy, ctx.sel.map.D, ctx.table);
    ctx.part = positive_part(ctx.sel.data.holonomy, ctx.split.character);
    return ctx;
}

inline std::optional<ValidationReport> diagnostics(const RunConfig& cfg, const Context& ctx) {
    if (!cfg.checks) return std::nullopt;
    return sign_diagnostics(ctx.sel.data.holonomy, ctx.sel.map.D, ctx.split, cfg.kmax);
}

inline json header(const std::string& command, const RunConfig& cfg, const Context& ctx) {
    return {{"command", command},
            {"input", cfg.input},
            {"map", ctx.sel.label},
            {"group_order", ctx.sel.data.holonomy.order()},
            {"dimension", ctx.sel.data.dimension}};
}

inline void print_header(std::ostream& out, const Context& ctx) {
    out << ctx.sel.data.name << ", map " << ctx.sel.label << " (d = " << ctx.sel.data.dimension
        << ", |F| = " << ctx.sel.data.holonomy.order() << ")\n";
}

inline int finish_diagnostics(std::ostream& out, const std::optional<ValidationReport>& diag, bool as_json, json& doc) {
    if (!diag) return ok;
    if (as_json) {
        doc["diagnostics"] = io::report_to_json(*diag);
    } else {
        out << "sign diagnostics:\n";
        print_report(out, *diag);
    }
    return diag->overall() ? ok : domain_failure;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    CrystalData c = io::load_input(cfg.input);
    ValidationReport r = validate(c, cfg.strict);
    if (cfg.json) {
        json doc = io::report_to_json(r);
        doc["command"] = "validate";
        doc["input"] = cfg.input;
        doc["strict"] = cfg.strict;
        out << doc.dump(2) << "\n";
    } else {
        out << c.name << " (d = " << c.dimension << ", |F| = " << c.holonomy.order() << "): "
            << (r.overall() ? "valid" : "INVALID") << "\n";
        print_report(out, r);
    }
    return r.overall() ? ok : domain_failure;
}

inline int cmd_numbers(const RunConfig& cfg, std::ostream& out) {
    Context ctx = analyse(cfg);
    FixedPointTable t = fixed_point_table(ctx.sel.data.holonomy, ctx.sel.map.D, ctx.part, cfg.kmax, {cfg.parallel});
    auto diag = diagnostics(cfg, ctx);
    json doc = header("numbers", cfg, ctx);
    doc["index"] = ctx.part.index;
    doc["table"] = io::table_to_json(t);
    if (!cfg.json) {
        print_header(out, ctx);
        const bool plus = ctx.part.index == 2;
        out << std::setw(4) << "k" << std::setw(24) << "L(f^k)" << std::setw(24) << "N(f^k)";
        if (plus) out << std::setw(24) << "L(f+^k)";
        out << "\n";
        for (const auto& row : t.rows) {
            out << std::setw(4) << row.k << std::setw(24) << row.lefschetz.get_str() << std::setw(24)
                << row.nielsen.get_str();
            if (plus) out << std::setw(24) << row.lefschetz_plus->get_str();
            out << "\n";
        }
    }
    int rc = finish_diagnostics(out, diag, cfg.json, doc);
    if (cfg.json) out << doc.dump(2) << "\n";
    return rc;
}

inline int cmd_split(const RunConfig& cfg, std::ostream& out) {
    Context ctx = analyse(cfg);
    auto diag = diagnostics(cfg, ctx);
    json doc = header("split", cfg, ctx);
    doc["split"] = io::split_to_json(ctx.split, ctx.part, ctx.sel.data.holonomy);
    if (!cfg.json) {
        print_header(out, ctx);
        const auto& m = ctx.split.modulus;
        out << "eigenvalue moduli: inside " << m.inside << ", on " << m.on << ", outside " << m.outside << "\n";
        out << "real eigenvalues: p = " << ctx.split.real.p << " (> 1), n = " << ctx.split.real.n << " (< -1)\n";
        out << "determinant character:\n";
        const HolonomyGroup& f = ctx.sel.data.holonomy;
        for (std::size_t x = 0; x < f.order(); ++x) {
            out << "  " << std::setw(3) << x << "  eps = " << std::setw(2) << ctx.split.character.values[x] << "  "
                << to_string(ctx.split.character.methods[x]);
            if (ctx.split.character.decided_at[x]) out << " (k = " << ctx.split.character.decided_at[x] << ")";
            out << "  " << to_string(f[x]) << "\n";
        }
        out << "positive part: index " << ctx.part.index << ", F+ = {";
        for (std::size_t i = 0; i < ctx.part.plus_indices.size(); ++i)
            out << (i ? ", " : "") << ctx.part.plus_indices[i];
        out << "}\n";
    }
    int rc = finish_diagnostics(out, diag, cfg.json, doc);
    if (cfg.json) out << doc.dump(2) << "\n";
    return rc;
}

inline int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
    Context ctx = analyse(cfg);
    ZetaOptions zo;
    zo.kmax = cfg.kmax;
    zo.parallel = cfg.parallel;
    ZetaReport z = nielsen_zeta(ctx.sel.data.holonomy, ctx.sel.map.D, ctx.split, ctx.part, zo);
    auto diag = diagnostics(cfg, ctx);
    json doc = header("zeta", cfg, ctx);
    doc["zeta"] = io::zeta_to_json(z);
    if (!cfg.json) {
        print_header(out, ctx);
        auto line = [&](const std::string& name, const RatFun& r) {
            out << name << " = " << pretty(r) << "\n";
            if (expanded(r) != pretty(r)) out << std::string(name.size(), ' ') << " = " << expanded(r) << "\n";
        };
        line("L_f(z) ", z.L_f.value);
        out << "         certificate " << to_string(z.L_f.certificate.status) << ", fitted from "
            << z.L_f.series_checked << " terms\n";
        if (z.L_f_plus) {
            line("L_f+(z)", z.L_f_plus->value);
            out << "         certificate " << to_string(z.L_f_plus->certificate.status) << ", fitted from "
                << z.L_f_plus->series_checked << " terms\n";
        }
        line("N_f(z) ", z.N_f);
        out << "table: p " << (z.table_case.p_odd ? "odd" : "even") << ", n " << (z.table_case.n_odd ? "odd" : "even")
            << ", index " << z.table_case.index << ": " << z.table_case.formula << "\n";
        out << "series check: N(f^k) and L(f^k) agree for k <= " << z.n_series_checked << "\n";
    }
    int rc = finish_diagnostics(out, diag, cfg.json, doc);
    if (cfg.json) out << doc.dump(2) << "\n";
    return rc;
}

inline int cmd_catalog_list(const RunConfig& cfg, std::ostream& out) {
    json list = json::array();
    for (const auto& name : catalog_names()) {
        CrystalData c = catalog(name);
        json maps = json::array();
        for (const auto& kv : c.maps) maps.push_back(kv.first);
        list.push_back({{"name", name}, {"dimension", c.dimension}, {"group_order", c.holonomy.order()}, {"maps", maps}});
        if (!cfg.json) {
            out << std::left << std::setw(18) << name << std::right << " d = " << c.dimension << "  |F| = " << std::setw(2)
                << c.holonomy.order() << "  maps:";
            for (const auto& kv : c.maps) out << " " << kv.first;
            out << "\n";
        }
    }
    if (cfg.json) out << list.dump(2) << "\n";
    return ok;
}

inline int cmd_catalog_show(const std::string& name, std::ostream& out) {
    out << io::crystal_to_json(io::load_input("catalog:" + name)).dump(2) << "\n";
    return ok;
}

} // namespace detail

/// Runs the command line `args` (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lefschetz and Nielsen numbers and zeta functions of infra-nilmanifold maps", "nielsen"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string show_name;

    auto add_common = [&](CLI::App* sub, bool with_map) {
        sub->add_option("input", cfg.input, "catalog:<name> or path to a JSON input file")->required();
        sub->add_flag("--json", cfg.json, "emit a JSON report");
        sub->add_flag("--strict", cfg.strict, "treat torsion and map lattice checks as fatal");
        if (!with_map) return;
        sub->add_option("--map", cfg.map_name, "name of the map in the input");
        sub->add_option("--matrix", cfg.matrix, "linear part as a JSON matrix, instead of --map");
        sub->add_option("--kmax", cfg.kmax, "largest iterate k")->check(CLI::PositiveNumber);
        sub->add_flag("--checks", cfg.checks, "run the sign diagnostics");
        sub->add_flag("--parallel", cfg.parallel, "evaluate averages on several threads");
    };
    auto* v = app.add_subcommand("validate", "check group, lattice, cosets and maps");
    add_common(v, false);
    auto* n = app.add_subcommand("numbers", "table of L(f^k), N(f^k)");
    add_common(n, true);
    auto* s = app.add_subcommand("split", "eigenvalue census, determinant character and positive part");
    add_common(s, true);
    auto* z = app.add_subcommand("zeta", "certified Lefschetz and Nielsen zeta functions");
    add_common(z, true);
    auto* cat = app.add_subcommand("catalog", "built-in fixtures");
    cat->require_subcommand(1);
    auto* cl = cat->add_subcommand("list", "list catalog entries");
    cl->add_flag("--json", cfg.json, "emit JSON");
    auto* cs = cat->add_subcommand("show", "print a catalog entry in input format");
    cs->add_option("name", show_name)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? ok : parse_failure;
    }

    try {
        if (v->parsed()) return detail::cmd_validate(cfg, out);
        if (n->parsed()) return detail::cmd_numbers(cfg, out);
        if (s->parsed()) return detail::cmd_split(cfg, out);
        if (z->parsed()) return detail::cmd_zeta(cfg, out);
        if (cl->parsed()) return detail::cmd_catalog_list(cfg, out);
        if (cs->parsed()) return detail::cmd_catalog_show(show_name, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const UndecidableError& e) {
        err << "undecidable: " << e.what() << "\n";
        return undecidable;
    } catch (const CertificateError& e) {
        err << "certificate failure: " << e.what() << "\n";
        return certificate_failure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return domain_failure;
    }
    return parse_failure;
}

} // namespace nielsen::cli
