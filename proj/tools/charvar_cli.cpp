// charvar: compute E-polynomials of PGL(2,C)-character varieties of
// once-punctured genus-g surfaces, dump the genus-1 strata tables, and run
// the full identity-verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "charvar/format.hpp"
#include "charvar/genus1.hpp"
#include "charvar/json_io.hpp"
#include "charvar/mirror.hpp"
#include "charvar/moduli.hpp"
#include "charvar/poly.hpp"
#include "charvar/report.hpp"
#include "charvar/verify.hpp"

namespace {

using charvar::Poly;
using charvar::Report;
using charvar::Z2Rep;
using charvar::moduli::HolonomyClass;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kSpaceNames = {"Id", "MinusId", "JPlus", "JMinus", "Parabolic"};
const std::vector<std::string> kLevelNames = {"moduli", "repspace", "sl-reconstructed"};
const std::vector<std::string> kFormatNames = {"text", "json", "csv", "latex"};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

Poly value_for(unsigned genus, HolonomyClass space, const std::string& level) {
    if (level == "moduli") return charvar::moduli::moduli_epoly(genus, space);
    if (level == "repspace") return charvar::moduli::repspace_epoly(genus, space);
    return charvar::mirror::sl_repspace_epoly(genus, space);
}

json value_json(unsigned genus, const std::string& space, const std::string& level,
                const Poly& value) {
    return json{{"genus", genus},
                {"space", space},
                {"level", level},
                {"coeffs", charvar::format::poly_coeff_strings(value)}};
}

std::string latex_symbol(const std::string& space, const std::string& level, unsigned genus) {
    std::string sub;
    if (space == "Id") sub = "\\mathrm{Id}";
    else if (space == "MinusId") sub = "-\\mathrm{Id}";
    else if (space == "JPlus") sub = "J_{+}";
    else if (space == "JMinus") sub = "J_{-}";
    else sub = "\\lambda";

    const std::string g = std::to_string(genus);
    if (level == "moduli") return "e(\\mathcal{M}^{" + g + "}_{" + sub + "})";
    if (level == "repspace") return "e(\\overline{Z}^{" + g + "}_{" + sub + "})";
    return "e(\\overline{X}^{" + g + "}_{" + sub + "})";
}

struct Row {
    unsigned genus;
    std::string space;
    std::string level;
    Poly value;
};

int render_rows(const std::vector<Row>& rows, const std::string& fmt) {
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(value_json(r.genus, r.space, r.level, r.value));
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "genus,space,level,polynomial\n";
        for (const auto& r : rows)
            std::cout << r.genus << "," << r.space << "," << r.level << ","
                      << charvar::format::poly_compact(r.value) << "\n";
    } else if (fmt == "latex") {
        std::cout << "\\begin{align*}\n";
        for (const auto& r : rows)
            std::cout << latex_symbol(r.space, r.level, r.genus) << " &= "
                      << charvar::format::poly_latex(r.value) << " \\\\\n";
        std::cout << "\\end{align*}\n";
    } else {
        for (const auto& r : rows)
            std::cout << "g=" << r.genus << "  " << r.space << "  " << r.level << "  "
                      << r.value << "\n";
    }
    return kExitOk;
}

json z2rep_json(const Z2Rep& r) { return charvar::json_io::to_json(r); }

int render_strata(const std::string& fmt) {
    const auto poly_tables = charvar::genus1::all_poly_tables();
    const auto rep_tables = charvar::genus1::all_rep_tables();

    if (fmt == "json") {
        json arr = json::array();
        for (const auto& t : poly_tables) {
            json entries = json::array();
            for (const auto& e : t.entries)
                entries.push_back(json{{"label", e.label},
                                       {"sign", e.sign},
                                       {"value", charvar::format::poly_coeff_strings(e.value)}});
            arr.push_back(json{{"name", t.name},
                               {"space", charvar::genus1::to_string(t.space)},
                               {"anchor", t.anchor},
                               {"entries", entries},
                               {"total", charvar::format::poly_coeff_strings(t.total())},
                               {"stated_total", charvar::format::poly_coeff_strings(t.stated_total)}});
        }
        for (const auto& t : rep_tables) {
            json entries = json::array();
            for (const auto& e : t.entries)
                entries.push_back(json{{"label", e.label}, {"sign", e.sign}, {"value", z2rep_json(e.value)}});
            arr.push_back(json{{"name", t.name},
                               {"space", charvar::genus1::to_string(t.space)},
                               {"anchor", t.anchor},
                               {"entries", entries},
                               {"total", z2rep_json(t.total())},
                               {"stated_total", z2rep_json(t.stated_total)}});
        }
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "table,entry,sign,value\n";
        for (const auto& t : poly_tables) {
            for (const auto& e : t.entries)
                std::cout << t.name << "," << csv_escape(e.label) << "," << e.sign << ","
                          << charvar::format::poly_compact(e.value) << "\n";
            std::cout << t.name << ",total,1," << charvar::format::poly_compact(t.total()) << "\n";
        }
        for (const auto& t : rep_tables) {
            for (const auto& e : t.entries)
                std::cout << t.name << "," << csv_escape(e.label) << "," << e.sign << ","
                          << csv_escape(e.value.to_string()) << "\n";
            std::cout << t.name << ",total,1," << csv_escape(t.total().to_string()) << "\n";
        }
    } else if (fmt == "latex") {
        std::cout << "\\begin{align*}\n";
        for (const auto& t : poly_tables)
            std::cout << "\\text{" << t.name << "} &: " << charvar::format::poly_latex(t.total())
                      << " \\\\\n";
        for (const auto& t : rep_tables)
            std::cout << "\\text{" << t.name << "} &: "
                      << charvar::format::poly_latex(t.total().t) << "\\,T + ("
                      << charvar::format::poly_latex(t.total().n) << ")\\,N \\\\\n";
        std::cout << "\\end{align*}\n";
    } else {
        for (const auto& t : poly_tables) {
            std::cout << "== " << t.name << "  [" << t.anchor << "]\n";
            for (const auto& e : t.entries)
                std::cout << "  " << (e.sign < 0 ? "-" : "+") << " " << e.label << " : " << e.value
                          << "\n";
            const bool ok = t.total() == t.stated_total;
            std::cout << "  total = " << t.total() << (ok ? "  [ok]" : "  [MISMATCH]") << "\n";
        }
        for (const auto& t : rep_tables) {
            std::cout << "== " << t.name << "  [" << t.anchor << "]\n";
            for (const auto& e : t.entries)
                std::cout << "  " << (e.sign < 0 ? "-" : "+") << " " << e.label << " : " << e.value
                          << "\n";
            const bool ok = t.total() == t.stated_total;
            std::cout << "  total = " << t.total() << (ok ? "  [ok]" : "  [MISMATCH]") << "\n";
        }
    }
    return kExitOk;
}

int render_report(const Report& report, const std::string& fmt) {
    if (fmt == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"anchor", c.anchor},
                                  {"status", c.passed ? "pass" : "fail"},
                                  {"detail", c.detail}});
        std::cout << json{{"all_passed", report.all_passed()}, {"checks", checks}}.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "name,anchor,status,detail\n";
        for (const auto& c : report.checks)
            std::cout << csv_escape(c.name) << "," << csv_escape(c.anchor) << ","
                      << (c.passed ? "pass" : "fail") << "," << csv_escape(c.detail) << "\n";
    } else if (fmt == "latex") {
        std::cout << "\\begin{tabular}{ll}\n";
        for (const auto& c : report.checks)
            std::cout << "\\texttt{" << c.name << "} & " << (c.passed ? "pass" : "\\textbf{fail}")
                      << " \\\\\n";
        std::cout << "\\end{tabular}\n";
    } else {
        for (const auto& c : report.checks) {
            if (c.passed)
                std::cout << "PASS " << c.name << "\n";
            else
                std::cout << "FAIL " << c.name << "  [" << c.anchor << "]"
                          << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        }
        std::cout << report.checks.size() << " checks, " << report.failure_count()
                  << " failed\n";
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E-polynomials of PGL(2,C)-character varieties of once-punctured surfaces"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute one E-polynomial");
    unsigned genus = 0;
    std::string space_name, level = "moduli", fmt = "text";
    compute->add_option("--genus", genus, "Genus (>= 1)")->required();
    compute->add_option("--space", space_name, "Holonomy class")
        ->required()
        ->check(CLI::IsMember(kSpaceNames));
    compute->add_option("--level", level, "Value level")->check(CLI::IsMember(kLevelNames));
    compute->add_option("--format", fmt, "Output format")->check(CLI::IsMember(kFormatNames));

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity-verification suite");
    unsigned genus_max = 10;
    std::string verify_fmt = "text";
    std::string fault;
    verify->add_option("--genus-max", genus_max, "Verify all genera up to this bound (>= 1)");
    verify->add_option("--format", verify_fmt, "Output format")->check(CLI::IsMember(kFormatNames));
    verify->add_option("--inject-fault", fault, "Test hook: perturb matrix entry ROW,COL (1-based) by +1")
        ->group("");

    // table
    auto* table = app.add_subcommand("table", "Tabulate E-polynomials, or dump the genus-1 strata");
    unsigned table_genus_max = 0;
    unsigned table_genus = 0;
    bool strata = false;
    std::string table_level = "moduli", table_fmt = "text";
    table->add_option("--genus-max", table_genus_max, "Tabulate g = 1..N");
    table->add_option("--genus", table_genus, "Genus for --strata (must be 1)");
    table->add_flag("--strata", strata, "Dump the genus-1 strata tables for audit");
    table->add_option("--level", table_level, "Value level")->check(CLI::IsMember(kLevelNames));
    table->add_option("--format", table_fmt, "Output format")->check(CLI::IsMember(kFormatNames));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            if (genus < 1) {
                std::cerr << "error: --genus must be >= 1\n";
                return kExitUsage;
            }
            const auto space = charvar::moduli::parse_holonomy(space_name);
            const Poly value = value_for(genus, *space, level);
            if (fmt == "json") {
                std::cout << value_json(genus, space_name, level, value).dump(2) << "\n";
            } else if (fmt == "csv") {
                std::cout << "genus,space,level,polynomial\n"
                          << genus << "," << space_name << "," << level << ","
                          << charvar::format::poly_compact(value) << "\n";
            } else if (fmt == "latex") {
                std::cout << charvar::format::poly_latex(value) << "\n";
            } else {
                std::cout << value << "\n";
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            if (genus_max < 1) {
                std::cerr << "error: --genus-max must be >= 1\n";
                return kExitUsage;
            }
            charvar::VerifyOptions options;
            options.genus_max = genus_max;
            if (!fault.empty()) {
                unsigned row = 0, col = 0;
                if (std::sscanf(fault.c_str(), "%u,%u", &row, &col) != 2 || row < 1 || row > 6 ||
                    col < 1 || col > 6) {
                    std::cerr << "error: --inject-fault expects ROW,COL in 1..6\n";
                    return kExitUsage;
                }
                options.fault_entry = {{row - 1, col - 1}};
            }
            return render_report(charvar::run_full_verification(options), verify_fmt);
        }

        // table
        if (strata) {
            if (table_genus != 1) {
                std::cerr << "error: --strata requires --genus 1 (only genus-1 strata exist)\n";
                return kExitUsage;
            }
            return render_strata(table_fmt);
        }
        if (table_genus_max < 1) {
            std::cerr << "error: table requires --genus-max >= 1 (or --genus 1 --strata)\n";
            return kExitUsage;
        }
        std::vector<Row> rows;
        for (unsigned g = 1; g <= table_genus_max; ++g)
            for (const auto& name : kSpaceNames)
                rows.push_back({g, name, table_level,
                                value_for(g, *charvar::moduli::parse_holonomy(name), table_level)});
        return render_rows(rows, table_fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
