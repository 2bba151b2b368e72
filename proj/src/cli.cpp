#include "hexpack/cli.hpp"

#include "hexpack/emit.hpp"
#include "hexpack/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace hexpack::cli {
namespace {

DocFormat parse_format(const std::string& name) {
    if (name == "csv") return DocFormat::csv;
    if (name == "md") return DocFormat::markdown;
    return DocFormat::json;
}

SideMode parse_mode(const std::string& name) {
    return name == "tangent" ? SideMode::tangent : SideMode::paper;
}

const char* ok_str(bool ok) { return ok ? "ok" : "FAIL"; }

int run_verify(const std::vector<PackingCase>& cases, long i_max, SideMode mode,
               std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (PackingCase c : cases) {
        for (long i = min_index(c); i <= i_max; ++i) {
            const VerificationReport report = verify(c, i, mode);
            out << "case=" << case_letter(c) << " i=" << i << " mode="
                << (mode == SideMode::paper ? "paper" : "tangent")
                << " count=" << ok_str(report.count_ok)
                << " containment=" << ok_str(report.containment_ok)
                << " separation=" << ok_str(report.separation_ok)
                << " boundary_tangent=" << report.boundary_tangent_count
                << " mutual_tangent=" << report.mutual_tangent_pairs
                << " lattice_fit=" << report.lattice_fit_count
                << " extras=" << report.extra_points.size() << "\n";
            if (!report.extra_points.empty())
                err << "hexpack: warning: case " << case_letter(c) << " i=" << i << ": "
                    << report.extra_points.size()
                    << " extra lattice circle(s) fit inside the boundary\n";
            all_ok = all_ok && report.all_canonical_ok();
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hexagonal-lattice equal-circle packing toolkit"};
    app.name("hexpack");
    app.require_subcommand(1);

    long table_which = 1;
    long table_imax = -1;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "Emit a density table");
    table->add_option("--which", table_which, "Table family: 1 (a/b) or 2 (c/d)")
        ->required()
        ->check(CLI::Range(1L, 2L));
    table->add_option("--i-max", table_imax, "Last index (default: 25 for table 1, 24 for table 2)");
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"csv", "md", "json"}));

    std::string layout_case;
    long layout_i = 0;
    std::string layout_mode = "paper";
    std::string layout_format = "json";
    auto* layout_cmd = app.add_subcommand("layout", "Emit exact circle centers and boundary");
    layout_cmd->add_option("--case", layout_case, "Configuration a|b|c|d")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    layout_cmd->add_option("--i", layout_i, "Configuration index")->required();
    layout_cmd->add_option("--mode", layout_mode, "Outer-triangle side convention for case b")
        ->check(CLI::IsMember({"paper", "tangent"}));
    layout_cmd->add_option("--format", layout_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string render_case;
    long render_i = 0;
    std::string render_mode = "paper";
    double render_scale = 20.0;
    std::string render_output;
    auto* render = app.add_subcommand("render", "Render a configuration as SVG");
    render->add_option("--case", render_case, "Configuration a|b|c|d")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    render->add_option("--i", render_i, "Configuration index")->required();
    render->add_option("--mode", render_mode, "Outer-triangle side convention for case b")
        ->check(CLI::IsMember({"paper", "tangent"}));
    render->add_option("--scale", render_scale, "Pixels per circle radius");
    render->add_option("-o,--output", render_output, "Output file")->required();

    std::string verify_case;
    long verify_imax = 0;
    std::string verify_mode = "paper";
    auto* verify_cmd = app.add_subcommand("verify", "Brute-force verification of the layouts");
    verify_cmd->add_option("--case", verify_case, "Configuration a|b|c|d or all")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c", "d", "all"}));
    verify_cmd->add_option("--i-max", verify_imax, "Verify indices up to this value")->required();
    verify_cmd->add_option("--mode", verify_mode, "Outer-triangle side convention for case b")
        ->check(CLI::IsMember({"paper", "tangent"}));

    long converge_imax = 0;
    auto* converge = app.add_subcommand("converge", "Emit signed residuals per index");
    converge->add_option("--i-max", converge_imax, "Last index")->required();

    auto* limits = app.add_subcommand("limits", "Print the four exact density limits");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hexpack");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "hexpack: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (table->parsed()) {
            if (table_imax < 0) table_imax = table_which == 1 ? 25 : 24;
            if ((table_which == 1 && table_imax < 1) || table_imax < 0) {
                err << "hexpack: --i-max out of range for table " << table_which << "\n";
                return 2;
            }
            out << (table_which == 1 ? emit_table1(table_imax, parse_format(table_format))
                                     : emit_table2(table_imax, parse_format(table_format)));
            return 0;
        }
        if (layout_cmd->parsed()) {
            const PackingCase c = *case_from_letter(layout_case[0]);
            if (!index_in_domain(c, layout_i)) {
                err << "hexpack: index " << layout_i << " outside the domain of case "
                    << layout_case << "\n";
                return 2;
            }
            out << emit_layout(make_layout(c, layout_i, parse_mode(layout_mode)),
                               parse_format(layout_format));
            return 0;
        }
        if (render->parsed()) {
            const PackingCase c = *case_from_letter(render_case[0]);
            if (!index_in_domain(c, render_i)) {
                err << "hexpack: index " << render_i << " outside the domain of case "
                    << render_case << "\n";
                return 2;
            }
            if (!(render_scale > 0)) {
                err << "hexpack: --scale must be positive\n";
                return 2;
            }
            const std::string svg =
                render_figure(make_layout(c, render_i, parse_mode(render_mode)), render_scale);
            std::ofstream file(render_output, std::ios::binary);
            if (!file) {
                err << "hexpack: cannot open output file " << render_output << "\n";
                return 2;
            }
            file << svg;
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::vector<PackingCase> cases;
            if (verify_case == "all")
                cases.assign(std::begin(kAllCases), std::end(kAllCases));
            else
                cases.push_back(*case_from_letter(verify_case[0]));
            return run_verify(cases, verify_imax, parse_mode(verify_mode), out, err);
        }
        if (converge->parsed()) {
            if (converge_imax < 0) {
                err << "hexpack: --i-max must be >= 0\n";
                return 2;
            }
            out << emit_convergence(std::vector<PackingCase>(std::begin(kAllCases),
                                                             std::end(kAllCases)),
                                    converge_imax, DocFormat::csv);
            return 0;
        }
        if (limits->parsed()) {
            for (PackingCase c : kAllCases) {
                const PiScaled limit = density_limit(c);
                out << case_letter(c) << ' ' << limit.to_string() << ' '
                    << decimal_string(limit, 12) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "hexpack: " << e.what() << "\n";
        return 2;
    }
    err << "hexpack: no subcommand\n";
    return 2;
}

}  // namespace hexpack::cli
