// fpb: command-line surface for the flat plumbing basket toolkit.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpb/basket.hpp"
#include "fpb/bracket.hpp"
#include "fpb/braid.hpp"
#include "fpb/census.hpp"
#include "fpb/diagram.hpp"
#include "fpb/invariants.hpp"
#include "fpb/realize.hpp"
#include "fpb/reference.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBudget = 3;

std::string torsion_string(const std::vector<long long>& torsion) {
    if (torsion.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < torsion.size(); ++i)
        s += (i ? "+Z/" : "Z/") + std::to_string(torsion[i]);
    return s;
}

void draw_svg(const fpb::BasketCode& code, const std::string& path) {
    static const char* kPalette[] = {"#c22f2f", "#e07b27", "#b49412", "#3d9641",
                                     "#2f7fc2", "#6a48c8", "#b13fa5", "#57606e"};
    const int n = code.bands();
    const int len = 2 * n;
    const double step = 40.0, margin = 40.0, base = 260.0;
    const double width = 2 * margin + step * (len > 0 ? len - 1 : 0);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("draw: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 20
        << "\" height=\"330\" viewBox=\"-10 0 " << width + 20 << " 330\">\n";
    // the disk: a rectangle under the baseline, feet on its top edge
    out << "  <rect x=\"" << margin - 25 << "\" y=\"" << base << "\" width=\""
        << width - 2 * margin + 50 << "\" height=\"50\" fill=\"#e8e2d4\" stroke=\"#444\"/>\n";
    std::vector<int> first(n + 1, -1);
    for (int i = 0; i < len; ++i) {
        int k = code.word[i];
        if (first[k] < 0) {
            first[k] = i;
            continue;
        }
        double x1 = margin + step * first[k], x2 = margin + step * i;
        double r = (x2 - x1) / 2;
        // band k as a semicircular strip over the disk edge; higher pages in front
        out << "  <path d=\"M " << x1 << ' ' << base << " A " << r << ' ' << r
            << " 0 0 1 " << x2 << ' ' << base
            << "\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"14\"/>\n";
        out << "  <path d=\"M " << x1 << ' ' << base << " A " << r << ' ' << r
            << " 0 0 1 " << x2 << ' ' << base << "\" fill=\"none\" stroke=\""
            << kPalette[(k - 1) % 8] << "\" stroke-width=\"10\"/>\n";
    }
    for (int i = 0; i < len; ++i) {
        double x = margin + step * i;
        out << "  <text x=\"" << x << "\" y=\"" << base + 32
            << "\" font-size=\"16\" text-anchor=\"middle\" font-family=\"monospace\">"
            << code.word[i] << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("draw: write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat plumbing basket codes: enumeration, invariants and census"};
    app.require_subcommand(1);

    int n = 6;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list double-occurrence words");
    enumerate->add_option("-n", n, "band count")->required();
    enumerate->add_flag("--count-only", count_only, "print only the total");

    std::string table_path, out_path, resume_path, code_text, braid_text, name;
    int threads = 0;
    auto* census = app.add_subcommand("census", "run the full pipeline");
    census->add_option("-n", n, "band count")->required();
    census->add_option("--table", table_path, "reference table file")->required();
    census->add_option("--out", out_path, "report path (.json for JSON, else CSV)")->required();
    census->add_option("--threads", threads, "worker threads (default FPB_THREADS or cores)");
    census->add_option("--resume", resume_path, "checkpoint file");

    auto* classify = app.add_subcommand("classify", "name the knot of a code");
    classify->add_option("code", code_text, "basket code")->required();
    classify->add_option("--table", table_path, "reference table file")->required();

    bool want_alexander = false, want_jones = false, want_all = false;
    auto* invariants = app.add_subcommand("invariants", "print knot invariants of a code");
    invariants->add_option("code", code_text, "basket code")->required();
    invariants->add_flag("--alexander", want_alexander, "Alexander polynomial only");
    invariants->add_flag("--jones", want_jones, "Jones polynomial only");
    invariants->add_flag("--all", want_all, "everything (default)");

    int start_foot = 0;
    bool ccw = false;
    auto* dt = app.add_subcommand("dt", "DT sequence of a code's boundary diagram");
    dt->add_option("code", code_text, "basket code")->required();
    dt->add_option("--start", start_foot, "starting foot position");
    dt->add_flag("--ccw", ccw, "walk counterclockwise");

    int strands = 0;
    auto* braid_to_code = app.add_subcommand("braid-to-code", "basket code of a braid closure");
    braid_to_code->add_option("word", braid_text, "braid word")->required();
    braid_to_code->add_option("--strands", strands, "strand count")->required();

    bool only_fhk = false, only_kim = false;
    auto* bounds = app.add_subcommand("bounds", "band-count upper bounds for a braid closure");
    bounds->add_option("word", braid_text, "braid word")->required();
    bounds->add_option("--strands", strands, "strand count")->required();
    bounds->add_flag("--fhk", only_fhk, "normal-form bound only");
    bounds->add_flag("--kim", only_kim, "sign-count bound only");

    auto* fpbk = app.add_subcommand("fpbk", "established flat plumbing basket number");
    fpbk->add_option("name", name, "knot name, e.g. 5_2")->required();

    auto* draw = app.add_subcommand("draw", "SVG picture of a code's basket surface");
    draw->add_option("code", code_text, "basket code")->required();
    draw->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            if (count_only) {
                std::cout << fpb::code_count(n) << "\n";
            } else {
                std::uint64_t total = fpb::enumerate_codes(n, [](const fpb::BasketCode& c) {
                    std::cout << fpb::code_to_string(c) << "\n";
                });
                std::cerr << "total " << total << "\n";
            }
        } else if (*census) {
            fpb::ReferenceTable table = fpb::load_table(table_path, table_path + ".cache.json");
            fpb::CensusOptions opt;
            opt.threads = threads;
            opt.resume_path = resume_path;
            fpb::CensusReport rep = fpb::run_census(n, table, opt);
            bool json = out_path.size() >= 5 &&
                        out_path.compare(out_path.size() - 5, 5, ".json") == 0;
            fpb::emit_report(rep, json ? "json" : "csv", out_path);
            std::cerr << "n=" << rep.n << " total=" << rep.total << " links=" << rep.link_codes
                      << " knots=" << rep.knot_codes << " reducible=" << rep.type_one_reducible
                      << " surviving=" << rep.surviving << " classes=" << rep.class_counts.size()
                      << " threads=" << rep.threads_used << " elapsed=" << rep.elapsed_seconds
                      << "s\n";
        } else if (*classify) {
            fpb::ReferenceTable table = fpb::load_table(table_path, table_path + ".cache.json");
            std::cout << fpb::classify_code(fpb::parse_code(code_text), table) << "\n";
        } else if (*invariants) {
            fpb::BasketCode code = fpb::parse_code(code_text);
            fpb::Fingerprint f = fpb::fingerprint(code);
            bool all = want_all || (!want_alexander && !want_jones);
            if (all || want_alexander)
                std::cout << "alexander " << f.alexander.to_string("t") << "\n";
            if (all || want_jones)
                std::cout << "jones " << fpb::jones(fpb::build_arc_diagram(code)).to_string("q")
                          << "\n";
            if (all) {
                std::cout << "determinant " << f.determinant << "\n";
                std::cout << "signature " << fpb::signature(code) << "\n";
                std::cout << "double_cover_homology " << torsion_string(f.torsion) << "\n";
            }
        } else if (*dt) {
            fpb::GaussCode g =
                fpb::gauss_code(fpb::build_arc_diagram(fpb::parse_code(code_text)), start_foot, ccw);
            std::cout << fpb::dt_to_string(fpb::dt_from_gauss(g)) << "\n";
        } else if (*braid_to_code) {
            std::cout << fpb::code_to_string(fpb::fhk_code(fpb::parse_braid(braid_text, strands)))
                      << "\n";
        } else if (*bounds) {
            fpb::BraidWord w = fpb::parse_braid(braid_text, strands);
            if (!only_kim) std::cout << "fhk " << fpb::bound_fhk(w) << "\n";
            if (!only_fhk) std::cout << "kim " << fpb::bound_kim(w) << "\n";
        } else if (*fpbk) {
            std::vector<int> vals = fpb::fpbk_lookup(name);
            for (size_t i = 0; i < vals.size(); ++i)
                std::cout << vals[i] << (i + 1 < vals.size() ? ' ' : '\n');
        } else if (*draw) {
            draw_svg(fpb::parse_code(code_text), out_path);
        }
    } catch (const std::out_of_range& e) {
        std::cerr << "fpb: budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "fpb: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
