#include "tribone/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tribone/io.hpp"
#include "tribone/pentagonal.hpp"
#include "tribone/render.hpp"
#include "tribone/scan.hpp"
#include "tribone/shadow.hpp"
#include "tribone/tiling.hpp"

namespace tribone {

namespace {

[[noreturn]] void input_error(const std::string& message) { throw Error(ErrorCode::invalid_params, message); }

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, const std::string& flag) {
    std::istringstream in(text);
    long long x = 0, y = 0;
    char comma = 0;
    if (!(in >> x >> comma >> y) || comma != ',' || !in.eof()) input_error(flag + " expects two integers as x,y");
    return {x, y};
}

// Where a region comes from: a file, benzel parameters or a triangle size.
struct RegionSource {
    std::string region_file;
    std::string benzel;
    std::int64_t triangle = 0;

    void add_to(CLI::App* cmd) {
        auto* g = cmd->add_option_group("region", "region to work on");
        g->add_option("--region", region_file, "region JSON file");
        g->add_option("--benzel", benzel, "benzel parameters a,b");
        g->add_option("--triangle", triangle, "triangle with rows of 1..n cells");
        g->require_option(1);
    }

    std::optional<BenzelParams> params() const {
        if (benzel.empty()) return std::nullopt;
        auto [a, b] = parse_pair(benzel, "--benzel");
        return BenzelParams::make(a, b);
    }

    Region load() const {
        if (auto p = params()) return tribone::benzel(*p);
        if (triangle != 0) return tribone::triangle(triangle);
        return region_from_json(parse_json(read_file(region_file)));
    }
};

std::string count_string(const TilingCount& c) { return c.str(); }

struct Context {
    std::ostream& out;
    bool json_output = false;
};

void print_json(Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct BenzelCommand {
    std::int64_t a = 0, b = 0, n = 0;
    bool cells = false, boundary = false, closed_form = false, area = false, invariant = false;

    void add_selectors(CLI::App* cmd, bool with_closed_form) {
        auto* g = cmd->add_option_group("output", "what to print");
        g->add_flag("--cells", cells, "cell centres");
        g->add_flag("--boundary-word", boundary, "traced counterclockwise boundary word");
        if (with_closed_form) g->add_flag("--closed-form", closed_form, "closed-form boundary word with spurs");
        g->add_flag("--area", area, "number of cells");
        g->add_flag("--invariant", invariant, "unrescaled Conway-Lagarias invariant I");
        g->require_option(1);
    }

    void emit(Context& ctx, const Region& r, std::optional<BenzelParams> p) const {
        if (cells) {
            if (ctx.json_output) {
                print_json(ctx, to_json(r));
            } else {
                for (auto c : r.cells()) ctx.out << c.x << "," << c.y << "\n";
            }
        } else if (boundary || closed_form) {
            const auto w = closed_form ? boundary_word_closed_form(*p) : trace_boundary(r);
            if (ctx.json_output) {
                print_json(ctx, to_json(w));
            } else {
                ctx.out << format_word(w) << "\n";
            }
        } else if (area) {
            const auto count = static_cast<std::int64_t>(r.size());
            if (p && area_formula(*p) != count) {
                throw Error(ErrorCode::construction_failed, "cell count disagrees with the area formula");
            }
            if (ctx.json_output) {
                print_json(ctx, {{"area", count}});
            } else {
                ctx.out << count << "\n";
            }
        } else {
            const auto value = cl_invariant_path(r);
            if (ctx.json_output) {
                json j{{"invariantI", value.unrescaled}, {"invariantRescaled", value.rescaled_string()}};
                if (p) j["formulaI"] = cl_invariant_formula(*p).unrescaled;
                print_json(ctx, j);
            } else {
                ctx.out << value.unrescaled << "\n";
            }
        }
    }
};

// ---------------------------------------------------------------------------

struct ShadowCommand {
    std::string word, word_file, region_file, benzel, seed, base;
    std::int64_t triangle = 0;
    bool area_only = false;

    void add_to(CLI::App* cmd) {
        auto* g = cmd->add_option_group("input", "path to shadow");
        g->add_option("--word", word, "word text, e.g. \"base=3,0 b a' ...\"");
        g->add_option("--word-file", word_file, "file holding word text or word JSON");
        g->add_option("--region", region_file, "region JSON file; its boundary is shadowed");
        g->add_option("--benzel", benzel, "benzel parameters a,b");
        g->add_option("--triangle", triangle, "triangle size");
        g->require_option(1);
        cmd->add_option("--seed", seed, "first two shadow steps, e.g. b,a'");
        cmd->add_option("--base", base, "shadow basepoint x,y");
        cmd->add_flag("--area", area_only, "print only the shadow's signed area");
    }

    Word load() const {
        if (!word.empty()) return parse_word(word);
        if (!word_file.empty()) {
            const auto text = read_file(word_file);
            const auto first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && text[first] == '{') return word_from_json(parse_json(text));
            return parse_word(text);
        }
        if (!region_file.empty()) return trace_boundary(region_from_json(parse_json(read_file(region_file))));
        if (!benzel.empty()) {
            auto [a, b] = parse_pair(benzel, "--benzel");
            return trace_boundary(tribone::benzel(BenzelParams::make(a, b)));
        }
        return trace_boundary(tribone::triangle(triangle));
    }

    void run(Context& ctx) const {
        const auto w = load();
        ShadowSeed s = default_seed(w);
        if (!seed.empty()) {
            const auto comma = seed.find(',');
            auto first = parse_step(seed.substr(0, comma));
            std::optional<Step> second;
            if (comma != std::string::npos) second = parse_step(seed.substr(comma + 1));
            if (!first || !second) input_error("--seed expects two steps such as b,a'");
            s = {*first, *second};
        }
        Point p = default_shadow_base(w);
        if (!base.empty()) {
            auto [x, y] = parse_pair(base, "--base");
            p = {x, y};
        }
        const auto sh = shadow_word(w, p, s);
        const auto area = signed_area(sh);
        if (ctx.json_output) {
            print_json(ctx, {{"word", to_json(w)},
                             {"shadow", to_json(sh)},
                             {"area", area},
                             {"invariantI", cl_invariant_of_boundary(w).unrescaled}});
        } else if (area_only) {
            ctx.out << area << "\n";
        } else {
            ctx.out << format_word(sh) << "\n";
        }
    }
};

// ---------------------------------------------------------------------------

struct TileCommand {
    std::int64_t k = 0;
    std::string output, tiles = "bones", placement, tiling_file;
    RegionSource source;
    unsigned threads = 1;
    std::size_t memo_limit_mb = 0;
    double time_limit = 0;
    std::optional<std::size_t> limit;

    CountOptions count_options() const {
        CountOptions o;
        o.threads = threads;
        o.memo_limit_mb = memo_limit_mb;
        o.time_limit_seconds = time_limit;
        return o;
    }

    void add_counting(CLI::App* cmd) {
        source.add_to(cmd);
        cmd->add_option("--tiles", tiles, "bones, stones or stones+bones")->capture_default_str();
        cmd->add_option("--threads", threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("--memo-limit-mb", memo_limit_mb, "frontier memory cap (default TRIBONE_MEMO_LIMIT_MB)");
        cmd->add_option("--time-limit", time_limit, "give up after this many seconds (0: no limit)");
    }

    void construct(Context& ctx) const {
        const auto t = construct_tiling(k);
        const auto text = to_json(t).dump(output.empty() ? -1 : 2) + "\n";
        if (output.empty()) {
            ctx.out << text;
        } else {
            write_file(output, text);
        }
    }

    void count(Context& ctx) const {
        const auto c = count_tilings(source.load(), TileSet::parse(tiles), count_options());
        if (ctx.json_output) {
            print_json(ctx, {{"count", count_string(c)}});
        } else {
            ctx.out << count_string(c) << "\n";
        }
    }

    void enumerate(Context& ctx) const {
        enumerate_tilings(source.load(), TileSet::parse(tiles), limit, [&ctx](const Tiling& t) {
            ctx.out << to_json(t).dump() << "\n";
            return static_cast<bool>(ctx.out);
        });
    }

    void freq(Context& ctx) const {
        const auto c =
            placement_frequency(source.load(), TileSet::parse(tiles), parse_placement(placement), count_options());
        if (ctx.json_output) {
            print_json(ctx, {{"placement", to_json(parse_placement(placement))}, {"count", count_string(c)}});
        } else {
            ctx.out << count_string(c) << "\n";
        }
    }

    void validate_file(Context& ctx) const {
        const auto t = tiling_from_json(parse_json(read_file(tiling_file)));
        const auto v = validate(t);
        if (!v) throw Error(ErrorCode::invalid_tiling, "invalid tiling: " + v.message);
        const auto h = orientation_histogram(t);
        if (ctx.json_output) {
            print_json(ctx, {{"valid", true},
                             {"histogram",
                              {{"boneAB", h.bone_ab},
                               {"boneBC", h.bone_bc},
                               {"boneCA", h.bone_ca},
                               {"stoneR", h.stone_r},
                               {"stoneL", h.stone_l}}},
                             {"stoneBalance", stone_balance(t)}});
        } else {
            ctx.out << "valid " << h.bone_ab << " " << h.bone_bc << " " << h.bone_ca << " " << h.stone_r << " "
                    << h.stone_l << "\n";
        }
    }
};

// ---------------------------------------------------------------------------

void print_scan(Context& ctx, const std::vector<ScanRow>& rows) {
    if (ctx.json_output) {
        json j = json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        print_json(ctx, j);
        return;
    }
    auto& o = ctx.out;
    o << std::setw(4) << "a" << std::setw(5) << "b" << std::setw(7) << "class" << std::setw(8) << "cells"
      << std::setw(9) << "I" << std::setw(6) << "k" << std::setw(10) << "tileable" << "\n";
    for (const auto& r : rows) {
        o << std::setw(4) << r.a << std::setw(5) << r.b << std::setw(7) << r.benzel_class << std::setw(8)
          << r.cell_count << std::setw(9) << r.invariant << std::setw(6)
          << (r.pentagonal_k ? std::to_string(*r.pentagonal_k) : "-") << std::setw(10)
          << (r.bone_tileable ? (*r.bone_tileable ? "yes" : "no") : "-") << "\n";
    }
}

// ---------------------------------------------------------------------------

struct RenderCommand {
    std::string region_file, tiling_file, word_file, benzel, output;
    std::int64_t triangle = 0;
    bool no_cells = false, no_tiles = false, boundary = false, shadow = false, hexagon = false;
    double unit = 20.0;

    void add_to(CLI::App* cmd) {
        auto* g = cmd->add_option_group("input", "what to draw");
        g->add_option("--region", region_file, "region JSON file");
        g->add_option("--tiling", tiling_file, "tiling JSON file");
        g->add_option("--word", word_file, "word file (text or JSON)");
        g->add_option("--benzel", benzel, "benzel parameters a,b");
        g->add_option("--triangle", triangle, "triangle size");
        g->require_option(1);
        cmd->add_flag("--no-cells", no_cells, "hide the cell layer");
        cmd->add_flag("--no-tiles", no_tiles, "hide the tiling layer");
        cmd->add_flag("--boundary", boundary, "draw the boundary word");
        cmd->add_flag("--shadow", shadow, "draw the shadow of the boundary word");
        cmd->add_flag("--hexagon", hexagon, "draw the bounding hexagon (benzels only)");
        cmd->add_option("--unit", unit, "edge length in SVG units")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("-o,--output", output, "output file (default stdout)");
    }

    void run(Context& ctx) const {
        Scene scene;
        std::optional<Word> word;
        if (!region_file.empty()) scene.region = region_from_json(parse_json(read_file(region_file)));
        if (!tiling_file.empty()) {
            scene.tiling = tiling_from_json(parse_json(read_file(tiling_file)));
            if (auto v = validate(*scene.tiling); !v) throw Error(ErrorCode::invalid_tiling, v.message);
        }
        if (!benzel.empty()) {
            auto [a, b] = parse_pair(benzel, "--benzel");
            scene.hexagon = BenzelParams::make(a, b);
            scene.region = tribone::benzel(*scene.hexagon);
        }
        if (triangle != 0) scene.region = tribone::triangle(triangle);
        if (!word_file.empty()) {
            const auto text = read_file(word_file);
            const auto first = text.find_first_not_of(" \t\r\n");
            word = first != std::string::npos && text[first] == '{' ? word_from_json(parse_json(text))
                                                                     : parse_word(text);
        }
        if (!word && (boundary || shadow)) {
            const auto& r = scene.region ? *scene.region : scene.tiling->region;
            word = trace_boundary(r);
        }
        if (word && (boundary || word_file.size())) scene.boundary = word;
        if (word && shadow) scene.shadow = shadow_word(*word);

        RenderSpec style;
        style.unit = unit;
        style.cells = !no_cells;
        style.tiling = !no_tiles;
        style.hexagon = hexagon;
        const auto svg = render_svg(scene, style);
        if (output.empty()) {
            ctx.out << svg;
        } else {
            write_file(output, svg);
        }
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tilings of benzels by stones and bones", "tribone"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out};
    app.add_flag("--json", ctx.json_output, "machine-readable JSON output");

    BenzelCommand bz;
    auto* benzel_cmd = app.add_subcommand("benzel", "cells, boundary, area or invariant of an (a,b)-benzel");
    benzel_cmd->add_option("--a", bz.a, "parameter a")->required();
    benzel_cmd->add_option("--b", bz.b, "parameter b")->required();
    bz.add_selectors(benzel_cmd, true);

    BenzelCommand tri;
    auto* triangle_cmd = app.add_subcommand("triangle", "cells, boundary, area or invariant of a triangle");
    triangle_cmd->add_option("--n", tri.n, "rows")->required();
    tri.add_selectors(triangle_cmd, false);

    ShadowCommand sh;
    auto* shadow_cmd = app.add_subcommand("shadow", "shadow of a closed boundary word");
    sh.add_to(shadow_cmd);

    TileCommand tc;
    auto* tile_cmd = app.add_subcommand("tile", "construct, count, enumerate or validate tilings");
    tile_cmd->require_subcommand(1);
    auto* construct_cmd = tile_cmd->add_subcommand("construct", "all-bones tiling of a pentagonal benzel");
    construct_cmd->add_option("--k", tc.k, "pentagonal index k >= 2")->required();
    construct_cmd->add_option("-o,--output", tc.output, "output file (default stdout)");
    auto* count_cmd = tile_cmd->add_subcommand("count", "exact number of tilings");
    tc.add_counting(count_cmd);
    auto* enumerate_cmd = tile_cmd->add_subcommand("enumerate", "stream tilings as JSON lines");
    enumerate_cmd->add_option("--limit", tc.limit, "stop after this many tilings");
    // enumerate only needs the region and tile set; it shares the options.
    tc.source.add_to(enumerate_cmd);
    enumerate_cmd->add_option("--tiles", tc.tiles, "bones, stones or stones+bones")->capture_default_str();
    auto* freq_cmd = tile_cmd->add_subcommand("freq", "number of tilings containing a placement");
    tc.add_counting(freq_cmd);
    freq_cmd->add_option("--placement", tc.placement, "kind,x,y e.g. boneAB,-1,0")->required();
    auto* validate_cmd = tile_cmd->add_subcommand("validate", "check a tiling file");
    validate_cmd->add_option("tiling", tc.tiling_file, "tiling JSON file")->required();

    ScanOptions so;
    auto* scan_cmd = app.add_subcommand("scan", "table of benzel parameters and invariants");
    scan_cmd->add_option("--max", so.max, "largest a and b")->capture_default_str()->check(CLI::Range(2, 100000));
    scan_cmd->add_flag("--search", so.search, "search for bone tilings");
    scan_cmd->add_option("--search-cap", so.search_cap, "largest cell count to search")->capture_default_str();

    RenderCommand rc;
    auto* render_cmd = app.add_subcommand("render", "SVG picture of a region, tiling or word");
    rc.add_to(render_cmd);

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (ctx.json_output) out << error_json(Error(ErrorCode::parse_error, e.what())).dump() << "\n";
        return exit_input_error;
    }

    try {
        if (benzel_cmd->parsed()) {
            const auto p = BenzelParams::make(bz.a, bz.b);
            bz.emit(ctx, benzel(p), p);
        } else if (triangle_cmd->parsed()) {
            tri.emit(ctx, triangle(tri.n), std::nullopt);
        } else if (shadow_cmd->parsed()) {
            sh.run(ctx);
        } else if (construct_cmd->parsed()) {
            tc.construct(ctx);
        } else if (count_cmd->parsed()) {
            tc.count(ctx);
        } else if (enumerate_cmd->parsed()) {
            tc.enumerate(ctx);
        } else if (freq_cmd->parsed()) {
            tc.freq(ctx);
        } else if (validate_cmd->parsed()) {
            tc.validate_file(ctx);
        } else if (scan_cmd->parsed()) {
            so.count.threads = 1;
            print_scan(ctx, scan(so));
        } else if (render_cmd->parsed()) {
            rc.run(ctx);
        }
    } catch (const Error& e) {
        if (ctx.json_output) {
            out << error_json(e).dump() << "\n";
        } else if (e.code() == ErrorCode::resource_limit) {
            out << "resource-limit\n";
        }
        err << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::resource_limit ? exit_resource_limit : exit_input_error;
    } catch (const std::bad_alloc&) {
        out << (ctx.json_output ? error_json(Error(ErrorCode::resource_limit, "out of memory")).dump() : "resource-limit")
            << "\n";
        err << "resource-limit: out of memory\n";
        return exit_resource_limit;
    } catch (const std::exception& e) {
        if (ctx.json_output) out << error_json(Error(ErrorCode::parse_error, e.what())).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}

}  // namespace tribone
