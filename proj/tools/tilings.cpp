// Command line front end: tile-set and presentation analysis with JSON output.
//
// Exit status: 0 on success, 1 when the queried property is false (invalid
// presentation, no witness found), 2 on usage or parse errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilings/cb.hpp"
#include "tilings/io.hpp"
#include "tilings/lang.hpp"
#include "tilings/order.hpp"
#include "tilings/presentation.hpp"
#include "tilings/solver.hpp"

namespace {

using nlohmann::json;
using namespace tilings;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
    std::string tiles;
    std::string pres;
    std::string family;
    std::string dot;
    int size = 1;
    int margin = 0;
    bool count = false;
    int max_p = 1;
    int max_q = 1;
    int budget = 1;
    int max_period = 1;
    int window = 1;
    std::size_t threads = 1;
};

int cmd_patterns(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const auto squares = o.margin > 0 ? extensible_squares(ts, o.size, o.margin) : admissible_squares(ts, o.size);
    if (o.count) {
        std::cout << squares.size() << '\n';
        return 0;
    }
    json list = json::array();
    for (const auto& p : squares) list.push_back(pattern_rows(p));
    print({{"size", o.size}, {"margin", o.margin}, {"count", squares.size()}, {"patterns", list}});
    return 0;
}

int cmd_torus(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const auto tilings = enumerate_torus(ts, o.max_p, o.max_q);
    json list = json::array();
    for (const auto& t : tilings) list.push_back(torus_json(t, *ts.alphabet()));
    print({{"max_p", o.max_p}, {"max_q", o.max_q}, {"count", tilings.size()}, {"tilings", list}});
    return 0;
}

int cmd_classify(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    print(classify_json(classify(ts, o.budget), *ts.alphabet()));
    return 0;
}

int cmd_weak_periodic(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const auto w = weak_periodic_witness(ts, o.max_period);
    if (!w) {
        std::cerr << "no weakly periodic witness with period up to " << o.max_period << '\n';
        return 1;
    }
    std::cout << emit_presentation(*w, "witness");
    return 0;
}

int cmd_validate(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const NamedTiling t = parse_presentation(std::filesystem::path(o.pres), ts.alphabet());
    const bool valid = is_valid(t.tiling, ts);
    print({{"valid", valid}});
    return valid ? 0 : 1;
}

int cmd_analyze(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    NamedTiling t = parse_presentation(std::filesystem::path(o.pres), ts.alphabet());
    if (t.name.empty()) t.name = std::filesystem::path(o.pres).stem().string();
    print(analyze_json(t, ts));
    return 0;
}

int cmd_order(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const TilingFamily f = load_family(o.family, ts, o.window);
    const FamilyOrder order(f, o.threads);
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out) throw UsageError("cannot write " + o.dot);
        out << hasse_dot(f, order.hasse());
    }
    print(order_json(f, order));
    return 0;
}

int cmd_cb(const Options& o) {
    const TileSet ts = parse_tileset(std::filesystem::path(o.tiles));
    const TilingFamily f = load_family(o.family, ts, o.window);
    print(ranks_json(f, ranks(f)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern languages, periodic search and preorder analysis of 2D tilings"};
    app.require_subcommand(1);
    Options o;
    int (*run)(const Options&) = nullptr;

    auto tiles = [&](CLI::App* c) { c->add_option("tiles", o.tiles, "Tile-set file")->required(); };
    auto family = [&](CLI::App* c) {
        tiles(c);
        c->add_option("family", o.family, "Directory of presentation files")->required();
        c->add_option("--window", o.window, "Window size n")->required()->check(CLI::PositiveNumber);
    };

    auto* patterns = app.add_subcommand("patterns", "List admissible n x n squares");
    tiles(patterns);
    patterns->add_option("--size", o.size, "Square size n")->required()->check(CLI::PositiveNumber);
    patterns->add_option("--margin", o.margin, "Keep squares extending by this margin")->check(CLI::NonNegativeNumber);
    patterns->add_flag("--count", o.count, "Print only the number of squares");
    patterns->callback([&] { run = cmd_patterns; });

    auto* torus = app.add_subcommand("torus", "Enumerate periodic tilings up to translation");
    tiles(torus);
    torus->add_option("--max-p", o.max_p, "Largest horizontal period")->required()->check(CLI::PositiveNumber);
    torus->add_option("--max-q", o.max_q, "Largest vertical period")->required()->check(CLI::PositiveNumber);
    torus->callback([&] { run = cmd_torus; });

    auto* cls = app.add_subcommand("classify", "Refute or find a periodic tiling");
    tiles(cls);
    cls->add_option("--budget", o.budget, "Search bound")->required()->check(CLI::PositiveNumber);
    cls->callback([&] { run = cmd_classify; });

    auto* weak = app.add_subcommand("weak-periodic", "Search a tiling with exactly one period direction");
    tiles(weak);
    weak->add_option("--max-period", o.max_period, "Largest strip height")->required()->check(CLI::PositiveNumber);
    weak->callback([&] { run = cmd_weak_periodic; });

    auto* validate = app.add_subcommand("validate", "Check a presentation against a tile-set");
    tiles(validate);
    validate->add_option("presentation", o.pres, "Presentation file")->required();
    validate->callback([&] { run = cmd_validate; });

    auto* analyze = app.add_subcommand("analyze", "Type, periods and bounds of a presentation");
    tiles(analyze);
    analyze->add_option("presentation", o.pres, "Presentation file")->required();
    analyze->callback([&] { run = cmd_analyze; });

    auto* order = app.add_subcommand("order", "Preorder, classes and Hasse diagram of a family");
    family(order);
    order->add_option("--dot", o.dot, "Write the Hasse diagram in DOT format");
    order->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    order->callback([&] { run = cmd_order; });

    auto* cb = app.add_subcommand("cb", "Cantor-Bendixson ranks of a family");
    family(cb);
    cb->callback([&] { run = cmd_cb; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
