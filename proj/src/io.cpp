#include "tilings/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tilings {

using nlohmann::json;

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}

namespace {

// Whitespace-separated words of one line, comment stripped.
std::vector<std::string> words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line.substr(0, line.find('#')));
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

class LineReader {
  public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    // Next nonblank line, or false at end of input.
    bool next(std::vector<std::string>& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            out = words(line);
            if (!out.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

    int to_int(const std::string& s) const {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + s + "'");
        }
        if (used != s.size()) fail("expected an integer, got '" + s + "'");
        return v;
    }

    State state(const Alphabet& a, const std::string& tok) const {
        auto s = a.find(tok);
        if (!s) fail("unknown state token '" + tok + "'");
        return *s;
    }

    const std::string& source() const { return source_; }
    int line() const { return line_; }

  private:
    std::istream& in_;
    std::string source_;
    int line_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return in;
}

void expect_args(const LineReader& r, const std::vector<std::string>& w, std::size_t n) {
    if (w.size() != n + 1) r.fail("'" + w[0] + "' takes " + std::to_string(n) + " arguments");
}

}  // namespace

// ---------------------------------------------------------------------------

TileSet parse_tileset(std::istream& in, const std::string& source) {
    LineReader r(in, source);
    AlphabetRef alphabet;
    bool allowed_mode = true;
    std::vector<Pattern> allowed, forbidden;
    std::set<Pattern> seen_allowed, seen_forbidden;
    std::map<std::vector<Vec2>, bool> shape_mode;

    auto add = [&](std::vector<Cell> cells) {
        Pattern p = normalize(Pattern(alphabet, std::move(cells)));
        auto [it, fresh] = shape_mode.emplace(p.domain(), allowed_mode);
        if (!fresh && it->second != allowed_mode) r.fail("shape used in both allowed and forbidden mode");
        auto& seen = allowed_mode ? seen_allowed : seen_forbidden;
        if (!seen.insert(p).second) r.fail("duplicate pattern");
        (allowed_mode ? allowed : forbidden).push_back(std::move(p));
    };

    std::vector<std::string> w;
    while (r.next(w)) {
        const std::string& d = w[0];
        if (d == "alphabet") {
            if (alphabet) r.fail("alphabet declared twice");
            if (w.size() < 2) r.fail("empty alphabet");
            try {
                alphabet = make_alphabet({w.begin() + 1, w.end()});
            } catch (const UsageError& e) {
                r.fail(e.what());
            }
            continue;
        }
        if (d == "mode") {
            expect_args(r, w, 1);
            if (w[1] == "allowed")
                allowed_mode = true;
            else if (w[1] == "forbidden")
                allowed_mode = false;
            else
                r.fail("mode must be 'allowed' or 'forbidden'");
            continue;
        }
        if (d != "hpair" && d != "vpair" && d != "pattern") r.fail("unknown directive '" + d + "'");
        if (!alphabet) r.fail("pattern before alphabet");
        if (d == "hpair") {
            expect_args(r, w, 2);
            add({{{0, 0}, r.state(*alphabet, w[1])}, {{1, 0}, r.state(*alphabet, w[2])}});
        } else if (d == "vpair") {
            expect_args(r, w, 2);
            add({{{0, 0}, r.state(*alphabet, w[2])}, {{0, 1}, r.state(*alphabet, w[1])}});
        } else {
            expect_args(r, w, 0);
            std::vector<Cell> cells;
            std::set<Vec2> used;
            for (;;) {
                if (!r.next(w)) r.fail("unterminated pattern");
                if (w[0] == "end") {
                    expect_args(r, w, 0);
                    break;
                }
                if (w[0] != "cell") r.fail("expected 'cell' or 'end'");
                expect_args(r, w, 3);
                Vec2 pos{r.to_int(w[1]), r.to_int(w[2])};
                if (!used.insert(pos).second) r.fail("duplicate cell in pattern");
                cells.push_back({pos, r.state(*alphabet, w[3])});
            }
            if (cells.empty()) r.fail("empty pattern");
            std::sort(cells.begin(), cells.end());
            add(std::move(cells));
        }
    }
    if (!alphabet) r.fail("missing alphabet");
    if (allowed.empty() && forbidden.empty()) r.fail("no patterns declared");

    std::vector<ShapeRule> rules;
    if (!allowed.empty()) rules = TileSet::from_allowed(alphabet, allowed).rules();
    if (!forbidden.empty()) {
        const auto more = TileSet::from_forbidden(alphabet, forbidden).rules();
        rules.insert(rules.end(), more.begin(), more.end());
    }
    try {
        return TileSet(alphabet, std::move(rules));
    } catch (const UsageError& e) {
        r.fail(e.what());
    }
}

TileSet parse_tileset(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_tileset(in, path.string());
}

std::string emit_tileset(const TileSet& ts) {
    const Alphabet& a = *ts.alphabet();
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : a.tokens()) out << ' ' << t;
    out << '\n';
    bool allowed_mode = true;
    out << "mode allowed\n";

    auto emit = [&](const std::vector<Vec2>& dom, const std::vector<State>& tuple) {
        if (dom == std::vector<Vec2>{{0, 0}, {1, 0}}) {
            out << "hpair " << a.token(tuple[0]) << ' ' << a.token(tuple[1]) << '\n';
        } else if (dom == std::vector<Vec2>{{0, 0}, {0, 1}}) {
            out << "vpair " << a.token(tuple[1]) << ' ' << a.token(tuple[0]) << '\n';
        } else {
            out << "pattern\n";
            for (std::size_t i = 0; i < dom.size(); ++i)
                out << "cell " << dom[i].x << ' ' << dom[i].y << ' ' << a.token(tuple[i]) << '\n';
            out << "end\n";
        }
    };
    auto set_mode = [&](bool allowed) {
        if (allowed != allowed_mode) out << (allowed ? "mode allowed\n" : "mode forbidden\n");
        allowed_mode = allowed;
    };

    const auto forbidden = to_forbidden(ts);
    for (std::size_t s = 0; s < ts.shape_count(); ++s) {
        const auto& rule = ts.rules()[s];
        if (!rule.allowed.empty()) {
            set_mode(true);
            for (const auto& t : rule.allowed) emit(rule.domain, t);
        } else {
            set_mode(false);
            for (const Pattern& p : forbidden[s]) {
                std::vector<State> tuple;
                for (const auto& [pos, st] : p.cells()) tuple.push_back(st);
                emit(rule.domain, tuple);
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------

NamedTiling parse_presentation(std::istream& in, const AlphabetRef& alphabet, const std::string& source) {
    LineReader r(in, source);
    std::vector<std::string> w;
    if (!r.next(w) || w[0] != "presentation") r.fail("expected 'presentation'");
    if (w.size() > 2) r.fail("'presentation' takes at most one name");
    std::string name = w.size() == 2 ? w[1] : "";

    std::optional<std::vector<int>> xcuts, ycuts;
    std::map<std::pair<std::size_t, std::size_t>, Block> regions;
    auto read_cuts = [&](std::optional<std::vector<int>>& cuts) {
        if (cuts) r.fail("'" + w[0] + "' given twice");
        if (!regions.empty()) r.fail("cuts must precede regions");
        cuts.emplace();
        for (std::size_t i = 1; i < w.size(); ++i) {
            const int c = r.to_int(w[i]);
            if (!cuts->empty() && c <= cuts->back()) r.fail("cuts must be strictly increasing");
            cuts->push_back(c);
        }
    };

    while (r.next(w)) {
        if (w[0] == "xcuts") {
            read_cuts(xcuts);
        } else if (w[0] == "ycuts") {
            read_cuts(ycuts);
        } else if (w[0] == "region") {
            expect_args(r, w, 4);
            if (!xcuts) xcuts.emplace();
            if (!ycuts) ycuts.emplace();
            const int ix = r.to_int(w[1]), iy = r.to_int(w[2]);
            const int u = r.to_int(w[3]), v = r.to_int(w[4]);
            if (ix < 0 || iy < 0 || static_cast<std::size_t>(ix) > xcuts->size() ||
                static_cast<std::size_t>(iy) > ycuts->size())
                r.fail("region index out of range");
            if (u < 1 || v < 1) r.fail("region block must be at least 1x1");
            const std::pair<std::size_t, std::size_t> key{ix, iy};
            if (regions.count(key)) r.fail("duplicate region");
            Block b{u, v, std::vector<State>(static_cast<std::size_t>(u) * v)};
            for (int row = v - 1; row >= 0; --row) {
                if (!r.next(w)) r.fail("missing block rows");
                if (w.size() != static_cast<std::size_t>(u))
                    r.fail("block row needs " + std::to_string(u) + " tokens");
                for (int x = 0; x < u; ++x) b.data[static_cast<std::size_t>(x) * v + row] = r.state(*alphabet, w[x]);
            }
            regions.emplace(key, std::move(b));
        } else {
            r.fail("unknown directive '" + w[0] + "'");
        }
    }
    if (!xcuts) xcuts.emplace();
    if (!ycuts) ycuts.emplace();
    std::vector<Block> blocks;
    for (std::size_t ix = 0; ix <= xcuts->size(); ++ix)
        for (std::size_t iy = 0; iy <= ycuts->size(); ++iy) {
            auto it = regions.find({ix, iy});
            if (it == regions.end())
                r.fail("region " + std::to_string(ix) + " " + std::to_string(iy) + " is not defined");
            blocks.push_back(std::move(it->second));
        }
    try {
        return {name, GridPresentation(alphabet, std::move(*xcuts), std::move(*ycuts), std::move(blocks))};
    } catch (const UsageError& e) {
        r.fail(e.what());
    }
}

NamedTiling parse_presentation(const std::filesystem::path& path, const AlphabetRef& alphabet) {
    auto in = open(path);
    return parse_presentation(in, alphabet, path.string());
}

std::string emit_presentation(const GridPresentation& g, const std::string& name) {
    const Alphabet& a = *g.alphabet();
    std::ostringstream out;
    out << "presentation";
    if (!name.empty()) out << ' ' << name;
    out << "\nxcuts";
    for (int c : g.xcuts()) out << ' ' << c;
    out << "\nycuts";
    for (int c : g.ycuts()) out << ' ' << c;
    out << '\n';
    for (std::size_t ix = 0; ix <= g.xcuts().size(); ++ix)
        for (std::size_t iy = 0; iy <= g.ycuts().size(); ++iy) {
            const Block& b = g.region(ix, iy);
            out << "region " << ix << ' ' << iy << ' ' << b.u << ' ' << b.v << '\n';
            for (int y = b.v - 1; y >= 0; --y) {
                for (int x = 0; x < b.u; ++x) {
                    if (x) out << ' ';
                    out << a.token(b.data[static_cast<std::size_t>(x) * b.v + y]);
                }
                out << '\n';
            }
        }
    return out.str();
}

TilingFamily load_family(const std::filesystem::path& dir, const TileSet& ts, int window) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(dir.string(), 0, "not a directory");
    std::vector<fs::path> files;
    const fs::path listing = dir / "family.txt";
    if (fs::exists(listing)) {
        auto in = open(listing);
        LineReader r(in, listing.string());
        std::vector<std::string> w;
        while (r.next(w)) {
            if (w.size() != 1) r.fail("expected one file name per line");
            files.push_back(dir / w[0]);
        }
    } else {
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".pres") files.push_back(e.path());
        std::sort(files.begin(), files.end());
    }
    std::vector<NamedTiling> members;
    for (const auto& f : files) {
        NamedTiling t = parse_presentation(f, ts.alphabet());
        if (t.name.empty()) t.name = f.stem().string();
        members.push_back(std::move(t));
    }
    return TilingFamily::validated(ts, std::move(members), window);
}

// ---------------------------------------------------------------------------

json pattern_rows(const Pattern& p) {
    if (p.empty() || !p.is_rectangle()) throw UsageError("row rendering needs a rectangular pattern");
    const Pattern n = normalize(p);
    const Alphabet& a = *n.alphabet();
    json rows = json::array();
    for (int y = n.height() - 1; y >= 0; --y) {
        std::string row;
        for (int x = 0; x < n.width(); ++x) {
            if (x) row += ' ';
            row += a.token(*n.at({x, y}));
        }
        rows.push_back(row);
    }
    return rows;
}

json torus_json(const TorusTiling& t, const Alphabet& alphabet) {
    json rows = json::array();
    for (int y = t.q - 1; y >= 0; --y) {
        std::string row;
        for (int x = 0; x < t.p; ++x) {
            if (x) row += ' ';
            row += alphabet.token(t.at(x, y));
        }
        rows.push_back(row);
    }
    return {{"p", t.p}, {"q", t.q}, {"rows", rows}};
}

json lattice_json(const PeriodLattice& l) {
    json gens = json::array();
    for (const Vec2& v : l.generators) gens.push_back({v.x, v.y});
    return {{"rank", l.rank}, {"generators", gens}};
}

json classify_json(const ClassifyOutcome& outcome, const Alphabet& alphabet) {
    if (const auto* e = std::get_if<Empty>(&outcome)) return {{"outcome", "empty"}, {"n", e->n}};
    if (const auto* p = std::get_if<PeriodicFound>(&outcome))
        return {{"outcome", "periodic"}, {"tiling", torus_json(p->tiling, alphabet)}};
    return {{"outcome", "unknown"}, {"budget", std::get<Unknown>(outcome).budget}};
}

json analyze_json(const NamedTiling& t, const TileSet& ts) {
    const GridPresentation& g = t.tiling;
    json out;
    out["name"] = t.name;
    out["valid"] = is_valid(g, ts);
    const TilingType type = type_of(g);
    if (const auto* b = std::get_if<TypeB>(&type)) {
        out["type"] = "b";
        out["witness"] = pattern_rows(b->witness);
    } else {
        out["type"] = "a";
        out["witness"] = nullptr;
    }
    out["period_lattice"] = lattice_json(period_lattice(g));
    out["period_x"] = g.period_x();
    out["period_y"] = g.period_y();
    out["structural_bound"] = g.structural_bound();
    return out;
}

namespace {

std::string class_label(const TilingFamily& f, const std::vector<std::size_t>& members) {
    std::string label;
    for (auto i : members) {
        if (!label.empty()) label += " = ";
        label += f.member(i).name;
    }
    return label;
}

json names(const TilingFamily& f, const std::vector<std::size_t>& members) {
    json out = json::array();
    for (auto i : members) out.push_back(f.member(i).name);
    return out;
}

}  // namespace

json order_json(const TilingFamily& f, const FamilyOrder& order) {
    json out;
    out["window"] = f.window();
    out["stable"] = order.stable();
    out["longest_chain"] = order.longest_chain();

    json classes = json::array();
    for (const auto& cls : order.classes())
        classes.push_back({{"label", class_label(f, cls)}, {"members", names(f, cls)}, {"level", order.level_of(cls[0])}});
    out["classes"] = classes;

    const HasseDiagram d = order.hasse();
    json edges = json::array();
    for (const auto& [lo, hi] : d.edges)
        edges.push_back({class_label(f, d.nodes[lo]), class_label(f, d.nodes[hi])});
    out["hasse"] = edges;

    auto labels = [&](const std::vector<std::size_t>& ids) {
        json l = json::array();
        for (auto c : ids) l.push_back(class_label(f, order.classes()[c]));
        return l;
    };
    out["minimal"] = labels(order.minimal_classes());
    out["maximal"] = labels(order.maximal_classes());

    json above = json::object();
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<std::size_t> up;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i && order.leq(i, j)) up.push_back(j);
        above[f.member(i).name] = names(f, up);
    }
    out["preceq"] = above;
    return out;
}

json ranks_json(const TilingFamily& f, const RankReport& report) {
    json out;
    out["window"] = f.window();
    out["family_rank"] = report.family_rank;
    json ranks = json::object();
    for (std::size_t i = 0; i < f.size(); ++i)
        ranks[f.member(i).name] = report.rank[i] ? json(*report.rank[i]) : json(nullptr);
    out["ranks"] = ranks;
    json layers = json::array();
    for (const auto& l : report.layers) layers.push_back(names(f, l));
    out["layers"] = layers;
    out["residue"] = names(f, report.residue);
    return out;
}

std::string hasse_dot(const TilingFamily& f, const HasseDiagram& d) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + '"';
    };
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t c = 0; c < d.nodes.size(); ++c)
        out << "  n" << c << " [label=" << quote(class_label(f, d.nodes[c])) << "];\n";
    for (const auto& [lo, hi] : d.edges) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tilings
