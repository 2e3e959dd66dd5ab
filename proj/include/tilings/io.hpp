#pragma once

// Text formats for tile-sets and presentations, family directories, and the
// JSON / DOT emitters used by the command line tool.
//
// Tile-set files:
//
//     alphabet R G W B
//     mode allowed          # or forbidden; may change between patterns
//     hpair R W             # (0,0)=R (1,0)=W
//     vpair G W             # (0,1)=G (0,0)=W
//     pattern
//     cell 0 0 R
//     cell 1 1 W
//     end
//
// Presentation files (rows of a region are written top to bottom):
//
//     presentation A2
//     xcuts 0
//     ycuts 0 2
//     region 1 1 1 1
//     W

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tilings/cb.hpp"
#include "tilings/core.hpp"
#include "tilings/order.hpp"
#include "tilings/presentation.hpp"
#include "tilings/solver.hpp"

namespace tilings {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, int line, const std::string& what);

    const std::string& source() const { return source_; }
    int line() const { return line_; }

  private:
    std::string source_;
    int line_;
};

TileSet parse_tileset(std::istream& in, const std::string& source = "<input>");
TileSet parse_tileset(const std::filesystem::path& path);

/// Allowed mode where possible; shapes with no allowed pattern are written
/// in forbidden mode.
std::string emit_tileset(const TileSet& ts);

/// `name` is the word after `presentation`, or empty.
NamedTiling parse_presentation(std::istream& in, const AlphabetRef& alphabet,
                               const std::string& source = "<input>");
NamedTiling parse_presentation(const std::filesystem::path& path, const AlphabetRef& alphabet);

std::string emit_presentation(const GridPresentation& g, const std::string& name = "");

/// Loads every presentation of a directory. With a `family.txt` (one file
/// name per line) the listed files are loaded in that order; otherwise all
/// `*.pres` files in name order. Unnamed presentations take the file stem.
TilingFamily load_family(const std::filesystem::path& dir, const TileSet& ts, int window);

// ---------------------------------------------------------------------------

/// Rows top to bottom, tokens separated by single spaces. Requires a
/// rectangular pattern.
nlohmann::json pattern_rows(const Pattern& p);
nlohmann::json torus_json(const TorusTiling& t, const Alphabet& alphabet);
nlohmann::json lattice_json(const PeriodLattice& l);
nlohmann::json classify_json(const ClassifyOutcome& outcome, const Alphabet& alphabet);
nlohmann::json analyze_json(const NamedTiling& t, const TileSet& ts);
nlohmann::json order_json(const TilingFamily& f, const FamilyOrder& order);
nlohmann::json ranks_json(const TilingFamily& f, const RankReport& report);

/// Covering edges of the Hasse diagram, lower class pointing to upper class.
std::string hasse_dot(const TilingFamily& f, const HasseDiagram& d);

}  // namespace tilings
