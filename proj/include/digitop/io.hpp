#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace digitop {
namespace io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Grid, Coords };

// Grid format: rectangular lines over {'#', '.'}; '#' at row r, column c
// encodes the point (c, rows-1-r), so y increases upward and the file
// reads like the figures. Requires at least one '#'.
std::vector<Point> parse_grid(std::istream& in);

// Coords format: one point per line, whitespace-separated integers; the
// first data line fixes the dimension; lines starting with '#' are
// comments, blank lines are skipped.
std::vector<Point> parse_coords(std::istream& in);

// Serialization. to_grid requires 2-dimensional points with nonnegative
// coordinates (the frame is anchored at the origin so that parsing the
// output reproduces the set exactly); to_coords works for any dimension,
// one sorted point per line.
std::string to_grid(const std::vector<Point>& points);
std::string to_coords(const std::vector<Point>& points);

// Infers the format from the extension (".grid" / ".coords"); throws
// ParseError for anything else.
Format format_from_path(const std::filesystem::path& path);

// Reads, parses, and wraps into an image with adjacency u. File-shape
// problems surface as ParseError (including u out of range for the
// parsed dimension).
DigitalImage parse_image_file(const std::filesystem::path& path, Format format, int u);

}  // namespace io
}  // namespace digitop
