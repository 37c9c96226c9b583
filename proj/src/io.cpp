#include "digitop/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace digitop {
namespace io {

std::vector<Point> parse_grid(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("grid: file is empty");

    const std::size_t width = lines.front().size();
    std::vector<Point> pts;
    const int rows = static_cast<int>(lines.size());
    for (int r = 0; r < rows; ++r) {
        if (lines[r].size() != width)
            throw ParseError("grid: ragged grid (line " + std::to_string(r + 1) +
                             " has length " + std::to_string(lines[r].size()) + ", expected " +
                             std::to_string(width) + ")");
        for (int c = 0; c < static_cast<int>(width); ++c) {
            const char ch = lines[r][c];
            if (ch == '#')
                pts.push_back(Point{c, rows - 1 - r});
            else if (ch != '.')
                throw ParseError(std::string("grid: invalid character '") + ch +
                                 "' (only '#' and '.' are allowed)");
        }
    }
    if (pts.empty()) throw ParseError("grid: image is empty (no '#' cells)");
    return normalized(std::move(pts));
}

std::vector<Point> parse_coords(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    int dim = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        Point p;
        long long v;
        while (fields >> v) {
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
                throw ParseError("coords: line " + std::to_string(lineno) +
                                 " has a coordinate out of range");
            p.coords.push_back(static_cast<int>(v));
        }
        if (!fields.eof())
            throw ParseError("coords: line " + std::to_string(lineno) +
                             " contains a non-integer token");
        if (p.coords.empty()) continue;
        if (dim < 0)
            dim = p.dim();
        else if (p.dim() != dim)
            throw ParseError("coords: mixed dimensions (line " + std::to_string(lineno) +
                             " has " + std::to_string(p.dim()) + " coordinates, expected " +
                             std::to_string(dim) + ")");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw ParseError("coords: image is empty");
    return normalized(std::move(pts));
}

std::string to_grid(const std::vector<Point>& points) {
    const std::vector<Point> pts = normalized(points);
    if (pts.empty()) throw ParseError("to_grid: empty point set");
    int maxx = 0, maxy = 0;
    for (const Point& p : pts) {
        if (p.dim() != 2) throw ParseError("to_grid: grid files hold 2-dimensional images only");
        if (p[0] < 0 || p[1] < 0)
            throw ParseError("to_grid: negative coordinates are not representable in a grid; "
                             "use the coords format");
        maxx = std::max(maxx, p[0]);
        maxy = std::max(maxy, p[1]);
    }
    std::vector<std::string> lines(static_cast<std::size_t>(maxy) + 1,
                                   std::string(static_cast<std::size_t>(maxx) + 1, '.'));
    for (const Point& p : pts) lines[static_cast<std::size_t>(maxy - p[1])][static_cast<std::size_t>(p[0])] = '#';
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string to_coords(const std::vector<Point>& points) {
    const std::vector<Point> pts = normalized(points);
    if (pts.empty()) throw ParseError("to_coords: empty point set");
    std::string out;
    for (const Point& p : pts) {
        for (int i = 0; i < p.dim(); ++i) {
            if (i) out += ' ';
            out += std::to_string(p[i]);
        }
        out += '\n';
    }
    return out;
}

Format format_from_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".grid") return Format::Grid;
    if (ext == ".coords") return Format::Coords;
    throw ParseError("cannot infer format from extension '" + ext +
                     "'; pass --format grid|coords");
}

DigitalImage parse_image_file(const std::filesystem::path& path, Format format, int u) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::vector<Point> pts =
        format == Format::Grid ? parse_grid(in) : parse_coords(in);
    try {
        return DigitalImage(std::move(pts), u);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace io
}  // namespace digitop
