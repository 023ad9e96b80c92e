#include "render.hpp"

#include <snakecf/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace snakecf::cli {

void RenderSpec::validate() const {
    if (format == Format::svg && cell_size < 4) {
        throw Error(ErrorCode::domain, "svg cell size must be at least 4");
    }
}

std::string to_string(Format f) {
    switch (f) {
        case Format::ascii: return "ascii";
        case Format::svg: return "svg";
        case Format::json: return "json";
    }
    return "?";
}

Format parse_format(std::string_view text) {
    if (text == "ascii") return Format::ascii;
    if (text == "svg") return Format::svg;
    if (text == "json") return Format::json;
    throw Error(ErrorCode::domain, "unknown format '" + std::string(text) + "'");
}

namespace {

class Canvas {
public:
    Canvas(std::size_t width, std::size_t height)
        : rows_(height, std::string(width, ' ')) {}

    void put(std::size_t col, std::size_t row, char c) { rows_.at(row).at(col) = c; }

    std::string str() const {
        std::string out;
        for (const auto& row : rows_) {
            std::string line = row;
            line.erase(line.find_last_not_of(' ') + 1);
            out += line;
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::string> rows_;
};

struct Box {
    std::int64_t width = 0;
    std::int64_t height = 0;
};

Box bounding_box(const std::vector<TilePos>& tiles) {
    Box b;
    for (const TilePos& t : tiles) {
        b.width = std::max(b.width, t.x + 1);
        b.height = std::max(b.height, t.y + 1);
    }
    return b;
}

std::string ascii_snake(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        return "+-+\n";
    }
    const auto tiles = sg.tiles();
    const Box box = bounding_box(tiles);
    Canvas canvas(static_cast<std::size_t>(2 * box.width + 1),
                  static_cast<std::size_t>(2 * box.height + 1));
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const auto col = static_cast<std::size_t>(2 * tiles[i].x);
        const auto row = static_cast<std::size_t>(2 * (box.height - 1 - tiles[i].y));
        for (std::size_t dc : {0U, 2U}) {
            for (std::size_t dr : {0U, 2U}) {
                canvas.put(col + dc, row + dr, '+');
            }
        }
        canvas.put(col + 1, row, '-');
        canvas.put(col + 1, row + 2, '-');
        canvas.put(col, row + 1, '|');
        canvas.put(col + 2, row + 1, '|');
        canvas.put(col + 1, row + 1, static_cast<char>('0' + (i + 1) % 10));
    }
    return canvas.str();
}

std::string svg_header(std::int64_t width, std::int64_t height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
       << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
    return os.str();
}

// Midpoints of the distinguished edges e_0..e_d in tile units.
std::vector<std::pair<double, double>> sign_edge_midpoints(const SnakeGraph& sg) {
    const auto tiles = sg.tiles();
    std::vector<std::pair<double, double>> out;
    out.emplace_back(0.5, 0.0);
    for (std::size_t i = 1; i < tiles.size(); ++i) {
        const TilePos t = tiles[i];
        if (sg.entry_direction(i + 1) == Step::north) {
            out.emplace_back(static_cast<double>(t.x) + 0.5, static_cast<double>(t.y));
        } else {
            out.emplace_back(static_cast<double>(t.x), static_cast<double>(t.y) + 0.5);
        }
    }
    const TilePos last = tiles.back();
    if (canonical_choice(sg) == EdgeChoice::north) {
        out.emplace_back(static_cast<double>(last.x) + 0.5, static_cast<double>(last.y) + 1.0);
    } else {
        out.emplace_back(static_cast<double>(last.x) + 1.0, static_cast<double>(last.y) + 0.5);
    }
    return out;
}

std::string svg_snake(const SnakeGraph& sg, const RenderSpec& spec) {
    const std::int64_t c = spec.cell_size;
    const std::int64_t m = 2;
    if (sg.is_degenerate()) {
        std::ostringstream os;
        os << svg_header(c + 2 * m, 2 * m) << "  <line x1=\"" << m << "\" y1=\"" << m
           << "\" x2=\"" << m + c << "\" y2=\"" << m
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n</svg>\n";
        return os.str();
    }
    const auto tiles = sg.tiles();
    const Box box = bounding_box(tiles);
    std::ostringstream os;
    os << svg_header(box.width * c + 2 * m, box.height * c + 2 * m);
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const std::int64_t x = m + tiles[i].x * c;
        const std::int64_t y = m + (box.height - 1 - tiles[i].y) * c;
        os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << c << "\" height=\"" << c
           << "\" fill=\"#f4f1e8\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "  <text x=\"" << x + c / 2 << "\" y=\"" << y + c / 2
           << "\" font-size=\"" << std::max<std::int64_t>(c / 3, 3)
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << i + 1 << "</text>\n";
    }
    if (spec.sign_labels) {
        const SignSequence signs = sign_sequence(sg, canonical_choice(sg));
        const auto mids = sign_edge_midpoints(sg);
        for (std::size_t i = 0; i < mids.size(); ++i) {
            const double x = static_cast<double>(m) + mids[i].first * static_cast<double>(c);
            const double y = static_cast<double>(m) +
                             (static_cast<double>(box.height) - mids[i].second) *
                                 static_cast<double>(c);
            os << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\""
               << std::max<std::int64_t>(c / 3, 3)
               << "\" fill=\"#b03020\" text-anchor=\"middle\" dominant-baseline=\"central\">"
               << (signs[i] == Sign::minus ? "-" : "+") << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string json_snake(const SnakeGraph& sg) {
    nlohmann::json doc;
    doc["steps"] = sg.to_string();
    doc["tile_count"] = sg.tile_count();
    nlohmann::json tiles = nlohmann::json::array();
    for (const TilePos& t : sg.tiles()) {
        tiles.push_back({t.x, t.y});
    }
    doc["tiles"] = std::move(tiles);
    return doc.dump(2) + "\n";
}

std::string ascii_christoffel(const Slope& s) {
    const std::string& word = christoffel_word(s).letters;
    const auto q = static_cast<std::size_t>(s.q());
    const auto p = static_cast<std::size_t>(s.p());
    // Half-unit point (X, Y) sits at column 2X, row 2(2p - Y).
    Canvas canvas(4 * q + 1, 4 * p + 1);
    std::size_t x = 0;
    std::size_t y = 0;
    canvas.put(0, 4 * p, '+');
    for (char letter : word) {
        for (int half = 0; half < 2; ++half) {
            if (letter == 'x') {
                canvas.put(2 * x + 1, 2 * (2 * p - y), '-');
                ++x;
            } else {
                canvas.put(2 * x, 2 * (2 * p - y) - 1, '|');
                ++y;
            }
            canvas.put(2 * x, 2 * (2 * p - y), half == 0 ? letter : '+');
        }
    }
    return canvas.str() + word + "  (" + s.to_string() + ")\n";
}

std::string svg_christoffel(const Slope& s, const RenderSpec& spec) {
    const std::int64_t c = spec.cell_size;
    const std::int64_t m = 2;
    const std::int64_t height = s.p() * c;
    auto px = [&](std::int64_t half_x) { return m + half_x * c / 2; };
    auto py = [&](std::int64_t half_y) { return m + height - half_y * c / 2; };

    std::ostringstream os;
    os << svg_header(s.q() * c + 2 * m, height + 2 * m);
    for (const TilePos& t : christoffel_tile_positions(s)) {
        os << "  <rect x=\"" << px(t.x) << "\" y=\"" << py(t.y + 1) << "\" width=\"" << c / 2
           << "\" height=\"" << c / 2 << "\" fill=\"#e8eef4\" stroke=\"#607080\" "
           << "stroke-width=\"1\"/>\n";
    }
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(2 * s.q())
       << "\" y2=\"" << py(2 * s.p()) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    std::int64_t x = 0;
    std::int64_t y = 0;
    os << px(x) << ',' << py(y);
    for (char letter : christoffel_word(s).letters) {
        (letter == 'x' ? x : y) += 2;
        os << ' ' << px(x) << ',' << py(y);
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

}  // namespace

std::string render_snake(const SnakeGraph& sg, const RenderSpec& spec) {
    spec.validate();
    switch (spec.format) {
        case Format::ascii: return ascii_snake(sg);
        case Format::svg: return svg_snake(sg, spec);
        case Format::json: return json_snake(sg);
    }
    return {};
}

std::string render_christoffel(const Slope& s, const RenderSpec& spec) {
    spec.validate();
    switch (spec.format) {
        case Format::ascii: return ascii_christoffel(s);
        case Format::svg: return svg_christoffel(s, spec);
        case Format::json: {
            nlohmann::json doc;
            doc["slope"] = s.to_string();
            doc["word"] = christoffel_word(s).letters;
            doc["snake"] = nlohmann::json::parse(json_snake(christoffel_snake(s)));
            return doc.dump(2) + "\n";
        }
    }
    return {};
}

}  // namespace snakecf::cli
