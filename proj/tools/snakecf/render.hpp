#pragma once

#include <snakecf/markov.hpp>
#include <snakecf/snake.hpp>

#include <optional>
#include <string>

namespace snakecf::cli {

enum class Format { ascii, svg, json };

struct RenderSpec {
    Format format = Format::ascii;
    int cell_size = 24;  // svg pixels per tile
    std::optional<std::string> out_path;
    bool sign_labels = false;

    /// Throws ErrorCode::domain if cell_size < 4 for svg.
    void validate() const;
};

std::string to_string(Format f);
Format parse_format(std::string_view text);

/// ascii: each tile is a 3x3 character cell, neighbours share borders, the
/// centre holds the last digit of the tile index. svg: one <rect> per tile.
std::string render_snake(const SnakeGraph& sg, const RenderSpec& spec);

/// The lattice path of the Christoffel word, two characters per half step;
/// unit lattice points are '+', the middle of each unit step carries its
/// letter.
std::string render_christoffel(const Slope& s, const RenderSpec& spec);

}  // namespace snakecf::cli
