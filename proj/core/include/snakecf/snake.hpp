#pragma once

#include "snakecf/contfrac.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snakecf {

/// Direction from one tile to the next.
enum class Step : std::uint8_t { east, north };

enum class Sign : std::uint8_t { minus, plus };

/// Which boundary edge of the last tile plays the role of e_d.
enum class EdgeChoice : std::uint8_t { north, east };

constexpr Step turn(Step s) noexcept { return s == Step::east ? Step::north : Step::east; }
constexpr Sign flip(Sign s) noexcept { return s == Sign::minus ? Sign::plus : Sign::minus; }

/// Lower-left corner of a unit tile.
struct TilePos {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const TilePos&, const TilePos&) = default;
    friend auto operator<=>(const TilePos&, const TilePos&) = default;
};

/// Signs f(e_0), ..., f(e_d) on the distinguished edges, normalized so that
/// f(e_0) is minus. Maximal runs of equal signs are the CF coefficients.
class SignSequence {
public:
    explicit SignSequence(std::vector<Sign> signs);

    /// Alternating runs of the given lengths, the first run minus.
    static SignSequence from_runs(std::span<const Coeff> runs);

    std::span<const Sign> signs() const noexcept { return signs_; }
    std::size_t size() const noexcept { return signs_.size(); }
    Sign operator[](std::size_t i) const { return signs_.at(i); }

    std::vector<Coeff> runs() const;

    /// Tiles i (1-based) with f(e_{i-1}) != f(e_i): the tiles the snake
    /// passes straight through.
    std::vector<std::size_t> sign_change_tiles() const;

    std::string to_string() const;

    friend bool operator==(const SignSequence&, const SignSequence&) = default;

private:
    std::vector<Sign> signs_;
};

/// Chain of d unit tiles, tile i+1 glued to the north or east edge of tile
/// i, stored as the d-1 steps between consecutive tiles. d = 0 denotes the
/// degenerate snake graph consisting of a single edge.
class SnakeGraph {
public:
    /// The single-edge graph (one perfect matching).
    static SnakeGraph degenerate();
    /// d = steps.size() + 1 tiles.
    static SnakeGraph from_steps(std::vector<Step> steps);
    /// Parses a step string such as "EENE"; "-" is the degenerate graph.
    static SnakeGraph parse(std::string_view text);

    std::size_t tile_count() const noexcept { return degenerate_ ? 0 : steps_.size() + 1; }
    bool is_degenerate() const noexcept { return degenerate_; }
    std::span<const Step> steps() const noexcept { return steps_; }

    /// Direction in which tile i (1-based) is entered; tile 1 counts as
    /// entered from the south, i.e. moving north.
    Step entry_direction(std::size_t tile) const;

    /// True if tile i (1-based, 1 <= i < d) is left in the direction it was
    /// entered.
    bool is_straight_at(std::size_t tile) const;

    /// Tile corners, tile 1 at the origin.
    std::vector<TilePos> tiles() const;

    std::string to_string() const;

    friend bool operator==(const SnakeGraph&, const SnakeGraph&) = default;

private:
    SnakeGraph(bool degenerate, std::vector<Step> steps)
        : degenerate_(degenerate), steps_(std::move(steps)) {}

    bool degenerate_ = false;
    std::vector<Step> steps_;
};

/// Shape encoded by a sign sequence: tile 1 is left northward iff
/// f(e_0) != f(e_1); later tiles keep their direction iff the two signs on
/// their distinguished edges differ.
SnakeGraph from_signs(const SignSequence& signs);

/// G[a_1, ..., a_n]: (a_1 + ... + a_n) - 1 tiles. Empty runs give the
/// degenerate graph, as does [1].
SnakeGraph from_runs(std::span<const Coeff> runs);
SnakeGraph from_cf(const PositiveCF& cf);

SignSequence sign_sequence(const SnakeGraph& sg, EdgeChoice choice);

/// The choice of e_d that extends the last run, producing the canonical CF.
EdgeChoice canonical_choice(const SnakeGraph& sg);

/// Reads the run lengths of sign_sequence(sg, choice). The degenerate graph
/// maps to [1] for either choice.
PositiveCF to_cf(const SnakeGraph& sg, EdgeChoice choice);
PositiveCF to_cf(const SnakeGraph& sg);

SnakeGraph rotate180(const SnakeGraph& sg);
SnakeGraph flip_diag(const SnakeGraph& sg);
SnakeGraph flip_antidiag(const SnakeGraph& sg);

/// Equal up to rotation by 180 degrees and the two diagonal flips.
bool is_isomorphic(const SnakeGraph& a, const SnakeGraph& b);

/// Odd tile count and the 180-degree rotation about the middle tile maps
/// the graph onto itself.
bool has_center_symmetry(const SnakeGraph& sg);

/// G[a_n, ..., a_1, a_1, ..., a_n].
SnakeGraph palindromify_graph(const PositiveCF& cf);

/// Tiles 1..k.
SnakeGraph prefix(const SnakeGraph& sg, std::size_t k);
/// Tiles k+1..d, as the literal subgraph.
SnakeGraph drop_first_tiles(const SnakeGraph& sg, std::size_t k);

std::string to_string(Step s);
std::string to_string(EdgeChoice c);

}  // namespace snakecf
