#pragma once

#include "snakecf/fraction.hpp"
#include "snakecf/snake.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace snakecf {

enum class Side : std::uint8_t { south, west, north, east };

/// An edge named by the lowest-numbered tile containing it. Tile 0 names
/// the single edge of the degenerate graph.
struct EdgeLabel {
    std::size_t tile = 0;
    Side side = Side::south;
    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
    friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Lattice vertices and edges of a snake graph.
struct PlaneGraph {
    std::vector<TilePos> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<EdgeLabel> labels;
};

PlaneGraph build_plane_graph(const SnakeGraph& sg);

/// Sorted edge labels.
struct Matching {
    std::vector<EdgeLabel> edges;
    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

inline constexpr std::size_t kEnumerateMaxTiles = 20;

/// All perfect matchings by backtracking, in lexicographic order.
/// Throws ErrorCode::size_guard when d > 20.
std::vector<Matching> enumerate_matchings(const SnakeGraph& sg);

/// Number of perfect matchings of an arbitrary graph with at most 64
/// vertices, by backtracking.
std::uint64_t count_perfect_matchings_brute(const PlaneGraph& g);

/// Two-state transfer over the tiles; linear in d.
BigInt count_matchings(const SnakeGraph& sg);

/// Entry i-1 is count_matchings(prefix(sg, i)) for i = 1..d.
std::vector<BigInt> prefix_counts(const SnakeGraph& sg);

/// A band graph cut open along its glueing edge.
struct BandGraph {
    SnakeGraph plus_graph;
    SnakeGraph minus_graph;
    std::string label;
};

/// m(G+) - m(G-). Throws ErrorCode::construction if negative.
BigInt count_matchings_band(const BandGraph& bg);

inline constexpr std::size_t kGluedMaxTiles = 12;

/// Experimental: perfect matchings of plus_graph with the south edge of
/// tile 1 identified with the canonical e_d of the last tile, lower-left
/// endpoint to lower-left endpoint. Counts every perfect matching of the
/// glued graph, good or not. Throws ErrorCode::size_guard when d > 12.
std::uint64_t count_glued_band_brute(const BandGraph& bg);

std::string to_string(Side s);

}  // namespace snakecf
