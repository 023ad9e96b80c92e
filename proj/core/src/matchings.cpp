#include "snakecf/matchings.hpp"

#include "snakecf/error.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace snakecf {

namespace {

class VertexIndex {
public:
    explicit VertexIndex(PlaneGraph& g) : g_(g) {}

    std::size_t operator()(TilePos p) {
        auto [it, inserted] = index_.try_emplace(p, g_.vertices.size());
        if (inserted) {
            g_.vertices.push_back(p);
        }
        return it->second;
    }

private:
    PlaneGraph& g_;
    std::map<TilePos, std::size_t> index_;
};

struct Adjacency {
    // incident[v] = (edge index, other endpoint)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident;
};

Adjacency adjacency(const PlaneGraph& g) {
    if (g.vertices.size() > 64) {
        throw Error(ErrorCode::size_guard, "brute-force matching supports at most 64 vertices");
    }
    Adjacency adj;
    adj.incident.resize(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        adj.incident[u].emplace_back(e, v);
        if (u != v) {
            adj.incident[v].emplace_back(e, u);
        }
    }
    return adj;
}

// Matches the lowest unmatched vertex in every possible way.
template <class Visit>
void backtrack(const Adjacency& adj, std::uint64_t full, std::uint64_t matched,
               std::vector<std::size_t>& chosen, Visit& visit) {
    if (matched == full) {
        visit(chosen);
        return;
    }
    const auto v = static_cast<std::size_t>(std::countr_zero(~matched));
    for (const auto& [e, w] : adj.incident[v]) {
        const std::uint64_t bit = std::uint64_t{1} << w;
        if (w == v || (matched & bit) != 0) {
            continue;
        }
        chosen.push_back(e);
        backtrack(adj, full, matched | (std::uint64_t{1} << v) | bit, chosen, visit);
        chosen.pop_back();
    }
}

template <class Visit>
void for_each_perfect_matching(const PlaneGraph& g, Visit visit) {
    const Adjacency adj = adjacency(g);
    const std::size_t n = g.vertices.size();
    if (n % 2 != 0) {
        return;
    }
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> chosen;
    backtrack(adj, full, 0, chosen, visit);
}

}  // namespace

PlaneGraph build_plane_graph(const SnakeGraph& sg) {
    PlaneGraph g;
    VertexIndex vertex(g);
    if (sg.is_degenerate()) {
        g.edges.emplace_back(vertex({0, 0}), vertex({1, 0}));
        g.labels.push_back({0, Side::south});
        return g;
    }
    const auto tiles = sg.tiles();
    for (std::size_t i = 1; i <= tiles.size(); ++i) {
        const TilePos p = tiles[i - 1];
        const std::size_t sw = vertex(p);
        const std::size_t se = vertex({p.x + 1, p.y});
        const std::size_t nw = vertex({p.x, p.y + 1});
        const std::size_t ne = vertex({p.x + 1, p.y + 1});
        const bool entered_from_below = i > 1 && sg.entry_direction(i) == Step::north;
        const bool entered_from_left = i > 1 && sg.entry_direction(i) == Step::east;
        if (!entered_from_below) {
            g.edges.emplace_back(sw, se);
            g.labels.push_back({i, Side::south});
        }
        if (!entered_from_left) {
            g.edges.emplace_back(sw, nw);
            g.labels.push_back({i, Side::west});
        }
        g.edges.emplace_back(nw, ne);
        g.labels.push_back({i, Side::north});
        g.edges.emplace_back(se, ne);
        g.labels.push_back({i, Side::east});
    }
    return g;
}

std::vector<Matching> enumerate_matchings(const SnakeGraph& sg) {
    if (sg.tile_count() > kEnumerateMaxTiles) {
        throw Error(ErrorCode::size_guard, "enumeration is limited to 20 tiles, got " +
                                               std::to_string(sg.tile_count()));
    }
    const PlaneGraph g = build_plane_graph(sg);
    std::vector<Matching> out;
    for_each_perfect_matching(g, [&](const std::vector<std::size_t>& chosen) {
        Matching m;
        m.edges.reserve(chosen.size());
        for (std::size_t e : chosen) {
            m.edges.push_back(g.labels[e]);
        }
        std::sort(m.edges.begin(), m.edges.end());
        out.push_back(std::move(m));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_perfect_matchings_brute(const PlaneGraph& g) {
    std::uint64_t count = 0;
    for_each_perfect_matching(g, [&](const std::vector<std::size_t>&) { ++count; });
    return count;
}

namespace {

// Two running counts after tile i; closed + open = m(tiles 1..i). A
// straight tile hands `closed` on as the new `open`, a bend keeps `open`.
struct TransferState {
    BigInt closed = 1;
    BigInt open = 1;
};

void advance(TransferState& st, bool straight) {
    BigInt next_closed = st.closed + st.open;
    if (straight) {
        st.open = std::move(st.closed);
    }
    st.closed = std::move(next_closed);
}

}  // namespace

BigInt count_matchings(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        return 1;
    }
    TransferState st;
    const std::size_t d = sg.tile_count();
    for (std::size_t i = 1; i < d; ++i) {
        advance(st, sg.is_straight_at(i));
    }
    return st.closed + st.open;
}

std::vector<BigInt> prefix_counts(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        throw Error(ErrorCode::domain, "prefix counts need at least one tile");
    }
    const std::size_t d = sg.tile_count();
    std::vector<BigInt> out;
    out.reserve(d);
    TransferState st;
    out.push_back(st.closed + st.open);
    for (std::size_t i = 1; i < d; ++i) {
        advance(st, sg.is_straight_at(i));
        out.push_back(st.closed + st.open);
    }
    return out;
}

BigInt count_matchings_band(const BandGraph& bg) {
    BigInt diff = count_matchings(bg.plus_graph) - count_matchings(bg.minus_graph);
    if (diff < 0) {
        throw Error(ErrorCode::construction,
                    "band graph pair has m(G+) < m(G-): " + bg.label);
    }
    return diff;
}

std::uint64_t count_glued_band_brute(const BandGraph& bg) {
    const SnakeGraph& sg = bg.plus_graph;
    if (sg.is_degenerate()) {
        throw Error(ErrorCode::domain, "glued band needs at least one tile");
    }
    if (sg.tile_count() > kGluedMaxTiles) {
        throw Error(ErrorCode::size_guard, "glued band brute force is limited to 12 tiles");
    }
    const PlaneGraph cut = build_plane_graph(sg);
    const TilePos last = sg.tiles().back();
    const EdgeChoice choice = canonical_choice(sg);
    const TilePos end_a = choice == EdgeChoice::north ? TilePos{last.x, last.y + 1}
                                                      : TilePos{last.x + 1, last.y};
    const TilePos end_b = TilePos{last.x + 1, last.y + 1};

    // Merge (0,0) into end_a and (1,0) into end_b, then renumber.
    std::vector<std::size_t> rep(cut.vertices.size());
    for (std::size_t v = 0; v < cut.vertices.size(); ++v) {
        rep[v] = v;
    }
    auto find = [&](TilePos p) {
        return static_cast<std::size_t>(
            std::find(cut.vertices.begin(), cut.vertices.end(), p) - cut.vertices.begin());
    };
    rep[find({0, 0})] = find(end_a);
    rep[find({1, 0})] = find(end_b);

    PlaneGraph glued;
    std::vector<std::size_t> renumber(cut.vertices.size(), cut.vertices.size());
    for (std::size_t v = 0; v < cut.vertices.size(); ++v) {
        if (rep[v] == v) {
            renumber[v] = glued.vertices.size();
            glued.vertices.push_back(cut.vertices[v]);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < cut.edges.size(); ++e) {
        std::size_t u = renumber[rep[cut.edges[e].first]];
        std::size_t v = renumber[rep[cut.edges[e].second]];
        if (u > v) {
            std::swap(u, v);
        }
        // The two copies of the glueing edge become one.
        if (std::find(seen.begin(), seen.end(), std::pair{u, v}) != seen.end()) {
            continue;
        }
        seen.emplace_back(u, v);
        glued.edges.emplace_back(u, v);
        glued.labels.push_back(cut.labels[e]);
    }
    return count_perfect_matchings_brute(glued);
}

std::string to_string(Side s) {
    switch (s) {
        case Side::south: return "S";
        case Side::west: return "W";
        case Side::north: return "N";
        case Side::east: return "E";
    }
    return "?";
}

}  // namespace snakecf
