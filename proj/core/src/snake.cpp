#include "snakecf/snake.hpp"

#include "snakecf/error.hpp"

#include <algorithm>

namespace snakecf {

// ---------------------------------------------------------------------------
// SignSequence

SignSequence::SignSequence(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) {
        throw Error(ErrorCode::domain, "sign sequence must be nonempty");
    }
    if (signs_.front() != Sign::minus) {
        throw Error(ErrorCode::domain, "sign sequence must start with '-'");
    }
}

SignSequence SignSequence::from_runs(std::span<const Coeff> runs) {
    std::vector<Sign> signs;
    Sign current = Sign::minus;
    for (Coeff run : runs) {
        if (run < 1) {
            throw Error(ErrorCode::domain, "sign runs must be positive");
        }
        signs.insert(signs.end(), static_cast<std::size_t>(run), current);
        current = flip(current);
    }
    return SignSequence(std::move(signs));
}

std::vector<Coeff> SignSequence::runs() const {
    std::vector<Coeff> out{1};
    for (std::size_t i = 1; i < signs_.size(); ++i) {
        if (signs_[i] == signs_[i - 1]) {
            ++out.back();
        } else {
            out.push_back(1);
        }
    }
    return out;
}

std::vector<std::size_t> SignSequence::sign_change_tiles() const {
    std::vector<std::size_t> out;
    // Tile d is excluded: its second sign f(e_d) depends on the edge choice.
    for (std::size_t i = 1; i + 1 < signs_.size(); ++i) {
        if (signs_[i] != signs_[i - 1]) {
            out.push_back(i);
        }
    }
    return out;
}

std::string SignSequence::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) {
        out += s == Sign::minus ? '-' : '+';
    }
    return out;
}

// ---------------------------------------------------------------------------
// SnakeGraph

SnakeGraph SnakeGraph::degenerate() { return SnakeGraph(true, {}); }

SnakeGraph SnakeGraph::from_steps(std::vector<Step> steps) {
    return SnakeGraph(false, std::move(steps));
}

SnakeGraph SnakeGraph::parse(std::string_view text) {
    if (text == "-") {
        return degenerate();
    }
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'E': case 'e': steps.push_back(Step::east); break;
            case 'N': case 'n': steps.push_back(Step::north); break;
            default:
                throw Error(ErrorCode::domain,
                            "step strings use E and N only, got '" + std::string(text) + "'");
        }
    }
    return from_steps(std::move(steps));
}

Step SnakeGraph::entry_direction(std::size_t tile) const {
    if (tile < 1 || tile > tile_count()) {
        throw Error(ErrorCode::out_of_range, "tile index out of range");
    }
    return tile == 1 ? Step::north : steps_[tile - 2];
}

bool SnakeGraph::is_straight_at(std::size_t tile) const {
    if (tile < 1 || tile >= tile_count()) {
        throw Error(ErrorCode::out_of_range, "tile has no successor");
    }
    return entry_direction(tile) == steps_[tile - 1];
}

std::vector<TilePos> SnakeGraph::tiles() const {
    std::vector<TilePos> out;
    if (degenerate_) {
        return out;
    }
    out.reserve(steps_.size() + 1);
    TilePos pos;
    out.push_back(pos);
    for (Step s : steps_) {
        if (s == Step::east) {
            ++pos.x;
        } else {
            ++pos.y;
        }
        out.push_back(pos);
    }
    return out;
}

std::string SnakeGraph::to_string() const {
    if (degenerate_) {
        return "-";
    }
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) {
        out += s == Step::east ? 'E' : 'N';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction

SnakeGraph from_signs(const SignSequence& signs) {
    const auto s = signs.signs();
    if (s.size() == 1) {
        return SnakeGraph::degenerate();
    }
    const std::size_t d = s.size() - 1;
    std::vector<Step> steps;
    steps.reserve(d - 1);
    Step direction = Step::north;  // tile 1 is entered through its south edge
    for (std::size_t i = 1; i < d; ++i) {
        // Equal signs on the entry and exit edges of tile i mean a bend.
        if (s[i - 1] == s[i]) {
            direction = turn(direction);
        }
        steps.push_back(direction);
    }
    return SnakeGraph::from_steps(std::move(steps));
}

SnakeGraph from_runs(std::span<const Coeff> runs) {
    if (runs.empty()) {
        return SnakeGraph::degenerate();
    }
    return from_signs(SignSequence::from_runs(runs));
}

SnakeGraph from_cf(const PositiveCF& cf) { return from_runs(cf.coeffs()); }

SignSequence sign_sequence(const SnakeGraph& sg, EdgeChoice choice) {
    if (sg.is_degenerate()) {
        return SignSequence({Sign::minus});
    }
    const std::size_t d = sg.tile_count();
    std::vector<Sign> signs;
    signs.reserve(d + 1);
    signs.push_back(Sign::minus);
    for (std::size_t i = 1; i < d; ++i) {
        signs.push_back(sg.is_straight_at(i) ? flip(signs.back()) : signs.back());
    }
    const Step exit = choice == EdgeChoice::north ? Step::north : Step::east;
    signs.push_back(exit == sg.entry_direction(d) ? flip(signs.back()) : signs.back());
    return SignSequence(std::move(signs));
}

EdgeChoice canonical_choice(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        return EdgeChoice::east;
    }
    // Bending out of the last tile repeats the last sign and extends the run.
    return sg.entry_direction(sg.tile_count()) == Step::north ? EdgeChoice::east
                                                              : EdgeChoice::north;
}

PositiveCF to_cf(const SnakeGraph& sg, EdgeChoice choice) {
    if (sg.is_degenerate()) {
        return PositiveCF{1};
    }
    return PositiveCF(sign_sequence(sg, choice).runs());
}

PositiveCF to_cf(const SnakeGraph& sg) { return to_cf(sg, canonical_choice(sg)); }

// ---------------------------------------------------------------------------
// Symmetries

SnakeGraph rotate180(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        return sg;
    }
    std::vector<Step> steps(sg.steps().rbegin(), sg.steps().rend());
    return SnakeGraph::from_steps(std::move(steps));
}

SnakeGraph flip_diag(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        return sg;
    }
    std::vector<Step> steps;
    steps.reserve(sg.steps().size());
    for (Step s : sg.steps()) {
        steps.push_back(turn(s));
    }
    return SnakeGraph::from_steps(std::move(steps));
}

SnakeGraph flip_antidiag(const SnakeGraph& sg) { return rotate180(flip_diag(sg)); }

bool is_isomorphic(const SnakeGraph& a, const SnakeGraph& b) {
    return a == b || a == rotate180(b) || a == flip_diag(b) || a == flip_antidiag(b);
}

bool has_center_symmetry(const SnakeGraph& sg) {
    if (sg.is_degenerate()) {
        throw Error(ErrorCode::domain, "center symmetry needs at least one tile");
    }
    const auto steps = sg.steps();
    return sg.tile_count() % 2 == 1 && std::equal(steps.begin(), steps.end(), steps.rbegin());
}

SnakeGraph palindromify_graph(const PositiveCF& cf) { return from_cf(palindromify(cf)); }

// ---------------------------------------------------------------------------
// Segments

SnakeGraph prefix(const SnakeGraph& sg, std::size_t k) {
    if (k > sg.tile_count()) {
        throw Error(ErrorCode::out_of_range, "prefix length exceeds tile count");
    }
    if (k == 0) {
        return SnakeGraph::degenerate();
    }
    return SnakeGraph::from_steps({sg.steps().begin(), sg.steps().begin() + (k - 1)});
}

SnakeGraph drop_first_tiles(const SnakeGraph& sg, std::size_t k) {
    const std::size_t d = sg.tile_count();
    if (k > d) {
        throw Error(ErrorCode::out_of_range, "cannot drop more tiles than the graph has");
    }
    if (k == 0) {
        return sg;
    }
    if (k == d) {
        return SnakeGraph::degenerate();
    }
    return SnakeGraph::from_steps({sg.steps().begin() + k, sg.steps().end()});
}

std::string to_string(Step s) { return s == Step::east ? "E" : "N"; }

std::string to_string(EdgeChoice c) { return c == EdgeChoice::north ? "north" : "east"; }

}  // namespace snakecf
