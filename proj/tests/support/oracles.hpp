// Independent reference implementations used only by the tests.
#pragma once

#include <snakecf/contfrac.hpp>
#include <snakecf/snake.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace snakecf::oracle {

/// Every sequence of positive integers with sum exactly n.
inline std::vector<std::vector<Coeff>> compositions(Coeff n) {
    std::vector<std::vector<Coeff>> out;
    std::vector<Coeff> current;
    std::function<void(Coeff)> rec = [&](Coeff left) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (Coeff a = 1; a <= left; ++a) {
            current.push_back(a);
            rec(left - a);
            current.pop_back();
        }
    };
    rec(n);
    return out;
}

/// All compositions with 1 <= sum <= max_sum.
inline std::vector<std::vector<Coeff>> compositions_up_to(Coeff max_sum) {
    std::vector<std::vector<Coeff>> out;
    for (Coeff n = 1; n <= max_sum; ++n) {
        auto part = compositions(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline bool is_canonical(const std::vector<Coeff>& c) {
    return c.back() >= 2 || c.size() == 1;
}

inline std::vector<PositiveCF> canonical_cfs_up_to(Coeff max_sum) {
    std::vector<PositiveCF> out;
    for (auto& c : compositions_up_to(max_sum)) {
        if (is_canonical(c)) {
            out.emplace_back(std::move(c));
        }
    }
    return out;
}

/// a_1 + 1/(a_2 + 1/(...)) with rational arithmetic from the inside out.
inline Fraction nested_value(std::span<const Coeff> c) {
    Fraction v(c.back());
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        v = Fraction(*it) + v.reciprocal();
    }
    return v;
}

inline Fraction nested_value(const PositiveCF& cf) { return nested_value(cf.coeffs()); }

/// Perfect matchings of the union of unit squares at the given corners,
/// counted by memoized recursion on the set of covered vertices.
inline std::uint64_t matching_count(const std::vector<TilePos>& tiles) {
    using Point = std::pair<std::int64_t, std::int64_t>;
    std::set<std::pair<Point, Point>> edges;
    for (const TilePos& t : tiles) {
        const Point a{t.x, t.y}, b{t.x + 1, t.y}, c{t.x, t.y + 1}, d{t.x + 1, t.y + 1};
        edges.insert({a, b});
        edges.insert({c, d});
        edges.insert({a, c});
        edges.insert({b, d});
    }
    std::vector<Point> points;
    for (const auto& [u, v] : edges) {
        points.push_back(u);
        points.push_back(v);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto index = [&](const Point& p) {
        return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), p) -
                                        points.begin());
    };
    std::vector<std::vector<std::size_t>> adj(points.size());
    for (const auto& [u, v] : edges) {
        adj[index(u)].push_back(index(v));
        adj[index(v)].push_back(index(u));
    }
    const std::size_t n = points.size();
    std::map<std::uint64_t, std::uint64_t> memo;
    std::function<std::uint64_t(std::uint64_t)> count = [&](std::uint64_t used) -> std::uint64_t {
        std::size_t v = 0;
        while (v < n && ((used >> v) & 1U) != 0) {
            ++v;
        }
        if (v == n) {
            return 1;
        }
        if (auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        std::uint64_t total = 0;
        for (std::size_t w : adj[v]) {
            if (((used >> w) & 1U) == 0) {
                total += count(used | (std::uint64_t{1} << v) | (std::uint64_t{1} << w));
            }
        }
        memo[used] = total;
        return total;
    };
    return count(0);
}

/// Single-edge graph counts 1.
inline std::uint64_t matching_count(const SnakeGraph& sg) {
    return sg.is_degenerate() ? 1 : matching_count(sg.tiles());
}

}  // namespace snakecf::oracle
