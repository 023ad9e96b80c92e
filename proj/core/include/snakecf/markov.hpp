#pragma once

#include "snakecf/contfrac.hpp"
#include "snakecf/matchings.hpp"
#include "snakecf/palindrome.hpp"
#include "snakecf/snake.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace snakecf {

/// Unvalidated p/q with 0 <= p <= q. Farey parents may be the units 0/1
/// and 1/1.
struct Ratio {
    Coeff p = 0;
    Coeff q = 1;
    std::string to_string() const;
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// p/q with 0 < p < q and gcd(p, q) = 1.
class Slope {
public:
    /// Throws ErrorCode::invalid_slope.
    Slope(Coeff p, Coeff q);

    Coeff p() const noexcept { return p_; }
    Coeff q() const noexcept { return q_; }
    Ratio ratio() const noexcept { return {p_, q_}; }
    std::string to_string() const;

    /// Parses "p/q".
    static Slope parse(std::string_view text);

    friend bool operator==(const Slope&, const Slope&) = default;
    /// Orders by (q, p).
    friend auto operator<=>(const Slope& a, const Slope& b) {
        return std::pair{a.q_, a.p_} <=> std::pair{b.q_, b.p_};
    }

private:
    Coeff p_;
    Coeff q_;
};

class MarkovTriple {
public:
    /// Throws ErrorCode::construction unless x^2 + y^2 + z^2 = 3xyz.
    MarkovTriple(BigInt m1, BigInt m2, BigInt m3);

    const BigInt& operator[](std::size_t i) const { return m_.at(i); }
    const std::array<BigInt, 3>& values() const noexcept { return m_; }
    std::string to_string() const;

    friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;

private:
    std::array<BigInt, 3> m_;
};

bool satisfies_markov_equation(const BigInt& x, const BigInt& y, const BigInt& z);

struct ChristoffelWord {
    std::string letters;  // over {x, y}
    friend bool operator==(const ChristoffelWord&, const ChristoffelWord&) = default;
};

/// v_1 = floor(q/p), v_i = floor(iq/p) - (v_1 + ... + v_{i-1}),
/// v_p = q - 1 - (v_1 + ... + v_{p-1}).
std::vector<Coeff> v_sequence(const Slope& s);

/// [2, 1^{2(v_1-1)}, 2, 2, 1^{2(v_2-1)}, 2, ..., 2, 1^{2(v_p-1)}, 2].
PositiveCF markov_cf(const Slope& s);

BigInt markov_number(const Slope& s);
/// Also covers the units: m(0/1) = 1, m(1/1) = 2.
BigInt markov_number(const Ratio& r);

/// Lower Christoffel word; at (X, Y) step north iff (Y + 1) q <= p X.
ChristoffelWord christoffel_word(const Ratio& r);
ChristoffelWord christoffel_word(const Slope& s);

/// Half-size tiles along the Christoffel path without its first and last
/// half step. 2(p + q) - 3 tiles.
SnakeGraph christoffel_snake(const Slope& s);

/// Tile corners of christoffel_snake in half units; tile 1 is at (1, 0).
std::vector<TilePos> christoffel_tile_positions(const Slope& s);

/// The two fractions whose mediant is p/q, smaller one first.
std::pair<Ratio, Ratio> farey_parents(const Slope& s);

struct ChristoffelFactorization {
    TilePos lattice_point;  // (q_low, p_low)
    Ratio left;
    Ratio right;
    ChristoffelWord left_word;
    ChristoffelWord right_word;
};

/// Splits the word at the Farey-parent lattice point.
ChristoffelFactorization christoffel_factorize(const Slope& s);

/// Interior lattice point of the Christoffel path nearest to the segment,
/// found by direct search.
TilePos closest_path_point(const Slope& s);

/// (m(p/q), m(left parent), m(right parent)).
MarkovTriple markov_triple(const Slope& s);

/// Components of christoffel_snake(s) after deleting the tiles with a
/// corner at L (three tiles; two when the left parent is 0/1). An empty
/// component is the degenerate graph.
std::pair<SnakeGraph, SnakeGraph> split_at_L(const Slope& s);

/// Replaces entry i (0-based) by (m_j^2 + m_k^2) / m_i.
MarkovTriple mutate(const MarkovTriple& t, std::size_t i);

struct MarkovRow {
    Slope slope;
    BigInt markov;
};

/// All slopes with q <= max_q, sorted by (q, p).
std::vector<Slope> slopes_up_to(Coeff max_q);

/// slopes_up_to(max_q) with their Markov numbers; jobs > 1 fans out.
std::vector<MarkovRow> markov_tree(Coeff max_q, unsigned jobs = 1);

/// G+ = G[markov_cf ++ (2, 1)], G- = G[markov_cf without its first entry].
BandGraph band_graph(const Slope& s);

/// (a, b) with b/a the value of the second half of markov_cf.
SquarePair decomposition_pair(const Slope& s);

/// The slope whose markov_cf equals cf, if any.
std::optional<Slope> is_markov_cf(std::span<const Coeff> cf);

struct PairReport {
    SquarePair pair;
    PositiveCF cf;  // canonical CF of b/a
    bool digits_12 = false;   // D
    bool in_range = false;    // R: 2a <= b < 3a
    bool markov = false;      // M
};

struct ConjectureReport {
    Slope slope;
    BigInt markov;
    std::vector<PairReport> pairs;
    std::size_t count_d = 0;
    std::size_t count_m = 0;
    std::size_t count_dr = 0;
    std::size_t count_mr = 0;
    bool unique_d = false;  // exactly one D pair
    bool unique_m = false;  // exactly one M pair
    bool coincide = false;     // both unique and the same pair
};

inline const BigInt kDefaultSearchLimit{1'000'000'000'000};

/// Scans all coprime representations of m(s) as a^2 + b^2 and flags each.
/// Throws ErrorCode::size_guard when m(s) > search_limit.
ConjectureReport check_conjecture(const Slope& s, const BigInt& search_limit = kDefaultSearchLimit);

}  // namespace snakecf
