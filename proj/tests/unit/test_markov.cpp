#include "oracles.hpp"

#include <snakecf/error.hpp>
#include <snakecf/markov.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace snakecf;

namespace {

std::vector<std::pair<Coeff, Coeff>> runs_of(std::span<const Coeff> c) {
    std::vector<std::pair<Coeff, Coeff>> out;  // (value, length)
    for (Coeff a : c) {
        if (!out.empty() && out.back().first == a) {
            ++out.back().second;
        } else {
            out.emplace_back(a, 1);
        }
    }
    return out;
}

const std::vector<Slope>& small_slopes() {
    static const std::vector<Slope> s = slopes_up_to(30);
    return s;
}

}  // namespace

TEST(Slope, Validation) {
    EXPECT_NO_THROW(Slope(3, 7));
    for (auto [p, q] : std::vector<std::pair<Coeff, Coeff>>{{0, 1}, {1, 1}, {2, 4}, {5, 3}, {-1, 3}}) {
        try {
            Slope s(p, q);
            FAIL() << p << "/" << q;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::invalid_slope);
        }
    }
    EXPECT_EQ(Slope::parse("3/7"), Slope(3, 7));
    EXPECT_THROW((void)Slope::parse("3-7"), Error);
    EXPECT_LT(Slope(2, 3), Slope(1, 4));
}

TEST(Markov, VSequenceExamples) {
    EXPECT_EQ(v_sequence(Slope(3, 7)), (std::vector<Coeff>{2, 2, 2}));
    EXPECT_EQ(v_sequence(Slope(1, 2)), (std::vector<Coeff>{1}));
    EXPECT_EQ(v_sequence(Slope(2, 5)), (std::vector<Coeff>{2, 2}));
}

TEST(Markov, CFExamples) {
    EXPECT_EQ(markov_cf(Slope(3, 7)), (PositiveCF{2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2}));
    EXPECT_EQ(markov_cf(Slope(1, 2)), (PositiveCF{2, 2}));
    EXPECT_EQ(markov_cf(Slope(2, 3)), (PositiveCF{2, 2, 2, 2}));
}

TEST(Markov, NumberExamples) {
    EXPECT_EQ(markov_number(Slope(3, 7)), 2897);
    EXPECT_EQ(evaluate(markov_cf(Slope(3, 7))), Fraction(2897, 1120));
    EXPECT_EQ(markov_number(Slope(1, 2)), 5);
    EXPECT_EQ(markov_number(Slope(2, 5)), 194);
    EXPECT_EQ(markov_number(Ratio{0, 1}), 1);
    EXPECT_EQ(markov_number(Ratio{1, 1}), 2);
}

TEST(Markov, ChristoffelWords) {
    EXPECT_EQ(christoffel_word(Slope(3, 7)).letters, "xxxyxxyxxy");
    EXPECT_EQ(christoffel_word(Slope(1, 2)).letters, "xxy");
    EXPECT_EQ(christoffel_word(Slope(2, 5)).letters, "xxxyxxy");
    EXPECT_EQ(christoffel_word(Ratio{0, 1}).letters, "x");
    EXPECT_EQ(christoffel_word(Ratio{1, 1}).letters, "xy");
}

TEST(Markov, ChristoffelWordStaysBelowLine) {
    for (const Slope& s : small_slopes()) {
        const std::string w = christoffel_word(s).letters;
        ASSERT_EQ(static_cast<Coeff>(w.size()), s.p() + s.q());
        Coeff x = 0;
        Coeff y = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            (w[i] == 'x' ? x : y) += 1;
            // Weakly below, and no interior lattice point on the segment.
            ASSERT_LE(y * s.q(), s.p() * x);
            if (i + 1 < w.size()) {
                ASSERT_LT(y * s.q(), s.p() * x);
            }
        }
    }
}

TEST(Markov, ChristoffelSnakeExamples) {
    EXPECT_EQ(christoffel_snake(Slope(3, 7)).tile_count(), 17U);
    EXPECT_EQ(christoffel_snake(Slope(3, 7)), from_cf(markov_cf(Slope(3, 7))));
    EXPECT_EQ(christoffel_snake(Slope(1, 2)), from_cf({2, 2}));
    EXPECT_EQ(christoffel_snake(Slope(2, 5)), from_cf({2, 1, 1, 2, 2, 1, 1, 2}));
    const auto pos = christoffel_tile_positions(Slope(1, 2));
    ASSERT_EQ(pos.size(), 3U);
    EXPECT_EQ(pos.front(), (TilePos{1, 0}));
}

TEST(Markov, StructureUpTo30) {
    for (const Slope& s : small_slopes()) {
        const PositiveCF cf = markov_cf(s);
        ASSERT_EQ(cf.size() % 2, 0U);
        ASSERT_TRUE(cf.is_palindrome());
        const auto twos = std::count(cf.coeffs().begin(), cf.coeffs().end(), 2);
        const auto ones = std::count(cf.coeffs().begin(), cf.coeffs().end(), 1);
        ASSERT_EQ(twos, 2 * s.p());
        ASSERT_EQ(ones, 2 * (s.q() - s.p() - 1));
        ASSERT_EQ(cf.sum(), 2 * s.p() + 2 * s.q() - 2);
        const SnakeGraph sg = christoffel_snake(s);
        ASSERT_EQ(static_cast<Coeff>(sg.tile_count()), 2 * s.p() + 2 * s.q() - 3);
        ASSERT_EQ(sg.steps().size(), from_cf(cf).steps().size());
        ASSERT_EQ(sg, from_cf(cf)) << s.to_string();
        ASSERT_TRUE(has_center_symmetry(sg)) << s.to_string();
        ASSERT_EQ(count_matchings(sg), markov_number(s));
    }
}

TEST(Markov, RunShapeUpTo30) {
    for (const Slope& s : small_slopes()) {
        const PositiveCF cf = markov_cf(s);
        ASSERT_EQ(cf.back(), 2);
        for (Coeff a : cf.coeffs()) {
            ASSERT_TRUE(a == 1 || a == 2);
        }
        const auto runs = runs_of(cf.coeffs());
        if (s.p() + 1 == s.q()) {
            ASSERT_EQ(runs.size(), 1U);
            ASSERT_EQ(static_cast<Coeff>(cf.size()), 2 * s.p());
            continue;
        }
        Coeff c = 1;
        while (!((c - 1) * s.q() < c * s.p() && s.p() * (c + 1) < c * s.q())) {
            ++c;
            ASSERT_LT(c, s.q());
        }
        std::vector<Coeff> two_runs;
        std::vector<Coeff> one_runs;
        for (auto [v, len] : runs) {
            (v == 2 ? two_runs : one_runs).push_back(len);
        }
        ASSERT_LE(static_cast<Coeff>(two_runs.size()), s.p() + 1);
        ASSERT_LE(static_cast<Coeff>(one_runs.size()), s.p());
        ASSERT_EQ(two_runs.front(), 2 * c - 1) << s.to_string();
        ASSERT_EQ(two_runs.back(), 2 * c - 1);
        for (std::size_t i = 1; i + 1 < two_runs.size(); ++i) {
            // Observed interior lengths are 2c - 2 and 2c.
            ASSERT_TRUE(two_runs[i] == 2 * c - 2 || two_runs[i] == 2 * c) << s.to_string();
        }
        const auto [lo, hi] = std::minmax_element(one_runs.begin(), one_runs.end());
        ASSERT_LE(*hi - *lo, 2);
        for (Coeff len : one_runs) {
            ASSERT_EQ(len % 2, 0);
        }
    }
}

TEST(Markov, InjectiveUpTo30) {
    std::set<PositiveCF> seen;
    for (const Slope& s : small_slopes()) {
        ASSERT_TRUE(seen.insert(markov_cf(s)).second);
    }
}

TEST(Markov, PrefixesBySlopeBand) {
    auto starts_with = [](const PositiveCF& cf, std::vector<Coeff> head) {
        return cf.size() >= head.size() &&
               std::equal(head.begin(), head.end(), cf.coeffs().begin());
    };
    for (const Slope& s : small_slopes()) {
        const PositiveCF cf = markov_cf(s);
        const Coeff p = s.p();
        const Coeff q = s.q();
        if (2 * p < q) {
            ASSERT_TRUE(starts_with(cf, {2, 1, 1}));
        } else if (3 * p < 2 * q && 2 * p > q) {
            ASSERT_TRUE(starts_with(cf, {2, 2, 2, 1, 1}));
        } else if (4 * p < 3 * q && 3 * p > 2 * q) {
            ASSERT_TRUE(starts_with(cf, {2, 2, 2, 2, 2, 1, 1}));
        } else if (5 * p < 4 * q && 4 * p > 3 * q) {
            ASSERT_TRUE(starts_with(cf, {2, 2, 2, 2, 2, 2, 2, 1, 1}));
        }
    }
    EXPECT_EQ(markov_cf(Slope(3, 4)), (PositiveCF{2, 2, 2, 2, 2, 2}));
}

TEST(Markov, FibonacciAndPell) {
    EXPECT_EQ(markov_number(Slope(1, 2)), 5);
    EXPECT_EQ(markov_number(Slope(1, 3)), 13);
    EXPECT_EQ(markov_number(Slope(1, 4)), 34);
    EXPECT_EQ(markov_number(Slope(2, 3)), 29);
    EXPECT_EQ(markov_number(Slope(3, 4)), 169);
    // Every other Fibonacci number along 1/q.
    BigInt f0 = 1;
    BigInt f1 = 2;
    for (Coeff q = 2; q <= 20; ++q) {
        const BigInt f2 = f0 + f1;
        const BigInt f3 = f1 + f2;
        ASSERT_EQ(markov_number(Slope(1, q)), f3) << q;
        f0 = f2;
        f1 = f3;
    }
}

TEST(Markov, Factorization) {
    const auto f = christoffel_factorize(Slope(3, 7));
    EXPECT_EQ(f.lattice_point, (TilePos{5, 2}));
    EXPECT_EQ(f.left_word.letters, "xxxyxxy");
    EXPECT_EQ(f.right_word.letters, "xxy");
    EXPECT_EQ(f.left, (Ratio{2, 5}));
    EXPECT_EQ(f.right, (Ratio{1, 2}));
    const auto g = christoffel_factorize(Slope(1, 2));
    EXPECT_EQ(g.lattice_point, (TilePos{1, 0}));
    EXPECT_EQ(g.left_word.letters, "x");
    EXPECT_EQ(g.right_word.letters, "xy");
    const auto h = christoffel_factorize(Slope(2, 5));
    EXPECT_EQ(h.lattice_point, (TilePos{3, 1}));
    EXPECT_EQ(h.left_word.letters + "|" + h.right_word.letters, "xxxy|xxy");
}

TEST(Markov, FactorizationUpTo30) {
    for (const Slope& s : small_slopes()) {
        const auto f = christoffel_factorize(s);
        ASSERT_EQ(f.left_word.letters + f.right_word.letters, christoffel_word(s).letters);
        ASSERT_EQ(f.lattice_point, closest_path_point(s)) << s.to_string();
        ASSERT_EQ(s.p() * f.left.q - s.q() * f.left.p, 1);
        ASSERT_EQ(f.left.p + f.right.p, s.p());
        ASSERT_EQ(f.left.q + f.right.q, s.q());
    }
}

TEST(Markov, TriplesAndSplit) {
    EXPECT_EQ(markov_triple(Slope(3, 7)), MarkovTriple(2897, 194, 5));
    EXPECT_EQ(markov_triple(Slope(1, 2)), MarkovTriple(5, 1, 2));
    EXPECT_EQ(markov_triple(Slope(2, 5)), MarkovTriple(194, 13, 5));
    const auto expect_split = [](Slope s, int a, int b) {
        const auto [l, r] = split_at_L(s);
        EXPECT_EQ(count_matchings(l), a) << s.to_string();
        EXPECT_EQ(count_matchings(r), b) << s.to_string();
    };
    expect_split(Slope(3, 7), 194, 5);
    expect_split(Slope(2, 5), 13, 5);
    expect_split(Slope(1, 2), 1, 2);
    EXPECT_TRUE(split_at_L(Slope(1, 2)).first.is_degenerate());
    EXPECT_THROW(MarkovTriple(1, 2, 3), Error);
}

TEST(Markov, TriplesUpTo30) {
    for (const Slope& s : small_slopes()) {
        const MarkovTriple t = markov_triple(s);
        ASSERT_TRUE(satisfies_markov_equation(t[0], t[1], t[2]));
        const auto [l, r] = split_at_L(s);
        ASSERT_EQ(count_matchings(l), t[1]) << s.to_string();
        ASSERT_EQ(count_matchings(r), t[2]) << s.to_string();
        const Coeff removed = static_cast<Coeff>(christoffel_snake(s).tile_count() -
                                                 l.tile_count() - r.tile_count());
        ASSERT_EQ(removed, farey_parents(s).first.p == 0 ? 2 : 3);
        // 3m scaling lands on x^2 + y^2 + z^2 = xyz.
        const BigInt x = 3 * t[0];
        const BigInt y = 3 * t[1];
        const BigInt z = 3 * t[2];
        ASSERT_EQ(x * x + y * y + z * z, x * y * z);
    }
}

TEST(Markov, MutateExamples) {
    EXPECT_EQ(mutate(MarkovTriple(2897, 194, 5), 0), MarkovTriple(13, 194, 5));
    EXPECT_EQ(mutate(MarkovTriple(1, 1, 1), 0), MarkovTriple(2, 1, 1));
    EXPECT_EQ(mutate(MarkovTriple(2, 5, 1), 2), MarkovTriple(2, 5, 29));
    EXPECT_THROW((void)mutate(MarkovTriple(1, 1, 1), 3), Error);
}

TEST(Markov, MutateIsInvolution) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    MarkovTriple t(1, 1, 1);
    std::size_t last = 3;
    for (int step = 0; step < 10000; ++step) {
        std::size_t i = pick(rng);
        if (i == last) {
            i = (i + 1) % 3;
        }
        const MarkovTriple next = mutate(t, i);
        ASSERT_EQ(mutate(next, i), t);
        ASSERT_TRUE(satisfies_markov_equation(next[0], next[1], next[2]));
        t = next;
        last = i;
        // Digit counts grow like Fibonacci numbers; restart every 12 steps.
        if (step % 12 == 11) {
            t = MarkovTriple(1, 1, 1);
            last = 3;
        }
    }
}

TEST(Markov, BandUpTo30) {
    const BandGraph bg = band_graph(Slope(1, 2));
    EXPECT_EQ(count_matchings(bg.plus_graph), 17);
    EXPECT_EQ(count_matchings(bg.minus_graph), 2);
    EXPECT_EQ(count_matchings_band(bg), 15);
    EXPECT_EQ(count_matchings_band(band_graph(Slope(2, 5))), 582);
    EXPECT_EQ(count_matchings_band(band_graph(Slope(3, 7))), 8691);
    for (const Slope& s : small_slopes()) {
        ASSERT_EQ(count_matchings_band(band_graph(s)), 3 * markov_number(s)) << s.to_string();
    }
}

TEST(Markov, DecompositionPairs) {
    EXPECT_EQ(decomposition_pair(Slope(1, 2)), (SquarePair{1, 2}));
    EXPECT_EQ(decomposition_pair(Slope(2, 5)), (SquarePair{5, 13}));
    EXPECT_EQ(decomposition_pair(Slope(3, 7)), (SquarePair{31, 44}));
    for (const Slope& s : small_slopes()) {
        const SquarePair sp = decomposition_pair(s);
        ASSERT_EQ(sp.a * sp.a + sp.b * sp.b, markov_number(s));
    }
}

TEST(Markov, IsMarkovCF) {
    const std::vector<Coeff> a{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2};
    EXPECT_EQ(is_markov_cf(a), Slope(1, 7));
    const std::vector<Coeff> b{4, 1, 1, 2, 2, 1, 1, 4};
    EXPECT_FALSE(is_markov_cf(b).has_value());
    const std::vector<Coeff> c{2, 2};
    EXPECT_EQ(is_markov_cf(c), Slope(1, 2));
    for (const Slope& s : small_slopes()) {
        ASSERT_EQ(is_markov_cf(markov_cf(s).coeffs()), s);
    }
}

TEST(Conjecture, Examples) {
    const ConjectureReport r5 = check_conjecture(Slope(1, 2));
    ASSERT_EQ(r5.pairs.size(), 1U);
    EXPECT_TRUE(r5.pairs[0].digits_12 && r5.pairs[0].markov && r5.pairs[0].in_range);
    EXPECT_TRUE(r5.unique_d && r5.unique_m && r5.coincide);

    const ConjectureReport r610 = check_conjecture(Slope(1, 7));
    EXPECT_EQ(r610.markov, 610);
    ASSERT_EQ(r610.pairs.size(), 2U);
    EXPECT_EQ(r610.pairs[0].pair, (SquarePair{9, 23}));
    EXPECT_EQ(r610.pairs[0].cf, (PositiveCF{2, 1, 1, 4}));
    EXPECT_FALSE(r610.pairs[0].digits_12);
    EXPECT_FALSE(r610.pairs[0].markov);
    EXPECT_TRUE(r610.pairs[0].in_range);
    EXPECT_EQ(r610.pairs[1].pair, (SquarePair{13, 21}));
    EXPECT_TRUE(r610.pairs[1].digits_12);
    EXPECT_TRUE(r610.pairs[1].markov);
    EXPECT_FALSE(r610.pairs[1].in_range);
    EXPECT_EQ(r610.count_mr, 0U);
    EXPECT_TRUE(r610.coincide);

    const ConjectureReport r2897 = check_conjecture(Slope(3, 7));
    ASSERT_EQ(r2897.pairs.size(), 1U);
    EXPECT_EQ(r2897.pairs[0].pair, (SquarePair{31, 44}));
    EXPECT_TRUE(r2897.coincide);

    try {
        (void)check_conjecture(Slope(3, 7), 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::size_guard);
    }
}

TEST(Tree, RowsAndOrdering) {
    const auto two = markov_tree(2);
    ASSERT_EQ(two.size(), 1U);
    EXPECT_EQ(two[0].markov, 5);
    const auto three = markov_tree(3);
    ASSERT_EQ(three.size(), 3U);
    EXPECT_EQ(three[1].slope, Slope(1, 3));
    EXPECT_EQ(three[1].markov, 13);
    EXPECT_EQ(three[2].markov, 29);
    EXPECT_THROW((void)slopes_up_to(1), Error);
}

TEST(Tree, FullSweepCount) {
    const auto serial = markov_tree(69);
    EXPECT_EQ(serial.size(), 1469U);
    const auto rows = markov_tree(70, 4);
    ASSERT_EQ(rows.size(), 1493U);
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                               [](const MarkovRow& a, const MarkovRow& b) { return a.slope < b.slope; }));
    for (std::size_t i = 0; i < serial.size(); ++i) {
        ASSERT_EQ(rows[i].slope, serial[i].slope);
        ASSERT_EQ(rows[i].markov, serial[i].markov);
    }
    BigInt best = 0;
    for (const MarkovRow& r : rows) {
        best = std::max(best, r.markov);
    }
    EXPECT_EQ(best.str(), "56790444570379838361685067712119508786523129590198509");
}
