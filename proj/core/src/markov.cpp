#include "snakecf/markov.hpp"

#include "snakecf/error.hpp"
#include "snakecf/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace snakecf {

std::string Ratio::to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

Slope::Slope(Coeff p, Coeff q) : p_(p), q_(q) {
    if (p <= 0 || q <= p || std::gcd(p, q) != 1) {
        throw Error(ErrorCode::invalid_slope, "slope needs 0 < p < q with gcd(p, q) = 1, got " +
                                                  std::to_string(p) + "/" + std::to_string(q));
    }
}

std::string Slope::to_string() const { return ratio().to_string(); }

Slope Slope::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto number = [&](std::string_view part) {
        Coeff v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw Error(ErrorCode::invalid_slope, "cannot parse slope '" + std::string(text) + "'");
        }
        return v;
    };
    if (slash == std::string_view::npos) {
        throw Error(ErrorCode::invalid_slope, "slope must be written p/q, got '" +
                                                  std::string(text) + "'");
    }
    return Slope(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

bool satisfies_markov_equation(const BigInt& x, const BigInt& y, const BigInt& z) {
    return x * x + y * y + z * z == 3 * x * y * z;
}

MarkovTriple::MarkovTriple(BigInt m1, BigInt m2, BigInt m3)
    : m_{std::move(m1), std::move(m2), std::move(m3)} {
    if (m_[0] < 1 || m_[1] < 1 || m_[2] < 1 || !satisfies_markov_equation(m_[0], m_[1], m_[2])) {
        throw Error(ErrorCode::construction, "not a Markov triple: " + to_string());
    }
}

std::string MarkovTriple::to_string() const {
    return "(" + m_[0].str() + "," + m_[1].str() + "," + m_[2].str() + ")";
}

std::vector<Coeff> v_sequence(const Slope& s) {
    const Coeff p = s.p();
    const Coeff q = s.q();
    if (p == 1) {
        return {q - 1};
    }
    std::vector<Coeff> v;
    v.reserve(static_cast<std::size_t>(p));
    Coeff sum = 0;
    for (Coeff i = 1; i < p; ++i) {
        v.push_back(i * q / p - sum);
        sum += v.back();
    }
    v.push_back(q - 1 - sum);
    return v;
}

PositiveCF markov_cf(const Slope& s) {
    std::vector<Coeff> out;
    out.reserve(static_cast<std::size_t>(2 * s.q() - 2));
    for (Coeff v : v_sequence(s)) {
        out.push_back(2);
        out.insert(out.end(), static_cast<std::size_t>(2 * (v - 1)), 1);
        out.push_back(2);
    }
    return PositiveCF(std::move(out));
}

BigInt markov_number(const Slope& s) { return numerator(markov_cf(s)); }

BigInt markov_number(const Ratio& r) {
    if (r == Ratio{0, 1}) {
        return 1;
    }
    if (r == Ratio{1, 1}) {
        return 2;
    }
    return markov_number(Slope(r.p, r.q));
}

ChristoffelWord christoffel_word(const Ratio& r) {
    if (r.q < 1 || r.p < 0 || r.p > r.q || std::gcd(r.p, r.q) != 1) {
        throw Error(ErrorCode::invalid_slope, "no Christoffel word for " + r.to_string());
    }
    ChristoffelWord w;
    w.letters.reserve(static_cast<std::size_t>(r.p + r.q));
    Coeff x = 0;
    Coeff y = 0;
    while (x < r.q || y < r.p) {
        if ((y + 1) * r.q <= r.p * x) {
            w.letters += 'y';
            ++y;
        } else {
            w.letters += 'x';
            ++x;
        }
    }
    return w;
}

ChristoffelWord christoffel_word(const Slope& s) { return christoffel_word(s.ratio()); }

namespace {

std::vector<Step> christoffel_steps(const Slope& s) {
    const std::string& word = christoffel_word(s).letters;
    std::vector<Step> half;
    half.reserve(2 * word.size());
    for (char c : word) {
        const Step step = c == 'x' ? Step::east : Step::north;
        half.push_back(step);
        half.push_back(step);
    }
    // Dropping the first and last half step leaves the boundary E, sigma, N;
    // sigma is the tile step sequence.
    return {half.begin() + 2, half.end() - 2};
}

}  // namespace

SnakeGraph christoffel_snake(const Slope& s) {
    return SnakeGraph::from_steps(christoffel_steps(s));
}

std::vector<TilePos> christoffel_tile_positions(const Slope& s) {
    std::vector<TilePos> out = christoffel_snake(s).tiles();
    for (TilePos& t : out) {
        t.x += 1;
    }
    return out;
}

std::pair<Ratio, Ratio> farey_parents(const Slope& s) {
    const Coeff p = s.p();
    const Coeff q = s.q();
    // Left parent a/b: p b - q a = 1 with 0 < b <= q.
    for (Coeff b = 1; b <= q; ++b) {
        if ((p * b - 1) % q == 0) {
            const Coeff a = (p * b - 1) / q;
            return {Ratio{a, b}, Ratio{p - a, q - b}};
        }
    }
    throw Error(ErrorCode::construction, "no Farey parents for " + s.to_string());
}

ChristoffelFactorization christoffel_factorize(const Slope& s) {
    const auto [left, right] = farey_parents(s);
    ChristoffelFactorization f{TilePos{left.q, left.p}, left, right, christoffel_word(left),
                               christoffel_word(right)};
    if (f.left_word.letters + f.right_word.letters != christoffel_word(s).letters) {
        throw Error(ErrorCode::construction, "Christoffel factorization failed for " +
                                                 s.to_string());
    }
    return f;
}

TilePos closest_path_point(const Slope& s) {
    const std::string& word = christoffel_word(s).letters;
    TilePos best{};
    Coeff best_gap = 0;
    TilePos pos{};
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == 'x') {
            ++pos.x;
        } else {
            ++pos.y;
        }
        // q * (vertical distance to the segment), never negative on this path.
        const Coeff gap = s.p() * pos.x - s.q() * pos.y;
        if (best_gap == 0 || gap < best_gap) {
            best = pos;
            best_gap = gap;
        }
    }
    return best;
}

MarkovTriple markov_triple(const Slope& s) {
    const auto [left, right] = farey_parents(s);
    return MarkovTriple(markov_number(s), markov_number(left), markov_number(right));
}

std::pair<SnakeGraph, SnakeGraph> split_at_L(const Slope& s) {
    const SnakeGraph sg = christoffel_snake(s);
    const auto tiles = christoffel_tile_positions(s);
    const TilePos l = christoffel_factorize(s).lattice_point;
    const TilePos corner{2 * l.x, 2 * l.y};

    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const TilePos t = tiles[i];
        if ((t.x == corner.x || t.x + 1 == corner.x) && (t.y == corner.y || t.y + 1 == corner.y)) {
            hit.push_back(i + 1);
        }
    }
    if (hit.empty() || hit.back() - hit.front() + 1 != hit.size()) {
        throw Error(ErrorCode::construction, "tiles around L are not consecutive for " +
                                                 s.to_string());
    }
    return {prefix(sg, hit.front() - 1), drop_first_tiles(sg, hit.back())};
}

MarkovTriple mutate(const MarkovTriple& t, std::size_t i) {
    if (i > 2) {
        throw Error(ErrorCode::out_of_range, "mutation index must be 0, 1 or 2");
    }
    const BigInt& mj = t[(i + 1) % 3];
    const BigInt& mk = t[(i + 2) % 3];
    const BigInt top = mj * mj + mk * mk;
    if (top % t[i] != 0) {
        throw Error(ErrorCode::construction, "inexact mutation of " + t.to_string());
    }
    std::array<BigInt, 3> next = t.values();
    next[i] = top / t[i];
    return MarkovTriple(next[0], next[1], next[2]);
}

std::vector<Slope> slopes_up_to(Coeff max_q) {
    if (max_q < 2) {
        throw Error(ErrorCode::domain, "max_q must be at least 2");
    }
    std::vector<Slope> out;
    for (Coeff q = 2; q <= max_q; ++q) {
        for (Coeff p = 1; p < q; ++p) {
            if (std::gcd(p, q) == 1) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

std::vector<MarkovRow> markov_tree(Coeff max_q, unsigned jobs) {
    const std::vector<Slope> slopes = slopes_up_to(max_q);
    std::vector<BigInt> values(slopes.size());
    parallel_for_index(slopes.size(), jobs,
                       [&](std::size_t i) { values[i] = markov_number(slopes[i]); });
    std::vector<MarkovRow> rows;
    rows.reserve(slopes.size());
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        rows.push_back({slopes[i], std::move(values[i])});
    }
    return rows;
}

BandGraph band_graph(const Slope& s) {
    const PositiveCF cf = markov_cf(s);
    std::vector<Coeff> plus(cf.coeffs().begin(), cf.coeffs().end());
    plus.push_back(2);
    plus.push_back(1);
    return {from_cf(PositiveCF(std::move(plus))), from_runs(tail_coeffs(cf)),
            "band graph of slope " + s.to_string()};
}

SquarePair decomposition_pair(const Slope& s) {
    const PositiveCF cf = markov_cf(s);
    const auto c = cf.coeffs();
    const Fraction half = evaluate(PositiveCF(std::vector<Coeff>(c.begin() + c.size() / 2, c.end())));
    return {half.den(), half.num()};
}

std::optional<Slope> is_markov_cf(std::span<const Coeff> cf) {
    if (cf.size() < 2 || cf.size() % 2 != 0) {
        return std::nullopt;
    }
    const auto q = static_cast<Coeff>((cf.size() + 2) / 2);
    const auto twos = std::count(cf.begin(), cf.end(), Coeff{2});
    if (twos % 2 != 0) {
        return std::nullopt;
    }
    const Coeff p = twos / 2;
    if (p <= 0 || p >= q || std::gcd(p, q) != 1) {
        return std::nullopt;
    }
    const Slope s(p, q);
    const PositiveCF expected = markov_cf(s);
    if (!std::equal(cf.begin(), cf.end(), expected.coeffs().begin(), expected.coeffs().end())) {
        return std::nullopt;
    }
    return s;
}

ConjectureReport check_conjecture(const Slope& s, const BigInt& search_limit) {
    ConjectureReport report{s, markov_number(s), {}, 0, 0, 0, 0, false, false, false};
    if (report.markov > search_limit) {
        throw Error(ErrorCode::size_guard, "Markov number of " + s.to_string() +
                                               " exceeds the search limit");
    }
    std::vector<SquarePair> pairs;
    if (report.markov < (BigInt(1) << 62)) {
        for (const auto& [a, b] : sum_of_two_coprime_squares_u64(
                 static_cast<std::uint64_t>(report.markov))) {
            pairs.push_back({BigInt(a), BigInt(b)});
        }
    } else {
        pairs = sum_of_two_coprime_squares(report.markov);
    }

    std::optional<std::size_t> d_index;
    std::optional<std::size_t> m_index;
    for (SquarePair& pair : pairs) {
        PairReport row{pair, from_fraction(Fraction(pair.b, pair.a))};
        const auto c = row.cf.coeffs();
        row.digits_12 = std::all_of(c.begin(), c.end(), [](Coeff x) { return x == 1 || x == 2; });
        row.in_range = 2 * pair.a <= pair.b && pair.b < 3 * pair.a;
        row.markov = is_markov_cf(palindromify(row.cf).coeffs()).has_value();
        const std::size_t index = report.pairs.size();
        if (row.digits_12) {
            ++report.count_d;
            d_index = index;
            report.count_dr += row.in_range ? 1 : 0;
        }
        if (row.markov) {
            ++report.count_m;
            m_index = index;
            report.count_mr += row.in_range ? 1 : 0;
        }
        report.pairs.push_back(std::move(row));
    }
    report.unique_d = report.count_d == 1;
    report.unique_m = report.count_m == 1;
    report.coincide = report.unique_d && report.unique_m && d_index == m_index;
    return report;
}

}  // namespace snakecf
