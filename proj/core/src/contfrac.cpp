#include "snakecf/contfrac.hpp"

#include "snakecf/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace snakecf {

namespace {

std::string join(std::span<const Coeff> coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(coeffs[i]);
    }
    out += ']';
    return out;
}

Coeff to_coeff(const BigInt& value) {
    if (value > std::numeric_limits<Coeff>::max() || value < std::numeric_limits<Coeff>::min()) {
        throw Error(ErrorCode::domain, "continued fraction coefficient exceeds 64 bits");
    }
    return static_cast<Coeff>(value);
}

BigInt abs(const BigInt& v) {
    return v < 0 ? BigInt(-v) : v;
}

}  // namespace

// ---------------------------------------------------------------------------
// PositiveCF / EvenCF

PositiveCF::PositiveCF(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::domain, "positive continued fraction must be nonempty");
    }
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [](Coeff a) { return a < 1; })) {
        throw Error(ErrorCode::domain,
                    "positive continued fraction needs every coefficient >= 1: " + join(coeffs_));
    }
}

PositiveCF::PositiveCF(std::initializer_list<Coeff> coeffs)
    : PositiveCF(std::vector<Coeff>(coeffs)) {}

Coeff PositiveCF::sum() const noexcept {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), Coeff{0});
}

bool PositiveCF::is_canonical() const noexcept {
    return coeffs_.back() >= 2 || (coeffs_.size() == 1 && coeffs_.front() == 1);
}

bool PositiveCF::is_palindrome() const noexcept {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string PositiveCF::to_string() const { return join(coeffs_); }

EvenCF::EvenCF(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::domain, "even continued fraction must be nonempty");
    }
    if (std::any_of(coeffs_.begin(), coeffs_.end(),
                    [](Coeff a) { return a == 0 || a % 2 != 0; })) {
        throw Error(ErrorCode::domain,
                    "even continued fraction needs nonzero even coefficients: " + join(coeffs_));
    }
}

EvenCF::EvenCF(std::initializer_list<Coeff> coeffs) : EvenCF(std::vector<Coeff>(coeffs)) {}

std::string EvenCF::to_string() const { return join(coeffs_); }

// ---------------------------------------------------------------------------
// Evaluation

std::vector<Convergent> convergent_table(std::span<const Coeff> coeffs) {
    std::vector<Convergent> table;
    table.reserve(coeffs.size() + 1);
    // (p_{-1}, q_{-1}) = (0, 1) is implicit; table[0] is (p_0, q_0) = (1, 0).
    BigInt p_prev = 0;
    BigInt q_prev = 1;
    table.push_back({1, 0});
    for (Coeff a : coeffs) {
        const Convergent& last = table.back();
        BigInt p = a * last.p + p_prev;
        BigInt q = a * last.q + q_prev;
        p_prev = last.p;
        q_prev = last.q;
        table.push_back({std::move(p), std::move(q)});
    }
    return table;
}

Fraction evaluate(const PositiveCF& cf) {
    const auto table = convergent_table(cf.coeffs());
    return Fraction(table.back().p, table.back().q);
}

BigInt numerator(const PositiveCF& cf) {
    return convergent_table(cf.coeffs()).back().p;
}

std::vector<Fraction> convergents(const PositiveCF& cf) {
    const auto table = convergent_table(cf.coeffs());
    std::vector<Fraction> out;
    out.reserve(cf.size());
    for (std::size_t k = 1; k < table.size(); ++k) {
        out.emplace_back(table[k].p, table[k].q);
    }
    return out;
}

PositiveCF from_fraction(const Fraction& f) {
    if (f.num() < 1 || f.num() < f.den()) {
        throw Error(ErrorCode::domain,
                    "positive continued fraction needs a value >= 1, got " + f.to_string());
    }
    std::vector<Coeff> out;
    BigInt a = f.num();
    BigInt b = f.den();
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        out.push_back(to_coeff(q));
        a = std::move(b);
        b = std::move(r);
    }
    return PositiveCF(std::move(out));
}

EvenCF to_even_cf(const Fraction& f) {
    const BigInt& p = f.num();
    const BigInt& q = f.den();
    if (!(p > q && q > 0)) {
        throw Error(ErrorCode::domain, "even expansion needs p > q > 0, got " + f.to_string());
    }
    if (boost::multiprecision::bit_test(p, 0) && boost::multiprecision::bit_test(q, 0)) {
        throw Error(ErrorCode::parity,
                    f.to_string() + " has no even continued fraction (numerator and "
                                    "denominator both odd)");
    }

    std::vector<Coeff> out;
    BigInt a = p;
    BigInt b = q;
    while (b != 0) {
        // Candidates 2*floor(a/2b) and that plus 2 bracket a/b.
        const BigInt low = 2 * floor_div(a, 2 * b);
        const BigInt high = low + 2;
        const BigInt r_low = a - low * b;
        const BigInt r_high = a - high * b;
        BigInt k;
        if (abs(r_low) < abs(r_high)) {
            k = low;
        } else if (abs(r_high) < abs(r_low)) {
            k = high;
        } else {
            // a/b is an odd integer; only reachable when |b| = 1.
            k = a / b - (b > 0 ? 1 : -1);
        }
        if (k == 0) {
            throw Error(ErrorCode::construction, "even expansion produced a zero quotient");
        }
        BigInt r = a - k * b;
        out.push_back(to_coeff(k));
        a = std::move(b);
        b = std::move(r);
    }
    return EvenCF(std::move(out));
}

Fraction evaluate_even(const EvenCF& cf) {
    const auto coeffs = cf.coeffs();
    Fraction value(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        if (value.is_zero()) {
            throw Error(ErrorCode::degenerate_tail,
                        "tail of " + cf.to_string() + " evaluates to zero");
        }
        value = Fraction(coeffs[i]) + value.reciprocal();
    }
    return value;
}

// ---------------------------------------------------------------------------
// Rewriting

PositiveCF normalize(std::span<const Coeff> raw) {
    if (raw.empty()) {
        throw Error(ErrorCode::domain, "empty coefficient sequence");
    }
    if (std::any_of(raw.begin(), raw.end(), [](Coeff a) { return a < 0; })) {
        throw Error(ErrorCode::domain, "negative coefficient in " + join(raw));
    }
    if (raw.front() == 0 || raw.back() == 0) {
        throw Error(ErrorCode::domain,
                    join(raw) + " cannot be rewritten as a positive continued fraction");
    }
    std::vector<Coeff> out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == 0) {
            // a + 1/(0 + 1/(b + x)) = (a + b) + x; interior zeros only.
            out.back() += raw[i + 1];
            i += 2;
        } else {
            out.push_back(raw[i]);
            ++i;
        }
    }
    return PositiveCF(std::move(out));
}

PositiveCF canonicalize(std::span<const Coeff> raw) {
    return canonicalize(normalize(raw));
}

PositiveCF canonicalize(const PositiveCF& cf) {
    if (cf.is_canonical()) {
        return cf;
    }
    std::vector<Coeff> out(cf.coeffs().begin(), cf.coeffs().end() - 1);
    out.back() += 1;
    return PositiveCF(std::move(out));
}

std::optional<PositiveCF> alternate_form(const PositiveCF& cf) {
    if (cf.size() == 1 && cf.front() == 1) {
        return std::nullopt;
    }
    if (!cf.is_canonical()) {
        return canonicalize(cf);
    }
    std::vector<Coeff> out(cf.coeffs().begin(), cf.coeffs().end());
    out.back() -= 1;
    out.push_back(1);
    return PositiveCF(std::move(out));
}

PositiveCF reverse(const PositiveCF& cf) {
    std::vector<Coeff> out(cf.coeffs().rbegin(), cf.coeffs().rend());
    PositiveCF reversed(std::move(out));
    return cf.is_canonical() ? canonicalize(reversed) : reversed;
}

std::vector<BigInt> tail_numerators(const PositiveCF& cf) {
    const auto coeffs = cf.coeffs();
    const std::size_t n = coeffs.size();
    // numerators[i] = N([a_{i+1}, ..., a_n]), numerators[n] = 1 (empty tail).
    std::vector<BigInt> numerators(n + 1);
    numerators[n] = 1;
    BigInt after = 0;  // N of the tail two steps on; 0 past the empty tail
    for (std::size_t i = n; i-- > 0;) {
        numerators[i] = coeffs[i] * numerators[i + 1] + after;
        after = numerators[i + 1];
    }
    return numerators;
}

std::vector<Coeff> tail_coeffs(const PositiveCF& cf) {
    return {cf.coeffs().begin() + 1, cf.coeffs().end()};
}

PositiveCF cf_flip_diag(const PositiveCF& cf) {
    if (cf.size() == 1 && cf.front() == 1) {
        return cf;  // single edge, no tile to reflect
    }
    std::vector<Coeff> raw;
    raw.reserve(cf.size() + 1);
    raw.push_back(1);
    raw.push_back(cf.front() - 1);
    raw.insert(raw.end(), cf.coeffs().begin() + 1, cf.coeffs().end());
    return normalize(raw);
}

PositiveCF palindromify(const PositiveCF& cf) {
    std::vector<Coeff> out(cf.coeffs().rbegin(), cf.coeffs().rend());
    out.insert(out.end(), cf.coeffs().begin(), cf.coeffs().end());
    return PositiveCF(std::move(out));
}

PositiveCF odd_palindromify(const PositiveCF& cf) {
    std::vector<Coeff> out(cf.coeffs().rbegin(), cf.coeffs().rend());
    out.insert(out.end(), cf.coeffs().begin() + 1, cf.coeffs().end());
    return PositiveCF(std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Coeff parse_int(std::string_view token, std::string_view whole) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Coeff value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::domain, "cannot parse integer '" + std::string(token) + "' in '" +
                                           std::string(whole) + "'");
    }
    return value;
}

}  // namespace

std::vector<Coeff> parse_coeffs(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    if (!body.empty() && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Coeff> out;
    while (true) {
        const auto comma = body.find(',');
        out.push_back(parse_int(body.substr(0, comma), text));
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
    }
    return out;
}

Fraction parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_big = [&](std::string_view token) {
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        const bool ok = !token.empty() &&
                        std::all_of(token.begin() + (token.front() == '-' ? 1 : 0), token.end(),
                                    [](char c) { return c >= '0' && c <= '9'; }) &&
                        token != "-";
        if (!ok) {
            throw Error(ErrorCode::domain, "cannot parse fraction '" + std::string(text) + "'");
        }
        return BigInt(std::string(token));
    };
    if (slash == std::string_view::npos) {
        return Fraction(parse_big(text));
    }
    return Fraction(parse_big(text.substr(0, slash)), parse_big(text.substr(slash + 1)));
}

}  // namespace snakecf
