#include "snakecf/palindrome.hpp"

#include "snakecf/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace snakecf {

namespace {

BigInt minus_one_pow(std::size_t n) { return n % 2 == 0 ? BigInt(1) : BigInt(-1); }

// The forms of p/q tried in order by the reduction.
std::vector<PositiveCF> forms_of(const Fraction& f) {
    if (f.den() < 1 || f.num() <= f.den()) {
        throw Error(ErrorCode::domain, "expected p/q with p > q >= 1, got " + f.to_string());
    }
    std::vector<PositiveCF> out;
    PositiveCF canonical = from_fraction(f);
    std::optional<PositiveCF> alternate = alternate_form(canonical);
    if (canonical.size() > 1) {
        out.push_back(std::move(canonical));
    }
    if (alternate && alternate->size() > 1) {
        out.push_back(std::move(*alternate));
    }
    return out;
}

}  // namespace

RawFraction palindromification_formula(const PositiveCF& cf) {
    const auto table = convergent_table(cf.coeffs());
    const auto& last = table[table.size() - 1];
    const auto& prev = table[table.size() - 2];
    return {last.p * last.p + last.q * last.q, prev.p * last.p + prev.q * last.q};
}

Fraction palindromification_value(const PositiveCF& cf) {
    const RawFraction raw = palindromification_formula(cf);
    if (gcd(raw.num, raw.den) != 1) {
        throw Error(ErrorCode::construction,
                    "palindromification formula not reduced for " + cf.to_string());
    }
    return {raw.num, raw.den};
}

std::vector<SquarePair> sum_of_two_coprime_squares(const BigInt& n) {
    if (n < 1) {
        throw Error(ErrorCode::domain, "sum of squares needs N >= 1");
    }
    std::vector<SquarePair> out;
    const BigInt limit = isqrt(n / 2);
    for (BigInt a = 1; a <= limit; ++a) {
        const BigInt rest = n - a * a;
        const BigInt b = isqrt(rest);
        if (b * b == rest && gcd(a, b) == 1 && (a < b || a == 1)) {
            out.push_back({a, b});
        }
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sum_of_two_coprime_squares_u64(
    std::uint64_t n) {
    if (n < 1 || n >= (std::uint64_t{1} << 62)) {
        throw Error(ErrorCode::domain, "machine-word scan needs 1 <= N < 2^62");
    }
    auto root = [](std::uint64_t v) {
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) {
            --r;
        }
        while ((r + 1) * (r + 1) <= v) {
            ++r;
        }
        return r;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t limit = root(n / 2);
    for (std::uint64_t a = 1; a <= limit; ++a) {
        const std::uint64_t rest = n - a * a;
        const std::uint64_t b = root(rest);
        if (b * b == rest && std::gcd(a, b) == 1 && (a < b || a == 1)) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<PositiveCF> palindromic_even_cfs(const BigInt& n) {
    if (n < 2) {
        throw Error(ErrorCode::domain, "palindromic CF enumeration needs N >= 2");
    }
    std::vector<PositiveCF> out;
    for (BigInt q = 1; q < n; ++q) {
        if (gcd(n, q) != 1) {
            continue;
        }
        const PositiveCF canonical = from_fraction(Fraction(n, q));
        const std::optional<PositiveCF> alternate = alternate_form(canonical);
        if (canonical.size() % 2 == 0 && canonical.is_palindrome()) {
            out.push_back(canonical);
        }
        if (alternate && alternate->size() % 2 == 0 && alternate->is_palindrome()) {
            out.push_back(*alternate);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

OddPalindromeValue odd_palindrome_value(const PositiveCF& cf) {
    const auto p = convergent_table(cf.coeffs());
    const std::vector<Coeff> tail = tail_coeffs(cf);
    const auto t = convergent_table(tail);
    const std::size_t n = cf.size();
    // r_k = t[k-1].q for k >= 1; r_0 = 1.
    auto r = [&](std::size_t k) { return k == 0 ? BigInt(1) : t[k - 1].q; };
    RawFraction raw{p[n].p * p[n].p - r(n) * r(n), p[n - 1].p * p[n].p - r(n - 1) * r(n)};
    Fraction value(raw.num, raw.den);
    return {std::move(raw), std::move(value)};
}

SquareCF square_cf(const PositiveCF& cf) {
    const auto a = cf.coeffs();
    const std::size_t n = a.size();
    std::vector<Coeff> raw(a.begin(), a.end() - 1);
    raw.push_back(a[n - 1] + 1);
    raw.push_back(a[n - 1] - 1);
    raw.insert(raw.end(), a.rbegin() + 1, a.rend());
    PositiveCF result = normalize(raw);

    const Fraction pq = evaluate(cf);
    const Fraction value(pq.num() * pq.num(), pq.num() * pq.den() + minus_one_pow(n));
    if (evaluate(result) != value) {
        throw Error(ErrorCode::construction, "square identity failed for " + cf.to_string());
    }
    return {std::move(result), value};
}

std::optional<BigInt> palindromic_reduction(const Fraction& f) {
    for (const PositiveCF& form : forms_of(f)) {
        const BigInt top = f.den() * f.den() + minus_one_pow(form.size());
        if (top % f.num() == 0) {
            return top / f.num();
        }
    }
    return std::nullopt;
}

std::optional<Fraction> palindromic_inner(const Fraction& f) {
    for (const PositiveCF& form : forms_of(f)) {
        if (form.size() >= 3 && form.is_palindrome()) {
            const auto c = form.coeffs();
            return evaluate(PositiveCF(std::vector<Coeff>(c.begin() + 1, c.end() - 1)));
        }
    }
    return std::nullopt;
}

}  // namespace snakecf
