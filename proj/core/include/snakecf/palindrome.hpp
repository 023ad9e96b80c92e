#pragma once

#include "snakecf/contfrac.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace snakecf {

/// N = a^2 + b^2 with gcd(a, b) = 1 and a < b; (1, 1) for N = 2.
struct SquarePair {
    BigInt a;
    BigInt b;
    friend bool operator==(const SquarePair&, const SquarePair&) = default;
};

/// Numerator and denominator as produced by a closed formula, before any
/// reduction.
struct RawFraction {
    BigInt num;
    BigInt den;
};

/// (p_n^2 + q_n^2) / (p_{n-1} p_n + q_{n-1} q_n), with p_0 = 1, q_0 = 0.
RawFraction palindromification_formula(const PositiveCF& cf);

/// Value of [a_n, ..., a_1, a_1, ..., a_n] from the closed formula. Throws
/// ErrorCode::construction if the formula is not already in lowest terms.
Fraction palindromification_value(const PositiveCF& cf);

/// Scans a = 1 .. isqrt(N/2).
std::vector<SquarePair> sum_of_two_coprime_squares(const BigInt& n);

/// Same scan on machine words; valid for n < 2^62.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sum_of_two_coprime_squares_u64(
    std::uint64_t n);

/// Every even-length palindromic PositiveCF with numerator N, in either of
/// the two forms of its value, sorted. Not canonicalized.
std::vector<PositiveCF> palindromic_even_cfs(const BigInt& n);

struct OddPalindromeValue {
    RawFraction unreduced;  // (p_n^2 - r_n^2) / (p_{n-1} p_n - r_{n-1} r_n)
    Fraction value;
};

/// [a_n, ..., a_2, a_1, a_2, ..., a_n] via the closed formula. r_k is the
/// denominator of [a_2, ..., a_k], with r_1 = 0 and r_0 = 1.
OddPalindromeValue odd_palindrome_value(const PositiveCF& cf);

struct SquareCF {
    PositiveCF cf;
    Fraction value;
};

/// normalize([a_1, ..., a_{n-1}, a_n + 1, a_n - 1, a_{n-1}, ..., a_1]) and
/// its value p^2 / (pq + (-1)^n), n the length of the input.
SquareCF square_cf(const PositiveCF& cf);

/// (q^2 + (-1)^n) / p for the first form of p/q (canonical, then the
/// alternate; single-coefficient forms skipped) where the division is exact.
std::optional<BigInt> palindromic_reduction(const Fraction& f);

/// Value of [a_2, ..., a_{n-1}] for the palindromic form of p/q, if there is
/// one with n >= 3.
std::optional<Fraction> palindromic_inner(const Fraction& f);

}  // namespace snakecf
