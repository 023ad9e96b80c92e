#pragma once

#include "snakecf/fraction.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace snakecf {

using Coeff = std::int64_t;

/// Finite continued fraction [a_1, ..., a_n] with every a_i >= 1.
///
/// The type admits both forms of a rational, [.., a_n] and [.., a_n - 1, 1];
/// `is_canonical()` tells them apart. Canonical means the last coefficient
/// is at least 2, or the whole sequence is [1].
class PositiveCF {
public:
    explicit PositiveCF(std::vector<Coeff> coeffs);
    PositiveCF(std::initializer_list<Coeff> coeffs);

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Coeff operator[](std::size_t i) const { return coeffs_.at(i); }
    Coeff front() const noexcept { return coeffs_.front(); }
    Coeff back() const noexcept { return coeffs_.back(); }

    /// a_1 + ... + a_n; the snake graph of this CF has sum() - 1 tiles.
    Coeff sum() const noexcept;

    bool is_canonical() const noexcept;
    bool is_palindrome() const noexcept;

    std::string to_string() const;

    friend bool operator==(const PositiveCF&, const PositiveCF&) = default;
    friend auto operator<=>(const PositiveCF&, const PositiveCF&) = default;

private:
    std::vector<Coeff> coeffs_;
};

/// Continued fraction whose coefficients are nonzero even integers.
class EvenCF {
public:
    explicit EvenCF(std::vector<Coeff> coeffs);
    EvenCF(std::initializer_list<Coeff> coeffs);

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::string to_string() const;

    friend bool operator==(const EvenCF&, const EvenCF&) = default;

private:
    std::vector<Coeff> coeffs_;
};

/// Convergent numerator/denominator pair, not wrapped in Fraction so the
/// seed (1, 0) can be represented.
struct Convergent {
    BigInt p;
    BigInt q;
};

/// [(p_0, q_0), (p_1, q_1), ..., (p_n, q_n)] with the seed p_0 = 1, q_0 = 0,
/// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
std::vector<Convergent> convergent_table(std::span<const Coeff> coeffs);

Fraction evaluate(const PositiveCF& cf);
BigInt numerator(const PositiveCF& cf);

/// p_1/q_1, ..., p_n/q_n; the last entry equals evaluate(cf).
std::vector<Fraction> convergents(const PositiveCF& cf);

/// Canonical expansion of f >= 1 by repeated floor division.
PositiveCF from_fraction(const Fraction& f);

/// Unique even expansion of p/q with p > q > 0, via nearest-even quotients.
/// Throws ErrorCode::parity when p and q are both odd.
EvenCF to_even_cf(const Fraction& f);

/// Exact value of an even CF, evaluated from the innermost coefficient out.
/// Throws ErrorCode::degenerate_tail if some tail evaluates to zero.
Fraction evaluate_even(const EvenCF& cf);

/// Applies [.., a, 0, b, ..] -> [.., a + b, ..] until no interior zero is
/// left. Leading/trailing zeros and negative entries are domain errors.
PositiveCF normalize(std::span<const Coeff> raw);

/// normalize(), then folds a trailing 1: [.., a, 1] -> [.., a + 1].
PositiveCF canonicalize(std::span<const Coeff> raw);
PositiveCF canonicalize(const PositiveCF& cf);

/// The other expansion of the same rational, [.., a_n - 1, 1] for a
/// canonical input and the folded form for an input ending in 1.
/// Empty for [1], which has a single positive expansion.
std::optional<PositiveCF> alternate_form(const PositiveCF& cf);

/// Coefficients reversed. A canonical input yields a canonical result; a
/// non-canonical input is reversed verbatim. The numerator is unchanged.
PositiveCF reverse(const PositiveCF& cf);

/// [N(cf), N(a_2..a_n), ..., N(a_n), 1]: numerators of the successive
/// tails, i.e. the remainder chain of the Euclidean algorithm on evaluate(cf).
std::vector<BigInt> tail_numerators(const PositiveCF& cf);

/// [a_2, ..., a_n]; empty for n = 1.
std::vector<Coeff> tail_coeffs(const PositiveCF& cf);

/// CF of the snake graph reflected in the line y = x:
/// normalize([1, a_1 - 1, a_2, ..., a_n]).
PositiveCF cf_flip_diag(const PositiveCF& cf);

/// [a_n, ..., a_1, a_1, ..., a_n].
PositiveCF palindromify(const PositiveCF& cf);

/// [a_n, ..., a_2, a_1, a_2, ..., a_n].
PositiveCF odd_palindromify(const PositiveCF& cf);

/// Parses "2,3,1,2,3" (spaces and a surrounding [] tolerated).
std::vector<Coeff> parse_coeffs(std::string_view text);

/// Parses "p/q" or "p".
Fraction parse_fraction(std::string_view text);

}  // namespace snakecf
