#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace snakecf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number num/den kept in lowest terms with den >= 1.
class Fraction {
public:
    Fraction() = default;
    Fraction(BigInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_.sign(); }

    Fraction reciprocal() const;

    std::string to_string() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a);

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f);

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

/// Floor of a/b for b != 0 (rounds toward negative infinity).
BigInt floor_div(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Largest r with r*r <= n, for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace snakecf
