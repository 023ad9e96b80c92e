#include "snakecf/fraction.hpp"

#include "snakecf/error.hpp"

#include <ostream>

namespace snakecf {

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) {
        throw Error(ErrorCode::domain, "floor_div: division by zero");
    }
    BigInt q = a / b;  // truncates toward zero
    BigInt r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) {
        --q;
    }
    return q;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw Error(ErrorCode::domain, "isqrt: negative argument");
    }
    return boost::multiprecision::sqrt(n);
}

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw Error(ErrorCode::domain, "fraction with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::reciprocal() const {
    if (num_ == 0) {
        throw Error(ErrorCode::domain, "reciprocal of zero");
    }
    return Fraction(den_, num_);
}

std::string Fraction::to_string() const {
    return num_.str() + "/" + den_.str();
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) {
        throw Error(ErrorCode::domain, "division by zero fraction");
    }
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Fraction operator-(const Fraction& a) {
    Fraction r = a;
    r.num_ = -r.num_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
}

}  // namespace snakecf
