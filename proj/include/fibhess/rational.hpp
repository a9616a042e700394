#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "fibhess/errors.hpp"

namespace fibhess {

using BigInt = mpz_class;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. Every constructor and operator re-normalizes, so two equal
/// values always have identical (numerator, denominator) pairs.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}   // NOLINT(google-explicit-constructor)
    BigRational(long n) : num_(n), den_(1) {}                // NOLINT(google-explicit-constructor)
    BigRational(int n) : num_(n), den_(1) {}                 // NOLINT(google-explicit-constructor)

    BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw DivisionByZeroError{};
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    BigRational operator-() const {
        BigRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    BigRational operator+(const BigRational& o) const {
        return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    BigRational operator-(const BigRational& o) const {
        return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    BigRational operator*(const BigRational& o) const {
        return BigRational(num_ * o.num_, den_ * o.den_);
    }

    BigRational operator/(const BigRational& o) const {
        if (o.num_ == 0) throw DivisionByZeroError{};
        return BigRational(num_ * o.den_, den_ * o.num_);
    }

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    // Normalized representatives are unique, so this is exact value equality.
    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }

    bool operator<(const BigRational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const BigRational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const BigRational& o) const { return o < *this; }
    bool operator>=(const BigRational& o) const { return o <= *this; }

    /// "p/q", with "/q" omitted when q = 1.
    std::string to_string() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    /// Parses "p" or "p/q". Throws ParameterError on malformed input,
    /// DivisionByZeroError on q = 0.
    static BigRational from_string(std::string_view s);

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline BigRational BigRational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view part) {
        if (part.empty()) throw ParameterError("empty integer in rational literal");
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) throw ParameterError("sign without digits in rational literal");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9')
                throw ParameterError("invalid digit in rational literal: " + std::string(part));
        }
        return BigInt(std::string(part), 10);
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(s));
    return BigRational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace fibhess
