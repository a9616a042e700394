#pragma once

#include <string>
#include <utility>

#include "fibhess/rational.hpp"

namespace fibhess {

/// Element of Q(i): re + im*i with exact rational parts. Arithmetic is the
/// usual complex field arithmetic, done without any floating point.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}                    // NOLINT(google-explicit-constructor)
    GaussianRational(int re) : re_(re) {}                     // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = re^2 + im^2, a rational.
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }

    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }

    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }

    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw DivisionByZeroError{};
        const BigRational n = o.norm();
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// "re" when im = 0, else "re+im*i" / "re-im*i".
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        if (im_.is_negative()) return re_.to_string() + "-" + (-im_).to_string() + "*i";
        return re_.to_string() + "+" + im_.to_string() + "*i";
    }

private:
    BigRational re_;
    BigRational im_;
};

/// i^m for any signed m, via the period-4 cycle 1, i, -1, -i.
/// Negative exponents take the mathematically positive remainder, so
/// i^(-1) = i^3 = -i.
inline GaussianRational i_pow(long m) {
    long r = m % 4;
    if (r < 0) r += 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

/// z^e for signed e; z must be nonzero when e < 0.
inline GaussianRational pow(const GaussianRational& z, long e) {
    if (e < 0) {
        if (z.is_zero()) throw DivisionByZeroError{};
        return pow(z.inverse(), -e);
    }
    GaussianRational result(1);
    GaussianRational base = z;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

} // namespace fibhess
