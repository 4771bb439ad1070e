#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "superstring/errors.hpp"

namespace superstring {

/// Exact rational with normalized sign and reduced terms. All ratio checks in
/// the reduction run on these; floating point never enters a comparison.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    explicit Rational(std::int64_t value) : num_(value), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace superstring
