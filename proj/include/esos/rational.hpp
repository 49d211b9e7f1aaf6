#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace esos {

/// Exact rational on int64 with overflow-checked arithmetic.
/// All density and threshold comparisons in the library go through this type;
/// no floating point is used anywhere a verdict depends on a comparison.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rat operator+(const Rat& o) const {
        return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rat operator*(const Rat& o) const {
        return from128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return from128(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    /// Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer >= value.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    Rat abs() const { return num_ < 0 ? -*this : *this; }
    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" or a plain decimal like "0.25" (exact, base-10 denominator).
    static Rat parse(const std::string& s);

    double to_double() const { return double(num_) / double(den_); }

private:
    using i128 = __int128;
    long long num_;
    long long den_;

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static Rat from128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num, b = den;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        const i128 lo = -i128(INT64_MAX), hi = i128(INT64_MAX);
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rat: overflow after reduction");
        Rat r;
        r.num_ = (long long)num;
        r.den_ = (long long)den;
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }
};

inline Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len > 17) throw std::invalid_argument("Rat::parse: too many decimal places");
        long long den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rat(std::stoll(digits), den);
    }
    return Rat(std::stoll(s));
}

}  // namespace esos
