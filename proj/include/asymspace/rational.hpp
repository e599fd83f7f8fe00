#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "asymspace/errors.hpp"

namespace asymspace {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact, nothing is ever rounded.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}                // NOLINT(google-explicit-constructor)
    Rat(long long v) : num_(v), den_(1) {}          // NOLINT(google-explicit-constructor)
    Rat(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rat(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw InputError("Rat: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw InputError("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend Rat abs(const Rat& a) { return a.num_ < 0 ? -a : a; }
    friend Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
    friend Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

    /// Canonical text form: "n" for integers, "n/d" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "a" or "a/b" with optional leading sign. Accepts the U+2212
    /// minus sign in addition to '-'. Returns nullopt on malformed input.
    static std::optional<Rat> parse(std::string_view text) {
        std::string cleaned;
        cleaned.reserve(text.size());
        for (std::size_t i = 0; i < text.size();) {
            // U+2212 MINUS SIGN, UTF-8 e2 88 92
            if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
                static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                cleaned += '-';
                i += 3;
            } else if (text[i] == ' ') {
                ++i;
            } else {
                cleaned += text[i];
                ++i;
            }
        }
        auto slash = cleaned.find('/');
        auto parse_int = [](std::string_view s) -> std::optional<BigInt> {
            if (s.empty()) return std::nullopt;
            const bool negative = s[0] == '-';
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) return std::nullopt;
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return std::nullopt;
            BigInt value(std::string(s.substr(start)));
            return negative ? -value : value;
        };
        if (slash == std::string::npos) {
            auto n = parse_int(cleaned);
            if (!n) return std::nullopt;
            return Rat(std::move(*n));
        }
        auto n = parse_int(std::string_view(cleaned).substr(0, slash));
        auto d = parse_int(std::string_view(cleaned).substr(slash + 1));
        if (!n || !d || *d == 0) return std::nullopt;
        return Rat(std::move(*n), std::move(*d));
    }

    /// Decimal rendering with the given number of fractional digits,
    /// truncated toward zero. Used only for plot output, never for math.
    std::string decimal(int digits) const {
        BigInt scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        BigInt scaled = num_ * scale / den_;
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string s = scaled.str();
        if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
        if (digits > 0) s.insert(s.size() - digits, ".");
        // trim trailing zeros in the fraction
        if (digits > 0) {
            auto last = s.find_last_not_of('0');
            if (s[last] == '.') --last;
            s.erase(last + 1);
        }
        if (neg && s != "0") s.insert(0, "-");
        return s;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

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
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace asymspace
