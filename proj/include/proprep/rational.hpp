/// Exact rational scalar used for every distance and every audit computation.
/// No operation in this library ever rounds; comparisons are exact.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace proprep {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical rational number: reduced, denominator always positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // Denominators positive, so cross-multiplication preserves order.
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Decimal rendering for humans, `places` digits, round half away from zero.
    std::string decimal(int places = 6) const;

    /// Accepts "p", "p/q", and exact decimals like "3.25" or ".5" (optional sign).
    static std::optional<Rational> parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    BigInt num_;
    BigInt den_;  // > 0

    void canonicalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

/// Smallest integer >= r.
BigInt ceil_int(const Rational& r);
/// Largest integer <= r.
BigInt floor_int(const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// A rational extended with +infinity: the value type of audit measurements
/// (an infinite measurement is a first-class result, carrying a witness).
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by design
    ExtRational(long long v) : value_(v) {}            // NOLINT

    static ExtRational infinity() {
        ExtRational e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    /// Finite value; only meaningful when !is_infinite().
    const Rational& finite() const { return value_; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }
    std::string decimal(int places = 6) const {
        return infinite_ ? "inf" : value_.decimal(places);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& e) {
        return os << e.str();
    }

private:
    Rational value_;
    bool infinite_ = false;
};

/// Exact ratio with the audit conventions for zero denominators:
/// 0/0 -> 1, positive/0 -> +inf. Sets *zero_convention when the 0/0 rule fired.
ExtRational audit_ratio(const Rational& num, const Rational& den,
                        bool* zero_convention = nullptr);

}  // namespace proprep
