#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Key design decisions:
 * - Backed by boost::multiprecision::cpp_int so nothing in the library ever
 *   overflows; all other modules treat `Int` as the one integer type.
 * - Always stored reduced with a positive denominator, so equality is
 *   structural and hashing/serialization need no extra canonicalization.
 * - Serializes as "p/q" (or "p" for integers); `Rational::parse` accepts the
 *   same grammar.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "dissect/errors.hpp"

namespace dissect {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(std::move(n)) {}  // NOLINT: implicit by design
    Rational(long n) : num_(n) {}            // NOLINT
    Rational(int n) : num_(n) {}             // NOLINT
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        reduce();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    // Only valid when is_integer().
    const Int& as_integer() const {
        if (den_ != 1) throw ValidationError("rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator-() const { return raw(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw ValidationError("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication; denominators are positive by invariant.
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Accepts "p" or "p/q" with optional leading '-' on p.
    static Rational parse(std::string_view text) {
        auto is_int = [](std::string_view t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::size_t slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw ValidationError("bad rational literal '" + std::string(text) + "'");
            return Rational(Int(std::string(text)));
        }
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q))
            throw ValidationError("bad rational literal '" + std::string(text) + "'");
        return Rational(Int(std::string(p)), Int(std::string(q)));
    }

    // Fractional part in [0, 1).
    Rational mod1() const { return raw(num_ - floor_div(num_, den_) * den_, den_); }

private:
    // Constructs without reducing; caller guarantees the invariant.
    static Rational raw(Int n, Int d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = int_gcd(int_abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_{0};
    Int den_{1};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dissect
