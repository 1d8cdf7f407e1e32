#pragma once

// Dense univariate polynomials with exact coefficients, used for compactly
// supported Poincare polynomials, characteristic polynomials and f-polynomials.
// Coefficients are stored ascending by degree with no trailing zeros; the zero
// polynomial has an empty coefficient vector and degree() == -1.

#include <ostream>
#include <string>
#include <vector>

#include "dissect/rational.hpp"

namespace dissect {

template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of t^k, zero beyond the stored range.
    T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
    const std::vector<T>& coefficients() const { return coeffs_; }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> c = p.coeffs_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Renders like "t^2 - 2t + 1"; the zero polynomial renders as "0".
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const T& c = coeffs_[i];
            if (c == T(0)) continue;
            bool neg = c < T(0);
            T mag = neg ? T(T(0) - c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool unit = (mag == T(1));
            if (i == 0 || !unit) out += coeff_str(mag);
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    static std::string coeff_str(const T& c) { return c.str(); }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Int>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational_poly(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) c.emplace_back(x);
    return RationalPolynomial(std::move(c));
}

// Throws unless every coefficient is an integer.
inline IntPolynomial to_int_poly(const RationalPolynomial& p) {
    std::vector<Int> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) c.push_back(x.as_integer());
    return IntPolynomial(std::move(c));
}

// (1 + t)^k, used for torus Poincare polynomials and rank generating functions.
inline IntPolynomial one_plus_t_power(std::size_t k) {
    IntPolynomial base({Int(1), Int(1)});
    IntPolynomial acc({Int(1)});
    for (std::size_t i = 0; i < k; ++i) acc *= base;
    return acc;
}

}  // namespace dissect
