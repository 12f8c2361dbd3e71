#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wskit {

/// Exact rational number, always kept in canonical form:
/// gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p/q" or a bare integer (optionally signed).
    static Rational parse(const std::string& s);

    const mpq_class& mpq() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }
    mpz_class floor() const;
    mpz_class ceil() const;

    /// Largest rational r with small denominator guarantees r*r <= *this.
    /// Requires *this >= 0. Used to under-approximate square roots exactly.
    Rational sqrt_lower_bound() const;

    /// "p/q" when den != 1, else "p".
    std::string str() const;
    /// Decimal rendering with the given number of significant digits
    /// (display only, never re-parsed).
    std::string decimal(int significant_digits = 12) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace wskit
