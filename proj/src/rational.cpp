#include "wskit/rational.hpp"

#include <cctype>

namespace wskit {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(s)));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::sqrt_lower_bound() const {
    if (sign() < 0) throw std::invalid_argument("Rational: sqrt of negative");
    if (is_zero()) return Rational(0);
    // sqrt(a/b) = sqrt(a*b)/b >= floor(isqrt(a*b))/b.
    mpz_class ab = num() * den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), ab.get_mpz_t());
    mpq_class q(root, den());
    q.canonicalize();
    Rational lb(std::move(q));
    // floor(isqrt) can give 0 for values in (0,1); fall back to halving.
    if (lb.is_zero()) {
        Rational half(1, 2);
        Rational cand = half;
        while (cand * cand > *this) cand *= half;
        return cand;
    }
    return lb;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
    mpf_class f(0, 256);
    f = v_;
    mp_exp_t exp = 0;
    std::string digits = f.get_str(exp, 10, significant_digits);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits = digits.substr(1);
    }
    if (digits.empty()) return "0";
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
    } else if (static_cast<size_t>(exp) >= digits.size()) {
        out = digits + std::string(static_cast<size_t>(exp) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<size_t>(exp)) + "." +
              digits.substr(static_cast<size_t>(exp));
    }
    return neg ? "-" + out : out;
}

}  // namespace wskit
