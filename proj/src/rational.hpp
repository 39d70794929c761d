#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patternforge {

// Exact arbitrary-precision rational scalar. Always canonical: reduced
// fraction, denominator > 0. All geometry in this project runs on these;
// no floating point is involved in any predicate.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    // Rendering helper; never used in predicates.
    std::string to_string() const { return v_.get_str(); }

    // Throws if either component does not fit in int64 (serialization guard).
    std::pair<std::int64_t, std::int64_t> to_int64_pair() const {
        if (!num().fits_slong_p() || !den().fits_slong_p())
            throw std::overflow_error("Rational: component exceeds int64 in serialization");
        return {num().get_si(), den().get_si()};
    }

private:
    mpq_class v_;
};

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace patternforge
