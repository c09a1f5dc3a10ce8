#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace msl {

using Int = mpz_class;

// Arbitrary-precision rational in canonical form: denominator > 0,
// gcd(|num|, den) = 1. All constructors canonicalize.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    // Largest integer <= value.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

  private:
    mpq_class v_;
};

// Rational interval [lo, hi] certified to contain some real value.
struct Enclosure {
    Rational lo, hi;

    Enclosure() = default;
    Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
    }
    static Enclosure point(const Rational& x) { return Enclosure(x, x); }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
        return Enclosure(a.lo + b.lo, a.hi + b.hi);
    }
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
        return Enclosure(a.lo - b.hi, a.hi - b.lo);
    }
    Enclosure scaled(const Rational& c) const {
        return c.sign() >= 0 ? Enclosure(lo * c, hi * c) : Enclosure(hi * c, lo * c);
    }
};

// Parse a plain decimal literal ("3.1181201786", "-0.25", "42") exactly.
Rational rational_from_decimal(const std::string& text);

// Round-toward-zero decimal rendering with `digits` places after the point.
std::string truncate_decimal(const Rational& x, int digits);

// Certified decimal rendering of an enclosure: emits only digits identical at
// both endpoints after round-toward-zero truncation; empty if none agree.
std::string certified_decimal(const Enclosure& e, int digits);

// [lo, hi] with lo <= sqrt(d) <= hi and hi - lo = 2^-bits, via integer sqrt.
Enclosure sqrt_enclosure(const Int& d, unsigned bits);

}  // namespace msl
