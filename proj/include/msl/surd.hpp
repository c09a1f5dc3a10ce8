#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msl/rational.hpp"

namespace msl {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

// Exact value (p + q*sqrt(d))/r in canonical form:
//   r > 0, gcd(p, q, r) = 1, d >= 0,
//   d = 0 and q = 0 when the value is rational (perfect-square radicands
//   collapse), small square factors of d are pulled into q.
struct QuadraticSurd {
    Int p{0}, q{0}, d{0}, r{1};

    QuadraticSurd() = default;
    QuadraticSurd(Int p_, Int q_, Int d_, Int r_);
    static QuadraticSurd from_rational(const Rational& x);

    bool is_rational() const { return q == 0; }
    Rational rational_part() const { return Rational(p, r); }
    int sign() const;
    std::string to_string() const;
    Enclosure enclose_bits(unsigned bits) const;

    // (a*x + b) / (c*x + e) with this value as x; result canonical, same field.
    QuadraticSurd moebius(const Int& a, const Int& b, const Int& c, const Int& e) const;

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);
};

// Selected real root of a*x^2 + b*x + c = 0; branch +1 takes the root with
// the + sign in front of the radical, -1 the other.
QuadraticSurd surd_from_fixed_point(const Int& a, const Int& b, const Int& c, int branch);

// Exact finite sum  rat + sum_i coef_i * sqrt(d_i)  with pairwise inequivalent
// radicands (no d_i * d_j a perfect square), each d_i >= 2 and non-square.
// Zero coefficients are dropped, so the all-zero term list means "rational".
class SurdSum {
  public:
    struct Term {
        Rational coef;
        Int d;
    };

    SurdSum() = default;
    SurdSum(const Rational& x) : rat_(x) {}
    SurdSum(long x) : rat_(x) {}
    SurdSum(const QuadraticSurd& s);

    const Rational& rational_part() const { return rat_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_rational() const { return terms_.empty(); }
    size_t radical_count() const { return terms_.size(); }

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    SurdSum operator-() const;
    SurdSum scaled(const Rational& c) const;

    // Exact sign: structural zero test (canonical coefficients) plus adaptive
    // enclosure refinement, which terminates because after radicand merging a
    // nonzero sum of inequivalent radicals cannot vanish.
    int sign() const;

    Enclosure enclose_bits(unsigned bits) const;
    // Enclosure of width <= w.
    Enclosure enclose(const Rational& w) const;
    // Certified truncated decimal with `digits` places.
    std::string decimal(int digits) const;
    std::string to_string() const;

    friend bool operator==(const SurdSum& a, const SurdSum& b) {
        return (a - b).sign() == 0;
    }

  private:
    void add_term(const Rational& coef, Int d);

    Rational rat_;
    std::vector<Term> terms_;
};

Ordering surd_compare(const SurdSum& x, const SurdSum& y);

inline Ordering ordering_of(int sign) {
    return sign < 0 ? Ordering::Less : sign > 0 ? Ordering::Greater : Ordering::Equal;
}

}  // namespace msl
