#include "msl/rational.hpp"

#include <cctype>

namespace msl {

Rational rational_from_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_point) throw std::invalid_argument("bad decimal literal: " + text);
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            seen_digit = true;
            if (seen_point) ++frac;
        } else {
            throw std::invalid_argument("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + text);
    Int num(digits.empty() ? std::string("0") : digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
    if (neg) num = -num;
    return Rational(num, den);
}

std::string truncate_decimal(const Rational& x, int digits) {
    if (digits < 0) throw std::invalid_argument("truncate_decimal: negative digits");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int t;  // trunc(x * 10^digits) toward zero
    Int num = x.num() * scale;
    mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
    bool neg = t < 0;
    Int a = ::abs(t);
    std::string s = a.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

std::string certified_decimal(const Enclosure& e, int digits) {
    std::string a = truncate_decimal(e.lo, digits);
    std::string b = truncate_decimal(e.hi, digits);
    if (a == b) return a;
    // Emit the common prefix, stopping before the first differing digit.
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    std::string common = a.substr(0, n);
    if (!common.empty() && common.back() == '.') common.pop_back();
    return common;
}

Enclosure sqrt_enclosure(const Int& d, unsigned bits) {
    if (d < 0) throw std::domain_error("sqrt_enclosure: negative radicand");
    Int shifted = d << (2 * bits);
    Int s;
    mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
    Int den = Int(1) << bits;
    if (s * s == shifted) return Enclosure(Rational(s, den), Rational(s, den));
    return Enclosure(Rational(s, den), Rational(s + 1, den));
}

}  // namespace msl
