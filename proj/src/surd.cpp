#include "msl/surd.hpp"

#include <algorithm>
#include <sstream>

namespace msl {

namespace {

// Pull square factors of small primes out of d; returns (reduced d, extracted factor).
std::pair<Int, Int> strip_small_squares(Int d) {
    Int outside = 1;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        Int p2 = Int(p) * Int(p);
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            outside *= Int(p);
        }
    }
    unsigned long p = 17;
    while (Int(p) * Int(p) * Int(p) * Int(p) <= d && p < 1000) {
        Int p2 = Int(p) * Int(p);
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            outside *= Int(p);
        }
        p += 2;
    }
    return {d, outside};
}

bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s == n) {
        if (root) *root = s;
        return true;
    }
    return false;
}

}  // namespace

QuadraticSurd::QuadraticSurd(Int p_, Int q_, Int d_, Int r_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)), r(std::move(r_)) {
    if (r == 0) throw std::domain_error("QuadraticSurd: zero denominator");
    if (d < 0) throw std::domain_error("QuadraticSurd: negative radicand");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    if (q == 0) {
        d = 0;
    } else {
        auto [rd, outside] = strip_small_squares(d);
        d = rd;
        q *= outside;
        Int root;
        if (is_square(d, &root)) {  // degenerate: rational in disguise
            p += q * root;
            q = 0;
            d = 0;
        }
    }
    Int g = gcd(gcd(p, q), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& x) {
    return QuadraticSurd(x.num(), 0, 0, x.den());
}

int QuadraticSurd::sign() const {
    return SurdSum(*this).sign();
}

Enclosure QuadraticSurd::enclose_bits(unsigned bits) const {
    return SurdSum(*this).enclose_bits(bits);
}

QuadraticSurd QuadraticSurd::moebius(const Int& a, const Int& b, const Int& c, const Int& e) const {
    // (a*(p+q*sqrt(d)) + b*r) / (c*(p+q*sqrt(d)) + e*r), rationalized.
    Int nu = a * p + b * r, nv = a * q;   // numerator   nu + nv*sqrt(d)
    Int du = c * p + e * r, dv = c * q;   // denominator du + dv*sqrt(d)
    Int norm = du * du - dv * dv * d;
    if (norm == 0) throw std::domain_error("moebius: denominator vanishes");
    Int rp = nu * du - nv * dv * d;
    Int rq = nv * du - nu * dv;
    return QuadraticSurd(rp, rq, d, norm);
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    // Canonical forms make this a field-wise check; equivalent radicands were
    // already reduced, so compare q^2 d to be safe across residual factors.
    if (a.r != b.r || a.p != b.p) return false;
    if (sgn(a.q) != sgn(b.q)) return false;
    return a.q * a.q * a.d == b.q * b.q * b.d;
}

QuadraticSurd surd_from_fixed_point(const Int& a, const Int& b, const Int& c, int branch) {
    if (a == 0) throw std::domain_error("surd_from_fixed_point: not quadratic");
    Int disc = b * b - 4 * a * c;
    if (disc < 0) throw std::domain_error("surd_from_fixed_point: no real root");
    return QuadraticSurd(-b, branch >= 0 ? 1 : -1, disc, 2 * a);
}

SurdSum::SurdSum(const QuadraticSurd& s) : rat_(s.p, s.r) {
    if (s.q != 0) add_term(Rational(s.q, s.r), s.d);
}

void SurdSum::add_term(const Rational& coef, Int d) {
    if (coef.sign() == 0) return;
    auto [rd, outside] = strip_small_squares(d);
    Rational c = coef * Rational(outside);
    Int root;
    if (is_square(rd, &root)) {
        rat_ += c * Rational(root);
        return;
    }
    for (size_t i = 0; i < terms_.size(); ++i) {
        Int prod = terms_[i].d * rd;
        Int s;
        if (is_square(prod, &s)) {
            // equivalent radicands: sqrt(rd) = (s / d_i) * sqrt(d_i)
            terms_[i].coef += c * Rational(s, terms_[i].d);
            if (terms_[i].coef.sign() == 0) terms_.erase(terms_.begin() + i);
            return;
        }
    }
    terms_.push_back(Term{c, rd});
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.d < b.d; });
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    rat_ += o.rat_;
    for (const auto& t : o.terms_) add_term(t.coef, t.d);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    rat_ -= o.rat_;
    for (const auto& t : o.terms_) add_term(-t.coef, t.d);
    return *this;
}

SurdSum SurdSum::operator-() const {
    SurdSum r;
    r.rat_ = -rat_;
    for (const auto& t : terms_) r.terms_.push_back(Term{-t.coef, t.d});
    return r;
}

SurdSum SurdSum::scaled(const Rational& c) const {
    if (c.sign() == 0) return SurdSum();
    SurdSum r;
    r.rat_ = rat_ * c;
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coef * c, t.d});
    return r;
}

int SurdSum::sign() const {
    if (terms_.empty()) return rat_.sign();
    if (terms_.size() == 1 && rat_.sign() == 0) return terms_[0].coef.sign();
    if (terms_.size() == 1) {
        // rat + coef*sqrt(d), both nonzero
        int sr = rat_.sign(), sc = terms_[0].coef.sign();
        if (sr == sc) return sr;
        Rational lhs = rat_ * rat_;                                    // rat^2
        Rational rhs = terms_[0].coef * terms_[0].coef * Rational(terms_[0].d);  // coef^2 d
        if (lhs == rhs) throw std::logic_error("SurdSum: non-square radicand compared equal");
        return lhs > rhs ? sr : sc;
    }
    for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
        Enclosure e = enclose_bits(bits);
        if (e.lo.sign() > 0) return 1;
        if (e.hi.sign() < 0) return -1;
    }
    throw std::logic_error("SurdSum::sign: refinement failed to separate (should be impossible)");
}

Enclosure SurdSum::enclose_bits(unsigned bits) const {
    Enclosure acc = Enclosure::point(rat_);
    for (const auto& t : terms_) acc = acc + sqrt_enclosure(t.d, bits).scaled(t.coef);
    return acc;
}

Enclosure SurdSum::enclose(const Rational& w) const {
    if (w.sign() <= 0) throw std::invalid_argument("enclose: width must be positive");
    for (unsigned bits = 64;; bits *= 2) {
        Enclosure e = enclose_bits(bits);
        if (e.width() <= w) return e;
        if (bits > (1u << 20)) throw std::logic_error("enclose: width unreachable");
    }
}

std::string SurdSum::decimal(int digits) const {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
    Rational w = Rational(Int(1), scale);
    for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
        Enclosure e = enclose_bits(bits);
        if (e.width() > w) continue;
        std::string s = certified_decimal(e, digits);
        if (static_cast<int>(s.size()) > 0) {
            // all `digits` places certified?
            auto dot = s.find('.');
            if (digits == 0 || (dot != std::string::npos && s.size() - dot - 1 == static_cast<size_t>(digits)))
                return s;
        }
        w = w / Rational(Int(1024));
    }
    throw std::logic_error("SurdSum::decimal: could not certify digits");
}

std::string SurdSum::to_string() const {
    std::ostringstream os;
    os << rat_.to_string();
    for (const auto& t : terms_) {
        os << (t.coef.sign() < 0 ? " - " : " + ");
        os << t.coef.abs().to_string() << "*sqrt(" << t.d.get_str() << ")";
    }
    return os.str();
}

Ordering surd_compare(const SurdSum& x, const SurdSum& y) {
    return ordering_of((x - y).sign());
}

}  // namespace msl
