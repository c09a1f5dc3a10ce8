#include "msl/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <functional>
#include <memory>

#include "msl/cf.hpp"

namespace msl {

GaussCantorSpec::GaussCantorSpec(std::vector<FiniteWord> words) : alphabet(std::move(words)) {
    if (alphabet.size() < 2) throw std::invalid_argument("GaussCantorSpec: need at least two words");
    for (const auto& w : alphabet) {
        if (w.empty()) throw std::invalid_argument("GaussCantorSpec: empty word");
        for (int d : w.digits)
            if (d < 1) throw std::invalid_argument("GaussCantorSpec: digits must be positive");
    }
    for (size_t i = 0; i < alphabet.size(); ++i)
        for (size_t j = 0; j < alphabet.size(); ++j) {
            if (i == j) continue;
            const auto& a = alphabet[i].digits;
            const auto& b = alphabet[j].digits;
            if (a.size() >= b.size() && std::equal(b.begin(), b.end(), a.begin()))
                throw std::invalid_argument("GaussCantorSpec: alphabet not prefix-free");
        }
}

GaussCantorSpec GaussCantorSpec::parse(const std::string& text) {
    std::vector<FiniteWord> words;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) words.push_back(parse_compact(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ';')
            flush();
        else
            cur += c;
    }
    flush();
    return GaussCantorSpec(std::move(words));
}

namespace {

// Exact comparison of two eventually periodic continuations as CF tails whose
// first digit sits at an index of the given parity: +1 when `a` makes the
// enclosing value larger.
int cmp_tails(const OneSidedWord& a, const OneSidedWord& b, int parity) {
    auto d = first_difference(a, b);
    if (!d) return 0;
    bool even = ((parity + *d) % 2) == 0;
    return (even == (a.digit_at(*d) > b.digit_at(*d))) ? +1 : -1;
}

OneSidedWord prepend_block(const FiniteWord& b, const OneSidedWord& t) {
    return OneSidedWord(b + t.preperiod, t.period);
}

// Extremal element of the Cantor set: the block-wise greedy continuation,
// found as the best stationary parity policy and certified by a one-step
// optimality check against every alternative block.
SurdSum hull_endpoint(const std::vector<FiniteWord>& alphabet, bool want_max) {
    const int sign = want_max ? +1 : -1;
    size_t n = alphabet.size();
    // policy: block chosen at each parity state
    std::optional<OneSidedWord> best[2];
    std::vector<std::array<size_t, 2>> policies;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) policies.push_back({i, j});
    for (const auto& pol : policies) {
        for (int p0 : {0, 1}) {
            // unroll the policy from parity p0 until the parity state repeats
            FiniteWord pre;
            int p = p0;
            std::array<long, 2> seen_at{-1, -1};
            FiniteWord period;
            bool in_period = false;
            for (int guard = 0; guard < 8; ++guard) {
                if (!in_period && seen_at[p] >= 0) {
                    in_period = true;
                    period.digits.assign(pre.digits.begin() + seen_at[p], pre.digits.end());
                    pre.digits.resize(seen_at[p]);
                    break;
                }
                seen_at[p] = static_cast<long>(pre.size());
                const FiniteWord& blk = alphabet[pol[p]];
                pre = pre + blk;
                p = (p + static_cast<int>(blk.size())) % 2;
            }
            if (period.empty()) throw std::logic_error("hull_endpoint: policy unroll failed");
            OneSidedWord tail(pre, period);
            if (!best[p0] || sign * cmp_tails(tail, *best[p0], p0) > 0) best[p0] = tail;
        }
    }
    // Bellman check: no single-block deviation improves either parity state.
    for (int p : {0, 1}) {
        for (const auto& blk : alphabet) {
            OneSidedWord alt = prepend_block(blk, *best[(p + blk.size()) % 2]);
            if (sign * cmp_tails(alt, *best[p], p) > 0)
                throw std::logic_error("hull_endpoint: greedy policy not optimal");
        }
    }
    // elements of the set start at CF index 1
    return SurdSum(eval_periodic(0, *best[1]));
}

}  // namespace

std::vector<ScalePair> interval_scales(const GaussCantorSpec& spec, int depth,
                                       std::uint64_t cost_guard) {
    if (depth < 1) throw std::invalid_argument("interval_scales: depth must be >= 1");
    double count = 1;
    for (int i = 0; i < depth; ++i) count *= static_cast<double>(spec.alphabet.size());
    if (count > static_cast<double>(cost_guard))
        throw std::invalid_argument("interval_scales: |alphabet|^depth exceeds the cost guard");

    // convex-hull endpoints of the set: every admissible tail value lies between
    const SurdSum t_lo = hull_endpoint(spec.alphabet, false);
    const SurdSum t_hi = hull_endpoint(spec.alphabet, true);

    std::vector<ScalePair> out;
    FiniteWord word;
    std::function<void(int)> rec = [&](int d) {
        if (d == depth) {
            Convergents c = convergents_of(0, word);
            size_t n = c.pq.size();
            Rational q(c.pq[n - 1].second), qp(n >= 2 ? c.pq[n - 2].second : Int(0));
            // derivative of the n-fold expansion at tail value t: (q + q' t)^2,
            // increasing in t, so the extremes sit at the endpoint tails
            auto val = [&](const SurdSum& t) {
                SurdSum lin = SurdSum(q) + t.scaled(qp);
                // square: lin = a + b sqrt(d) -> a^2 + b^2 d + 2ab sqrt(d)
                if (lin.is_rational()) return SurdSum(lin.rational_part() * lin.rational_part());
                const auto& term = lin.terms()[0];
                Rational a = lin.rational_part(), b = term.coef;
                SurdSum sq(a * a + b * b * Rational(term.d));
                sq += SurdSum(QuadraticSurd(0, 1, term.d, 1)).scaled(a * b * Rational(2));
                return sq;
            };
            out.push_back(ScalePair{word, val(t_lo), val(t_hi)});
            return;
        }
        for (const auto& sym : spec.alphabet) {
            size_t before = word.size();
            word.digits.insert(word.digits.end(), sym.digits.begin(), sym.digits.end());
            rec(d + 1);
            word.digits.resize(before);
        }
    };
    rec(0);
    return out;
}

namespace {

struct MpfrInterval {
    mpfr_t lo, hi;
    MpfrInterval(unsigned bits) {
        mpfr_init2(lo, bits);
        mpfr_init2(hi, bits);
    }
    ~MpfrInterval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;
};

// Directed-rounding image of an exact surd sum.
void surd_to_interval(const SurdSum& s, MpfrInterval& out, unsigned bits) {
    Enclosure e = s.enclose_bits(bits + 16);
    mpfr_set_q(out.lo, e.lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi, e.hi.raw().get_mpq_t(), MPFR_RNDU);
}

// Certified enclosure of sum scale^-s; scales > 1, s in (0, 1].
void sum_pow_neg(const std::vector<std::unique_ptr<MpfrInterval>>& scales, const Rational& s,
                 unsigned bits, mpfr_t sum_lo, mpfr_t sum_hi) {
    mpfr_set_zero(sum_lo, 1);
    mpfr_set_zero(sum_hi, 1);
    mpfr_t neg_lo, neg_hi, t;
    mpfr_init2(neg_lo, bits);
    mpfr_init2(neg_hi, bits);
    mpfr_init2(t, bits);
    mpfr_set_q(t, s.raw().get_mpq_t(), MPFR_RNDU);
    mpfr_neg(neg_lo, t, MPFR_RNDD);  // lower bound of -s
    mpfr_set_q(t, s.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_neg(neg_hi, t, MPFR_RNDU);  // upper bound of -s
    // x^e with x > 1, e < 0 is decreasing in x and increasing in e
    for (const auto& sc : scales) {
        mpfr_pow(t, sc->hi, neg_lo, MPFR_RNDD);
        mpfr_add(sum_lo, sum_lo, t, MPFR_RNDD);
        mpfr_pow(t, sc->lo, neg_hi, MPFR_RNDU);
        mpfr_add(sum_hi, sum_hi, t, MPFR_RNDU);
    }
    mpfr_clear(neg_lo);
    mpfr_clear(neg_hi);
    mpfr_clear(t);
}

// Exact reciprocal of a surd sum with at most one radical term.
SurdSum exact_inverse(const SurdSum& s) {
    if (s.is_rational()) return SurdSum(Rational(1) / s.rational_part());
    if (s.radical_count() != 1) throw std::logic_error("exact_inverse: too many radical terms");
    Rational a = s.rational_part();
    Rational b = s.terms()[0].coef;
    Int d = s.terms()[0].d;
    Rational norm = a * a - b * b * Rational(d);
    // 1/(a + b sqrt d) = (a - b sqrt d)/norm
    SurdSum out(a / norm);
    out += SurdSum(QuadraticSurd(0, 1, d, 1)).scaled(-b / norm);
    return out;
}

}  // namespace

ExponentResult solve_exponent(const std::vector<SurdSum>& scales, const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("solve_exponent: tol must be positive");
    if (scales.empty()) throw std::invalid_argument("solve_exponent: no scales");
    for (const auto& s : scales)
        if ((s - SurdSum(Rational(1))).sign() <= 0)
            throw std::invalid_argument("solve_exponent: scales must exceed 1 (contractions)");
    if (scales.size() == 1) {
        // sum at s = 0 is exactly 1: degenerate single-interval case
        return ExponentResult{Rational(0), Rational(0), "0", 64};
    }

    // Exact endpoint test at s = 1: sum 1/scale is an exact surd sum.
    {
        SurdSum total;
        for (const auto& s : scales) total += exact_inverse(s);
        int cmp = (total - SurdSum(Rational(1))).sign();
        if (cmp == 0) return ExponentResult{Rational(1), Rational(1), "1", 64};
        if (cmp > 0) throw std::invalid_argument("solve_exponent: exponent exceeds 1");
    }

    for (unsigned bits = 128; bits <= (1u << 15); bits *= 2) {
        std::vector<std::unique_ptr<MpfrInterval>> iv;
        iv.reserve(scales.size());
        for (const auto& s : scales) {
            iv.push_back(std::make_unique<MpfrInterval>(bits));
            surd_to_interval(s, *iv.back(), bits);
        }
        mpfr_t sum_lo, sum_hi;
        mpfr_init2(sum_lo, bits);
        mpfr_init2(sum_hi, bits);

        // invariant: sum(lo) > 1 > sum(hi), certified (endpoints done exactly)
        Rational lo(0), hi(1);
        bool failed = false;
        while (!failed && hi - lo > tol) {
            bool decided = false;
            // midpoint first; thirds break algebraic coincidences at dyadics
            for (int k : {0, 1, 2}) {
                Rational cand = k == 0 ? (lo + hi) / Rational(2)
                                       : lo + (hi - lo) * Rational(k, 3);
                sum_pow_neg(iv, cand, bits, sum_lo, sum_hi);
                if (mpfr_cmp_ui(sum_lo, 1) >= 0) {
                    lo = cand;
                    decided = true;
                    break;
                }
                if (mpfr_cmp_ui(sum_hi, 1) <= 0) {
                    hi = cand;
                    decided = true;
                    break;
                }
            }
            failed = !decided;
        }
        mpfr_clear(sum_lo);
        mpfr_clear(sum_hi);
        if (!failed) {
            Enclosure bracket(lo, hi);
            return ExponentResult{lo, hi, certified_decimal(bracket, 12), bits};
        }
    }
    throw std::runtime_error("solve_exponent: bisection failed to certify at maximal precision");
}

DimensionBounds hd_bounds(const GaussCantorSpec& spec, int depth, const Rational& tol) {
    std::vector<ScalePair> scales = interval_scales(spec, depth);
    std::vector<SurdSum> for_alpha, for_beta;
    for_alpha.reserve(scales.size());
    for (const auto& s : scales) {
        if ((s.lambda_max - s.lambda_min).sign() < 0)
            throw std::logic_error("hd_bounds: scale pair out of order");
        for_alpha.push_back(s.lambda_max);
        for_beta.push_back(s.lambda_min);
    }
    DimensionBounds b{depth, solve_exponent(for_alpha, tol), solve_exponent(for_beta, tol)};
    if (b.alpha.lo > b.beta.hi) throw std::logic_error("hd_bounds: alpha exceeds beta");
    return b;
}

}  // namespace msl
