#include "msl/cf.hpp"

#include <algorithm>

namespace msl {

bool Convergents::determinant_ok() const {
    for (size_t k = 1; k < pq.size(); ++k) {
        Int det = pq[k].first * pq[k - 1].second - pq[k - 1].first * pq[k].second;
        if (det != ((k - 1) % 2 == 0 ? 1 : -1)) return false;
    }
    return true;
}

Convergents convergents_of(const Int& a0, const FiniteWord& w) {
    Convergents c;
    Int pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
    Int p0 = a0, q0 = 1;
    c.pq.emplace_back(p0, q0);
    for (int d : w.digits) {
        if (d < 1) throw std::invalid_argument("continued fraction digit < 1");
        Int p1 = d * p0 + pm1, q1 = d * q0 + qm1;
        pm1 = p0;
        qm1 = q0;
        p0 = p1;
        q0 = q1;
        c.pq.emplace_back(p0, q0);
    }
    return c;
}

Rational eval_finite(const Int& a0, const FiniteWord& w) {
    Convergents c = convergents_of(a0, w);
    return Rational(c.p(), c.q());
}

namespace {

struct Mat {
    Int a{1}, b{0}, c{0}, d{1};
    void mul_digit(int dig) {  // right-multiply by [[dig,1],[1,0]]
        Int na = a * dig + b, nc = c * dig + d;
        b = a;
        d = c;
        a = na;
        c = nc;
    }
};

}  // namespace

QuadraticSurd eval_periodic(const Int& a0, const OneSidedWord& w) {
    for (int d : w.preperiod.digits)
        if (d < 1) throw std::invalid_argument("continued fraction digit < 1");
    for (int d : w.period.digits)
        if (d < 1) throw std::invalid_argument("continued fraction digit < 1");

    // Purely periodic tail value y > 1: fixed point of the period matrix.
    Mat m;
    for (int d : w.period.digits) m.mul_digit(d);
    // y = (a y + b)/(c y + d)  =>  c y^2 + (d - a) y - b = 0
    QuadraticSurd y = surd_from_fixed_point(m.c, m.d - m.a, -m.b, +1);
    if (SurdSum(y).sign() <= 0) throw std::logic_error("eval_periodic: nonpositive periodic tail");

    // Apply [a0; preperiod, y].
    Mat pre;
    pre.a = a0;
    pre.b = 1;
    pre.c = 1;
    pre.d = 0;
    for (int d : w.preperiod.digits) pre.mul_digit(d);
    return y.moebius(pre.a, pre.b, pre.c, pre.d);
}

Ordering compare_words(const Int& a0x, const OneSidedWord& x, const Int& a0y, const OneSidedWord& y) {
    if (a0x != a0y) return a0x < a0y ? Ordering::Less : Ordering::Greater;
    auto diff = first_difference(x, y);
    if (!diff) return Ordering::Equal;
    size_t index = *diff + 1;  // absolute CF index (a0 at 0)
    int dx = x.digit_at(*diff), dy = y.digit_at(*diff);
    // larger digit at even index -> larger value; odd index flips
    bool x_greater = (index % 2 == 0) == (dx > dy);
    return x_greater ? Ordering::Greater : Ordering::Less;
}

OneSidedWord extremal_tail(size_t first_free_index, Extremal dir) {
    int a = extremal_digit(first_free_index, dir);
    int b = extremal_digit(first_free_index + 1, dir);
    return OneSidedWord(FiniteWord{}, FiniteWord{a, b});
}

namespace {

// Digits of the extremal completion at relative CF indices 1..last, given
// assignments keyed by relative index (absolute parity = relative parity).
FiniteWord completion_digits(const std::map<long, int>& rel_assigned, long last, Extremal dir) {
    FiniteWord out;
    for (long k = 1; k <= last; ++k) {
        auto it = rel_assigned.find(k);
        out.digits.push_back(it != rel_assigned.end() ? it->second
                                                      : extremal_digit(static_cast<size_t>(k), dir));
    }
    return out;
}

std::pair<Int, OneSidedWord> extremal_side(const PartialWindow& window, long j, Extremal dir,
                                           bool forward) {
    std::map<long, int> rel;
    long last = 0;
    for (const auto& [pos, dig] : window) {
        long k = forward ? pos - j : j - pos;
        if (forward ? k < 0 : k <= 0) continue;
        rel[k] = dig;
        last = std::max(last, k);
    }
    Int a0;
    if (forward) {
        auto it = window.find(j);
        a0 = it != window.end() ? it->second : extremal_digit(0, dir);
        rel.erase(0);
    } else {
        a0 = 0;
    }
    FiniteWord pre = completion_digits(rel, last, dir);
    OneSidedWord tail = extremal_tail(static_cast<size_t>(last) + 1, dir);
    FiniteWord per = tail.period;
    return {a0, OneSidedWord(pre, per)};
}

}  // namespace

std::pair<Int, OneSidedWord> extremal_forward(const PartialWindow& window, long j, Extremal dir) {
    return extremal_side(window, j, dir, true);
}

std::pair<Int, OneSidedWord> extremal_backward(const PartialWindow& window, long j, Extremal dir) {
    return extremal_side(window, j, dir, false);
}

LambdaWindowBound bound_lambda_window(const PartialWindow& window, long j) {
    if (window.empty()) throw std::invalid_argument("bound_lambda_window: empty window");
    LambdaWindowBound out;
    for (Extremal dir : {Extremal::Min, Extremal::Max}) {
        auto [fa0, fw] = extremal_forward(window, j, dir);
        auto [ba0, bw] = extremal_backward(window, j, dir);
        SurdSum v = SurdSum(eval_periodic(fa0, fw)) + SurdSum(eval_periodic(ba0, bw));
        (dir == Extremal::Min ? out.lo : out.hi) = v;
    }
    return out;
}

Rational agreement_gap(const FiniteWord& prefix) {
    Convergents c = convergents_of(0, prefix);
    size_t n = c.pq.size();
    const Int& qm = c.pq[n - 1].second;
    Int qprev = n >= 2 ? c.pq[n - 2].second : Int(0);
    return Rational(Int(1), qm * (qm + qprev));
}

}  // namespace msl
