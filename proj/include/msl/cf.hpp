#pragma once

#include <map>

#include "msl/rational.hpp"
#include "msl/surd.hpp"
#include "msl/words.hpp"

namespace msl {

// Convergents p_k/q_k of [a0; w], including the 0th convergent a0/1.
struct Convergents {
    std::vector<std::pair<Int, Int>> pq;

    const Int& p() const { return pq.back().first; }
    const Int& q() const { return pq.back().second; }
    // determinant identity p_k q_{k-1} - p_{k-1} q_k = (-1)^{k-1}
    bool determinant_ok() const;
};

Convergents convergents_of(const Int& a0, const FiniteWord& w);

// Exact value of the finite continued fraction [a0; w].
Rational eval_finite(const Int& a0, const FiniteWord& w);

// Exact value of [a0; w] for an eventually periodic w. The purely periodic
// tail is the positive fixed point of its digit matrix; the preperiod is
// applied as a Moebius transform.
QuadraticSurd eval_periodic(const Int& a0, const OneSidedWord& w);

// Ordering of [a0x; x] vs [a0y; y] by the alternating first-difference rule.
Ordering compare_words(const Int& a0x, const OneSidedWord& x, const Int& a0y, const OneSidedWord& y);
inline Ordering compare_words(const OneSidedWord& x, const OneSidedWord& y) {
    return compare_words(0, x, 0, y);
}

enum class Extremal { Min, Max };

// Optimal {1,2} completion digit for an absolute CF index (a0 has index 0):
// Max takes 2 at even indices, Min the complement.
inline int extremal_digit(size_t index, Extremal dir) {
    bool even = index % 2 == 0;
    return (dir == Extremal::Max) == even ? 2 : 1;
}

// The purely periodic tail (ov(1,2) or ov(2,1)) whose first digit sits at
// absolute CF index `first_free_index`, making [prefix, tail] extremal among
// all {1,2} completions.
OneSidedWord extremal_tail(size_t first_free_index, Extremal dir);

// Partial digit assignment over sequence positions.
using PartialWindow = std::map<long, int>;

// Certified range of lambda_j over all {1,2} sequences extending `window`:
// exact extremal sums plus a rational enclosure of requested tightness.
struct LambdaWindowBound {
    SurdSum lo, hi;

    Enclosure enclosure(const Rational& width) const {
        return Enclosure(lo.enclose(width).lo, hi.enclose(width).hi);
    }
};

LambdaWindowBound bound_lambda_window(const PartialWindow& window, long j);

// One side of the functional: extremal completion of the forward word from j
// (or the backward word from j-1 outward) as an eventually periodic word.
// Returned pair is (leading digit a0, tail word).
std::pair<Int, OneSidedWord> extremal_forward(const PartialWindow& window, long j, Extremal dir);
std::pair<Int, OneSidedWord> extremal_backward(const PartialWindow& window, long j, Extremal dir);

// Exact diameter of {[x; prefix, tail] : tail arbitrary digits >= 1} =
// 1/(q_m(q_m + q_{m-1})); any two CFs sharing the prefix (and leading digit)
// differ by less than this.
Rational agreement_gap(const FiniteWord& prefix);

}  // namespace msl
