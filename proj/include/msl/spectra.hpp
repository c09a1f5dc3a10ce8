#pragma once

#include "msl/cf.hpp"
#include "msl/surd.hpp"
#include "msl/words.hpp"

namespace msl {

// Exact two-sided functional value, a sum of at most two quadratic surds.
struct SpectrumValue {
    SurdSum value;

    explicit SpectrumValue(SurdSum v = SurdSum()) : value(std::move(v)) {
        if (value.radical_count() > 2)
            throw std::logic_error("SpectrumValue: more than two radical terms");
    }
    std::string decimal(int digits) const { return value.decimal(digits); }
};

// lambda_i(A) = [a_i; a_{i+1}, ...] + [0; a_{i-1}, a_{i-2}, ...], exact.
SpectrumValue lambda_at(const BiInfiniteSequence& seq, long i);

// How the deep positions of one tail phase relate to the periodic limit value.
enum class TailApproach {
    Pure,       // lambda equals the periodic value at every deep position
    Below,      // all deep unscanned positions lie strictly below the limit
    Above,      // all strictly above (but within the gap bound)
    Alternating // parity-split: both directions occur
};

struct TailPhaseInfo {
    bool left_side;             // which tail
    size_t phase;               // 0 .. period-1
    SurdSum periodic_value;     // lambda of the two-sided periodic extension
    TailApproach approach;
    size_t first_difference;    // CF index of the first deviation (Pure: unused)
    Rational gap;               // |lambda_i - periodic_value| bound for unscanned i
};

struct MarkovCertificate {
    long attaining_position = 0;
    bool attained_in_limit = false;
    long window_lo = 0, window_hi = 0;  // scanned positions, inclusive
    std::vector<TailPhaseInfo> phases;
};

struct MarkovResult {
    SpectrumValue value;
    MarkovCertificate certificate;
};

// Exact supremum of lambda over all positions, with a certificate that the
// scan window dominates everything outside it. Ties are reported at the
// smallest |i|, broken toward negative i. If the supremum is approached only
// along a tail, the periodic phase value is returned with attained_in_limit.
MarkovResult markov_value(const BiInfiniteSequence& seq);

// Independent re-check of a certificate: recomputes every scanned lambda,
// every phase value, gap and direction, and verifies the dominations.
bool replay_certificate(const BiInfiniteSequence& seq, const MarkovResult& result);

struct LagrangeResult {
    SpectrumValue value;
    size_t attaining_phase;
};

// l(ov(w)) = m(ov(w)) = max over the |w| phases, exact.
LagrangeResult lagrange_value(const FiniteWord& period);

// Purely periodic two-sided sequence ...www.www... with w[phase] at origin.
BiInfiniteSequence periodic_sequence(const FiniteWord& period, size_t phase = 0);

}  // namespace msl
