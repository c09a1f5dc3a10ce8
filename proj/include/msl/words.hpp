#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msl/rational.hpp"

namespace msl {

// Finite word over positive integer digits.
struct FiniteWord {
    std::vector<int> digits;

    FiniteWord() = default;
    FiniteWord(std::initializer_list<int> d) : digits(d) {}
    explicit FiniteWord(std::vector<int> d) : digits(std::move(d)) {}

    size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    int operator[](size_t i) const { return digits[i]; }
    friend bool operator==(const FiniteWord& a, const FiniteWord& b) { return a.digits == b.digits; }
    friend bool operator<(const FiniteWord& a, const FiniteWord& b) { return a.digits < b.digits; }

    FiniteWord operator+(const FiniteWord& o) const {
        FiniteWord r(*this);
        r.digits.insert(r.digits.end(), o.digits.begin(), o.digits.end());
        return r;
    }
    FiniteWord repeated(int times) const;
};

// Digit reversal.
FiniteWord transpose(const FiniteWord& w);

// Compact multiplicity notation: "2_4 1_2" -> 2,2,2,2,1,1. Tokens are
// digit['_'count] separated by spaces or commas.
FiniteWord parse_compact(const std::string& text);
std::string render_compact(const FiniteWord& w);

// As parse_compact but one token may carry a trailing '*' marking a
// distinguished position; returns the word and the marked index.
std::pair<FiniteWord, int> parse_starred(const std::string& text);

// Eventually periodic one-sided word: preperiod then period repeated forever.
// Normalized: period primitive, preperiod minimal.
struct OneSidedWord {
    FiniteWord preperiod;
    FiniteWord period;

    OneSidedWord() = default;
    OneSidedWord(FiniteWord pre, FiniteWord per);

    int digit_at(size_t k) const {
        if (k < preperiod.size()) return preperiod[k];
        return period[(k - preperiod.size()) % period.size()];
    }
    FiniteWord prefix(size_t n) const;
    friend bool operator==(const OneSidedWord& a, const OneSidedWord& b) {
        return a.preperiod == b.preperiod && a.period == b.period;
    }
};

// First index where two one-sided words differ; nullopt if identical.
std::optional<size_t> first_difference(const OneSidedWord& a, const OneSidedWord& b);

// Bi-infinite sequence, eventually periodic on both sides. The left tail
// stores digits outward (position -1 first); core occupies 0..|core|-1;
// the right tail continues from |core|.
struct BiInfiniteSequence {
    OneSidedWord left;   // outward: left.digit_at(k) is position -1-k
    FiniteWord core;
    OneSidedWord right;

    int digit_at(long i) const {
        if (i < 0) return left.digit_at(static_cast<size_t>(-1 - i));
        if (i < static_cast<long>(core.size())) return core[static_cast<size_t>(i)];
        return right.digit_at(static_cast<size_t>(i) - core.size());
    }

    BiInfiniteSequence shifted(long k) const;   // digit_at(i) == old digit_at(i + k)
    BiInfiniteSequence reversed() const;        // digit_at(i) == old digit_at(-i)

    // One-sided views used by the two-sided CF functional.
    OneSidedWord forward_from(long i) const;    // digits at i, i+1, i+2, ...
    OneSidedWord backward_from(long i) const;   // digits at i-1, i-2, ...
};

// Sequence literal: [left ';'] core [';' right]. A side tail is written
// naturally (left period leftmost): "over(1 2) 2 1" on the left means
// ...(1 2)(1 2) 2 1 | core. Origin is the first core digit.
BiInfiniteSequence parse_sequence(const std::string& text);
std::string render_sequence(const BiInfiniteSequence& seq);

// Parse a one-sided literal "w over(p)" (right-tail form).
OneSidedWord parse_one_sided(const std::string& text);

// The 27 forbidden patterns: the thirteen strings of the first table, their
// transposes, and 2 1_2 2_4 1 2_2 1_2 2_3 with its transpose, deduplicated.
const std::vector<FiniteWord>& forbidden_patterns();

// Start positions in [from, to) where `needle` occurs in `hay`.
std::vector<long> find_pattern(const BiInfiniteSequence& hay, const FiniteWord& needle,
                               long from, long to);

struct MembershipResult {
    bool ok;
    std::optional<size_t> violation_pos;   // start of the first occurrence
    std::optional<size_t> pattern_index;   // index into forbidden_patterns()
};

// True iff no forbidden pattern occurs. For eventually periodic words scanning
// preperiod + 2 periods + max pattern length suffices (and is asserted).
MembershipResult y_membership(const FiniteWord& w);
MembershipResult y_membership(const OneSidedWord& w);

}  // namespace msl
