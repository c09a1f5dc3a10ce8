#pragma once

#include <cstdint>
#include <functional>

#include "msl/constants.hpp"
#include "msl/spectra.hpp"

namespace msl {

// One row of a string table: pattern digits, starred position, the printed
// threshold, and (for the two entries whose derivation assumes it) the
// auxiliary cap "lambda at star+offset <= 3.15".
struct TableEntry {
    int index;                  // numbering as published: 1..13 / 15..21
    std::string text;           // compact literal with '*'
    Rational threshold;
    bool lower_bound;           // true: bound must exceed threshold; false: stay below
    std::optional<long> aux_offset;  // aux position relative to the star
};

struct EntryReport {
    TableEntry entry;
    SurdSum bound;              // certified extremal value over all admissible completions
    bool pass;                  // exact comparison against the printed threshold
    std::string bound_decimal;  // 14 certified places
};

const std::vector<TableEntry>& forbidden_table();  // entries (1)..(13), lower bounds
const std::vector<TableEntry>& allowed_table();    // entries (15)..(21), upper bounds

std::vector<EntryReport> verify_forbidden_table();
std::vector<EntryReport> verify_allowed_table();

// Constraint set for the forced-window search.
struct WindowConstraint {
    PartialWindow assigned;
    std::vector<std::pair<long, Rational>> lambda_caps;    // lambda_pos < cap required
    std::vector<std::pair<long, Rational>> lambda_floors;  // lambda_pos > floor required
};

struct SearchOutcome {
    long range_lo = 0, range_hi = 0;
    std::vector<FiniteWord> survivors;  // digits at range_lo..range_hi
    std::uint64_t nodes_explored = 0;
};

// Depth-first assignment over [range_lo, range_hi] (positions ordered by
// distance from 0, digit 2 tried first), pruning any branch whose certified
// extremal bounds already violate a cap or floor. node_guard == 0 reads
// MSL_NODE_GUARD or defaults to 1e8.
SearchOutcome forced_window_search(const WindowConstraint& c, long range_lo, long range_hi,
                                   std::uint64_t node_guard = 0);

// The two published presets.
WindowConstraint lf4_constraints();                      // floor 3.118117 at 0 + caps
WindowConstraint lf4_constraints(const Rational& floor_value);
WindowConstraint lf3p_constraints();                     // fixed 15-digit window + caps
// The 31-digit window both presets are expected to force, and its transpose.
const FiniteWord& forced_window_word();

// Exact value of the two-sided recursive lower-bound expression at depth a.
SpectrumValue recursive_lower_bound(int a);

// Chain of certified lower bounds terminating at f.
struct ChainStep {
    std::string word;      // backward-word prefix in compact notation
    SurdSum bound;         // [ov head] + min completion
    bool forcing;          // digit forced against the parity-minimal choice
    bool forcing_verified; // anti-digit branch mechanically excluded
};

struct ChainReport {
    std::vector<ChainStep> steps;
    SurdSum final_value;
    bool final_equals_f;
    bool strictly_increasing;  // across forcing steps
};

ChainReport verify_f_minimality_chain();

// Appendix family: the periodic words P_a and their functional values.
struct AppendixReport {
    int a;
    SpectrumValue lagrange;       // l(ov(P_a)) = m(ov(P_a))
    bool markov_at_origin;        // supremum attained at the distinguished phase
    SpectrumValue lambda_plus9;
    SpectrumValue lambda_minus9;
};

AppendixReport appendix_pa(int a);
FiniteWord appendix_word(int a);             // P_a with the distinguished digit first
SurdSum appendix_lambda9_limit();            // 3.11812017817071...
SurdSum appendix_lambda_minus9_limit();      // 3.1180041084...

}  // namespace msl
