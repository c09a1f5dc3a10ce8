#pragma once

#include "msl/surd.hpp"
#include "msl/words.hpp"

namespace msl {

// Prefix-free finite alphabet of {1,2}-words defining a continued-fraction
// Cantor set.
struct GaussCantorSpec {
    std::vector<FiniteWord> alphabet;

    explicit GaussCantorSpec(std::vector<FiniteWord> words);
    static GaussCantorSpec parse(const std::string& text);  // "1_2;2_2"
};

// Exact derivative range of the n-fold expansion over one construction
// interval: (q + q'*t)^2 at the two extreme tail values t = [0;ov(2)],
// [0;ov(1)], which bracket every admissible continuation.
struct ScalePair {
    FiniteWord word;      // concatenated digits of (x_1..x_n)
    SurdSum lambda_min;   // inf of the derivative over the interval
    SurdSum lambda_max;   // sup
};

std::vector<ScalePair> interval_scales(const GaussCantorSpec& spec, int depth,
                                       std::uint64_t cost_guard = (1u << 20));

enum class ExponentMode { Alpha, Beta };

struct ExponentResult {
    Rational lo, hi;        // certified bracket, hi - lo <= tol
    std::string decimal;    // certified digits common to both ends
    unsigned precision_bits;
};

// Solves sum_R scale_R^{-s} = 1 by bisection; every decision is made with
// directed-rounding interval arithmetic, so the bracket is certified:
// sum(lo) >= 1 >= sum(hi). Alpha uses the lambda_max scales, Beta lambda_min.
ExponentResult solve_exponent(const std::vector<SurdSum>& scales, const Rational& tol);

struct DimensionBounds {
    int depth;
    ExponentResult alpha, beta;
};

// Palis-Takens bracket alpha_n <= HD(K) <= beta_n.
DimensionBounds hd_bounds(const GaussCantorSpec& spec, int depth, const Rational& tol);

}  // namespace msl
