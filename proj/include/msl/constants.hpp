#pragma once

#include "msl/spectra.hpp"

namespace msl {

// The four named values of the isolation interval: c_inf and C_inf are its
// endpoints, f the smallest isolated Markov value inside it, sigma Freiman's
// original one.
struct NamedConstant {
    std::string name;
    SurdSum value;
    std::string decimal;  // certified truncation, `digits` places
};

NamedConstant compute_constant(const std::string& name, int digits);

// Defining sequences: f = lambda_0 = m of rho_sequence(), sigma likewise for
// freiman_sequence(); both attain their Markov value at the origin.
const BiInfiniteSequence& rho_sequence();
const BiInfiniteSequence& freiman_sequence();
// Family of Prop.-7.1-type sequences: right tail ov(gamma) after the common
// head; gamma = 2_2 1_2 gives the interval-membership example.
BiInfiniteSequence isolated_family_sequence(const FiniteWord& gamma_period);

SurdSum c_inf_value();
SurdSum C_inf_value();
SurdSum f_value();
SurdSum sigma_value();
SurdSum f_closed_form();  // (71788723850 + 2 sqrt210)/101867079581 + (217 + sqrt156817)/254

struct ClosedFormReport {
    bool components_satisfy_quadratics;  // each periodic CF root plugged back in
    bool exact_equal;                    // surd_compare says Equal
    std::string decimal;                 // certified digits of the common value
    int digits;
};

ClosedFormReport verify_f_closed_form(int digits);

}  // namespace msl
