#pragma once

#include <utility>
#include <vector>

#include "dsolid/cycle.hpp"

namespace dsolid {

/// Multiplicity data of the nef-and-big divisor D = sum d_i (C_i + Cbar_i)
/// and of its half D^h = sum d'_i C_i + sum d''_i Cbar_i.
struct DDivisor {
    std::vector<Int> d;        // d_1..d_k, d_1 = 1
    std::vector<Int> dprime;   // multiplicity of C_i in D^h
    std::vector<Int> ddprime;  // multiplicity of Cbar_i in D^h
    Int d_max;

    int k() const { return static_cast<int>(d.size()); }
};

/// Replay the history: the n=3 divisor is the cycle itself (all d_i = 1) and
/// each node blow-up gives the inserted component the sum of its neighbours'
/// multiplicities. Throws if the history does not match the configuration.
std::vector<Int> compute_d(const CycleConfig& cfg);

/// Same replay for the half divisor, seeded with the multiplicity-one chain
/// through C_1 representing (1,1) - e_1 - e_2 - e_3 on the base surface.
/// At the seam node the halves mix: d'_{k+1} = d'_k + d''_1 and conversely.
std::pair<std::vector<Int>, std::vector<Int>> compute_half(const CycleConfig& cfg);

/// d, d', d'' assembled and fully validated (nef degrees, splitting, the
/// boundary values and the sign coherence of the half multiplicities).
DDivisor compute_divisor(const CycleConfig& cfg);

/// Runs the validation only; throws invariant_violation naming the check.
void validate_divisor(const CycleConfig& cfg, const DDivisor& dd);

/// D as a lattice class.
CurveClass divisor_class(const CycleConfig& cfg, const DDivisor& dd);

/// D^h as a lattice class.
CurveClass half_divisor_class(const CycleConfig& cfg, const DDivisor& dd);

/// Indices alpha for which D^h_alpha is defined: {1,2,3}, {1,2}, {1}, {}.
std::vector<int> admissible_alphas(CycleType t);

/// (D^h_alpha, Dbar^h_alpha) = (D^h + e_alpha - ebar_alpha, conjugate).
/// Throws validation_error when alpha is outside the type's range.
std::pair<CurveClass, CurveClass> half_class_alpha(const CycleConfig& cfg, const DDivisor& dd,
                                                   int alpha);

}  // namespace dsolid
