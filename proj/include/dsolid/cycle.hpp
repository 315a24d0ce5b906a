#pragma once

#include <string>
#include <vector>

#include "dsolid/picard.hpp"

namespace dsolid {

enum class CycleType { A0, A1, A2, A3 };

const char* to_string(CycleType t);
CycleType cycle_type_from_string(const std::string& s);

/// Half the number of components of the real anti-canonical cycle, as a
/// function of n and the type: k = n-2, n-1, n, n+1 for A0..A3.
int components_k(int n, CycleType t);

/// Inverse lookup; throws validation_error if (n, k) matches no type.
CycleType type_of(int n, int k);

inline constexpr int kDefaultEnumBound = 8;

/// A real anti-canonical cycle C = (C_1+..+C_k) + (Cbar_1+..+Cbar_k) on a
/// 2n-point blow-up of P1 x P1, with C_1 the line component. Components are
/// stored in cyclic order C_1..C_k, Cbar_1..Cbar_k; conjugation maps slot i
/// to slot i+k (mod 2k). The node z^(i) = C_i n C_{i+1} (with C_{k+1} meaning
/// Cbar_1) and its conjugate are blown up together.
struct CycleConfig {
    int n = 3;
    CycleType type = CycleType::A0;
    std::vector<CurveClass> comps;  // size 2k
    std::vector<int> history;       // node index (1..k of the parent) per blow-up

    int k() const { return static_cast<int>(comps.size()) / 2; }
    const CurveClass& comp(int i) const { return comps[i - 1]; }          // C_i, 1-based
    const CurveClass& comp_bar(int i) const { return comps[k() + i - 1]; }  // Cbar_i

    /// Self-intersection numbers s_1..s_k of the half-cycle.
    std::vector<Int> self_intersections() const;
};

/// The four n=3 base configurations, line component normalized to slot 1.
CycleConfig base_config(CycleType t);

/// Blow up the node z^(i) = C_i n C_{i+1} and its conjugate, 1 <= i <= k.
CycleConfig blow_up_node(const CycleConfig& cfg, int node);

/// Checks every structural invariant (adjacency graph, conjugation layout,
/// anticanonical sum, self-intersection total, Table-5 component count).
/// Throws invariant_violation naming the failed check.
void validate(const CycleConfig& cfg);

/// Identity key of a configuration: the (self-intersection, multiplicity)
/// half-sequences, minimized over the orientation reversal that fixes C_1.
std::string canonical_key(const CycleConfig& cfg);

/// All configurations for the given n and type, in breadth-first order.
/// Children of one parent are deduplicated by canonical_key; lineages from
/// distinct parents are kept apart even when their sequences agree.
std::vector<CycleConfig> enumerate_configs(int n, CycleType t, int bound = kDefaultEnumBound);

}  // namespace dsolid
