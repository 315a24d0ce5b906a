#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dsolid/divisor.hpp"

namespace dsolid {

/// Per-node small-resolution selections. ridge1 / ridge_k say whether the
/// resolutions over the first and last node blow up the ridge components
/// E_1, Ebar_1; the interior entries (i = 2..k-1) pick E_i (true) or E_{i+1}.
struct ResolutionChoice {
    bool ridge1 = true;
    bool ridge_k = true;
    std::vector<bool> interior;  // size max(k-2, 0); empty means all-default (E_i)

    bool interior_blows_lower(int i, int k) const {  // i in 2..k-1
        if (interior.empty()) return true;
        (void)k;
        return interior[static_cast<size_t>(i - 2)];
    }
    static ResolutionChoice canonical() { return {}; }
};

Int positive_part(const Int& x);

/// e = d_2 + sum_{1<j<k} (d_{j+1}-d_j)_+ , plus (d_2-2)_+ if ridge1,
/// plus (d_k-2)_+ if ridge_k. Interior selections never enter.
Int compute_e(const std::vector<Int>& d, const ResolutionChoice& rc);
Int compute_e(const DDivisor& dd, const ResolutionChoice& rc);

/// One slot of a base-curve chain in the doubled cycle over a reducible fiber.
struct ChainSlot {
    enum class Kind { C, CBar, Delta, DeltaBar };
    Kind kind;
    int index;  // component index for C/CBar; carrier component index for Delta
    bool carrier_barred;  // which of E_index / Ebar_index carries the slot
};

struct BaseCurveChain {
    int fiber = 0;               // 1..k
    bool conjugate_side = false;
    std::vector<ChainSlot> slots;
    Int multiplicity;
};

/// The stable base curves of the line bundle D for the given resolution,
/// chains and their conjugates listed separately.
std::vector<BaseCurveChain> stable_base_curves(const std::vector<Int>& d,
                                               const ResolutionChoice& rc);
std::vector<BaseCurveChain> stable_base_curves(const DDivisor& dd, const ResolutionChoice& rc);

/// Re-derives e by intersecting the chain system with the section E_1 n E_2,
/// which must agree with compute_e for every choice.
Int e_from_chains(const std::vector<Int>& d, const ResolutionChoice& rc,
                  const std::vector<BaseCurveChain>& chains);

struct MuValue {
    Int value;
    bool exact = true;
};

/// mu over the boundary fibers: zero when the ridge components are blown up,
/// otherwise (d_2-2)_+ resp. (d_k-2)_+.
std::pair<MuValue, MuValue> compute_mu_boundary(const std::vector<Int>& d,
                                                const ResolutionChoice& rc);

/// mu over an interior fiber (2 <= fiber <= k-1), independent of the
/// resolution. Fibers with d_i = d_{i+1} carry no base curve and give
/// exact(0). Otherwise the fixed end of the stable chain is blown up and the
/// excess vanishing forced on the degree-one line-component slots is
/// propagated through the chain, weighting each slot by its two normal
/// degrees (the split fiber direction and the half-fiber self-intersection
/// s_j + 1 at the fixed end, s_j further along). A forced value of zero, or a
/// positive value reached on a single-slot chain, is exact; a positive value
/// on a longer chain is only certified as a lower bound.
MuValue compute_mu_interior(const std::vector<Int>& d, int fiber);
MuValue compute_mu_interior(const CycleConfig& cfg, const DDivisor& dd,
                            const ResolutionChoice& rc, int fiber);

struct RidgeBreakdown {
    bool ridge1, ridge_k;
    Int e;
    Int mu1, mu_k;  // boundary contributions for this choice
};

struct MInvariant {
    Int e;                    // for the canonical choice (both ridge flags set)
    std::vector<MuValue> mu;  // per fiber 1..k, canonical choice
    Int m;
    bool exact = true;                      // all mu entries exact
    std::array<RidgeBreakdown, 4> choices;  // e + mu1 + mu_k must be constant
};

/// m = e + sum mu^(i), evaluated for the canonical resolution.
MInvariant compute_m(const std::vector<Int>& d);
MInvariant compute_m(const CycleConfig& cfg, const DDivisor& dd);

/// Dimension of the relevant section space: l+1 below m, 3l - 2m + 3 beyond.
Int h0_formula(const Int& m, const Int& l);

/// chi(lF) = (4-n)/3 l^3 + (4-n) l^2 + (11-2n)/3 l + 1; always an integer.
Int riemann_roch(const Int& n, const Int& l);

/// Greedy maximal-adjacent-pair blow-up sequence: starting from (1,2), insert
/// d_i + d_{i+1} at the adjacent pair holding the two largest multiplicities.
std::vector<Int> fibonacci_sequence(int n);

}  // namespace dsolid
