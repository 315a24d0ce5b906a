#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsolid/cycle.hpp"
#include "dsolid/poly.hpp"

namespace dsolid {

/// Branch-divisor model on the degree-m scroll: coordinates z_0..z_{m+2},
/// ridge = {z_0 = .. = z_m = 0}, marked points q = {z_{m+1} = 0} and
/// qbar = {z_{m+2} = 0} on the ridge. The branch quartic is
/// h_1 h_2 h_3 h_4 - Q^2 with exactly nu+1 of the h's in (z_0..z_m);
/// those are kept in the trailing positions h_{4-nu}..h_4.
struct QuarticModel {
    int m = 1;
    CycleType type = CycleType::A0;
    int nu = 0;
    std::array<SparsePoly, 4> h;
    SparsePoly q;
    SparsePoly r;  // expanded quartic, frozen when the model is built

    // Rational roots chosen for each ridge-ideal h (index 1..4, root list);
    // the scroll planes over these roots carry the double conics.
    std::vector<std::pair<int, std::vector<Rat>>> ridge_roots;

    int nvars() const { return m + 3; }
    bool is_ridge_h(int idx) const { return idx >= 4 - nu; }  // 1-based
};

/// Validates and assembles a model from explicit parts (the expanded quartic
/// is computed here). Throws validation_error on any broken invariant:
/// wrong degrees, wrong ideal-membership count, a z_{m+1}^2 / z_{m+2}^2
/// monomial in Q, a missing z_{m+1} z_{m+2} monomial, or data not fixed by
/// the real structure (coefficient conjugation swaps z_{m+1} and z_{m+2}).
QuarticModel make_quartic_model(CycleType type, int m, std::array<SparsePoly, 4> h,
                                SparsePoly q);

/// Seeded random model with the type's ideal constraint; ridge-ideal h's are
/// built from rational root sets so their double-conic planes are exact.
QuarticModel build_quartic(CycleType type, int m, std::uint64_t seed);

/// Scroll plane over the parameter lambda: z_j = lambda^j z_0, j = 1..m.
std::vector<Rat> plane_through(const Rat& lambda, int m);

/// Substitute z_j <- c_j z_0 and project to the plane coordinates
/// (z_0, z_{m+1}, z_{m+2}).
SparsePoly restrict_to_plane(const SparsePoly& f, const std::vector<Rat>& c);
SparsePoly restrict_to_plane(const QuarticModel& model, const std::vector<Rat>& c);

/// Restriction of the expanded quartic to the ridge, in (z_{m+1}, z_{m+2}).
SparsePoly restrict_to_ridge(const QuarticModel& model);

enum class RidgePoint { Q, QBar };

enum class SingType { A0Tangent, A1, A2, A3, Other };
const char* to_string(SingType s);

/// Classifies the plane-quartic germ at q = (0:0:1) or qbar = (0:1:0) in the
/// plane coordinates (z_0, z_{m+1}, z_{m+2}): smooth with contact order two
/// against the ridge line {z_0 = 0} -> A0Tangent; corank-0 double point ->
/// A1; corank-1 points are split by the square-completion residue order
/// (3 -> A2, 4 -> A3); everything else -> Other. Exact rational arithmetic,
/// series truncated at total degree five.
SingType singularity_type_at(const SparsePoly& ternary_quartic, RidgePoint p);

/// Checks that the branch equation restricted to the hyperplane h_alpha = 0
/// is a (rational multiple of a) perfect square, namely the square of the
/// restricted Q. alpha must index an h outside the ridge ideal.
bool verify_trope(const QuarticModel& model, int alpha);

/// Same check on a scroll plane annihilating one of the ridge-ideal h's.
bool verify_double_conic(const QuarticModel& model, const std::vector<Rat>& plane);

}  // namespace dsolid
