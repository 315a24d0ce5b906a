#pragma once

#include <vector>

#include "dsolid/divisor.hpp"

namespace dsolid {

enum class CurveFamily { Exceptional, Ruling10, Ruling01, OneOne, OneTwo, TwoOne, NodalTwoTwo };

const char* to_string(CurveFamily f);

struct CatalogEntry {
    CurveClass cls;
    CurveFamily family;
};

/// (-1)-classes on the intermediate n=3 surface that lie over bitangents of
/// the branch quartic: c^2 = -1, c.(-K) = 1, and c disjoint from every
/// (-2)-component of the type's base cycle (meeting one would put the image
/// through a singular point, a negative pairing would make c reducible).
struct EffectiveCurveCatalog {
    CycleType type;
    std::vector<CatalogEntry> entries;
};

EffectiveCurveCatalog enumerate_minus_one(CycleType t);

struct BitangentPair {
    CurveClass a, b;  // a + b = -K, a.b = 2
    bool real = false;
    bool ridge = false;  // the pair over the ridge line (preimage = D)
};

/// Pairs every catalog class with its partner (-K) - c. An unpaired class
/// signals a broken incidence rule and raises invariant_violation.
std::vector<BitangentPair> pair_bitangents(const EffectiveCurveCatalog& cat);

/// The conjugate-invariant pairs with the ridge pair removed.
std::vector<BitangentPair> real_bitangents(const std::vector<BitangentPair>& pairs);

}  // namespace dsolid
