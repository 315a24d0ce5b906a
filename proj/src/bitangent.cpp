#include "dsolid/bitangent.hpp"

#include <algorithm>

namespace dsolid {

const char* to_string(CurveFamily f) {
    switch (f) {
        case CurveFamily::Exceptional: return "exceptional";
        case CurveFamily::Ruling10: return "(1,0) through 1 point";
        case CurveFamily::Ruling01: return "(0,1) through 1 point";
        case CurveFamily::OneOne: return "(1,1) through 3 points";
        case CurveFamily::OneTwo: return "(1,2) through 5 points";
        case CurveFamily::TwoOne: return "(2,1) through 5 points";
        case CurveFamily::NodalTwoTwo: return "nodal (2,2) through 6 points";
    }
    return "?";
}

namespace {

CurveFamily family_of(int a, int b, const std::vector<int>& mult) {
    const int mx = *std::max_element(mult.begin(), mult.end());
    if (a == 0 && b == 0) return CurveFamily::Exceptional;
    if (a == 1 && b == 0) return CurveFamily::Ruling10;
    if (a == 0 && b == 1) return CurveFamily::Ruling01;
    if (a == 1 && b == 1) return CurveFamily::OneOne;
    if (a == 1 && b == 2) return CurveFamily::OneTwo;
    if (a == 2 && b == 1) return CurveFamily::TwoOne;
    if (a == 2 && b == 2 && mx == 2) return CurveFamily::NodalTwoTwo;
    throw invariant_violation("bitangent families",
                              "(-1)-class outside the expected curve families");
}

}  // namespace

EffectiveCurveCatalog enumerate_minus_one(CycleType t) {
    EffectiveCurveCatalog cat;
    cat.type = t;
    if (t == CycleType::A3) return cat;  // two tangent conics admit no bitangent

    const LatticeBasis b3(3);
    const CycleConfig base = base_config(t);
    std::vector<CurveClass> minus_two;
    for (const auto& c : base.comps)
        if (intersect(c, c) == -2) minus_two.push_back(c);

    const CurveClass mk = anticanonical(b3);
    auto admit = [&](const CurveClass& c) {
        if (intersect(c, c) != -1 || intersect(c, mk) != 1) return false;
        for (const auto& x : minus_two)
            if (intersect(c, x) != 0) return false;
        return true;
    };

    // Pure exceptional classes.
    for (int i = 1; i <= 3; ++i) {
        for (const CurveClass& c : {class_e(b3, i), class_ebar(b3, i)}) {
            if (admit(c)) cat.entries.push_back({c, CurveFamily::Exceptional});
        }
    }
    // a H1 + b H2 - sum m_i e_i - sum mbar_i ebar_i with a,b <= 2, m <= 2.
    std::vector<int> mult(6);
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            std::fill(mult.begin(), mult.end(), 0);
            while (true) {
                std::vector<Int> v(8, Int(0));
                v[0] = a;
                v[1] = b;
                for (int i = 0; i < 6; ++i) v[2 + i] = -mult[i];
                CurveClass c(b3, std::move(v));
                if (admit(c)) cat.entries.push_back({c, family_of(a, b, mult)});
                int pos = 0;
                while (pos < 6 && mult[pos] == 2) mult[pos++] = 0;
                if (pos == 6) break;
                ++mult[pos];
            }
        }
    }
    return cat;
}

std::vector<BitangentPair> pair_bitangents(const EffectiveCurveCatalog& cat) {
    std::vector<BitangentPair> out;
    if (cat.entries.empty()) return out;
    const LatticeBasis b3(3);
    const CurveClass mk = anticanonical(b3);

    // Identify the ridge pair by the half-divisor class of the base cycle.
    const CycleConfig base = base_config(cat.type);
    const CurveClass half = half_divisor_class(base, compute_divisor(base));

    std::vector<bool> used(cat.entries.size(), false);
    for (size_t i = 0; i < cat.entries.size(); ++i) {
        if (used[i]) continue;
        const CurveClass& a = cat.entries[i].cls;
        const CurveClass partner = mk - a;
        size_t j = i + 1;
        for (; j < cat.entries.size(); ++j)
            if (!used[j] && cat.entries[j].cls == partner) break;
        if (j == cat.entries.size())
            throw invariant_violation("bitangent pairing",
                                      "class " + a.str() + " has no partner in the catalog");
        used[i] = used[j] = true;
        if (intersect(a, partner) != 2)
            throw invariant_violation("bitangent pairing", "partner classes do not meet twice");
        BitangentPair p{a, partner, conjugate(a) == partner, false};
        p.ridge = (a == half || partner == half);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<BitangentPair> real_bitangents(const std::vector<BitangentPair>& pairs) {
    std::vector<BitangentPair> out;
    for (const auto& p : pairs)
        if (p.real && !p.ridge) out.push_back(p);
    return out;
}

}  // namespace dsolid
