#include "dsolid/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace dsolid {

namespace {

int base_k(CycleType t) { return components_k(3, t); }

// Generic history replay. `first` holds the per-slot multiplicities on the
// unbarred half, `second` on the barred half. At an interior node both values
// are added within their own half; at the seam node the new unbarred slot sees
// C_k and Cbar_1, so the halves cross.
void replay(const std::vector<int>& history, std::vector<Int>& a, std::vector<Int>& b) {
    for (int node : history) {
        const int k = static_cast<int>(a.size());
        if (node < 1 || node > k)
            throw validation_error("history contains node index out of range");
        if (node < k) {
            a.insert(a.begin() + node, a[node - 1] + a[node]);
            b.insert(b.begin() + node, b[node - 1] + b[node]);
        } else {
            Int na = a[k - 1] + b[0];
            Int nb = b[k - 1] + a[0];
            a.push_back(na);
            b.push_back(nb);
        }
    }
}

}  // namespace

std::vector<Int> compute_d(const CycleConfig& cfg) {
    if (static_cast<int>(cfg.history.size()) != cfg.n - 3)
        throw validation_error("configuration history does not reach n");
    std::vector<Int> a(base_k(cfg.type), Int(1)), b(base_k(cfg.type), Int(1));
    replay(cfg.history, a, b);
    if (static_cast<int>(a.size()) != cfg.k())
        throw invariant_violation("history replay", "replayed length differs from k");
    return a;
}

std::pair<std::vector<Int>, std::vector<Int>> compute_half(const CycleConfig& cfg) {
    if (static_cast<int>(cfg.history.size()) != cfg.n - 3)
        throw validation_error("configuration history does not reach n");
    // Base case: the half chain through C_1 covers the unbarred half once.
    std::vector<Int> dp(base_k(cfg.type), Int(1)), dq(base_k(cfg.type), Int(0));
    replay(cfg.history, dp, dq);
    return {dp, dq};
}

DDivisor compute_divisor(const CycleConfig& cfg) {
    DDivisor dd;
    dd.d = compute_d(cfg);
    auto half = compute_half(cfg);
    dd.dprime = std::move(half.first);
    dd.ddprime = std::move(half.second);
    dd.d_max = *std::max_element(dd.d.begin(), dd.d.end());
    validate_divisor(cfg, dd);
    return dd;
}

void validate_divisor(const CycleConfig& cfg, const DDivisor& dd) {
    const int k = cfg.k();
    if (dd.k() != k || static_cast<int>(dd.dprime.size()) != k ||
        static_cast<int>(dd.ddprime.size()) != k)
        throw invariant_violation("divisor size", "multiplicity sequences shorter than k");

    if (dd.d[0] != 1)
        throw invariant_violation("line multiplicity", "d_1 != 1");
    for (int i = 0; i < k; ++i) {
        if (dd.d[i] <= 0)
            throw invariant_violation("positivity", "d_i <= 0");
        if (dd.dprime[i] < 0 || dd.ddprime[i] < 0)
            throw invariant_violation("half effectivity", "negative half multiplicity");
        if (dd.dprime[i] + dd.ddprime[i] != dd.d[i])
            throw invariant_violation("half splitting", "d'_i + d''_i != d_i");
    }

    // Nef degrees: D.C_1 = D.Cbar_1 = 1, all other components 0, D^2 = 2.
    const CurveClass D = divisor_class(cfg, dd);
    for (int i = 1; i <= k; ++i) {
        const Int want = (i == 1) ? 1 : 0;
        if (intersect(D, cfg.comp(i)) != want || intersect(D, cfg.comp_bar(i)) != want)
            throw invariant_violation("nef degree",
                                      "D.C_" + std::to_string(i) + " != " +
                                          (i == 1 ? std::string("1") : std::string("0")));
    }
    if (intersect(D, D) != 2)
        throw invariant_violation("nef degree", "D^2 != 2");

    // Boundary values of the half multiplicities.
    if (dd.dprime[0] != 1 || dd.ddprime[0] != 0)
        throw invariant_violation("half boundary", "(d'_1, d''_1) != (1, 0)");
    if (cfg.type == CycleType::A0 && cfg.n > 3) {
        if (dd.dprime[k - 1] != 1 || dd.ddprime[1] != 1)
            throw invariant_violation("half boundary", "type A0 needs d'_k = d''_2 = 1");
        if (dd.dprime[1] <= 0 || dd.ddprime[k - 1] <= 0)
            throw invariant_violation("half boundary", "type A0 needs d'_2 > 0 and d''_k > 0");
    }
    if (cfg.type == CycleType::A1 || cfg.type == CycleType::A2) {
        const Int pk = dd.dprime[k - 1];
        const Int q2 = dd.ddprime[1];
        const bool ok = (pk == 1 && q2 == 0) || (pk == 0 && q2 == 1);
        if (!ok)
            throw invariant_violation("half boundary",
                                      "types A1/A2 need (d'_k, d''_2) in {(1,0),(0,1)}");
    }

    // Sign coherence away from the seam.
    for (int i = 2; i <= k - 1; ++i) {
        const Int dp = dd.dprime[i] - dd.dprime[i - 1];
        const Int dq = dd.ddprime[i] - dd.ddprime[i - 1];
        if (dp * dq < 0)
            throw invariant_violation("half sign coherence",
                                      "(d'_{i+1}-d'_i)(d''_{i+1}-d''_i) < 0 at i = " +
                                          std::to_string(i));
    }
}

CurveClass divisor_class(const CycleConfig& cfg, const DDivisor& dd) {
    CurveClass D(LatticeBasis(cfg.n));
    for (int i = 1; i <= cfg.k(); ++i)
        D = D + cfg.comp(i) * dd.d[i - 1] + cfg.comp_bar(i) * dd.d[i - 1];
    return D;
}

CurveClass half_divisor_class(const CycleConfig& cfg, const DDivisor& dd) {
    CurveClass H(LatticeBasis(cfg.n));
    for (int i = 1; i <= cfg.k(); ++i)
        H = H + cfg.comp(i) * dd.dprime[i - 1] + cfg.comp_bar(i) * dd.ddprime[i - 1];
    return H;
}

std::vector<int> admissible_alphas(CycleType t) {
    switch (t) {
        case CycleType::A0: return {1, 2, 3};
        case CycleType::A1: return {1, 2};
        case CycleType::A2: return {1};
        case CycleType::A3: return {};
    }
    return {};
}

std::pair<CurveClass, CurveClass> half_class_alpha(const CycleConfig& cfg, const DDivisor& dd,
                                                   int alpha) {
    const auto range = admissible_alphas(cfg.type);
    if (std::find(range.begin(), range.end(), alpha) == range.end()) {
        std::ostringstream os;
        os << "alpha = " << alpha << " is not admissible for type " << to_string(cfg.type);
        throw validation_error(os.str());
    }
    const LatticeBasis b(cfg.n);
    const CurveClass h =
        half_divisor_class(cfg, dd) + class_e(b, alpha) - class_ebar(b, alpha);
    return {h, conjugate(h)};
}

}  // namespace dsolid
