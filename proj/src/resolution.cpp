#include "dsolid/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace dsolid {

Int positive_part(const Int& x) { return x > 0 ? x : Int(0); }

namespace {

// d_2 with the cyclic convention d_{k+1} = d_1, so that the k = 1 cycle
// (where the unique node joins C_1 to Cbar_1) is covered by the same formula.
Int d2_cyclic(const std::vector<Int>& d) { return d.size() > 1 ? d[1] : d[0]; }

Int ceil_div(const Int& a, const Int& b) {  // a >= 0, b > 0
    return (a + b - 1) / b;
}

}  // namespace

Int compute_e(const std::vector<Int>& d, const ResolutionChoice& rc) {
    const int k = static_cast<int>(d.size());
    if (k == 0 || d[0] != 1) throw validation_error("d-sequence must start with d_1 = 1");
    Int e = d2_cyclic(d);
    for (int j = 2; j <= k - 1; ++j) e += positive_part(d[j] - d[j - 1]);
    if (rc.ridge1) e += positive_part(d2_cyclic(d) - 2);
    if (rc.ridge_k) e += positive_part(d[k - 1] - 2);
    return e;
}

Int compute_e(const DDivisor& dd, const ResolutionChoice& rc) { return compute_e(dd.d, rc); }

namespace {

using Kind = ChainSlot::Kind;

ChainSlot slot_c(int j, bool barred) {
    return ChainSlot{barred ? Kind::CBar : Kind::C, j, barred};
}
ChainSlot slot_delta(int carrier, bool barred) {
    return ChainSlot{barred ? Kind::DeltaBar : Kind::Delta, carrier, barred};
}

// Descending run C_from, C_{from-1}, .., C_to (from >= to) on one side.
void push_run_desc(std::vector<ChainSlot>& v, int from, int to, bool barred) {
    for (int j = from; j >= to; --j) v.push_back(slot_c(j, barred));
}
void push_run_asc(std::vector<ChainSlot>& v, int from, int to, bool barred) {
    for (int j = from; j <= to; ++j) v.push_back(slot_c(j, barred));
}

}  // namespace

std::vector<BaseCurveChain> stable_base_curves(const std::vector<Int>& d,
                                               const ResolutionChoice& rc) {
    const int k = static_cast<int>(d.size());
    if (k == 0 || d[0] != 1) throw validation_error("d-sequence must start with d_1 = 1");
    std::vector<BaseCurveChain> out;
    auto emit = [&out](int fiber, Int mult, std::vector<ChainSlot> primary,
                       std::vector<ChainSlot> conj) {
        out.push_back(BaseCurveChain{fiber, false, std::move(primary), mult});
        out.push_back(BaseCurveChain{fiber, true, std::move(conj), mult});
    };

    // Fiber 1 (node C_1 n C_2).
    const Int d2 = d2_cyclic(d);
    if (rc.ridge1) {
        if (d2 > 2) {
            std::vector<ChainSlot> a{slot_c(1, false)}, b{slot_c(1, true)};
            push_run_desc(a, k, 2, true);
            push_run_desc(b, k, 2, false);
            emit(1, d2 - 2, std::move(a), std::move(b));
        }
    } else if (d2 > 1) {
        emit(1, d2 - 1, {slot_delta(2, false)}, {slot_delta(2, true)});
    }

    // Interior fibers.
    for (int i = 2; i <= k - 1; ++i) {
        const Int delta = d[i] - d[i - 1];
        if (delta == 0) continue;
        const bool lower = rc.interior_blows_lower(i, k);
        std::vector<ChainSlot> a, b;
        if (delta > 0) {
            if (!lower) {
                a.push_back(slot_delta(i + 1, false));
                b.push_back(slot_delta(i + 1, true));
            }
            push_run_desc(a, i, 2, false);
            push_run_desc(b, i, 2, true);
            emit(i, delta, std::move(a), std::move(b));
        } else {
            if (lower) {
                a.push_back(slot_delta(i, false));
                b.push_back(slot_delta(i, true));
            }
            push_run_asc(a, i + 1, k, false);
            push_run_asc(b, i + 1, k, true);
            emit(i, -delta, std::move(a), std::move(b));
        }
    }

    // Fiber k (node C_k n Cbar_1), distinct from fiber 1 only when k >= 2.
    if (k >= 2) {
        const Int dk = d[k - 1];
        if (rc.ridge_k) {
            if (dk > 2) {
                std::vector<ChainSlot> a, b;
                push_run_asc(a, 1, k, true);
                push_run_asc(b, 1, k, false);
                emit(k, dk - 2, std::move(a), std::move(b));
            }
        } else if (dk > 1) {
            emit(k, dk - 1, {slot_delta(k, false)}, {slot_delta(k, true)});
        }
    }
    return out;
}

std::vector<BaseCurveChain> stable_base_curves(const DDivisor& dd, const ResolutionChoice& rc) {
    return stable_base_curves(dd.d, rc);
}

Int e_from_chains(const std::vector<Int>& d, const ResolutionChoice& rc,
                  const std::vector<BaseCurveChain>& chains) {
    // Intersect D(e)|_{E_2 u .. u E_k} with the section E_1 n E_2: the degree
    // of D there is -d_2 when the first resolution blows the ridge pair and
    // -1 otherwise; each chain crosses the section at most once, through the
    // C_2 slot (or through the first fiber's exceptional curve when that
    // fiber was split inside E_2).
    Int e = rc.ridge1 ? d2_cyclic(d) : Int(1);
    for (const auto& ch : chains) {
        bool crosses = false;
        for (const auto& s : ch.slots) {
            if (s.kind == Kind::C && s.index == 2) crosses = true;
            if (s.kind == Kind::Delta && !s.carrier_barred && s.index == 2 && ch.fiber == 1)
                crosses = true;
        }
        if (crosses) e += ch.multiplicity;
    }
    return e;
}

std::pair<MuValue, MuValue> compute_mu_boundary(const std::vector<Int>& d,
                                                const ResolutionChoice& rc) {
    const Int d2 = d2_cyclic(d);
    const Int dk = d.back();
    MuValue m1{rc.ridge1 ? Int(0) : positive_part(d2 - 2), true};
    MuValue mk{rc.ridge_k ? Int(0) : positive_part(dk - 2), true};
    return {m1, mk};
}

MuValue compute_mu_interior(const std::vector<Int>& d, int fiber) {
    const int k = static_cast<int>(d.size());
    if (fiber < 2 || fiber > k - 1)
        throw validation_error("interior fiber index must lie in 2..k-1");
    const Int delta = d[fiber] - d[fiber - 1];
    if (delta == 0) return {Int(0), true};  // no base curve on this fiber

    // Self-intersections along the chain, forced by D.C_j = 0:
    // s_j = -(d_{j-1} + d_{j+1}) / d_j with the cyclic neighbour d_1 past C_k.
    // Raw sequences that no configuration realizes may fail the divisibility;
    // then nothing can be certified.
    auto self_int = [&](int j) -> std::optional<Int> {  // 2 <= j <= k
        const Int up = (j == k) ? d[0] : d[j];
        const Int num = d[j - 2] + up;
        if (num % d[j - 1] != 0) return std::nullopt;
        return -num / d[j - 1];
    };

    // Walk the chain from its fixed end towards the line-component slot.
    std::vector<int> path;
    if (delta > 0)
        for (int j = fiber; j >= 2; --j) path.push_back(j);
    else
        for (int j = fiber + 1; j <= k; ++j) path.push_back(j);

    const Int mu0 = abs(delta);
    Int nu = mu0;
    for (size_t t = 0; t < path.size(); ++t) {
        auto s = self_int(path[t]);
        if (!s) return {Int(0), false};
        // At the fixed end the split fiber contributes the +1 correction to
        // the normal degree in the half-fiber surface.
        const Int b = (t == 0) ? *s + 1 : *s;
        if (b > 0) return {Int(0), false};
        const Int weight = std::max(Int(1), Int(-b));
        nu = ceil_div(nu, weight);
    }
    const Int forced = positive_part(nu - 1);
    if (forced == 0) return {Int(0), true};
    if (path.size() == 1) return {forced, true};
    return {forced, false};  // certified as a lower bound only
}

MuValue compute_mu_interior(const CycleConfig& cfg, const DDivisor& dd,
                            const ResolutionChoice& rc, int fiber) {
    (void)cfg;
    (void)rc;  // mu over interior fibers does not depend on the resolution
    return compute_mu_interior(dd.d, fiber);
}

MInvariant compute_m(const std::vector<Int>& d) {
    const int k = static_cast<int>(d.size());
    MInvariant out;
    const ResolutionChoice canon = ResolutionChoice::canonical();
    out.e = compute_e(d, canon);
    out.mu.assign(k, MuValue{Int(0), true});
    // Canonical choice zeroes the boundary contributions.
    for (int i = 2; i <= k - 1; ++i) out.mu[i - 1] = compute_mu_interior(d, i);
    out.m = out.e;
    out.exact = true;
    for (const auto& mv : out.mu) {
        out.m += mv.value;
        out.exact = out.exact && mv.exact;
    }
    int idx = 0;
    for (bool r1 : {false, true}) {
        for (bool rk : {false, true}) {
            ResolutionChoice rc;
            rc.ridge1 = r1;
            rc.ridge_k = rk;
            auto bd = compute_mu_boundary(d, rc);
            out.choices[idx++] =
                RidgeBreakdown{r1, rk, compute_e(d, rc), bd.first.value, bd.second.value};
        }
    }
    return out;
}

MInvariant compute_m(const CycleConfig& cfg, const DDivisor& dd) {
    MInvariant out = compute_m(dd.d);
    // Lower bounds from the structure theory; a failure is a structural bug.
    if (out.e < cfg.n - 2 || out.e < dd.d_max)
        throw invariant_violation("twist bound", "e < n-2 or e < d");
    return out;
}

Int h0_formula(const Int& m, const Int& l) {
    if (m < 1) throw validation_error("h0 formula needs m >= 1");
    if (l < 0) throw validation_error("h0 formula needs l >= 0");
    if (l < m) return l + 1;
    return 3 * l - 2 * m + 3;
}

Int riemann_roch(const Int& n, const Int& l) {
    const Int num = (4 - n) * l * l * l + 3 * (4 - n) * l * l + (11 - 2 * n) * l + 3;
    if (num % 3 != 0)
        throw invariant_violation("euler characteristic integrality",
                                  "chi(lF) is not an integer");
    return num / 3;
}

std::vector<Int> fibonacci_sequence(int n) {
    if (n < 4) throw validation_error("greedy sequence starts at n = 4");
    std::vector<Int> d{1, 2};
    for (int step = 4; step < n; ++step) {
        const int k = static_cast<int>(d.size());
        int best = 1;
        Int best_sum = d[0] + d[1 % k];
        for (int i = 2; i <= k; ++i) {
            const Int sum = d[i - 1] + d[i % k];
            if (sum > best_sum) {
                best_sum = sum;
                best = i;
            }
        }
        if (best < k)
            d.insert(d.begin() + best, d[best - 1] + d[best]);
        else
            d.push_back(d[k - 1] + d[0]);
    }
    return d;
}

}  // namespace dsolid
