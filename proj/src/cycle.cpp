#include "dsolid/cycle.hpp"

#include <algorithm>
#include <sstream>

#include "dsolid/divisor.hpp"

namespace dsolid {

const char* to_string(CycleType t) {
    switch (t) {
        case CycleType::A0: return "A0";
        case CycleType::A1: return "A1";
        case CycleType::A2: return "A2";
        case CycleType::A3: return "A3";
    }
    return "?";
}

CycleType cycle_type_from_string(const std::string& s) {
    if (s == "A0" || s == "a0") return CycleType::A0;
    if (s == "A1" || s == "a1") return CycleType::A1;
    if (s == "A2" || s == "a2") return CycleType::A2;
    if (s == "A3" || s == "a3") return CycleType::A3;
    throw validation_error("unknown cycle type '" + s + "' (expected A0..A3)");
}

int components_k(int n, CycleType t) {
    switch (t) {
        case CycleType::A0: return n - 2;
        case CycleType::A1: return n - 1;
        case CycleType::A2: return n;
        case CycleType::A3: return n + 1;
    }
    return 0;
}

CycleType type_of(int n, int k) {
    for (CycleType t : {CycleType::A0, CycleType::A1, CycleType::A2, CycleType::A3})
        if (components_k(n, t) == k) return t;
    throw validation_error("no cycle type has k = " + std::to_string(k) +
                           " components at n = " + std::to_string(n));
}

std::vector<Int> CycleConfig::self_intersections() const {
    std::vector<Int> s;
    s.reserve(k());
    for (int i = 1; i <= k(); ++i) s.push_back(intersect(comp(i), comp(i)));
    return s;
}

CycleConfig base_config(CycleType t) {
    LatticeBasis b(3);
    const CurveClass e1 = class_e(b, 1), e2 = class_e(b, 2), e3 = class_e(b, 3);
    const CurveClass f1 = class_ebar(b, 1), f2 = class_ebar(b, 2), f3 = class_ebar(b, 3);
    const CurveClass hh = class_h1(b) + class_h2(b);

    CycleConfig cfg;
    cfg.n = 3;
    cfg.type = t;
    switch (t) {
        case CycleType::A0:
            // Two (1,1)-curves through p_1,p_2,p_3 and their conjugates.
            cfg.comps = {hh - e1 - e2 - e3, hh - f1 - f2 - f3};
            break;
        case CycleType::A1:
            // p_3, pbar_3 sit at the two intersection points of the cycle on
            // P1 x P1; the exceptional curve over pbar_3 is the line component.
            cfg.comps = {f3, hh - e1 - e2 - e3 - f3, e3, hh - f1 - f2 - f3 - e3};
            break;
        case CycleType::A2:
            // Length-two infinitely-near chains at the intersection points
            // (p_3 near p_2, tangent along the (1,1)-curve).
            cfg.comps = {f3, f2 - f3, hh - e1 - e2 - e3 - f2,
                         e3, e2 - e3, hh - f1 - f2 - f3 - e2};
            break;
        case CycleType::A3:
            // Length-three chains: all six points infinitely near the two
            // intersection points.
            cfg.comps = {f3, f2 - f3, f1 - f2, hh - e1 - e2 - e3 - f1,
                         e3, e2 - e3, e1 - e2, hh - f1 - f2 - f3 - e1};
            break;
    }
    validate(cfg);
    return cfg;
}

CycleConfig blow_up_node(const CycleConfig& cfg, int node) {
    const int k = cfg.k();
    if (node < 1 || node > k)
        throw validation_error("node index " + std::to_string(node) + " out of 1.." +
                               std::to_string(k));

    LatticeBasis big(cfg.n + 1);
    const CurveClass en = class_e(big, cfg.n + 1);
    const CurveClass fn = class_ebar(big, cfg.n + 1);

    std::vector<CurveClass> c;
    c.reserve(cfg.comps.size());
    for (const auto& x : cfg.comps) c.push_back(x.extended(big));

    CycleConfig out;
    out.n = cfg.n + 1;
    out.type = cfg.type;
    out.history = cfg.history;
    out.history.push_back(node);

    if (node < k) {
        // z^(i) = C_i n C_{i+1}: insert e_{n+1} between them, ebar_{n+1}
        // between the conjugates.
        c[node - 1] = c[node - 1] - en;
        c[node] = c[node] - en;
        c[k + node - 1] = c[k + node - 1] - fn;
        c[k + node] = c[k + node] - fn;
        out.comps.assign(c.begin(), c.begin() + node);
        out.comps.push_back(en);
        out.comps.insert(out.comps.end(), c.begin() + node, c.begin() + k + node);
        out.comps.push_back(fn);
        out.comps.insert(out.comps.end(), c.begin() + k + node, c.end());
    } else {
        // z^(k) = C_k n Cbar_1, zbar^(k) = Cbar_k n C_1: the new components
        // close each half of the cycle.
        c[k - 1] = c[k - 1] - en;        // C_k
        c[k] = c[k] - en;                // Cbar_1
        c[2 * k - 1] = c[2 * k - 1] - fn;  // Cbar_k
        c[0] = c[0] - fn;                // C_1
        out.comps.assign(c.begin(), c.begin() + k);
        out.comps.push_back(en);
        out.comps.insert(out.comps.end(), c.begin() + k, c.end());
        out.comps.push_back(fn);
    }
    return out;
}

void validate(const CycleConfig& cfg) {
    const int k = cfg.k();
    const int m = 2 * k;
    if (m == 0 || static_cast<int>(cfg.comps.size()) != m)
        throw invariant_violation("cycle size", "component list is empty or odd");
    if (components_k(cfg.n, cfg.type) != k)
        throw invariant_violation("component count",
                                  std::string("k does not match type ") + to_string(cfg.type) +
                                      " at n = " + std::to_string(cfg.n));
    for (const auto& c : cfg.comps)
        if (c.n() != cfg.n)
            throw invariant_violation("lattice rank", "component over a wrong lattice");

    // Adjacency: consecutive components meet once, everything else is
    // disjoint. A 2-cycle is the single degenerate case: its two components
    // meet at both nodes.
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const Int v = intersect(cfg.comps[i], cfg.comps[j]);
            Int want;
            if (i == j)
                want = v;  // self-intersections are checked in aggregate below
            else if (m == 2)
                want = 2;
            else if (j - i == 1 || (i == 0 && j == m - 1))
                want = 1;
            else
                want = 0;
            if (i != j && v != want) {
                std::ostringstream os;
                os << "components " << i + 1 << "," << j + 1 << " meet " << v << " times, want "
                   << want;
                throw invariant_violation("cycle adjacency", os.str());
            }
        }
    }

    // Conjugation swaps opposite components.
    for (int i = 0; i < k; ++i)
        if (conjugate(cfg.comps[i]) != cfg.comps[k + i])
            throw invariant_violation("conjugation layout",
                                      "Cbar_" + std::to_string(i + 1) +
                                          " is not the conjugate of C_" + std::to_string(i + 1));

    // The cycle represents -K.
    CurveClass sum(LatticeBasis(cfg.n));
    for (const auto& c : cfg.comps) sum = sum + c;
    if (sum != anticanonical(LatticeBasis(cfg.n)))
        throw invariant_violation("anticanonical sum", "components do not sum to -K");

    // Total self-intersection: (8-2n) - 4k (each of the 2k nodes adds 2).
    Int total = 0;
    for (const auto& c : cfg.comps) total += intersect(c, c);
    if (total != Int(8 - 2 * cfg.n) - 4 * k)
        throw invariant_violation("self-intersection total",
                                  "sum of C_i^2 is not (8-2n) - 4k");
}

namespace {

std::string key_of(const std::vector<Int>& s, const std::vector<Int>& d) {
    std::ostringstream os;
    for (const auto& v : s) os << v << ",";
    os << "|";
    for (const auto& v : d) os << v << ",";
    return os.str();
}

}  // namespace

std::string canonical_key(const CycleConfig& cfg) {
    const std::vector<Int> s = cfg.self_intersections();
    const std::vector<Int> d = compute_d(cfg);
    // Reversal fixing C_1: (x_1, x_2, .., x_k) -> (x_1, x_k, .., x_2).
    std::vector<Int> sr(s), dr(d);
    std::reverse(sr.begin() + 1, sr.end());
    std::reverse(dr.begin() + 1, dr.end());
    return std::min(key_of(s, d), key_of(sr, dr));
}

std::vector<CycleConfig> enumerate_configs(int n, CycleType t, int bound) {
    if (n < 3) throw validation_error("enumeration needs n >= 3");
    if (n > bound)
        throw resource_error("n = " + std::to_string(n) + " exceeds enumeration bound " +
                             std::to_string(bound));
    std::vector<CycleConfig> level{base_config(t)};
    for (int step = 3; step < n; ++step) {
        std::vector<CycleConfig> next;
        for (const auto& parent : level) {
            // The table convention: children of one parent are identified
            // under the orientation reversal only where the reversal is a
            // manifest symmetry of the parent row (the four base rows and
            // every two-node cycle); deeper rows keep one child per node.
            const bool mirror = parent.history.empty() || parent.k() == 2;
            std::vector<std::string> seen;
            for (int node = 1; node <= parent.k(); ++node) {
                CycleConfig child = blow_up_node(parent, node);
                std::string key =
                    mirror ? canonical_key(child)
                           : key_of(child.self_intersections(), compute_d(child));
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(std::move(key));
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace dsolid
