#include "dsolid/quartic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dsolid {

namespace {

int nu_of(CycleType t) {
    switch (t) {
        case CycleType::A0: return 0;
        case CycleType::A1: return 1;
        case CycleType::A2: return 2;
        case CycleType::A3: return 3;
    }
    return 0;
}

// Does every monomial of f avoid z_{m+1}, z_{m+2}?
bool in_ridge_ideal_complement(const SparsePoly& f, int m) {
    for (const auto& [mon, c] : f.terms())
        if (mon[m + 1] != 0 || mon[m + 2] != 0) return false;
    return true;
}

SparsePoly swap_last_two(const SparsePoly& f, int m) {
    SparsePoly out(f.nvars());
    for (const auto& [mon, c] : f.terms()) {
        auto mm = mon;
        std::swap(mm[m + 1], mm[m + 2]);
        out.add_term(std::move(mm), c);
    }
    return out;
}

}  // namespace

const char* to_string(SingType s) {
    switch (s) {
        case SingType::A0Tangent: return "A0-tangent";
        case SingType::A1: return "A1";
        case SingType::A2: return "A2";
        case SingType::A3: return "A3";
        case SingType::Other: return "other";
    }
    return "?";
}

QuarticModel make_quartic_model(CycleType type, int m, std::array<SparsePoly, 4> h,
                                SparsePoly q) {
    if (m < 1) throw validation_error("scroll degree m must be >= 1");
    const int nv = m + 3;
    QuarticModel model;
    model.m = m;
    model.type = type;
    model.nu = nu_of(type);

    int deg = 0;
    for (int i = 0; i < 4; ++i) {
        if (h[i].nvars() != nv || h[i].is_zero() || !h[i].is_homogeneous(&deg) || deg != 1)
            throw validation_error("h_" + std::to_string(i + 1) +
                                   " is not a nonzero linear form in z_0..z_{m+2}");
    }
    if (q.nvars() != nv || !q.is_homogeneous(&deg) || deg != 2)
        throw validation_error("Q is not a homogeneous quadratic");

    // Ideal membership: exactly nu+1 of the h's avoid z_{m+1}, z_{m+2}, and
    // they sit in the trailing slots.
    int count = 0;
    for (int i = 0; i < 4; ++i) {
        const bool ridge = in_ridge_ideal_complement(h[i], m);
        if (ridge) ++count;
        if (ridge != (i + 1 >= 4 - model.nu))
            throw validation_error("ridge-ideal h's must occupy the trailing slots");
    }
    if (count != model.nu + 1)
        throw validation_error("expected exactly nu+1 of the h's in (z_0..z_m)");

    // Q meets the two marked ridge points and contains the ridge nowhere:
    // the z_{m+1} z_{m+2} monomial must be present, the two squares absent.
    SparsePoly::Monomial mon(nv, 0);
    mon[m + 1] = 2;
    if (q.coefficient(mon) != 0) throw validation_error("Q contains z_{m+1}^2");
    mon[m + 1] = 0;
    mon[m + 2] = 2;
    if (q.coefficient(mon) != 0) throw validation_error("Q contains z_{m+2}^2");
    mon[m + 1] = 1;
    mon[m + 2] = 1;
    if (q.coefficient(mon) == 0)
        throw validation_error("Q must contain the z_{m+1} z_{m+2} monomial");

    // Reality in the twisted frame: the swap z_{m+1} <-> z_{m+2} fixes the
    // defining data up to scalar (coefficients are rational already).
    for (int i = 0; i < 4; ++i)
        if (!proportional(h[i], swap_last_two(h[i], m)))
            throw validation_error("h_" + std::to_string(i + 1) +
                                   " is not fixed by the real structure");
    if (!proportional(q, swap_last_two(q, m)))
        throw validation_error("Q is not fixed by the real structure");

    model.h = std::move(h);
    model.q = std::move(q);
    model.r = model.h[0] * model.h[1] * model.h[2] * model.h[3] - model.q * model.q;
    return model;
}

std::vector<Rat> plane_through(const Rat& lambda, int m) {
    std::vector<Rat> c(m);
    Rat p = lambda;
    for (int j = 0; j < m; ++j) {
        c[j] = p;
        p *= lambda;
    }
    return c;
}

SparsePoly restrict_to_plane(const SparsePoly& f, const std::vector<Rat>& c) {
    const int nv = f.nvars();
    const int m = nv - 3;
    if (static_cast<int>(c.size()) != m)
        throw validation_error("plane needs exactly m parameters");
    SparsePoly g = f;
    for (int j = 1; j <= m; ++j)
        g = g.substituted(j, SparsePoly::variable(nv, 0) * c[j - 1]);
    return g.projected({0, m + 1, m + 2});
}

SparsePoly restrict_to_plane(const QuarticModel& model, const std::vector<Rat>& c) {
    return restrict_to_plane(model.r, c);
}

SparsePoly restrict_to_ridge(const QuarticModel& model) {
    const int nv = model.nvars();
    SparsePoly g = model.r;
    for (int j = 0; j <= model.m; ++j)
        g = g.substituted(j, SparsePoly(nv));  // z_j <- 0
    return g.projected({model.m + 1, model.m + 2});
}

QuarticModel build_quartic(CycleType type, int m, std::uint64_t seed) {
    if (m < 1) throw validation_error("scroll degree m must be >= 1");
    const int nv = m + 3;
    const int nu = nu_of(type);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xda3e39cb94b95bdbULL +
                        static_cast<std::uint64_t>(nu) * 131 + static_cast<std::uint64_t>(m));
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    auto rat = [&]() { return Rat(num(rng), den(rng)); };
    auto nonzero_rat = [&]() {
        Rat v = rat();
        while (v == 0) v = rat();
        return v;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<SparsePoly, 4> h;
        std::vector<std::pair<int, std::vector<Rat>>> roots;

        // Trailing nu+1 forms in (z_0..z_m), each the coefficient vector of a
        // degree-m polynomial with chosen rational roots.
        for (int idx = 4 - nu; idx <= 4; ++idx) {
            std::vector<Rat> rs;
            while (static_cast<int>(rs.size()) < m) {
                Rat v = rat();
                if (std::find(rs.begin(), rs.end(), v) == rs.end()) rs.push_back(v);
            }
            std::vector<Rat> coef{Rat(1)};  // prod (lambda - r), highest first
            for (const Rat& rt : rs) {
                std::vector<Rat> next(coef.size() + 1, Rat(0));
                for (size_t i = 0; i < coef.size(); ++i) {
                    next[i] += coef[i];
                    next[i + 1] -= coef[i] * rt;
                }
                coef = std::move(next);
            }
            SparsePoly f(nv);
            for (int j = 0; j <= m; ++j)
                f = f + SparsePoly::variable(nv, j) * coef[static_cast<size_t>(m - j)];
            h[static_cast<size_t>(idx - 1)] = std::move(f);
            roots.emplace_back(idx, std::move(rs));
        }

        // Leading 3-nu forms transverse to the ridge, real in the twisted
        // frame: equal coefficients on z_{m+1} and z_{m+2}.
        for (int idx = 1; idx <= 3 - nu; ++idx) {
            SparsePoly f(nv);
            for (int j = 0; j <= m; ++j) f = f + SparsePoly::variable(nv, j) * rat();
            const Rat b = nonzero_rat();
            f = f + (SparsePoly::variable(nv, m + 1) + SparsePoly::variable(nv, m + 2)) * b;
            h[static_cast<size_t>(idx - 1)] = std::move(f);
        }

        // Q = z_{m+1} z_{m+2} + (z_{m+1}+z_{m+2}) * l(z_0..z_m) + q0(z_0..z_m).
        SparsePoly q =
            SparsePoly::variable(nv, m + 1) * SparsePoly::variable(nv, m + 2);
        SparsePoly l(nv), q0(nv);
        for (int j = 0; j <= m; ++j) l = l + SparsePoly::variable(nv, j) * rat();
        for (int j = 0; j <= m; ++j)
            for (int j2 = j; j2 <= m; ++j2)
                q0 = q0 + SparsePoly::variable(nv, j) * SparsePoly::variable(nv, j2) * rat();
        q = q + (SparsePoly::variable(nv, m + 1) + SparsePoly::variable(nv, m + 2)) * l + q0;

        QuarticModel model = make_quartic_model(type, m, std::move(h), std::move(q));
        model.ridge_roots = std::move(roots);

        // The quartic must cut a genuine curve out of a generic plane.
        const SparsePoly probe = restrict_to_plane(model, plane_through(Rat(17, 5), m));
        if (probe.is_zero()) continue;
        return model;
    }
    throw invariant_violation("quartic generation", "could not reach a nondegenerate model");
}

namespace {

SparsePoly truncated(const SparsePoly& f, int maxdeg) {
    SparsePoly out(f.nvars());
    for (const auto& [mon, c] : f.terms()) {
        int s = 0;
        for (int e : mon) s += e;
        if (s <= maxdeg) out.add_term(mon, c);
    }
    return out;
}

SparsePoly swap_two_vars(const SparsePoly& f) {  // 2-variable swap
    SparsePoly out(2);
    for (const auto& [mon, c] : f.terms()) out.add_term({mon[1], mon[0]}, c);
    return out;
}

// Minimal y-order of f(0, y); -1 for the zero restriction.
int order_on_axis(const SparsePoly& f) {
    int ord = -1;
    for (const auto& [mon, c] : f.terms()) {
        if (mon[0] != 0) continue;
        ord = (ord < 0) ? mon[1] : std::min(ord, mon[1]);
    }
    return ord;
}

}  // namespace

SingType singularity_type_at(const SparsePoly& f3, RidgePoint p) {
    if (f3.nvars() != 3) throw validation_error("expected a ternary form");
    // Dehomogenize at (0:0:1) resp. (0:1:0); local coordinates are
    // x = z_0-direction, y = the remaining ridge direction.
    const int one_var = (p == RidgePoint::Q) ? 2 : 1;
    const int y_var = (p == RidgePoint::Q) ? 1 : 2;
    SparsePoly loc =
        f3.substituted(one_var, SparsePoly::constant(3, Rat(1))).projected({0, y_var});

    if (loc.coefficient({0, 0}) != 0)
        throw validation_error("the marked ridge point is not on the curve");

    const Rat fx = loc.coefficient({1, 0});
    const Rat fy = loc.coefficient({0, 1});
    if (fx != 0 || fy != 0) {
        // Smooth point: contact order with the ridge line {x = 0}.
        return order_on_axis(loc) == 2 ? SingType::A0Tangent : SingType::Other;
    }

    const Rat a = loc.coefficient({2, 0});
    const Rat b = loc.coefficient({1, 1});
    const Rat g = loc.coefficient({0, 2});
    if (b * b - 4 * a * g != 0) return SingType::A1;
    if (a == 0 && b == 0 && g == 0) return SingType::Other;  // corank 2

    // Corank 1: rotate so the quadratic part is c * u^2, then push the
    // mixed u-terms up by completing the square; degree-5 jets decide.
    SparsePoly w = truncated(loc, 5);
    Rat c;
    if (a != 0) {
        // u = x + (b/2a) y, i.e. substitute x <- u - (b/2a) v.
        const Rat t = b / (2 * a);
        w = w.substituted(
            0, SparsePoly::variable(2, 0) - SparsePoly::variable(2, 1) * t);
        c = a;
    } else {
        w = swap_two_vars(w);
        c = g;
    }

    for (int guard = 0; guard < 16; ++guard) {
        int jmin = -1;
        Rat coef;
        for (const auto& [mon, cc] : w.terms()) {
            if (mon[0] != 1 || mon[1] < 2) continue;
            if (jmin < 0 || mon[1] < jmin) {
                jmin = mon[1];
                coef = cc;
            }
        }
        if (jmin < 0 || jmin > 4) break;
        SparsePoly shift = SparsePoly::variable(2, 0);
        SparsePoly::Monomial vmon{0, jmin};
        shift = shift - SparsePoly::monomial(2, vmon, coef / (2 * c));
        w = truncated(w.substituted(0, shift), 5);
    }

    int ord = -1;
    for (const auto& [mon, cc] : w.terms()) {
        if (mon[0] != 0) continue;
        ord = (ord < 0) ? mon[1] : std::min(ord, mon[1]);
    }
    if (ord == 3) return SingType::A2;
    if (ord == 4) return SingType::A3;
    return SingType::Other;
}

bool verify_trope(const QuarticModel& model, int alpha) {
    if (alpha < 1 || alpha > 4) throw validation_error("trope index must be 1..4");
    if (model.is_ridge_h(alpha))
        throw validation_error("h_" + std::to_string(alpha) +
                               " lies in the ridge ideal; its planes carry double conics, "
                               "not a trope hyperplane");
    const SparsePoly& ha = model.h[static_cast<size_t>(alpha - 1)];
    const int nv = model.nvars();
    int pivot = -1;
    for (int j = nv - 1; j >= 0 && pivot < 0; --j) {
        SparsePoly::Monomial mon(nv, 0);
        mon[j] = 1;
        if (ha.coefficient(mon) != 0) pivot = j;
    }
    SparsePoly::Monomial mon(nv, 0);
    mon[pivot] = 1;
    const Rat cp = ha.coefficient(mon);
    const SparsePoly rep = SparsePoly::variable(nv, pivot) - ha * (Rat(1) / cp);
    const SparsePoly r_red = model.r.substituted(pivot, rep);
    const SparsePoly q_red = model.q.substituted(pivot, rep);
    if (q_red.is_zero() || r_red.is_zero()) return false;
    return proportional(q_red * q_red, r_red);
}

bool verify_double_conic(const QuarticModel& model, const std::vector<Rat>& plane) {
    // The plane must annihilate one of the ridge-ideal linear forms.
    bool kills = false;
    for (int idx = 4 - model.nu; idx <= 4 && !kills; ++idx) {
        const SparsePoly hp = restrict_to_plane(model.h[static_cast<size_t>(idx - 1)], plane);
        if (hp.is_zero()) kills = true;
    }
    if (!kills)
        throw validation_error("plane does not annihilate any ridge-ideal h");
    const SparsePoly rp = restrict_to_plane(model.r, plane);
    const SparsePoly qp = restrict_to_plane(model.q, plane);
    if (qp.is_zero() || rp.is_zero()) return false;
    return proportional(qp * qp, rp);
}

}  // namespace dsolid
