#include <doctest.h>

#include "dsolid/json_io.hpp"
#include "dsolid/quartic.hpp"

using namespace dsolid;

namespace {

// Ternary quartic in (z0, u, v) whose germ at q = (0:0:1) is x^2 - y^{k+1}.
SparsePoly cusp_family(int kk) {
    SparsePoly f(3);
    f.add_term({2, 0, 2}, Rat(1));                 // z0^2 v^2
    f.add_term({0, kk + 1, 3 - kk}, Rat(-1));      // -u^{k+1} v^{3-k}
    return f;
}

}  // namespace

TEST_CASE("classical normal forms drive the recognizer") {
    CHECK(singularity_type_at(cusp_family(1), RidgePoint::Q) == SingType::A1);
    CHECK(singularity_type_at(cusp_family(2), RidgePoint::Q) == SingType::A2);
    CHECK(singularity_type_at(cusp_family(3), RidgePoint::Q) == SingType::A3);

    SparsePoly node(3);  // germ xy at q
    node.add_term({1, 1, 2}, Rat(1));
    CHECK(singularity_type_at(node, RidgePoint::Q) == SingType::A1);

    // (uv)^2 - z0^4: germ y^2 - x^4 at q, a tacnode.
    SparsePoly tac(3);
    tac.add_term({0, 2, 2}, Rat(1));
    tac.add_term({4, 0, 0}, Rat(-1));
    CHECK(singularity_type_at(tac, RidgePoint::Q) == SingType::A3);

    // Beyond the recognized range: x^2 - y^5 would need a quintic germ, so
    // check the degenerate corank-2 answer instead.
    SparsePoly bad(3);
    bad.add_term({3, 0, 1}, Rat(1));  // z0^3 v: germ x^3
    CHECK(singularity_type_at(bad, RidgePoint::Q) == SingType::Other);

    SparsePoly off(3);
    off.add_term({0, 0, 4}, Rat(1));  // v^4 does not pass through q
    CHECK_THROWS_AS(singularity_type_at(off, RidgePoint::Q), validation_error);
}

TEST_CASE("mixed-term germs reduce to their residue order") {
    // (y + x^2)^2 - x^3(x + v-stuff): still A2 after completing the square.
    // Built as a quartic in (z0, u, v): (u v + z0^2)^2 - z0^3 v.
    SparsePoly f(3);
    f.add_term({0, 2, 2}, Rat(1));
    f.add_term({2, 1, 1}, Rat(2));
    f.add_term({4, 0, 0}, Rat(1));
    f.add_term({3, 0, 1}, Rat(-1));
    CHECK(singularity_type_at(f, RidgePoint::Q) == SingType::A2);
}

TEST_CASE("model construction and invariants") {
    SUBCASE("ideal membership per type") {
        for (int nu = 0; nu <= 3; ++nu) {
            const CycleType t = static_cast<CycleType>(nu);
            const QuarticModel model = build_quartic(t, 2, 5);
            int ridge = 0;
            for (int i = 1; i <= 4; ++i)
                if (model.is_ridge_h(i)) ++ridge;
            CHECK(ridge == nu + 1);
            int deg = 0;
            CHECK(model.r.is_homogeneous(&deg));
            CHECK(deg == 4);
        }
    }
    SUBCASE("a square monomial in Q is rejected") {
        const QuarticModel ok = build_quartic(CycleType::A1, 2, 3);
        SparsePoly bad_q = ok.q;
        SparsePoly::Monomial mon(ok.nvars(), 0);
        mon[ok.m + 1] = 2;
        bad_q.add_term(mon, Rat(1));
        // The swap-symmetry is restored so only the square-term check fires.
        SparsePoly::Monomial mon2(ok.nvars(), 0);
        mon2[ok.m + 2] = 2;
        bad_q.add_term(mon2, Rat(1));
        CHECK_THROWS_AS(make_quartic_model(CycleType::A1, ok.m, ok.h, bad_q),
                        validation_error);
    }
    SUBCASE("plane restriction is a ternary quartic; divisibility sees the type") {
        for (int nu = 0; nu <= 3; ++nu) {
            const CycleType t = static_cast<CycleType>(nu);
            const QuarticModel model = build_quartic(t, 2, 9);
            const auto plane = plane_through(Rat(7, 3), model.m);
            const SparsePoly rp = restrict_to_plane(model, plane);
            CHECK(rp.nvars() == 3);
            int deg = 0;
            CHECK(rp.is_homogeneous(&deg));
            CHECK(deg == 4);
            SparsePoly prod = restrict_to_plane(model.h[0], plane);
            for (int i = 1; i < 4; ++i) prod = prod * restrict_to_plane(model.h[i], plane);
            CHECK(prod.divisibility_order(0) == nu + 1);
        }
    }
    SUBCASE("the quartic meets the ridge doubly at the marked points") {
        const QuarticModel model = build_quartic(CycleType::A1, 3, 2);
        SparsePoly expect(2);
        expect.add_term({2, 2}, Rat(-1));
        CHECK(proportional(expect, restrict_to_ridge(model)));
    }
    SUBCASE("restriction commutes with rescaling the plane coordinates") {
        const QuarticModel model = build_quartic(CycleType::A2, 2, 4);
        const auto plane = plane_through(Rat(3, 2), model.m);
        const SparsePoly rp = restrict_to_plane(model, plane);
        // Scale z0 in the ambient space first, then restrict to the matching
        // plane; the result must be the restriction with z0 scaled.
        const int nv = model.nvars();
        const Rat s(5, 7);
        SparsePoly scaled = model.r.substituted(0, SparsePoly::variable(nv, 0) * s);
        std::vector<Rat> plane2 = plane;
        for (auto& c : plane2) c = c * s;
        const SparsePoly lhs = restrict_to_plane(scaled, plane2);
        const SparsePoly rhs = rp.substituted(0, SparsePoly::variable(3, 0) * s);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("singularity types along the pipeline") {
    const SingType expected[4] = {SingType::A0Tangent, SingType::A1, SingType::A2,
                                  SingType::A3};
    for (int nu = 0; nu <= 3; ++nu) {
        const CycleType t = static_cast<CycleType>(nu);
        for (int m : {1, 2, 4}) {
            for (std::uint64_t seed : {1ULL, 2ULL}) {
                const QuarticModel model = build_quartic(t, m, seed);
                const SparsePoly rp = restrict_to_plane(model, plane_through(Rat(9, 4), m));
                CHECK(singularity_type_at(rp, RidgePoint::Q) == expected[nu]);
                CHECK(singularity_type_at(rp, RidgePoint::QBar) == expected[nu]);
            }
        }
    }
}

TEST_CASE("trope verification") {
    SUBCASE("every admissible hyperplane doubles the branch cut") {
        for (int nu = 0; nu <= 2; ++nu) {
            const CycleType t = static_cast<CycleType>(nu);
            const QuarticModel model = build_quartic(t, 2, 11);
            for (int alpha = 1; alpha <= 3 - nu; ++alpha) CHECK(verify_trope(model, alpha));
        }
    }
    SUBCASE("a perturbed factor is caught") {
        QuarticModel model = build_quartic(CycleType::A0, 2, 13);
        model.h[0] = model.h[0] + SparsePoly::variable(model.nvars(), 0);
        CHECK(!verify_trope(model, 1));
    }
    SUBCASE("the tacnodal type has no trope hyperplanes") {
        const QuarticModel model = build_quartic(CycleType::A3, 2, 17);
        for (int alpha = 1; alpha <= 4; ++alpha)
            CHECK_THROWS_AS(verify_trope(model, alpha), validation_error);
    }
}

TEST_CASE("double-conic verification") {
    const QuarticModel model = build_quartic(CycleType::A1, 2, 19);
    SUBCASE("planes over roots of the ridge forms carry doubled conics") {
        for (const auto& [idx, roots] : model.ridge_roots) {
            (void)idx;
            for (const auto& r : roots)
                CHECK(verify_double_conic(model, plane_through(r, model.m)));
        }
    }
    SUBCASE("a generic plane is refused") {
        CHECK_THROWS_AS(verify_double_conic(model, plane_through(Rat(123, 7), model.m)),
                        validation_error);
    }
    SUBCASE("a perturbed quadric is caught") {
        QuarticModel broken = build_quartic(CycleType::A1, 2, 19);
        SparsePoly::Monomial mon(broken.nvars(), 0);
        mon[0] = 2;
        broken.q.add_term(mon, Rat(1));
        const auto& roots = broken.ridge_roots[0].second;
        CHECK(!verify_double_conic(broken, plane_through(roots[0], broken.m)));
    }
}

TEST_CASE("polynomial JSON round trip") {
    const QuarticModel model = build_quartic(CycleType::A2, 2, 23);
    for (const SparsePoly& p : {model.q, model.r, model.h[0]}) {
        const json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
    }
}
