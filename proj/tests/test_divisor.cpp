#include <doctest.h>

#include "dsolid/divisor.hpp"
#include "dsolid/resolution.hpp"

using namespace dsolid;

namespace {

const std::array<CycleType, 4> kAll{CycleType::A0, CycleType::A1, CycleType::A2,
                                    CycleType::A3};

CurveClass base_pullback(int n) {
    // (1,1) - e_1 - e_2 - e_3 carried up the blow-up tower unchanged.
    LatticeBasis b3(3);
    const CurveClass h = class_h1(b3) + class_h2(b3) - class_e(b3, 1) - class_e(b3, 2) -
                         class_e(b3, 3);
    return h.extended(LatticeBasis(n));
}

}  // namespace

TEST_CASE("divisor multiplicities by history replay") {
    CHECK(compute_d(blow_up_node(base_config(CycleType::A0), 1)) == std::vector<Int>{1, 2});
    for (CycleType t : kAll)
        CHECK(compute_d(base_config(t)) == std::vector<Int>(components_k(3, t), Int(1)));
    // n = 5 type A0 is the single row (1,3,2) with d = 3.
    const auto a0 = enumerate_configs(5, CycleType::A0);
    REQUIRE(a0.size() == 1);
    const DDivisor dd = compute_divisor(a0[0]);
    CHECK(dd.d == std::vector<Int>{1, 3, 2});
    CHECK(dd.d_max == 3);
}

TEST_CASE("half divisor base cases and boundary values") {
    SUBCASE("A0 base: the half is the line component itself") {
        const CycleConfig cfg = base_config(CycleType::A0);
        const auto [dp, dq] = compute_half(cfg);
        CHECK(dp == std::vector<Int>{1});
        CHECK(dq == std::vector<Int>{0});
    }
    SUBCASE("A2 base: the chain through C_1, checked against the lattice") {
        const CycleConfig cfg = base_config(CycleType::A2);
        const auto [dp, dq] = compute_half(cfg);
        CHECK(dp == std::vector<Int>{1, 1, 1});
        CHECK(dq == std::vector<Int>{0, 0, 0});
        CHECK(half_divisor_class(cfg, compute_divisor(cfg)) == base_pullback(3));
    }
    SUBCASE("type A0 keeps d'_k = d''_2 = 1 at every n") {
        for (int n = 4; n <= 7; ++n) {
            for (const auto& cfg : enumerate_configs(n, CycleType::A0)) {
                const DDivisor dd = compute_divisor(cfg);
                CHECK(dd.dprime[static_cast<size_t>(cfg.k() - 1)] == 1);
                CHECK(dd.ddprime[1] == 1);
            }
        }
    }
}

TEST_CASE("divisor and half classes are the pulled-back base classes") {
    for (int n = 3; n <= 6; ++n) {
        for (CycleType t : kAll) {
            for (const auto& cfg : enumerate_configs(n, t)) {
                const DDivisor dd = compute_divisor(cfg);
                CHECK(half_divisor_class(cfg, dd) == base_pullback(n));
                CHECK(divisor_class(cfg, dd) ==
                      anticanonical(LatticeBasis(3)).extended(LatticeBasis(n)));
            }
        }
    }
}

TEST_CASE("all divisor constraints hold on the enumerated configurations") {
    for (int n = 3; n <= 6; ++n)
        for (CycleType t : kAll)
            for (const auto& cfg : enumerate_configs(n, t))
                CHECK_NOTHROW(compute_divisor(cfg));
}

TEST_CASE("tampered half multiplicities are flagged, not absorbed") {
    const CycleConfig cfg = blow_up_node(base_config(CycleType::A1), 1);
    DDivisor dd = compute_divisor(cfg);
    // Swap one unit between the halves: the splitting still holds but the
    // boundary dichotomy breaks and must be reported by name.
    dd.dprime[2] -= 1;
    dd.ddprime[2] += 1;
    try {
        validate_divisor(cfg, dd);
        FAIL("expected a named invariant violation");
    } catch (const invariant_violation& e) {
        CHECK(e.invariant() == "half boundary");
    }
}

TEST_CASE("order-reversal identity of the multiplicity sequence") {
    for (int n = 3; n <= 6; ++n) {
        for (CycleType t : kAll) {
            for (const auto& cfg : enumerate_configs(n, t)) {
                const std::vector<Int> d = compute_d(cfg);
                const int k = cfg.k();
                if (k < 2) continue;
                Int lhs = d[1], rhs = d[static_cast<size_t>(k - 1)];
                for (int j = 2; j <= k - 1; ++j) {
                    lhs += positive_part(d[static_cast<size_t>(j)] -
                                         d[static_cast<size_t>(j - 1)]);
                    rhs += positive_part(d[static_cast<size_t>(j - 1)] -
                                         d[static_cast<size_t>(j)]);
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("adjusted half classes") {
    LatticeBasis b(3);
    const CurveClass hh = class_h1(b) + class_h2(b);

    SUBCASE("A0 base, alpha = 1") {
        const CycleConfig cfg = base_config(CycleType::A0);
        const auto [h, hb] = half_class_alpha(cfg, compute_divisor(cfg), 1);
        CHECK(h == hh - class_ebar(b, 1) - class_e(b, 2) - class_e(b, 3));
        CHECK(hb == conjugate(h));
    }
    SUBCASE("no admissible alpha for A3") {
        const CycleConfig cfg = base_config(CycleType::A3);
        const DDivisor dd = compute_divisor(cfg);
        CHECK(admissible_alphas(CycleType::A3).empty());
        for (int alpha = 1; alpha <= 3; ++alpha)
            CHECK_THROWS_AS(half_class_alpha(cfg, dd, alpha), validation_error);
    }
    SUBCASE("the two adjusted halves split D") {
        for (CycleType t : kAll) {
            for (int n = 3; n <= 5; ++n) {
                for (const auto& cfg : enumerate_configs(n, t)) {
                    const DDivisor dd = compute_divisor(cfg);
                    for (int alpha : admissible_alphas(t)) {
                        const auto [h, hb] = half_class_alpha(cfg, dd, alpha);
                        CHECK(h + hb == divisor_class(cfg, dd));
                    }
                }
            }
        }
    }
    SUBCASE("degrees against the cycle components") {
        for (CycleType t : kAll) {
            for (int n = 3; n <= 5; ++n) {
                for (const auto& cfg : enumerate_configs(n, t)) {
                    const DDivisor dd = compute_divisor(cfg);
                    for (int alpha : admissible_alphas(t)) {
                        const auto [h, hb] = half_class_alpha(cfg, dd, alpha);
                        (void)hb;
                        for (int i = 1; i <= cfg.k(); ++i) {
                            CHECK(intersect(h, cfg.comp(i)) == 0);
                            CHECK(intersect(h, cfg.comp_bar(i)) == (i == 1 ? 1 : 0));
                        }
                    }
                }
            }
        }
    }
    SUBCASE("the adjusted halves are (-1)-classes of anticanonical degree one") {
        for (CycleType t : kAll) {
            const CycleConfig cfg = base_config(t);
            const DDivisor dd = compute_divisor(cfg);
            const CurveClass mk = anticanonical(LatticeBasis(3));
            for (int alpha : admissible_alphas(t)) {
                const auto [h, hb] = half_class_alpha(cfg, dd, alpha);
                CHECK(intersect(h, h) == -1);
                CHECK(intersect(hb, hb) == -1);
                CHECK(intersect(h, mk) == 1);
            }
        }
    }
}
