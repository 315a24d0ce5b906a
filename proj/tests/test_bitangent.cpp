#include <doctest.h>

#include <algorithm>

#include "dsolid/bitangent.hpp"

using namespace dsolid;

TEST_CASE("catalog sizes per type") {
    CHECK(enumerate_minus_one(CycleType::A0).entries.size() == 56);
    CHECK(enumerate_minus_one(CycleType::A1).entries.size() == 16);
    CHECK(enumerate_minus_one(CycleType::A2).entries.size() == 2);
    CHECK(enumerate_minus_one(CycleType::A3).entries.size() == 0);
}

TEST_CASE("the nodal family for the smooth-quartic type") {
    const auto cat = enumerate_minus_one(CycleType::A0);
    LatticeBasis b(3);
    int nodal = 0;
    for (const auto& e : cat.entries)
        if (e.family == CurveFamily::NodalTwoTwo) ++nodal;
    CHECK(nodal == 6);
    // One of them concretely: 2H1+2H2-2e_1-e_2-e_3-eb_1-eb_2-eb_3.
    const CurveClass want = anticanonical(b) - class_e(b, 1);
    CHECK(std::any_of(cat.entries.begin(), cat.entries.end(),
                      [&](const CatalogEntry& e) { return e.cls == want; }));
}

TEST_CASE("pairing") {
    LatticeBasis b(3);
    const CurveClass mk = anticanonical(b);

    SUBCASE("the smooth type carries all 28 pairs") {
        const auto pairs = pair_bitangents(enumerate_minus_one(CycleType::A0));
        CHECK(pairs.size() == 28);
        for (const auto& p : pairs) {
            CHECK(p.a + p.b == mk);
            CHECK(intersect(p.a, p.b) == 2);
            CHECK(intersect(p.a + p.b, p.a + p.b) == 2);
            CHECK(intersect(p.a, mk) == 1);
        }
        // Each exceptional class pairs with the nodal class at its point.
        for (int i = 1; i <= 3; ++i) {
            const CurveClass e = class_e(b, i);
            const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) {
                return p.a == e || p.b == e;
            });
            REQUIRE(it != pairs.end());
            const CurveClass partner = (it->a == e) ? it->b : it->a;
            CHECK(partner == mk - e);
        }
    }
    SUBCASE("A1/A2 pair counts") {
        CHECK(pair_bitangents(enumerate_minus_one(CycleType::A1)).size() == 8);
        const auto pairs = pair_bitangents(enumerate_minus_one(CycleType::A2));
        REQUIRE(pairs.size() == 1);
        const CurveClass hh = class_h1(b) + class_h2(b);
        const CurveClass want = hh - class_ebar(b, 1) - class_e(b, 2) - class_e(b, 3);
        CHECK((pairs[0].a == want || pairs[0].b == want));
    }
    SUBCASE("the ridge pair is marked exactly for the smooth type") {
        const auto pairs = pair_bitangents(enumerate_minus_one(CycleType::A0));
        int ridge = 0;
        for (const auto& p : pairs)
            if (p.ridge) {
                ++ridge;
                const CurveClass line =
                    class_h1(b) + class_h2(b) - class_e(b, 1) - class_e(b, 2) - class_e(b, 3);
                CHECK((p.a == line || p.b == line));
                CHECK(p.real);
            }
        CHECK(ridge == 1);
        for (const auto& p : pair_bitangents(enumerate_minus_one(CycleType::A1)))
            CHECK(!p.ridge);
    }
}

TEST_CASE("real bitangents away from the ridge") {
    CHECK(real_bitangents(pair_bitangents(enumerate_minus_one(CycleType::A0))).size() == 3);
    CHECK(real_bitangents(pair_bitangents(enumerate_minus_one(CycleType::A1))).size() == 2);
    CHECK(real_bitangents(pair_bitangents(enumerate_minus_one(CycleType::A2))).size() == 1);
}

TEST_CASE("real pairs are the adjusted half classes") {
    for (CycleType t : {CycleType::A0, CycleType::A1, CycleType::A2}) {
        const CycleConfig base = base_config(t);
        const DDivisor dd = compute_divisor(base);
        const auto reals = real_bitangents(pair_bitangents(enumerate_minus_one(t)));
        const auto alphas = admissible_alphas(t);
        REQUIRE(reals.size() == alphas.size());
        for (const auto& p : reals) {
            int hits = 0;
            for (int alpha : alphas) {
                const auto [h, hb] = half_class_alpha(base, dd, alpha);
                if ((h == p.a && hb == p.b) || (h == p.b && hb == p.a)) ++hits;
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("conjugation acts freely on the catalog") {
    for (CycleType t : {CycleType::A0, CycleType::A1, CycleType::A2}) {
        const auto cat = enumerate_minus_one(t);
        for (const auto& e : cat.entries) {
            CHECK(conjugate(e.cls) != e.cls);
            CHECK(std::any_of(cat.entries.begin(), cat.entries.end(),
                              [&](const CatalogEntry& o) { return o.cls == conjugate(e.cls); }));
        }
    }
}
