#include <doctest.h>

#include "dsolid/report.hpp"

using namespace dsolid;

TEST_CASE("all three renderings carry the same data") {
    const json data = json::parse(render_tables(5, ReportFormat::Json));
    const std::string md = render_tables(5, ReportFormat::Markdown);
    const std::string csv = render_tables(5, ReportFormat::Csv);
    int rows = 0;
    for (const auto& tj : data["types"]) {
        for (const auto& r : tj["rows"]) {
            const std::string seq = r["sequence"].get<std::string>();
            CHECK(md.find(seq) != std::string::npos);
            CHECK(csv.find(seq) != std::string::npos);
            ++rows;
        }
    }
    CHECK(rows == 22);

    const json fib = json::parse(render_fibonacci(9, ReportFormat::Json));
    const std::string fmd = render_fibonacci(9, ReportFormat::Markdown);
    for (const auto& r : fib["rows"])
        CHECK(fmd.find(r["d_sequence"].get<std::string>()) != std::string::npos);
}

TEST_CASE("analyze rejects malformed sequences") {
    AnalyzeRequest req;
    req.d = {Int(1), Int(0), Int(2)};
    CHECK_THROWS_AS(render_analyze(req, ReportFormat::Json), validation_error);
    req.d = {Int(2), Int(1)};
    CHECK_THROWS_AS(render_analyze(req, ReportFormat::Json), validation_error);
}

TEST_CASE("analyze reports the known invariants") {
    AnalyzeRequest req;
    req.d = {Int(1), Int(3), Int(8), Int(13), Int(5), Int(2)};
    req.rc.ridge1 = true;
    req.rc.ridge_k = false;
    const json j = json::parse(render_analyze(req, ReportFormat::Json));
    CHECK(j["e"] == 14);
    CHECK(j["d"] == 13);
    // Section dimensions run to m + 2.
    CHECK(j["h0_table"].size() == j["m"].get<int>() + 3);
}

TEST_CASE("quartic report shape per type") {
    // The tacnodal type has no trope hyperplanes and four double-conic
    // families (one per ridge-ideal factor, m planes each).
    const json a3 = json::parse(render_quartic(CycleType::A3, 2, 21, 3, ReportFormat::Json));
    CHECK(a3["tropes"].empty());
    CHECK(a3["double_conics"].size() == 4 * 2);
    CHECK(a3["ok"].get<bool>());
    const json a0 = json::parse(render_quartic(CycleType::A0, 1, 21, 3, ReportFormat::Json));
    CHECK(a0["tropes"].size() == 3);
    CHECK(a0["double_conics"].size() == 1);
    CHECK(a0["ok"].get<bool>());
}

TEST_CASE("analyze accepts a serialized configuration") {
    const auto cfgs = enumerate_configs(5, CycleType::A1);
    AnalyzeRequest req;
    req.cfg = cfgs[2];
    const json j = json::parse(render_analyze(req, ReportFormat::Json));
    CHECK(j["n"] == 5);
    CHECK(j["type"] == "A1");
    CHECK(j["d_sequence"] == "1,2,1,2");
}
