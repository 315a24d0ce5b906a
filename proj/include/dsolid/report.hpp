#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dsolid/bitangent.hpp"
#include "dsolid/json_io.hpp"
#include "dsolid/quartic.hpp"
#include "dsolid/resolution.hpp"

namespace dsolid {

enum class ReportFormat { Markdown, Csv, Json };
ReportFormat format_from_string(const std::string& s);

/// "-3^1,-1^2;-3^1,-1^2": self-intersections with multiplicity exponents,
/// both halves of the cycle.
std::string format_sequence(const std::vector<Int>& s, const std::vector<Int>& d);

/// "1,3,2"
std::string format_ints(const std::vector<Int>& v);

/// Per-type configuration tables for the given n (component-count summary,
/// then one row per configuration: sequence with multiplicities and d).
/// With full_configs, the JSON rendering embeds the complete serialized
/// configuration per row (the document `analyze --config` reads back).
std::string render_tables(int n, ReportFormat f, int bound = kDefaultEnumBound,
                          bool full_configs = false);

/// Greedy maximal-pair blow-up sequences for n = 4..n_max with the e values
/// for the ridge-blowing resolution, checked against the reference row; the
/// n = 11 mismatch is always flagged. With exhaustive_max, also the maximum
/// of e over all enumerated configurations for n up to the enumeration bound.
std::string render_fibonacci(int n_max, ReportFormat f, bool exhaustive_max = false,
                             int enum_bound = kDefaultEnumBound);

/// Catalog, pairing and real bitangents for one type, with the half-class
/// identification of each real pair.
std::string render_bitangents(CycleType t, ReportFormat f);

struct AnalyzeRequest {
    std::optional<CycleConfig> cfg;  // when absent, d holds a raw sequence
    std::vector<Int> d;
    ResolutionChoice rc;
};

/// Invariant report: d, e per ridge choice, stable base curves, mu, m and the
/// section-dimension table.
std::string render_analyze(const AnalyzeRequest& req, ReportFormat f);

/// Builds the model and reports singularity types over sampled generic
/// planes plus every trope / double-conic verification.
std::string render_quartic(CycleType t, int m, std::uint64_t seed, int planes, ReportFormat f);

}  // namespace dsolid
