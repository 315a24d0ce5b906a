#include "dsolid/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace dsolid {

namespace {

const std::array<CycleType, 4> kTypes{CycleType::A0, CycleType::A1, CycleType::A2,
                                      CycleType::A3};

// Reference e values for the greedy family (ridge pair blown up at the first
// node). The n = 11 entry is known to disagree with the computed value.
const std::map<int, Int>& reference_e() {
    static const std::map<int, Int> kRef{{4, 2},  {5, 4},  {6, 6},  {7, 9},
                                         {8, 14}, {9, 22}, {10, 35}, {11, 57}};
    return kRef;
}

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string slot_name(const ChainSlot& s) {
    switch (s.kind) {
        case ChainSlot::Kind::C: return "C" + std::to_string(s.index);
        case ChainSlot::Kind::CBar: return "Cbar" + std::to_string(s.index);
        case ChainSlot::Kind::Delta: return "Delta" + std::to_string(s.index);
        case ChainSlot::Kind::DeltaBar: return "Deltabar" + std::to_string(s.index);
    }
    return "?";
}

json chain_to_json(const BaseCurveChain& ch) {
    json slots = json::array();
    for (const auto& s : ch.slots) slots.push_back(slot_name(s));
    json j;
    j["fiber"] = ch.fiber;
    j["side"] = ch.conjugate_side ? "conjugate" : "primary";
    j["slots"] = std::move(slots);
    j["multiplicity"] = int_to_json(ch.multiplicity);
    return j;
}

}  // namespace

ReportFormat format_from_string(const std::string& s) {
    if (s == "md" || s == "markdown") return ReportFormat::Markdown;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json") return ReportFormat::Json;
    throw validation_error("unknown format '" + s + "' (expected markdown, csv or json)");
}

std::string format_sequence(const std::vector<Int>& s, const std::vector<Int>& d) {
    std::ostringstream os;
    for (int half = 0; half < 2; ++half) {
        if (half) os << ";";
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) os << ",";
            os << s[i] << "^" << d[i];
        }
    }
    return os.str();
}

std::string format_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

// ---------------------------------------------------------------- tables ---

namespace {

json tables_data(int n, int bound, bool full_configs) {
    json types = json::array();
    for (CycleType t : kTypes) {
        json rows = json::array();
        for (const auto& cfg : enumerate_configs(n, t, bound)) {
            const DDivisor dd = compute_divisor(cfg);
            json row;
            row["sequence"] = format_sequence(cfg.self_intersections(), dd.d);
            row["d"] = int_to_json(dd.d_max);
            row["history"] = cfg.history;
            if (full_configs) row["config"] = cycle_config_to_json(cfg);
            rows.push_back(std::move(row));
        }
        json tj;
        tj["type"] = to_string(t);
        tj["two_k"] = 2 * components_k(n, t);
        tj["rows"] = std::move(rows);
        types.push_back(std::move(tj));
    }
    json j;
    j["n"] = n;
    j["types"] = std::move(types);
    return j;
}

}  // namespace

std::string render_tables(int n, ReportFormat f, int bound, bool full_configs) {
    const json data = tables_data(n, bound, full_configs && f == ReportFormat::Json);
    if (f == ReportFormat::Json) return data.dump(2) + "\n";
    std::ostringstream os;
    if (f == ReportFormat::Csv) {
        os << "type,row,sequence,d\n";
        for (const auto& tj : data["types"]) {
            int row = 0;
            for (const auto& r : tj["rows"])
                os << tj["type"].get<std::string>() << "," << ++row << ","
                   << csv_escape(r["sequence"].get<std::string>()) << ","
                   << r["d"].dump() << "\n";
        }
        return os.str();
    }
    os << "# Divisor tables (n = " << n << ")\n\n";
    os << "Cycle component counts:\n\n| type | 2k |\n|------|----|\n";
    for (const auto& tj : data["types"])
        os << "| " << tj["type"].get<std::string>() << " | " << tj["two_k"].get<int>()
           << " |\n";
    os << "\n";
    for (const auto& tj : data["types"]) {
        os << "## Type " << tj["type"].get<std::string>() << " (" << tj["rows"].size()
           << (tj["rows"].size() == 1 ? " row)" : " rows)") << "\n\n";
        os << "| # | sequence | d |\n|---|----------|---|\n";
        int row = 0;
        for (const auto& r : tj["rows"])
            os << "| " << ++row << " | " << r["sequence"].get<std::string>() << " | "
               << r["d"].dump() << " |\n";
        os << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------- fibonacci ---

std::string render_fibonacci(int n_max, ReportFormat f, bool exhaustive_max, int enum_bound) {
    if (n_max < 4) throw validation_error("fibonacci table starts at n = 4");
    json rows = json::array();
    for (int n = 4; n <= n_max; ++n) {
        const std::vector<Int> d = fibonacci_sequence(n);
        ResolutionChoice rc;
        rc.ridge1 = true;
        rc.ridge_k = false;
        const Int e = compute_e(d, rc);
        json row;
        row["n"] = n;
        row["d_sequence"] = format_ints(d);
        row["e"] = int_to_json(e);
        auto it = reference_e().find(n);
        if (it != reference_e().end()) {
            row["reference"] = int_to_json(it->second);
            row["mismatch"] = (it->second != e);
        }
        if (exhaustive_max && n <= enum_bound) {
            Int best = 0;
            ResolutionChoice full;  // both ridge flags: the maximal choice
            for (CycleType t : kTypes)
                for (const auto& cfg : enumerate_configs(n, t, enum_bound))
                    best = std::max(best, compute_e(compute_d(cfg), full));
            row["max_e_enumerated"] = int_to_json(best);
        }
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = std::move(rows);
    {
        const std::vector<Int> d11 = fibonacci_sequence(11);
        ResolutionChoice rc;
        rc.ridge1 = true;
        rc.ridge_k = false;
        j["note"] = "at n = 11 the computed value " + int_str(compute_e(d11, rc)) +
                    " differs from the reference value " + int_str(reference_e().at(11));
    }

    if (f == ReportFormat::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    if (f == ReportFormat::Csv) {
        os << "n,d_sequence,e,reference,mismatch\n";
        for (const auto& r : j["rows"]) {
            os << r["n"].get<int>() << "," << csv_escape(r["d_sequence"].get<std::string>())
               << "," << r["e"].dump() << ",";
            if (r.contains("reference"))
                os << r["reference"].dump() << "," << (r["mismatch"].get<bool>() ? "1" : "0");
            else
                os << ",";
            os << "\n";
        }
        return os.str();
    }
    os << "# Greedy maximal-pair blow-up sequences\n\n";
    os << "| n | d-sequence | e | reference | flag |\n|---|------------|---|-----------|------|\n";
    for (const auto& r : j["rows"]) {
        os << "| " << r["n"].get<int>() << " | " << r["d_sequence"].get<std::string>() << " | "
           << r["e"].dump() << " | ";
        if (r.contains("reference"))
            os << r["reference"].dump() << " | "
               << (r["mismatch"].get<bool>() ? "MISMATCH" : "ok");
        else
            os << " | ";
        if (r.contains("max_e_enumerated")) os << " (max over configs: " << r["max_e_enumerated"].dump() << ")";
        os << " |\n";
    }
    os << "\nNote: " << j["note"].get<std::string>() << "\n";
    return os.str();
}

// ------------------------------------------------------------ bitangents ---

std::string render_bitangents(CycleType t, ReportFormat f) {
    const EffectiveCurveCatalog cat = enumerate_minus_one(t);
    const auto pairs = pair_bitangents(cat);
    const auto reals = real_bitangents(pairs);

    // Identify each real pair with its adjusted half class.
    const CycleConfig base = base_config(t);
    const DDivisor dd = compute_divisor(base);
    auto alpha_of = [&](const BitangentPair& p) -> int {
        for (int alpha : admissible_alphas(t)) {
            const auto [ha, hb] = half_class_alpha(base, dd, alpha);
            if ((ha == p.a && hb == p.b) || (ha == p.b && hb == p.a)) return alpha;
        }
        return 0;
    };

    json j;
    j["type"] = to_string(t);
    json cj = json::array();
    for (const auto& e : cat.entries) {
        json row;
        row["class"] = e.cls.str();
        row["family"] = to_string(e.family);
        cj.push_back(std::move(row));
    }
    j["catalog"] = std::move(cj);
    json pj = json::array();
    for (const auto& p : pairs) {
        json row;
        row["a"] = p.a.str();
        row["b"] = p.b.str();
        row["real"] = p.real;
        row["ridge"] = p.ridge;
        if (p.real && !p.ridge) row["alpha"] = alpha_of(p);
        pj.push_back(std::move(row));
    }
    j["pairs"] = std::move(pj);
    j["counts"] = {{"classes", cat.entries.size()},
                   {"pairs", pairs.size()},
                   {"real_non_ridge", reals.size()}};
    if (t == CycleType::A3)
        j["note"] = "the branch quartic splits into two tangent conics; no bitangents";

    if (f == ReportFormat::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    if (f == ReportFormat::Csv) {
        os << "section,a,b,real,ridge,alpha,family\n";
        for (const auto& row : j["catalog"])
            os << "class," << csv_escape(row["class"].get<std::string>()) << ",,,,,"
               << csv_escape(row["family"].get<std::string>()) << "\n";
        for (const auto& row : j["pairs"])
            os << "pair," << csv_escape(row["a"].get<std::string>()) << ","
               << csv_escape(row["b"].get<std::string>()) << ","
               << (row["real"].get<bool>() ? "1" : "0") << ","
               << (row["ridge"].get<bool>() ? "1" : "0") << ","
               << (row.contains("alpha") ? std::to_string(row["alpha"].get<int>()) : "")
               << ",\n";
        return os.str();
    }
    os << "# Bitangent classes (type " << to_string(t) << ")\n\n";
    if (j.contains("note")) os << j["note"].get<std::string>() << "\n\n";
    os << "Catalog: " << cat.entries.size() << " classes, " << pairs.size() << " pairs, "
       << reals.size() << " real bitangents away from the ridge.\n\n";
    if (!cat.entries.empty()) {
        os << "| class | family |\n|-------|--------|\n";
        for (const auto& row : j["catalog"])
            os << "| " << row["class"].get<std::string>() << " | "
               << row["family"].get<std::string>() << " |\n";
        os << "\n| pair | real | ridge | alpha |\n|------|------|-------|-------|\n";
        for (const auto& row : j["pairs"]) {
            os << "| {" << row["a"].get<std::string>() << ", " << row["b"].get<std::string>()
               << "} | " << (row["real"].get<bool>() ? "yes" : "no") << " | "
               << (row["ridge"].get<bool>() ? "yes" : "no") << " | ";
            if (row.contains("alpha")) os << row["alpha"].get<int>();
            os << " |\n";
        }
    }
    return os.str();
}

// --------------------------------------------------------------- analyze ---

std::string render_analyze(const AnalyzeRequest& req, ReportFormat f) {
    std::vector<Int> d = req.d;
    json j;
    if (req.cfg) {
        const CycleConfig& cfg = *req.cfg;
        validate(cfg);
        const DDivisor dd = compute_divisor(cfg);
        d = dd.d;
        j["n"] = cfg.n;
        j["type"] = to_string(cfg.type);
        json dp = json::array(), dq = json::array();
        for (const auto& v : dd.dprime) dp.push_back(int_to_json(v));
        for (const auto& v : dd.ddprime) dq.push_back(int_to_json(v));
        j["dprime"] = std::move(dp);
        j["ddprime"] = std::move(dq);
    }
    if (d.empty()) throw validation_error("nothing to analyze: give a config or a d-sequence");
    if (d[0] != 1) throw validation_error("a d-sequence must start with d_1 = 1");
    for (const auto& v : d)
        if (v <= 0) throw validation_error("d-sequence entries must be positive");

    j["d_sequence"] = format_ints(d);
    const Int dmax = *std::max_element(d.begin(), d.end());
    j["d"] = int_to_json(dmax);

    const MInvariant mi = compute_m(d);
    json choices = json::array();
    for (const auto& c : mi.choices) {
        json row;
        row["ridge1"] = c.ridge1;
        row["ridge_k"] = c.ridge_k;
        row["e"] = int_to_json(c.e);
        row["mu1"] = int_to_json(c.mu1);
        row["mu_k"] = int_to_json(c.mu_k);
        row["e_plus_boundary_mu"] = int_to_json(c.e + c.mu1 + c.mu_k);
        choices.push_back(std::move(row));
    }
    j["e_by_choice"] = std::move(choices);
    j["e"] = int_to_json(compute_e(d, req.rc));

    json mu = json::array();
    for (size_t i = 0; i < mi.mu.size(); ++i) {
        json row;
        row["fiber"] = static_cast<int>(i + 1);
        row["value"] = int_to_json(mi.mu[i].value);
        row["exact"] = mi.mu[i].exact;
        mu.push_back(std::move(row));
    }
    j["mu"] = std::move(mu);
    j["m"] = int_to_json(mi.m);
    j["m_exact"] = mi.exact;

    json chains = json::array();
    for (const auto& ch : stable_base_curves(d, req.rc)) chains.push_back(chain_to_json(ch));
    j["base_curves"] = std::move(chains);
    j["ridge1"] = req.rc.ridge1;
    j["ridge_k"] = req.rc.ridge_k;

    json h0 = json::array();
    for (Int l = 0; l <= mi.m + 2; ++l) {
        json row;
        row["l"] = int_to_json(l);
        row["h0"] = int_to_json(h0_formula(mi.m, l));
        h0.push_back(std::move(row));
    }
    j["h0_table"] = std::move(h0);

    if (f == ReportFormat::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    if (f == ReportFormat::Csv) {
        os << "key,value\n";
        if (j.contains("n")) os << "n," << j["n"].get<int>() << "\n";
        if (j.contains("type")) os << "type," << j["type"].get<std::string>() << "\n";
        os << "d_sequence," << csv_escape(j["d_sequence"].get<std::string>()) << "\n";
        os << "d," << j["d"].dump() << "\n";
        os << "e," << j["e"].dump() << "\n";
        os << "m," << j["m"].dump() << "\n";
        os << "m_exact," << (j["m_exact"].get<bool>() ? "1" : "0") << "\n";
        for (const auto& row : j["e_by_choice"])
            os << "e[ridge1=" << row["ridge1"].get<bool>()
               << " ridge_k=" << row["ridge_k"].get<bool>() << "]," << row["e"].dump() << "\n";
        for (const auto& row : j["mu"])
            os << "mu[" << row["fiber"].get<int>() << "]," << row["value"].dump()
               << (row["exact"].get<bool>() ? "" : " (lower bound)") << "\n";
        for (const auto& row : j["h0_table"])
            os << "h0[" << row["l"].dump() << "]," << row["h0"].dump() << "\n";
        return os.str();
    }
    os << "# Invariant report\n\n";
    if (j.contains("n"))
        os << "Configuration: n = " << j["n"].get<int>() << ", type "
           << j["type"].get<std::string>() << "\n\n";
    os << "d-sequence: " << j["d_sequence"].get<std::string>() << "  (d = " << j["d"].dump()
       << ")\n\n";
    os << "| ridge1 | ridge_k | e | mu1 | mu_k | e+mu1+mu_k |\n"
       << "|--------|---------|---|-----|------|------------|\n";
    for (const auto& row : j["e_by_choice"])
        os << "| " << (row["ridge1"].get<bool>() ? "yes" : "no") << " | "
           << (row["ridge_k"].get<bool>() ? "yes" : "no") << " | " << row["e"].dump() << " | "
           << row["mu1"].dump() << " | " << row["mu_k"].dump() << " | "
           << row["e_plus_boundary_mu"].dump() << " |\n";
    os << "\nSelected choice: ridge1 = " << (req.rc.ridge1 ? "yes" : "no")
       << ", ridge_k = " << (req.rc.ridge_k ? "yes" : "no") << ", e = " << j["e"].dump()
       << "\n\nStable base curves:\n\n";
    if (j["base_curves"].empty()) os << "(none)\n";
    for (const auto& ch : j["base_curves"]) {
        os << "- fiber " << ch["fiber"].get<int>() << " (" << ch["side"].get<std::string>()
           << "), multiplicity " << ch["multiplicity"].dump() << ": ";
        bool first = true;
        for (const auto& s : ch["slots"]) {
            if (!first) os << " + ";
            os << s.get<std::string>();
            first = false;
        }
        os << "\n";
    }
    os << "\n| fiber | mu | exact |\n|-------|----|-------|\n";
    for (const auto& row : j["mu"])
        os << "| " << row["fiber"].get<int>() << " | " << row["value"].dump() << " | "
           << (row["exact"].get<bool>() ? "yes" : "lower bound") << " |\n";
    os << "\nm " << (j["m_exact"].get<bool>() ? "= " : ">= ") << j["m"].dump() << "\n";
    os << "\n| l | h0 |\n|---|----|\n";
    for (const auto& row : j["h0_table"])
        os << "| " << row["l"].dump() << " | " << row["h0"].dump() << " |\n";
    return os.str();
}

// --------------------------------------------------------------- quartic ---

std::string render_quartic(CycleType t, int m, std::uint64_t seed, int planes,
                           ReportFormat f) {
    const QuarticModel model = build_quartic(t, m, seed);
    const SingType expected = (model.nu == 0)   ? SingType::A0Tangent
                              : (model.nu == 1) ? SingType::A1
                              : (model.nu == 2) ? SingType::A2
                                                : SingType::A3;

    // Deterministic generic-plane parameters away from the double-conic
    // planes.
    std::mt19937_64 rng(seed + 0x5bf03635ULL);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> lambdas;
    auto is_root = [&](const Rat& v) {
        for (const auto& [idx, roots] : model.ridge_roots)
            for (const auto& r : roots)
                if (r == v) return true;
        return false;
    };
    while (static_cast<int>(lambdas.size()) < planes) {
        Rat v(num(rng), den(rng));
        if (is_root(v)) continue;
        if (std::find(lambdas.begin(), lambdas.end(), v) != lambdas.end()) continue;
        lambdas.push_back(v);
    }

    json j;
    j["type"] = to_string(t);
    j["m"] = m;
    j["nu"] = model.nu;
    j["seed"] = seed;
    json hs = json::array();
    for (int i = 0; i < 4; ++i) {
        json row;
        row["index"] = i + 1;
        row["ridge_ideal"] = model.is_ridge_h(i + 1);
        row["poly"] = model.h[static_cast<size_t>(i)].str();
        hs.push_back(std::move(row));
    }
    j["h"] = std::move(hs);
    j["q"] = model.q.str();

    bool all_ok = true;
    json pl = json::array();
    for (const auto& lam : lambdas) {
        const SparsePoly rp = restrict_to_plane(model, plane_through(lam, m));
        const SingType at_q = singularity_type_at(rp, RidgePoint::Q);
        const SingType at_qb = singularity_type_at(rp, RidgePoint::QBar);
        json row;
        row["lambda"] = rat_str(lam);
        row["at_q"] = to_string(at_q);
        row["at_qbar"] = to_string(at_qb);
        const bool ok = (at_q == expected && at_qb == expected);
        row["ok"] = ok;
        all_ok = all_ok && ok;
        pl.push_back(std::move(row));
    }
    j["planes"] = std::move(pl);

    json tropes = json::array();
    for (int alpha = 1; alpha <= 3 - model.nu; ++alpha) {
        json row;
        row["alpha"] = alpha;
        const bool ok = verify_trope(model, alpha);
        row["ok"] = ok;
        all_ok = all_ok && ok;
        tropes.push_back(std::move(row));
    }
    j["tropes"] = std::move(tropes);

    json conics = json::array();
    for (const auto& [idx, roots] : model.ridge_roots) {
        for (const auto& r : roots) {
            json row;
            row["h_index"] = idx;
            row["lambda"] = rat_str(r);
            const bool ok = verify_double_conic(model, plane_through(r, m));
            row["ok"] = ok;
            all_ok = all_ok && ok;
            conics.push_back(std::move(row));
        }
    }
    j["double_conics"] = std::move(conics);

    // The quartic meets the ridge doubly at the two marked points.
    {
        SparsePoly expect(2);
        expect.add_term({2, 2}, Rat(-1));
        const SparsePoly rl = restrict_to_ridge(model);
        j["ridge_restriction_ok"] = proportional(expect, rl);
        all_ok = all_ok && j["ridge_restriction_ok"].get<bool>();
    }
    j["ok"] = all_ok;

    if (f == ReportFormat::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    if (f == ReportFormat::Csv) {
        os << "section,key,value,ok\n";
        for (const auto& row : j["planes"])
            os << "plane," << csv_escape(row["lambda"].get<std::string>()) << ","
               << row["at_q"].get<std::string>() << "/" << row["at_qbar"].get<std::string>()
               << "," << (row["ok"].get<bool>() ? "1" : "0") << "\n";
        for (const auto& row : j["tropes"])
            os << "trope," << row["alpha"].get<int>() << ",,"
               << (row["ok"].get<bool>() ? "1" : "0") << "\n";
        for (const auto& row : j["double_conics"])
            os << "double_conic,h" << row["h_index"].get<int>() << " lambda="
               << csv_escape(row["lambda"].get<std::string>()) << ",,"
               << (row["ok"].get<bool>() ? "1" : "0") << "\n";
        os << "ridge,restriction,," << (j["ridge_restriction_ok"].get<bool>() ? "1" : "0")
           << "\n";
        return os.str();
    }
    os << "# Branch quartic model (type " << to_string(t) << ", m = " << m
       << ", seed = " << seed << ")\n\n";
    for (const auto& row : j["h"])
        os << "- h" << row["index"].get<int>()
           << (row["ridge_ideal"].get<bool>() ? " (ridge ideal): " : ": ")
           << row["poly"].get<std::string>() << "\n";
    os << "- Q: " << j["q"].get<std::string>() << "\n\n";
    os << "| plane | at q | at qbar | ok |\n|-------|------|---------|----|\n";
    for (const auto& row : j["planes"])
        os << "| lambda = " << row["lambda"].get<std::string>() << " | "
           << row["at_q"].get<std::string>() << " | " << row["at_qbar"].get<std::string>()
           << " | " << (row["ok"].get<bool>() ? "yes" : "NO") << " |\n";
    os << "\nTropes: ";
    if (j["tropes"].empty()) os << "none for this type.";
    for (const auto& row : j["tropes"])
        os << "h" << row["alpha"].get<int>() << " -> "
           << (row["ok"].get<bool>() ? "ok" : "FAIL") << "  ";
    os << "\nDouble conics: ";
    for (const auto& row : j["double_conics"])
        os << "h" << row["h_index"].get<int>() << "@" << row["lambda"].get<std::string>()
           << " -> " << (row["ok"].get<bool>() ? "ok" : "FAIL") << "  ";
    os << "\nRidge restriction: "
       << (j["ridge_restriction_ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    os << "Overall: " << (all_ok ? "ok" : "DEGENERATE") << "\n";
    return os.str();
}

}  // namespace dsolid
