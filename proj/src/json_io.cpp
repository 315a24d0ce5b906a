#include "dsolid/json_io.hpp"

#include <cstdint>

namespace dsolid {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error("expected an integer or a decimal string");
}

json curve_class_to_json(const CurveClass& c) {
    json a = json::array();
    for (const auto& v : c.coeffs()) a.push_back(int_to_json(v));
    return a;
}

CurveClass curve_class_from_json(const json& j, const LatticeBasis& basis) {
    if (!j.is_array() || static_cast<int>(j.size()) != basis.rank())
        throw validation_error("curve class coefficient array has wrong length");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(int_from_json(x));
    return CurveClass(basis, std::move(v));
}

json cycle_config_to_json(const CycleConfig& cfg) {
    json j;
    j["schema"] = 1;
    j["n"] = cfg.n;
    j["type"] = to_string(cfg.type);
    j["k"] = cfg.k();
    j["history"] = cfg.history;
    json comps = json::array();
    for (const auto& c : cfg.comps) comps.push_back(curve_class_to_json(c));
    j["components"] = std::move(comps);
    json selfint = json::array();
    for (const auto& s : cfg.self_intersections()) selfint.push_back(int_to_json(s));
    j["self_intersections"] = std::move(selfint);
    const DDivisor dd = compute_divisor(cfg);
    json d = json::array(), dp = json::array(), dq = json::array();
    for (const auto& v : dd.d) d.push_back(int_to_json(v));
    for (const auto& v : dd.dprime) dp.push_back(int_to_json(v));
    for (const auto& v : dd.ddprime) dq.push_back(int_to_json(v));
    j["d"] = std::move(d);
    j["dprime"] = std::move(dp);
    j["ddprime"] = std::move(dq);
    return j;
}

CycleConfig cycle_config_from_json(const json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw validation_error("unsupported configuration schema");
    CycleConfig cfg;
    cfg.n = j.at("n").get<int>();
    cfg.type = cycle_type_from_string(j.at("type").get<std::string>());
    cfg.history = j.at("history").get<std::vector<int>>();
    const LatticeBasis basis(cfg.n);
    for (const auto& c : j.at("components"))
        cfg.comps.push_back(curve_class_from_json(c, basis));
    validate(cfg);
    compute_divisor(cfg);  // derived fields are recomputed, never trusted
    return cfg;
}

json poly_to_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = json::array();
        t.push_back(m);
        t.push_back(int_to_json(numerator(c)));
        t.push_back(int_to_json(denominator(c)));
        terms.push_back(std::move(t));
    }
    json j;
    j["nvars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

SparsePoly poly_from_json(const json& j) {
    SparsePoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        auto mon = t.at(0).get<std::vector<int>>();
        const Int num = int_from_json(t.at(1));
        const Int den = int_from_json(t.at(2));
        if (den == 0) throw validation_error("zero denominator in polynomial");
        p.add_term(std::move(mon), Rat(num, den));
    }
    return p;
}

}  // namespace dsolid
