#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/invariants.hpp"
#include "milnor/parse.hpp"

namespace milnor {

using nlohmann::json;

// On-disk problem description. Polynomial payloads are strings in the
// expression grammar; the first variable is the axis of Sigma.
struct ProblemFile {
    std::vector<std::string> variables;
    std::optional<std::vector<int>> weights;
    std::vector<std::string> equations;
    std::string f;
    std::optional<std::vector<std::vector<std::string>>> derlog;
    Limits limits;
    int k_min = 1;
    bool assume_isolated = false;
};

namespace detail {

inline void check_keys(const json& j, std::initializer_list<const char*> allowed,
                       const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw SchemaError("unknown key '" + it.key() + "' in " + where);
    }
}

}  // namespace detail

inline ProblemFile problem_file_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("problem file must be a JSON object");
    detail::check_keys(j, {"variables", "weights", "equations", "f", "derlog", "options"},
                       "problem file");
    ProblemFile pf;
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw SchemaError("'variables' must be a non-empty array of names");
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw SchemaError("'variables' entries must be strings");
        pf.variables.push_back(v.get<std::string>());
    }
    if (j.contains("weights")) {
        std::vector<int> w;
        for (const auto& x : j["weights"]) {
            if (!x.is_number_integer() || x.get<long long>() < 1)
                throw SchemaError("'weights' entries must be positive integers");
            w.push_back(x.get<int>());
        }
        pf.weights = std::move(w);
    }
    if (!j.contains("equations") || !j["equations"].is_array() || j["equations"].empty())
        throw SchemaError("'equations' must be a non-empty array of polynomial strings");
    for (const auto& e : j["equations"]) {
        if (!e.is_string()) throw SchemaError("'equations' entries must be strings");
        pf.equations.push_back(e.get<std::string>());
    }
    if (!j.contains("f") || !j["f"].is_string())
        throw SchemaError("'f' must be a polynomial string");
    pf.f = j["f"].get<std::string>();
    if (j.contains("derlog")) {
        std::vector<std::vector<std::string>> dl;
        if (!j["derlog"].is_array()) throw SchemaError("'derlog' must be an array of derivations");
        for (const auto& d : j["derlog"]) {
            std::vector<std::string> comps;
            if (!d.is_array()) throw SchemaError("each derlog entry must be an array of components");
            for (const auto& c : d) {
                if (!c.is_string()) throw SchemaError("derivation components must be strings");
                comps.push_back(c.get<std::string>());
            }
            dl.push_back(std::move(comps));
        }
        pf.derlog = std::move(dl);
    }
    if (j.contains("options")) {
        const json& o = j["options"];
        detail::check_keys(o, {"n_max", "iteration_budget", "k_max", "k_min", "assume_isolated"},
                           "options");
        if (o.contains("n_max")) pf.limits.n_max = o["n_max"].get<int>();
        if (o.contains("iteration_budget"))
            pf.limits.iteration_budget = o["iteration_budget"].get<long long>();
        if (o.contains("k_max")) pf.limits.k_max = o["k_max"].get<int>();
        if (o.contains("k_min")) pf.k_min = o["k_min"].get<int>();
        if (o.contains("assume_isolated")) pf.assume_isolated = o["assume_isolated"].get<bool>();
    }
    if (pf.equations.size() >= pf.variables.size())
        throw SchemaError("need p < number of variables");
    return pf;
}

inline ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return problem_file_from_json(j);
}

inline Problem instantiate(const ProblemFile& pf) {
    RingPtr ring = make_ring(pf.variables);
    std::optional<Weights> w;
    if (pf.weights) w = Weights(*pf.weights);
    std::vector<Polynomial> hs;
    for (const auto& e : pf.equations) hs.push_back(parse_poly(e, ring));
    if (hs.size() >= 2 && !pf.assume_isolated)
        throw SchemaError(
            "p >= 2: the isolated-singularity certificate is the caller's responsibility; "
            "set options.assume_isolated = true to proceed");
    SpacePair X = SpacePair::make(ring, w, hs, pf.limits, pf.assume_isolated);

    std::optional<DerlogBasis> basis;
    if (pf.derlog) {
        std::vector<Derivation> gens;
        for (const auto& d : *pf.derlog) {
            if (d.size() != ring->size())
                throw SchemaError("derivation component count must match the variable count");
            Derivation xi;
            for (const auto& c : d) xi.components.push_back(parse_poly(c, ring));
            gens.push_back(std::move(xi));
        }
        basis = load_derlog(X, std::move(gens), pf.limits);
    } else if (X.p() >= 2) {
        throw SchemaError("derlog generators are required when p >= 2");
    }
    return Problem::make(std::move(X), parse_poly(pf.f, ring), std::move(basis), pf.limits);
}

// ---- report serialization ----

inline std::string q44_verdict_string(Q44Verdict v) {
    switch (v) {
        case Q44Verdict::Holds: return "holds";
        case Q44Verdict::Fails: return "fails";
        default: return "inapplicable";
    }
}

inline Q44Verdict q44_verdict_from_string(const std::string& s) {
    if (s == "holds") return Q44Verdict::Holds;
    if (s == "fails") return Q44Verdict::Fails;
    if (s == "inapplicable") return Q44Verdict::Inapplicable;
    throw SchemaError("bad q44 verdict '" + s + "'");
}

inline json q44_to_json(const Q44Result& q) {
    json j;
    j["verdict"] = q44_verdict_string(q.verdict);
    if (q.nu) j["nu"] = *q.nu;
    if (q.lambda) j["lambda"] = *q.lambda;
    if (q.delta) j["delta"] = *q.delta;
    if (q.rhs) j["rhs"] = *q.rhs;
    if (!q.reason.empty()) j["reason"] = q.reason;
    return j;
}

inline Q44Result q44_from_json(const json& j) {
    Q44Result q;
    q.verdict = q44_verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("nu")) q.nu = j["nu"].get<long long>();
    if (j.contains("lambda")) q.lambda = j["lambda"].get<long long>();
    if (j.contains("delta")) q.delta = j["delta"].get<long long>();
    if (j.contains("rhs")) q.rhs = j["rhs"].get<long long>();
    if (j.contains("reason")) q.reason = j["reason"].get<std::string>();
    return q;
}

inline json report_to_json(const InvariantReport& r) {
    json j;
    j["dim_x"] = r.dim_x;
    j["primitive_member"] = r.primitive_member;
    j["constancy"] = r.constancy;
    j["j"] = r.j;
    j["nu"] = r.nu;
    j["chi"] = r.chi;
    j["sigma"] = r.sigma;
    j["mult"] = r.mult;
    if (r.lambda) j["lambda"] = *r.lambda;
    if (r.delta) j["delta"] = *r.delta;
    if (r.q44) j["q44"] = q44_to_json(*r.q44);
    j["series"] = json::array();
    for (const auto& row : r.series)
        j["series"].push_back({{"k", row.k}, {"mu", row.mu}, {"consistent", row.consistent}});
    j["e_k"] = json::array();
    for (const auto& s : r.e_k) j["e_k"].push_back({{"k", s.k}, {"e", s.e}});
    return j;
}

inline InvariantReport report_from_json(const json& j) {
    InvariantReport r;
    r.dim_x = j.at("dim_x").get<int>();
    r.primitive_member = j.at("primitive_member").get<bool>();
    r.constancy = j.at("constancy").get<bool>();
    r.j = j.at("j").get<long long>();
    r.nu = j.at("nu").get<long long>();
    r.chi = j.at("chi").get<long long>();
    r.sigma = j.at("sigma").get<long long>();
    r.mult = j.at("mult").get<long long>();
    if (j.contains("lambda")) r.lambda = j["lambda"].get<long long>();
    if (j.contains("delta")) r.delta = j["delta"].get<long long>();
    if (j.contains("q44")) r.q44 = q44_from_json(j["q44"]);
    for (const auto& row : j.at("series"))
        r.series.push_back(SeriesRow{row.at("k").get<int>(), row.at("mu").get<long long>(),
                                     row.at("consistent").get<bool>()});
    for (const auto& s : j.at("e_k"))
        r.e_k.push_back(EkSample{s.at("k").get<int>(), s.at("e").get<long long>()});
    return r;
}

}  // namespace milnor
