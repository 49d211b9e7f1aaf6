#include "esos/params.hpp"

#include <cmath>

#include "esos/graph.hpp"
#include "json.hpp"

namespace esos {

void ParamProfile::validate() const {
    auto check01 = [](const char* name, const Rat& v) {
        if (v <= Rat(0) || v > Rat(1))
            throw Error("precondition", std::string("profile threshold ") + name +
                                            " outside (0,1]: " + v.str());
    };
    check01("eps", eps);
    check01("alpha", alpha);
    check01("gamma", gamma);
    check01("q", q);
    check01("p", p);
    check01("eta", eta);
    check01("c", c);
    if (caps.kappa_exact <= 0 || caps.regular_pair_exact <= 0 || caps.regular_pair_full <= 0 ||
        caps.sample_count <= 0 || caps.resample <= 0 || caps.max_parts <= 0 ||
        caps.max_iters <= 0 || caps.oracle_budget <= 0)
        throw Error("precondition", "profile caps must be positive");
}

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw Error("parse", "expected rational as integer or \"p/q\" string");
}

}  // namespace

std::string ParamProfile::to_json() const {
    json j;
    j["eps"] = eps.str();
    j["alpha"] = alpha.str();
    j["gamma"] = gamma.str();
    j["q"] = q.str();
    j["p"] = p.str();
    j["eta"] = eta.str();
    j["c"] = c.str();
    j["caps"] = {{"kappa_exact", caps.kappa_exact},
                 {"regular_pair_exact", caps.regular_pair_exact},
                 {"regular_pair_full", caps.regular_pair_full},
                 {"sample_count", caps.sample_count},
                 {"resample", caps.resample},
                 {"max_parts", caps.max_parts},
                 {"max_iters", caps.max_iters},
                 {"oracle_budget", caps.oracle_budget}};
    json consts = json::object();
    for (const auto& [name, value] : constants) consts[name] = value.str();
    j["constants"] = consts;
    return j.dump(2) + "\n";
}

ParamProfile ParamProfile::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("parse", std::string("profile JSON: ") + e.what());
    }
    ParamProfile p;
    try {
        if (j.contains("eps")) p.eps = rat_from_json(j["eps"]);
        if (j.contains("alpha")) p.alpha = rat_from_json(j["alpha"]);
        if (j.contains("gamma")) p.gamma = rat_from_json(j["gamma"]);
        if (j.contains("q")) p.q = rat_from_json(j["q"]);
        if (j.contains("p")) p.p = rat_from_json(j["p"]);
        if (j.contains("eta")) p.eta = rat_from_json(j["eta"]);
        if (j.contains("c")) p.c = rat_from_json(j["c"]);
        if (j.contains("caps")) {
            const auto& c = j["caps"];
            if (c.contains("kappa_exact")) p.caps.kappa_exact = c["kappa_exact"].get<int>();
            if (c.contains("regular_pair_exact"))
                p.caps.regular_pair_exact = c["regular_pair_exact"].get<int>();
            if (c.contains("regular_pair_full"))
                p.caps.regular_pair_full = c["regular_pair_full"].get<int>();
            if (c.contains("sample_count")) p.caps.sample_count = c["sample_count"].get<int>();
            if (c.contains("resample")) p.caps.resample = c["resample"].get<int>();
            if (c.contains("max_parts")) p.caps.max_parts = c["max_parts"].get<int>();
            if (c.contains("max_iters")) p.caps.max_iters = c["max_iters"].get<int>();
            if (c.contains("oracle_budget"))
                p.caps.oracle_budget = c["oracle_budget"].get<long long>();
        }
        if (j.contains("constants"))
            for (auto it = j["constants"].begin(); it != j["constants"].end(); ++it)
                p.constants[it.key()] = rat_from_json(it.value());
    } catch (const json::exception& e) {
        throw Error("parse", std::string("profile JSON: ") + e.what());
    }
    p.validate();
    return p;
}

Rat sqrt_upper(const Rat& x) {
    if (x < Rat(0)) throw Error("precondition", "sqrt_upper: negative input");
    if (x == Rat(0)) return Rat(0);
    // Scale to an integer, take integer sqrt, round up; r = ceil(sqrt(x*S^2))/S.
    const long long scale = 1000000;
    Rat scaled = x * Rat(scale) * Rat(scale);
    long long target = scaled.ceil();
    long long lo = 0, hi = 2000000000;
    while (lo < hi) {  // smallest r with r*r >= target
        long long mid = lo + (hi - lo) / 2;
        if ((__int128)mid * mid >= (__int128)target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return Rat(lo, scale);
}

}  // namespace esos
