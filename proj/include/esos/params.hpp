#pragma once

#include <map>
#include <string>

#include "esos/rational.hpp"

namespace esos {

struct Caps {
    int kappa_exact = 20;        // exact cut enumeration limit
    int regular_pair_exact = 12; // restricted-subset exact regularity check
    int regular_pair_full = 8;   // full-exhaustive regularity check
    int sample_count = 200;      // sampled regularity subsets per pair
    int resample = 1000;         // generation resampling attempts
    int max_parts = 64;          // regularity partition width
    int max_iters = 10;          // regularity refinement rounds
    long long oracle_budget = 10000000;  // backtracking node budget
};

/// Thresholds, caps and the named-constant table used by the deck of
/// procedures. The asymptotic constants in the source results are far too
/// large to ever fire at desk scale, so each use site computes its formula
/// default and then defers to an override here; test profiles install
/// feasible values and the certificate records which were active.
struct ParamProfile {
    Rat eps{1, 100};
    Rat alpha{1, 10};
    Rat gamma{1, 100};
    Rat q{1, 10};
    Rat p{1, 10};
    Rat eta{1, 8};
    Rat c{1, 2};
    Caps caps;
    std::map<std::string, Rat> constants;

    /// Override lookup: the value stored under `name` if present, else the
    /// formula default computed by the caller.
    Rat coeff(const std::string& name, const Rat& formula_default) const {
        auto it = constants.find(name);
        return it == constants.end() ? formula_default : it->second;
    }
    bool has_coeff(const std::string& name) const { return constants.count(name) > 0; }

    void validate() const;

    std::string to_json() const;
    static ParamProfile from_json(const std::string& text);
};

/// Rational r with r*r >= x (and close to sqrt(x) from above); used where a
/// formula default involves a square root. Deterministic.
Rat sqrt_upper(const Rat& x);

}  // namespace esos
