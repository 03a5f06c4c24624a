#pragma once

#include <array>

#include "hpd/expr.hpp"

namespace hpd {

struct Chart {
    std::string name;
    std::vector<std::string> coords;
    int ncoords() const { return (int)coords.size(); }
};

// Shared ring layout of a family: charts, globally adjoined symbolic
// constants, deformation parameters and the jet truncation order V.
struct FamilySpace {
    std::vector<Chart> charts;
    std::vector<std::string> constants;
    std::vector<std::string> params;
    int order = 0;

    int nchart() const { return (int)charts.size(); }
    int nparams() const { return (int)params.size(); }
    int nvars(int chart) const {
        return charts.at(chart).ncoords() + (int)constants.size();
    }
    VarTable table(int chart) const;
};

struct Atlas {
    FamilySpace space;
    // Key (j, k): the transition f_jk expressing chart-j coordinates in
    // chart-k variables (source k, target j). Both orders are stored and
    // point at each other as declared inverses.
    std::map<std::pair<int, int>, ChartMap> transitions;
    std::vector<std::array<int, 3>> triples;

    bool has_overlap(int j, int k) const {
        return transitions.count({j, k}) != 0;
    }
    const ChartMap& transition(int j, int k) const;
    void add_overlap(int j, int k, ChartMap fjk, ChartMap fkj);
};

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string detail; // residual printout on failure
};

struct ValidationReport {
    std::vector<CheckRecord> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

// Per-overlap round-trip identities and per-triple cocycle identities,
// checked as formal jet/rational-function identities.
ValidationReport validate_atlas(const Atlas& a);

} // namespace hpd
