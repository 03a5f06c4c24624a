#include "hpd/atlas.hpp"

namespace hpd {

VarTable FamilySpace::table(int chart) const {
    VarTable vt;
    vt.vars = charts.at(chart).coords;
    vt.ncoords = (int)vt.vars.size();
    vt.vars.insert(vt.vars.end(), constants.begin(), constants.end());
    vt.params = params;
    vt.order = order;
    return vt;
}

const ChartMap& Atlas::transition(int j, int k) const {
    auto it = transitions.find({j, k});
    if (it == transitions.end())
        throw ChartMismatch("no transition for overlap (" + std::to_string(j) + "," +
                            std::to_string(k) + ")");
    return it->second;
}

void Atlas::add_overlap(int j, int k, ChartMap fjk, ChartMap fkj) {
    fjk.src = k;
    fjk.tgt = j;
    fkj.src = j;
    fkj.tgt = k;
    fjk.inverse = std::make_shared<ChartMap>(fkj);
    fkj.inverse = std::make_shared<ChartMap>(fjk);
    transitions[{j, k}] = std::move(fjk);
    transitions[{k, j}] = std::move(fkj);
}

namespace {

std::string map_residual_str(const ChartMap& got, const ChartMap& expect,
                             const FamilySpace& space, int src_chart) {
    VarTable vt = space.table(src_chart);
    std::string out;
    for (size_t i = 0; i < got.comps.size(); ++i) {
        PJet d = got.comps[i] - expect.comps[i];
        if (d.is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += "component " + std::to_string(i) + ": " + d.str(vt.vars, vt.params);
    }
    return out;
}

} // namespace

ValidationReport validate_atlas(const Atlas& a) {
    ValidationReport rep;
    const auto& sp = a.space;
    for (auto& [key, f] : a.transitions) {
        auto [j, k] = key;
        if (j > k) continue; // each unordered pair once
        const ChartMap& fjk = f;
        const ChartMap& fkj = a.transition(k, j);
        ChartMap rt_k = compose_maps(fkj, fjk); // k -> j -> k
        ChartMap rt_j = compose_maps(fjk, fkj);
        ChartMap id_k = identity_map(k, sp.charts[k].ncoords(), sp.nvars(k),
                                     sp.nparams(), sp.order);
        ChartMap id_j = identity_map(j, sp.charts[j].ncoords(), sp.nvars(j),
                                     sp.nparams(), sp.order);
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < rt_k.comps.size(); ++i)
            if (!rt_k.comps[i].equals(id_k.comps[i])) ok = false;
        for (size_t i = 0; i < rt_j.comps.size(); ++i)
            if (!rt_j.comps[i].equals(id_j.comps[i])) ok = false;
        if (!ok) {
            detail = map_residual_str(rt_k, id_k, sp, k) + " | " +
                     map_residual_str(rt_j, id_j, sp, j);
        }
        rep.add("overlap(" + sp.charts[j].name + "," + sp.charts[k].name +
                    "): round-trip identity",
                ok, detail);
    }
    for (auto& t : a.triples) {
        int i = t[0], j = t[1], k = t[2];
        // f_ik = f_ij o f_jk as maps from chart k.
        const ChartMap& fik = a.transition(i, k);
        ChartMap comp = compose_maps(a.transition(i, j), a.transition(j, k));
        bool ok = true;
        for (size_t c = 0; c < fik.comps.size(); ++c)
            if (!fik.comps[c].equals(comp.comps[c])) ok = false;
        rep.add("triple(" + sp.charts[i].name + "," + sp.charts[j].name + "," +
                    sp.charts[k].name + "): cocycle identity",
                ok, ok ? "" : map_residual_str(comp, fik, sp, k));
    }
    return rep;
}

} // namespace hpd
