#include "hpd/family.hpp"

namespace hpd {

namespace {

PJet jet_truncate(const PJet& p, int new_order) { return p.with_order(new_order); }

ChartMap map_truncate(const ChartMap& m, int new_order) {
    ChartMap r = m;
    for (auto& c : r.comps) c = jet_truncate(c, new_order);
    if (m.inverse)
        r.inverse = std::make_shared<ChartMap>(map_truncate(*m.inverse, new_order));
    return r;
}

PJet jet_recenter(const PJet& p, const std::vector<Rat>& t0) {
    std::vector<PJet> vars, params;
    for (int i = 0; i < p.nvars(); ++i)
        vars.push_back(PJet::variable(p.nvars(), p.nparams(), p.order(), i));
    for (int u = 0; u < p.nparams(); ++u)
        params.push_back(PJet(RatFn(p.nvars(), t0.at(u)), p.nparams(), p.order()) +
                         PJet::param(p.nvars(), p.nparams(), p.order(), u));
    return compose(p, vars, params, p.nvars(), p.nparams(), p.order());
}

ChartMap map_recenter(const ChartMap& m, const std::vector<Rat>& t0) {
    ChartMap r = m;
    for (auto& c : r.comps) c = jet_recenter(c, t0);
    if (m.inverse) r.inverse = std::make_shared<ChartMap>(map_recenter(*m.inverse, t0));
    return r;
}

} // namespace

PoissonFamily PoissonFamily::truncated(int new_order) const {
    PoissonFamily r = *this;
    r.atlas.space.order = new_order;
    for (auto& [k, m] : r.atlas.transitions) m = map_truncate(m, new_order);
    for (auto& [c, b] : r.bivectors) {
        MvJet nb(b.chart(), b.ncoords(), b.degree());
        for (auto& [idx, coeff] : b.components()) nb.add_term(idx, jet_truncate(coeff, new_order));
        b = nb;
    }
    return r;
}

PoissonFamily PoissonFamily::recentered(const std::vector<Rat>& t0) const {
    if ((int)t0.size() != space().nparams())
        throw InvalidParams("recenter: wrong number of parameter values");
    PoissonFamily r = *this;
    for (auto& [k, m] : r.atlas.transitions) m = map_recenter(m, t0);
    for (auto& [c, b] : r.bivectors) {
        MvJet nb(b.chart(), b.ncoords(), b.degree());
        for (auto& [idx, coeff] : b.components()) nb.add_term(idx, jet_recenter(coeff, t0));
        b = nb;
    }
    return r;
}

namespace {

std::string defect_str(const std::map<IdxTuple, PJet>& defect, const VarTable& vt) {
    std::string out;
    for (auto& [idx, c] : defect) {
        if (!out.empty()) out += "; ";
        out += "(";
        for (size_t i = 0; i < idx.size(); ++i)
            out += (i ? "," : "") + std::to_string(idx[i]);
        out += "): " + c.str(vt.vars, vt.params);
    }
    return out;
}

} // namespace

ValidationReport validate_family(const PoissonFamily& fam) {
    ValidationReport rep;
    const auto& sp = fam.space();
    for (int c = 0; c < sp.nchart(); ++c) {
        auto it = fam.bivectors.find(c);
        if (it == fam.bivectors.end()) {
            rep.add("chart(" + sp.charts[c].name + "): bivector present", false,
                    "missing bivector");
            continue;
        }
        auto defect = jacobi_defect(it->second);
        rep.add("chart(" + sp.charts[c].name + "): Jacobi identity", defect.empty(),
                defect.empty() ? "" : defect_str(defect, sp.table(c)));
    }
    for (auto& [key, f] : fam.atlas.transitions) {
        auto [j, k] = key;
        // f = f_jk : chart k -> chart j must send Lambda_k to Lambda_j.
        auto itk = fam.bivectors.find(k);
        auto itj = fam.bivectors.find(j);
        if (itk == fam.bivectors.end() || itj == fam.bivectors.end()) continue;
        auto res = poisson_map_residual(f, itk->second, itj->second);
        rep.add("overlap(" + sp.charts[j].name + "," + sp.charts[k].name +
                    "): Poisson compatibility",
                res.empty(), res.empty() ? "" : defect_str(res, sp.table(k)));
    }
    return rep;
}

ValidationReport validate_quotient(const QuotientFamily& fam) {
    ValidationReport rep;
    const auto& sp = fam.space;
    auto defect = jacobi_defect(fam.bivector);
    rep.add("ambient: Jacobi identity", defect.empty(),
            defect.empty() ? "" : defect_str(defect, sp.table(0)));
    for (size_t g = 0; g < fam.generators.size(); ++g) {
        auto res = poisson_map_residual(fam.generators[g], fam.bivector, fam.bivector);
        rep.add("generator #" + std::to_string(g) + ": invariance", res.empty(),
                res.empty() ? "" : defect_str(res, sp.table(0)));
    }
    return rep;
}

PJet lift_params(const PJet& h0, int nvars) {
    if (h0.nvars() != 0) throw InternalError("lift_params expects a parameter-only jet");
    PJet r(nvars, h0.nparams(), h0.order());
    for (auto& [mu, f] : h0.terms()) {
        auto c = f.as_lpoly();
        auto k = c ? c->as_constant() : std::nullopt;
        if (!k) throw InternalError("parameter-only jet with non-constant coefficient");
        r.add_term(mu, RatFn(nvars, *k));
    }
    return r;
}

namespace {

PJet jet_pullback(const PJet& p, const std::vector<PJet>& h, int new_nparams,
                  int order) {
    std::vector<PJet> vars, params;
    for (int i = 0; i < p.nvars(); ++i)
        vars.push_back(PJet::variable(p.nvars(), new_nparams, order, i));
    for (auto& hu : h) params.push_back(lift_params(hu, p.nvars()));
    return compose(p, vars, params, p.nvars(), new_nparams, order);
}

ChartMap map_pullback(const ChartMap& m, const std::vector<PJet>& h, int new_nparams,
                      int order) {
    ChartMap r = m;
    for (auto& c : r.comps) c = jet_pullback(c, h, new_nparams, order);
    if (m.inverse)
        r.inverse = std::make_shared<ChartMap>(map_pullback(*m.inverse, h, new_nparams, order));
    return r;
}

} // namespace

PoissonFamily pullback_family(const PoissonFamily& fam,
                              const std::vector<std::string>& new_params,
                              const std::vector<PJet>& h, int order) {
    if ((int)h.size() != fam.space().nparams())
        throw InvalidParams("pullback: h must assign every original parameter");
    for (auto& hu : h) {
        if (hu.nparams() != (int)new_params.size())
            throw InvalidParams("pullback: h entry over wrong parameter space");
        if (!hu.at_zero().is_zero())
            throw InvalidParams("pullback requires h(0) = 0");
    }
    PoissonFamily r = fam;
    r.atlas.space.params = new_params;
    r.atlas.space.order = order;
    const int l = (int)new_params.size();
    for (auto& [k, m] : r.atlas.transitions) m = map_pullback(m, h, l, order);
    for (auto& [c, b] : r.bivectors) {
        MvJet nb(b.chart(), b.ncoords(), b.degree());
        for (auto& [idx, coeff] : b.components())
            nb.add_term(idx, jet_pullback(coeff, h, l, order));
        b = nb;
    }
    return r;
}

CentralFiber central_fiber(const PoissonFamily& fam) {
    CentralFiber cf;
    cf.atlas.space = fam.space();
    cf.atlas.space.params.clear();
    cf.atlas.space.order = 0;
    cf.atlas.triples = fam.atlas.triples;
    for (auto& [key, m] : fam.atlas.transitions) {
        ChartMap c;
        c.src = m.src;
        c.tgt = m.tgt;
        c.src_ncoords = m.src_ncoords;
        c.tgt_ncoords = m.tgt_ncoords;
        for (auto& comp : m.comps) c.comps.push_back(PJet(comp.at_zero(), 0, 0));
        cf.atlas.transitions[key] = std::move(c);
    }
    // Wire up inverse pointers between the two orders of each pair.
    for (auto& [key, m] : cf.atlas.transitions) {
        auto rev = cf.atlas.transitions.find({key.second, key.first});
        if (rev != cf.atlas.transitions.end())
            m.inverse = std::make_shared<ChartMap>(rev->second);
    }
    for (auto& [c, b] : fam.bivectors) {
        MvJet at0(b.chart(), b.ncoords(), b.degree());
        for (auto& [idx, coeff] : b.components())
            at0.add_term(idx, PJet(coeff.at_zero(), 0, 0));
        cf.bivectors.emplace(c, constant_part(at0));
    }
    return cf;
}

} // namespace hpd
