#include "hpd/multivector.hpp"

#include <functional>

namespace hpd {

std::optional<std::pair<IdxTuple, int>> merge_tuples(const IdxTuple& a,
                                                     const IdxTuple& b) {
    IdxTuple t = a;
    t.insert(t.end(), b.begin(), b.end());
    int sign = 1;
    // Insertion sort, counting inversions.
    for (size_t i = 1; i < t.size(); ++i) {
        size_t j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return std::nullopt;
    return std::make_pair(t, sign);
}

namespace {

LPoly coef_scaled(const LPoly& c, int sign) { return sign >= 0 ? c : -c; }
PJet coef_scaled(const PJet& c, int sign) { return sign >= 0 ? c : -c; }

} // namespace

template <class C>
void Multivector<C>::add_term(IdxTuple idx, const C& coeff) {
    if ((int)idx.size() != degree_) throw DegreeMismatch("term degree mismatch");
    if (coeff.is_zero()) return;
    int sign = 1;
    IdxTuple key;
    if (degree_ > 0) {
        auto merged = merge_tuples(idx, {});
        if (!merged) return; // repeated direction
        key = merged->first;
        sign = merged->second;
        for (int i : key)
            if (i < 0 || i >= ncoords_) throw DegreeMismatch("direction index out of range");
    }
    C value = coef_scaled(coeff, sign);
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(std::move(key), std::move(value));
    } else {
        it->second += value;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

template <class C>
Multivector<C> Multivector<C>::operator-() const {
    Multivector r(chart_, ncoords_, degree_);
    for (auto& [idx, c] : comps_) r.comps_.emplace(idx, coef_scaled(c, -1));
    return r;
}

template <class C>
Multivector<C>& Multivector<C>::operator+=(const Multivector& o) {
    check_chart(o);
    for (auto& [idx, c] : o.comps_) add_term(idx, c);
    return *this;
}

template <class C>
Multivector<C>& Multivector<C>::operator-=(const Multivector& o) {
    check_chart(o);
    for (auto& [idx, c] : o.comps_) add_term(idx, coef_scaled(c, -1));
    return *this;
}

template <class C>
template <class S>
Multivector<C> Multivector<C>::scaled(const S& s) const {
    Multivector r(chart_, ncoords_, degree_);
    for (auto& [idx, c] : comps_) r.add_term(idx, c * s);
    return r;
}

template <class C>
bool Multivector<C>::equals(const Multivector& o) const {
    if (chart_ != o.chart_ || degree_ != o.degree_) return false;
    Multivector d = *this;
    d -= o;
    return d.is_zero();
}

template <class C>
Multivector<C> wedge(const Multivector<C>& a, const Multivector<C>& b) {
    if (a.chart() != b.chart() || a.ncoords() != b.ncoords())
        throw ChartMismatch("wedge of multivectors on different charts");
    Multivector<C> r(a.chart(), a.ncoords(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.ncoords()) return r;
    for (auto& [ia, ca] : a.components())
        for (auto& [ib, cb] : b.components()) {
            auto merged = merge_tuples(ia, ib);
            if (!merged) continue;
            r.add_term(merged->first, coef_scaled(ca * cb, merged->second));
        }
    return r;
}

namespace {

// Right derivative of zeta_J by zeta_i: sign (-1)^{q-1-pos}.
// Left derivative: sign (-1)^{pos}.
int deriv_sign_right(int q, int pos) { return ((q - 1 - pos) % 2 == 0) ? 1 : -1; }
int deriv_sign_left(int pos) { return (pos % 2 == 0) ? 1 : -1; }

IdxTuple erase_at(const IdxTuple& t, size_t pos) {
    IdxTuple r = t;
    r.erase(r.begin() + pos);
    return r;
}

} // namespace

template <class C>
Multivector<C> schouten(const Multivector<C>& a, const Multivector<C>& b) {
    if (a.chart() != b.chart() || a.ncoords() != b.ncoords())
        throw ChartMismatch("schouten bracket across charts");
    if (a.degree() < 1 || b.degree() < 1)
        throw DegreeZero("schouten bracket requires degree >= 1 arguments");
    const int qa = a.degree(), qb = b.degree();
    Multivector<C> r(a.chart(), a.ncoords(), qa + qb - 1);
    if (qa + qb - 1 > a.ncoords()) return r;
    for (auto& [J, f] : a.components()) {
        for (auto& [L, g] : b.components()) {
            // sum_i  d_r(a)/d zeta_i * d(b)/dz_i
            for (size_t p = 0; p < J.size(); ++p) {
                C dg = coef_diff(g, J[p]);
                if (dg.is_zero()) continue;
                auto merged = merge_tuples(erase_at(J, p), L);
                if (!merged) continue;
                int s = deriv_sign_right(qa, (int)p) * merged->second;
                r.add_term(merged->first, coef_scaled(f * dg, s));
            }
            // - sum_i  d(a)/dz_i * d_l(b)/d zeta_i
            for (size_t p = 0; p < L.size(); ++p) {
                C df = coef_diff(f, L[p]);
                if (df.is_zero()) continue;
                auto merged = merge_tuples(J, erase_at(L, p));
                if (!merged) continue;
                int s = -deriv_sign_left((int)p) * merged->second;
                r.add_term(merged->first, coef_scaled(df * g, s));
            }
        }
    }
    return r;
}

template <class C>
std::map<IdxTuple, C> jacobi_defect(const Multivector<C>& sigma) {
    if (sigma.degree() != 2) throw DegreeMismatch("jacobi_defect needs a bivector");
    std::map<IdxTuple, C> out;
    const int n = sigma.ncoords();
    // Antisymmetric matrix view of the stored components.
    auto entry = [&](int a, int b) -> std::optional<std::pair<const C*, int>> {
        if (a == b) return std::nullopt;
        const C* c = sigma.find_component(a < b ? IdxTuple{a, b} : IdxTuple{b, a});
        if (!c) return std::nullopt;
        return std::make_pair(c, a < b ? 1 : -1);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::optional<C> acc;
                for (int l = 0; l < n; ++l) {
                    // sigma_{lk} d sigma_{ij}/dz_l + cyclic permutations of (i,j,k).
                    const int pieces[3][4] = {{l, k, i, j}, {l, i, j, k}, {l, j, k, i}};
                    for (auto& pc : pieces) {
                        auto lhs = entry(pc[0], pc[1]);
                        auto rhs = entry(pc[2], pc[3]);
                        if (!lhs || !rhs) continue;
                        C d = coef_diff(*rhs->first, l);
                        if (d.is_zero()) continue;
                        C term = coef_scaled(*lhs->first * d, lhs->second * rhs->second);
                        if (!acc)
                            acc = std::move(term);
                        else
                            *acc += term;
                    }
                }
                if (acc && !acc->is_zero()) out.emplace(IdxTuple{i, j, k}, *acc);
            }
    return out;
}

MvJet to_jet(const MvPoly& m, int nparams, int order) {
    MvJet r(m.chart(), m.ncoords(), m.degree());
    for (auto& [idx, c] : m.components())
        r.add_term(idx, PJet(RatFn(c), nparams, order));
    return r;
}

MvPoly constant_part(const MvJet& m) {
    MvPoly r(m.chart(), m.ncoords(), m.degree());
    for (auto& [idx, c] : m.components()) {
        RatFn c0 = c.at_zero();
        if (c0.is_zero()) continue;
        auto p = c0.as_lpoly();
        if (!p)
            throw UnsupportedAtlas("coefficient is not Laurent-polynomial at t = 0");
        r.add_term(idx, *p);
    }
    return r;
}

ChartMap identity_map(int chart, int ncoords, int nvars, int nparams, int order) {
    ChartMap m;
    m.src = m.tgt = chart;
    m.src_ncoords = m.tgt_ncoords = ncoords;
    for (int i = 0; i < ncoords; ++i)
        m.comps.push_back(PJet::variable(nvars, nparams, order, i));
    return m;
}

std::vector<PJet> map_assignment(const ChartMap& f, int tgt_nvars) {
    std::vector<PJet> assign = f.comps;
    int nconsts = f.src_nvars() - f.src_ncoords;
    for (int c = 0; c < nconsts; ++c)
        assign.push_back(PJet::variable(tgt_nvars, f.nparams(), f.order(),
                                        f.tgt_ncoords + c));
    // Components of f live over the source ring; the assignment must be over
    // the target ring when used to rewrite source expressions. Callers pass
    // the inverse map's components, which already satisfy that; this helper
    // merely appends identity images for the shared constants.
    return assign;
}

ChartMap compose_maps(const ChartMap& g, const ChartMap& f) {
    if (f.tgt != g.src) throw ChartMismatch("compose_maps: chart chain mismatch");
    ChartMap r;
    r.src = f.src;
    r.tgt = g.tgt;
    r.src_ncoords = f.src_ncoords;
    r.tgt_ncoords = g.tgt_ncoords;
    std::vector<PJet> assign = f.comps;
    int nconsts = f.src_nvars() - f.src_ncoords;
    for (int c = 0; c < nconsts; ++c)
        assign.push_back(
            PJet::variable(f.src_nvars(), f.nparams(), f.order(), f.src_ncoords + c));
    std::vector<PJet> params;
    for (int u = 0; u < f.nparams(); ++u)
        params.push_back(PJet::param(f.src_nvars(), f.nparams(), f.order(), u));
    for (auto& comp : g.comps)
        r.comps.push_back(
            compose(comp, assign, params, f.src_nvars(), f.nparams(), f.order()));
    if (f.inverse && g.inverse)
        r.inverse = std::make_shared<ChartMap>(compose_maps(*f.inverse, *g.inverse));
    return r;
}

namespace {

// q x q minor determinant of the Jacobian, rows = target tuple A, columns =
// source tuple R.
PJet jacobian_minor(const std::vector<std::vector<PJet>>& jac, const IdxTuple& A,
                    const IdxTuple& R) {
    const size_t q = A.size();
    if (q == 1) return jac[A[0]][R[0]];
    if (q == 2)
        return jac[A[0]][R[0]] * jac[A[1]][R[1]] - jac[A[0]][R[1]] * jac[A[1]][R[0]];
    // General expansion along the first row (q <= 3 in practice).
    PJet acc(jac[0][0].nvars(), jac[0][0].nparams(), jac[0][0].order());
    for (size_t c = 0; c < q; ++c) {
        IdxTuple subA(A.begin() + 1, A.end());
        IdxTuple subR;
        for (size_t j = 0; j < q; ++j)
            if (j != c) subR.push_back(R[j]);
        PJet cofactor = jacobian_minor(jac, subA, subR);
        PJet term = jac[A[0]][R[c]] * cofactor;
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

std::vector<IdxTuple> increasing_tuples(int n, int q) {
    std::vector<IdxTuple> out;
    IdxTuple cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == q) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

MvJet pushforward(const MvJet& mv, const ChartMap& f, int tgt_nvars) {
    if (mv.chart() != f.src) throw ChartMismatch("pushforward: multivector not on f.src");
    if (!f.inverse) throw MissingInverse("pushforward needs f.declared_inverse");
    const int q = mv.degree();
    const int ns = f.src_ncoords, nt = f.tgt_ncoords;
    MvJet out(f.tgt, nt, q);
    if (q > nt) return out;

    if (q == 0) {
        // Pure re-expression of a function.
        std::vector<PJet> assign = map_assignment(*f.inverse, tgt_nvars);
        std::vector<PJet> params;
        for (int u = 0; u < f.nparams(); ++u)
            params.push_back(PJet::param(tgt_nvars, f.nparams(), f.order(), u));
        for (auto& [idx, c] : mv.components())
            out.add_term(idx, compose(c, assign, params, tgt_nvars, f.nparams(), f.order()));
        return out;
    }

    std::vector<std::vector<PJet>> jac(nt, std::vector<PJet>(ns));
    for (int a = 0; a < nt; ++a)
        for (int r = 0; r < ns; ++r) jac[a][r] = f.comps[a].differentiate_var(r);

    // Transform in source coordinates, then rewrite through the inverse.
    std::vector<PJet> inv_assign = map_assignment(*f.inverse, tgt_nvars);
    std::vector<PJet> params;
    for (int u = 0; u < f.nparams(); ++u)
        params.push_back(PJet::param(tgt_nvars, f.nparams(), f.order(), u));

    for (auto& A : increasing_tuples(nt, q)) {
        PJet acc(f.src_nvars(), f.nparams(), f.order());
        for (auto& [R, c] : mv.components()) acc += c * jacobian_minor(jac, A, R);
        if (acc.is_zero()) continue;
        out.add_term(A, compose(acc, inv_assign, params, tgt_nvars, f.nparams(), f.order()));
    }
    return out;
}

std::map<IdxTuple, PJet> poisson_map_residual(const ChartMap& f, const MvJet& src,
                                              const MvJet& tgt) {
    if (src.chart() != f.src || tgt.chart() != f.tgt)
        throw ChartMismatch("poisson_map_residual: charts do not match the map");
    if (src.degree() != 2 || tgt.degree() != 2)
        throw DegreeMismatch("poisson_map_residual needs bivectors");
    const int ns = f.src_ncoords, nt = f.tgt_ncoords;
    std::vector<std::vector<PJet>> jac(nt, std::vector<PJet>(ns));
    for (int a = 0; a < nt; ++a)
        for (int r = 0; r < ns; ++r) jac[a][r] = f.comps[a].differentiate_var(r);

    std::vector<PJet> assign = f.comps;
    int nconsts = f.src_nvars() - f.src_ncoords;
    for (int c = 0; c < nconsts; ++c)
        assign.push_back(
            PJet::variable(f.src_nvars(), f.nparams(), f.order(), f.src_ncoords + c));
    std::vector<PJet> params;
    for (int u = 0; u < f.nparams(); ++u)
        params.push_back(PJet::param(f.src_nvars(), f.nparams(), f.order(), u));

    std::map<IdxTuple, PJet> out;
    for (auto& A : increasing_tuples(nt, 2)) {
        PJet composed(f.src_nvars(), f.nparams(), f.order());
        bool have = false;
        for (auto& [idx, c] : tgt.components()) {
            if (idx == A) {
                composed = compose(c, assign, params, f.src_nvars(), f.nparams(), f.order());
                have = true;
            }
        }
        PJet transported(f.src_nvars(), f.nparams(), f.order());
        for (auto& [R, c] : src.components()) transported += c * jacobian_minor(jac, A, R);
        PJet res = (have ? composed : PJet(f.src_nvars(), f.nparams(), f.order())) - transported;
        if (!res.is_zero()) out.emplace(A, res);
    }
    return out;
}

template class Multivector<LPoly>;
template class Multivector<PJet>;
template Multivector<LPoly> wedge(const Multivector<LPoly>&, const Multivector<LPoly>&);
template Multivector<PJet> wedge(const Multivector<PJet>&, const Multivector<PJet>&);
template Multivector<LPoly> schouten(const Multivector<LPoly>&, const Multivector<LPoly>&);
template Multivector<PJet> schouten(const Multivector<PJet>&, const Multivector<PJet>&);
template std::map<IdxTuple, LPoly> jacobi_defect(const Multivector<LPoly>&);
template std::map<IdxTuple, PJet> jacobi_defect(const Multivector<PJet>&);

template Multivector<LPoly> Multivector<LPoly>::scaled(const Rat&) const;
template Multivector<LPoly> Multivector<LPoly>::scaled(const LPoly&) const;
template Multivector<PJet> Multivector<PJet>::scaled(const Rat&) const;
template Multivector<PJet> Multivector<PJet>::scaled(const RatFn&) const;
template Multivector<PJet> Multivector<PJet>::scaled(const PJet&) const;

} // namespace hpd
