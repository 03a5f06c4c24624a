#pragma once

#include <algorithm>
#include <memory>

#include "hpd/pjet.hpp"

namespace hpd {

// Strictly increasing tuple of coordinate-direction indices.
using IdxTuple = std::vector<int>;

// Sorts a concatenation of two increasing tuples; returns the permutation
// parity, or nullopt when an index repeats.
std::optional<std::pair<IdxTuple, int>> merge_tuples(const IdxTuple& a,
                                                     const IdxTuple& b);

inline LPoly coef_diff(const LPoly& c, int var) { return c.differentiate(var); }
inline PJet coef_diff(const PJet& c, int var) { return c.differentiate_var(var); }
inline bool coef_equal(const LPoly& a, const LPoly& b) { return a == b; }
inline bool coef_equal(const PJet& a, const PJet& b) { return a.equals(b); }

// Polyvector field of fixed degree on one chart. Components are stored on
// strictly increasing index tuples; the stored coefficient is the full
// antisymmetric coefficient (sigma_{ba} = -sigma_{ab} implied).
template <class C>
class Multivector {
public:
    using Components = std::map<IdxTuple, C>;

    Multivector() : chart_(-1), ncoords_(0), degree_(0) {}
    Multivector(int chart, int ncoords, int degree)
        : chart_(chart), ncoords_(ncoords), degree_(degree) {}

    int chart() const { return chart_; }
    int ncoords() const { return ncoords_; }
    int degree() const { return degree_; }
    const Components& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    // Accepts an arbitrary tuple; canonicalizes order and sign.
    void add_term(IdxTuple idx, const C& coeff);
    // Stored coefficient on a canonical tuple, or nullptr when absent.
    const C* find_component(const IdxTuple& idx) const {
        auto it = comps_.find(idx);
        return it == comps_.end() ? nullptr : &it->second;
    }

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    template <class S>
    Multivector scaled(const S& c) const;

    bool equals(const Multivector& o) const;

private:
    void check_chart(const Multivector& o) const {
        if (chart_ != o.chart_ || ncoords_ != o.ncoords_)
            throw ChartMismatch("multivectors live on different charts");
        if (degree_ != o.degree_)
            throw DegreeMismatch("multivector degrees differ");
    }
    int chart_, ncoords_, degree_;
    Components comps_;
};

// Exterior product; zero when the degree exceeds the chart dimension.
template <class C>
Multivector<C> wedge(const Multivector<C>& a, const Multivector<C>& b);

// Schouten-Nijenhuis bracket. Implemented as the odd Poisson bracket in
// Grassmann generators (right derivative on the left slot, left derivative on
// the right slot), which restricts to the Lie bracket on vector fields and to
// X(f) on functions. Degree q_a + q_b - 1.
template <class C>
Multivector<C> schouten(const Multivector<C>& a, const Multivector<C>& b);

// Componentwise Jacobi criterion for a bivector:
//   sum_l sigma_{lk} d sigma_{ij}/dz_l + sigma_{li} d sigma_{jk}/dz_l
//         + sigma_{lj} d sigma_{ki}/dz_l        for each i<j<k.
// All-zero iff [sigma, sigma] = 0; schouten(s,s) equals -2 times this map
// (normalization asserted in the test suite).
template <class C>
std::map<IdxTuple, C> jacobi_defect(const Multivector<C>& sigma);

using MvPoly = Multivector<LPoly>;
using MvJet = Multivector<PJet>;

MvJet to_jet(const MvPoly& m, int nparams, int order);
// Requires every coefficient to reduce to a Laurent polynomial at t = 0.
MvPoly constant_part(const MvJet& m);

// Holomorphic map between charts, components expressed in source variables.
// declared_inverse is required by pushforward (polynomial maps are not
// inverted automatically).
struct ChartMap {
    int src = -1, tgt = -1;
    int src_ncoords = 0, tgt_ncoords = 0;
    std::vector<PJet> comps; // one per target coordinate
    std::shared_ptr<ChartMap> inverse;

    int nparams() const { return comps.empty() ? 0 : comps[0].nparams(); }
    int order() const { return comps.empty() ? 0 : comps[0].order(); }
    int src_nvars() const { return comps.empty() ? 0 : comps[0].nvars(); }
};

// Composition g after f (f applied first); inverses composed when present.
ChartMap compose_maps(const ChartMap& g, const ChartMap& f);
ChartMap identity_map(int chart, int ncoords, int nvars, int nparams, int order);

// Full substitution assignment for expressions in the source chart's ring:
// coordinates map through the map's components, trailing constants map to
// themselves in the target ring.
std::vector<PJet> map_assignment(const ChartMap& f, int tgt_nvars);

// Transforms a q-vector by the q-fold Jacobian law and rewrites the result in
// target coordinates through the declared inverse.
MvJet pushforward(const MvJet& mv, const ChartMap& f, int tgt_nvars);

// R^{ab} = Lambda_tgt^{ab} o f - sum_{rs} Lambda_src^{rs} df^a/dz_r df^b/dz_s,
// expressed in source coordinates; all-zero iff f is a Poisson map.
std::map<IdxTuple, PJet> poisson_map_residual(const ChartMap& f, const MvJet& src,
                                              const MvJet& tgt);

extern template class Multivector<LPoly>;
extern template class Multivector<PJet>;
extern template Multivector<LPoly> wedge(const Multivector<LPoly>&, const Multivector<LPoly>&);
extern template Multivector<PJet> wedge(const Multivector<PJet>&, const Multivector<PJet>&);
extern template Multivector<LPoly> schouten(const Multivector<LPoly>&, const Multivector<LPoly>&);
extern template Multivector<PJet> schouten(const Multivector<PJet>&, const Multivector<PJet>&);
extern template std::map<IdxTuple, LPoly> jacobi_defect(const Multivector<LPoly>&);
extern template std::map<IdxTuple, PJet> jacobi_defect(const Multivector<PJet>&);

} // namespace hpd
