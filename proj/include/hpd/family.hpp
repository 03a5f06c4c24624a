#pragma once

#include "hpd/atlas.hpp"

namespace hpd {

// Atlas presentation of a Poisson analytic family: parameter-dependent
// transitions f_jk(z_k, t) and per-chart bivector jets Lambda_j(t).
struct PoissonFamily {
    Atlas atlas;
    std::map<int, MvJet> bivectors;

    const FamilySpace& space() const { return atlas.space; }
    int order() const { return atlas.space.order; }

    // Family with every jet truncated at new_order <= order.
    PoissonFamily truncated(int new_order) const;
    // Re-centers the parameter space: t -> t0 + t (componentwise shift).
    PoissonFamily recentered(const std::vector<Rat>& t0) const;
};

// Quotient presentation: one ambient chart, a list of Poisson automorphism
// generators, and an invariant bivector.
struct QuotientFamily {
    FamilySpace space; // exactly one chart
    std::vector<ChartMap> generators;
    MvJet bivector;
};

// Per-chart Jacobi identity and per-overlap Poisson compatibility, both
// truncated at the family's order.
ValidationReport validate_family(const PoissonFamily& fam);

// Jacobi identity plus invariance residual per generator.
ValidationReport validate_quotient(const QuotientFamily& fam);

// The fiber at t = 0: transition constant parts and bivector constant parts.
// Coefficients must reduce to Laurent polynomials at t = 0.
struct CentralFiber {
    Atlas atlas;             // parameter-free (nparams = 0, order 0)
    std::map<int, MvPoly> bivectors;
};
CentralFiber central_fiber(const PoissonFamily& fam);

// Lifts a parameter-only jet (nvars = 0) into a chart ring.
PJet lift_params(const PJet& h0, int nvars);

// The family induced by the parameter map t = h(s), h(0) = 0: substitutes h
// into every transition and bivector jet. h entries are parameter-only jets
// over the new parameter space.
PoissonFamily pullback_family(const PoissonFamily& fam,
                              const std::vector<std::string>& new_params,
                              const std::vector<PJet>& h, int order);

} // namespace hpd
