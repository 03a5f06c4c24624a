#pragma once

#include "hpd/family.hpp"

namespace hpd {

// Constructors for the standard example families. Each output passes its own
// validator at the configured order.

// P^2 with the five-parameter cubic family
//   (x + t1 w^2 + t2 x^3 + t3 x^2 w + t4 x w^2 + t5 w^3) dx^dw
// on the standard three-chart atlas; other charts are induced by pushforward.
PoissonFamily build_p2_family(int order = 3);

// Same atlas with a single direction Lambda(t) = (x + t w^2) dx^dw.
PoissonFamily build_p2_one_param(int order = 3);

// Hirzebruch-Nagata surface family for natural numbers m, k with
// m - 2 <= 2k <= m; four affine charts, one parameter, multiplier g(t).
PoissonFamily build_hirzebruch_nagata(int m, int k, const std::string& g_expr,
                                      int order = 3);

// Hopf surface quotient: generator (z1, z2) -> (a z1 + t z2^m, b z2) with the
// relation a = b^m imposed by substitution (or kept symbolic when
// impose_relation is false, which breaks invariance), bivector f(t) z2^{m+1}.
QuotientFamily build_hopf(int m, const std::string& f_expr, bool impose_relation,
                          int order = 3);

// Complex torus quotient: ambient C^n, translations by the period lattice
// columns, bivector sum_{i<j} s_ij d_i^d_j with z-independent coefficients.
QuotientFamily build_torus(int n, int order = 3);

// Dispatcher used by the CLI; kind in {torus, hopf, hirzebruch_nagata, p2}.
// Unknown kinds or out-of-range settings raise InvalidParams.
struct ExampleSettings {
    int m = 2, k = 1, n = 2, order = 3;
    std::string scalar = "t";
    bool impose_relation = true;
};
struct BuiltExample {
    std::optional<PoissonFamily> family;
    std::optional<QuotientFamily> quotient;
};
BuiltExample build_example(const std::string& kind, const ExampleSettings& s);

} // namespace hpd
