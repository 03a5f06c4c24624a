#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpd/expr.hpp"
#include "hpd/pjet.hpp"

using namespace hpd;

namespace {

std::mt19937 rng(20240817);

int rnd(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

LPoly random_lpoly(int nvars, int max_terms, int max_exp, bool allow_negative) {
    LPoly p(nvars);
    int terms = rnd(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nvars);
        for (int i = 0; i < nvars; ++i)
            e[i] = rnd(allow_negative ? -max_exp : 0, max_exp);
        p.add_term(e, Rat(rnd(-5, 5), rnd(1, 4)));
    }
    return p;
}

LPoly nonzero_lpoly(int nvars) {
    for (;;) {
        LPoly p = random_lpoly(nvars, 3, 2, true);
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("rational canonical form") {
    Rat r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat("10/15").str() == "2/3");
    CHECK(Rat(0).is_zero());
    CHECK_THROWS_AS(Rat(1, 0), ZeroDenominator);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("ring axioms on randomized Laurent polynomials") {
    for (int it = 0; it < 500; ++it) {
        int n = rnd(1, 3);
        LPoly a = random_lpoly(n, 4, 3, true);
        LPoly b = random_lpoly(n, 4, 3, true);
        LPoly c = random_lpoly(n, 4, 3, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("differentiate: power rule, Laurent rule, constants") {
    // Ring (x, w).
    LPoly x2w = LPoly::monomial(2, {2, 1}, Rat(1));
    CHECK(x2w.differentiate(0) == LPoly::monomial(2, {1, 1}, Rat(2)));
    LPoly xinv = LPoly::monomial(2, {-1, 0}, Rat(1));
    CHECK(xinv.differentiate(0) == LPoly::monomial(2, {-2, 0}, Rat(-1)));
    CHECK(LPoly(2, Rat(7)).differentiate(0).is_zero());
}

TEST_CASE("Leibniz rule randomized") {
    for (int it = 0; it < 500; ++it) {
        int n = rnd(1, 3);
        int v = rnd(0, n - 1);
        LPoly a = random_lpoly(n, 4, 3, true);
        LPoly b = random_lpoly(n, 4, 3, true);
        CHECK((a * b).differentiate(v) ==
              a.differentiate(v) * b + a * b.differentiate(v));
    }
}

TEST_CASE("RatFn equality is an equivalence; (p/q)(q/p) = 1") {
    for (int it = 0; it < 200; ++it) {
        int n = rnd(1, 3);
        LPoly p = nonzero_lpoly(n), q = nonzero_lpoly(n), r = nonzero_lpoly(n);
        RatFn a(p, q);
        // Reflexive / scaled representatives are equal.
        RatFn b(p * r, q * r);
        CHECK(a == a);
        CHECK(a == b);
        CHECK(b == a);
        RatFn prod = a * RatFn(q, p);
        CHECK(prod == RatFn(n, Rat(1)));
    }
}

TEST_CASE("monomial denominators reduce inside the Laurent ring") {
    // (x^2 w + x) / x  ->  x w + 1, denominator 1.
    LPoly num(2);
    num.add_term({2, 1}, Rat(1));
    num.add_term({1, 0}, Rat(1));
    RatFn f(num, LPoly::variable(2, 0));
    CHECK(f.den_is_one());
    LPoly expect(2);
    expect.add_term({1, 1}, Rat(1));
    expect.add_term({0, 0}, Rat(1));
    CHECK(*f.as_lpoly() == expect);
}

TEST_CASE("substitute: monomial inversion and constants") {
    // substitute(x^-2, {x -> 1/v}) = v^2 over ring (v).
    LPoly p = LPoly::monomial(1, {-2}, Rat(1));
    std::map<int, RatFn> assign;
    assign[0] = RatFn(LPoly(1, Rat(1)), LPoly::variable(1, 0));
    RatFn out = substitute(p, assign, 1);
    CHECK(out == RatFn(LPoly::monomial(1, {2}, Rat(1))));

    RatFn c = substitute(LPoly(1, Rat(5, 3)), assign, 1);
    CHECK(c == RatFn(1, Rat(5, 3)));

    LPoly unbound = LPoly::variable(2, 1);
    std::map<int, RatFn> partial;
    partial[0] = RatFn(2, Rat(1));
    CHECK_THROWS_AS(substitute(unbound, partial, 2), UnboundVariable);

    std::map<int, RatFn> zero_assign;
    zero_assign[0] = RatFn(1, Rat(0));
    CHECK_THROWS_AS(substitute(p, zero_assign, 1), ZeroDenominator);
}

TEST_CASE("Hirzebruch chart-1 coordinate through the patching relation") {
    // w = xi1/xi0 with (xi0 : xi1) = (eta0 : v^m eta1 + t v^k eta0), m=2, k=1.
    // Target ring: (eta0, eta1, v, t).
    const int N = 4;
    LPoly w = LPoly::monomial(2, {-1, 1}, Rat(1)); // xi1/xi0 over ring (xi0, xi1)
    std::map<int, RatFn> assign;
    assign[0] = RatFn::variable(N, 0); // xi0 -> eta0
    LPoly lift(N);
    lift.add_term({0, 1, 2, 0}, Rat(1)); // v^2 eta1
    lift.add_term({1, 0, 1, 1}, Rat(1)); // t v eta0
    assign[1] = RatFn(lift);
    RatFn out = substitute(w, assign, N);

    // Expected: v^2 * (eta1/eta0) + t v, as a RatFn identity.
    RatFn wprime(LPoly::variable(N, 1), LPoly::variable(N, 0));
    RatFn expect = RatFn(LPoly::monomial(N, {0, 0, 2, 0}, Rat(1))) * wprime +
                   RatFn(LPoly::monomial(N, {0, 0, 1, 1}, Rat(1)));
    CHECK(out == expect);
}

TEST_CASE("substitution composes with monomial assignments") {
    for (int it = 0; it < 200; ++it) {
        int n = rnd(1, 2);
        LPoly p = random_lpoly(n, 3, 2, true);
        // f: monomial assignment var i -> c_i * prod z^{e}, g likewise.
        std::vector<RatFn> f, g;
        for (int i = 0; i < n; ++i) {
            ExpVec e(n);
            for (int k = 0; k < n; ++k) e[k] = rnd(-1, 2);
            f.push_back(RatFn(LPoly::monomial(n, e, Rat(rnd(1, 3)))));
            ExpVec e2(n);
            for (int k = 0; k < n; ++k) e2[k] = rnd(-1, 2);
            g.push_back(RatFn(LPoly::monomial(n, e2, Rat(rnd(1, 3)))));
        }
        std::map<int, RatFn> fa, ga, gfa;
        for (int i = 0; i < n; ++i) {
            fa[i] = f[i];
            ga[i] = g[i];
        }
        for (int i = 0; i < n; ++i)
            gfa[i] = substitute(f[i], ga, n); // g o f acting on the i-th image
        RatFn lhs = substitute(substitute(p, fa, n), ga, n);
        RatFn rhs = substitute(p, gfa, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jets truncate: (1+s)(1-s) at order 1") {
    PJet one(RatFn(1, Rat(1)), 1, 1);
    PJet s = PJet::param(1, 1, 1, 0);
    PJet prod = jet_combine_mul(one + s, one - s);
    CHECK(prod.equals(one));

    PJet zero(1, 1, 1);
    CHECK(jet_combine_mul(one + s, zero).is_zero());

    // (s1)*(s2) at order 2 = s1 s2.
    PJet s1 = PJet::param(1, 2, 2, 0), s2 = PJet::param(1, 2, 2, 1);
    PJet p12 = jet_combine_mul(s1, s2);
    CHECK(p12.coeff({1, 1}) == RatFn(1, Rat(1)));
    CHECK(p12.terms().size() == 1);

    PJet other_order = PJet::param(1, 1, 3, 0);
    CHECK_THROWS_AS(jet_combine_add(s, other_order), OrderMismatch);
}

TEST_CASE("jet inversion expands geometric series") {
    // 1/(x - t u) with x invertible: check (x - t u) * inverse == 1 at order 3.
    const int N = 2; // vars (x, u)... here treat u as the second variable
    PJet x = PJet::variable(N, 1, 3, 0);
    PJet u = PJet::variable(N, 1, 3, 1);
    PJet t = PJet::param(N, 1, 3, 0);
    PJet den = x - t * u;
    PJet inv = den.inverse();
    CHECK((den * inv).equals(PJet(RatFn(N, Rat(1)), 1, 3)));
    // Order-2 coefficient is u^2/x^3.
    RatFn c2 = inv.coeff({2});
    RatFn expect(LPoly::monomial(N, {0, 2}, Rat(1)), LPoly::monomial(N, {3, 0}, Rat(1)));
    CHECK(c2 == expect);
}

TEST_CASE("parser round-trips canonical forms") {
    VarTable vt;
    vt.vars = {"x", "w"};
    vt.ncoords = 2;
    vt.params = {"t"};
    vt.order = 3;

    PJet p = parse_scalar("x^2*w", vt);
    CHECK(p.at_zero() == RatFn(LPoly::monomial(2, {2, 1}, Rat(1))));

    auto mv = parse_multivector("x*dx^dw", vt, 0);
    CHECK(mv.degree() == 2);
    CHECK(mv.find_component({0, 1}) != nullptr);

    auto vf = parse_multivector("(1/2)*x^-1*dw", vt, 0);
    CHECK(vf.degree() == 1);
    const PJet* c = vf.find_component({1});
    REQUIRE(c != nullptr);
    CHECK(c->at_zero() == RatFn(LPoly::monomial(2, {-1, 0}, Rat(1, 2))));

    // print-parse fixed point on a composite expression
    auto big = parse_multivector("(x + t*w^2)*dx^dw - (1/3)*w^3*dx^dw", vt, 0);
    std::string printed = mv_str(big, vt);
    auto reparsed = parse_multivector(printed, vt, 0);
    CHECK(big.equals(reparsed));

    CHECK_THROWS_AS(parse_multivector("x*qq", vt, 0), ParseError);
    try {
        parse_multivector("x + %", vt, 0);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("randomized print-parse round trips") {
    VarTable vt;
    vt.vars = {"x", "w"};
    vt.ncoords = 2;
    vt.params = {"t", "s"};
    vt.order = 2;
    for (int it = 0; it < 100; ++it) {
        Multivector<PJet> m(0, 2, rnd(1, 2));
        int terms = rnd(1, 3);
        for (int k = 0; k < terms; ++k) {
            IdxTuple idx;
            if (m.degree() == 1)
                idx = {rnd(0, 1)};
            else
                idx = {0, 1};
            LPoly cp = random_lpoly(2, 2, 2, true);
            PJet c(RatFn(cp), 2, 2);
            if (rnd(0, 1)) c = c * PJet::param(2, 2, 2, rnd(0, 1));
            m.add_term(idx, c);
        }
        std::string s = mv_str(m, vt);
        if (m.is_zero()) continue;
        auto back = parse_multivector(s, vt, 0);
        CHECK(m.equals(back));
    }
}
