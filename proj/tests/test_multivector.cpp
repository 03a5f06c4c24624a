#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpd/expr.hpp"
#include "hpd/multivector.hpp"

using namespace hpd;

namespace {

std::mt19937 rng(911217);

int rnd(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

LPoly random_coeff(int nvars) {
    LPoly p(nvars);
    int terms = rnd(0, 3);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = rnd(0, 2);
        p.add_term(e, Rat(rnd(-4, 4)));
    }
    return p;
}

MvPoly random_mv(int n, int degree) {
    MvPoly m(0, n, degree);
    int terms = rnd(1, 3);
    for (int t = 0; t < terms; ++t) {
        IdxTuple idx;
        while ((int)idx.size() < degree) {
            int i = rnd(0, n - 1);
            bool dup = false;
            for (int j : idx) dup |= (j == i);
            if (!dup) idx.push_back(i);
        }
        m.add_term(idx, random_coeff(n));
    }
    return m;
}

int par(int k) { return (k % 2 == 0) ? 1 : -1; }

MvPoly vf(int n, int dir, const LPoly& c) {
    MvPoly m(0, n, 1);
    m.add_term({dir}, c);
    return m;
}

} // namespace

TEST_CASE("wedge basics") {
    int n = 3;
    MvPoly d1 = vf(n, 0, LPoly(n, Rat(1)));
    MvPoly d2 = vf(n, 1, LPoly(n, Rat(1)));
    MvPoly w = wedge(d1, d2);
    CHECK(w.degree() == 2);
    REQUIRE(w.find_component({0, 1}) != nullptr);
    CHECK(*w.find_component({0, 1}) == LPoly(n, Rat(1)));

    CHECK(wedge(d1, d1).is_zero());

    MvPoly xd1 = vf(n, 0, LPoly::variable(n, 0));
    MvPoly wd2 = vf(n, 1, LPoly::variable(n, 1));
    MvPoly xw = wedge(xd1, wd2);
    LPoly expect(n);
    expect.add_term({1, 1, 0}, Rat(1));
    CHECK(*xw.find_component({0, 1}) == expect);
}

TEST_CASE("schouten on vector fields is the Lie bracket") {
    int n = 1;
    MvPoly dx = vf(n, 0, LPoly(n, Rat(1)));
    MvPoly x2dx = vf(n, 0, LPoly::monomial(n, {2}, Rat(1)));
    MvPoly br = schouten(dx, x2dx);
    CHECK(*br.find_component({0}) == LPoly::monomial(n, {1}, Rat(2)));
}

TEST_CASE("[sigma, sigma] vanishes when the top degree is exceeded") {
    int n = 2;
    MvPoly m(0, n, 2);
    LPoly c(n);
    c.add_term({1, 0}, Rat(1));
    m.add_term({0, 1}, c);
    CHECK(schouten(m, m).is_zero());
    CHECK(jacobi_defect(m).empty());
    CHECK_THROWS_AS(schouten(m, MvPoly(0, n, 0)), DegreeZero);
}

TEST_CASE("frozen oracle: sigma = z1^2 d1^d2 + z2^2 d2^d3") {
    int n = 3;
    MvPoly s(0, n, 2);
    s.add_term({0, 1}, LPoly::monomial(n, {2, 0, 0}, Rat(1)));
    s.add_term({1, 2}, LPoly::monomial(n, {0, 2, 0}, Rat(1)));

    // Hand expansion of the componentwise criterion: only sigma_{21} d sigma_{23}/dz2
    // survives, giving -2 z1^2 z2 at (1,2,3).
    auto defect = jacobi_defect(s);
    REQUIRE(defect.size() == 1);
    CHECK(defect.begin()->first == IdxTuple{0, 1, 2});
    CHECK(defect.begin()->second == LPoly::monomial(n, {2, 1, 0}, Rat(-2)));

    // Bracket of sigma with itself: coefficient 4 z1^2 z2, i.e. -2 times the defect.
    MvPoly br = schouten(s, s);
    REQUIRE(br.find_component({0, 1, 2}) != nullptr);
    CHECK(*br.find_component({0, 1, 2}) == LPoly::monomial(n, {2, 1, 0}, Rat(4)));
}

TEST_CASE("jacobi defect of z3 d1^d2 vanishes") {
    int n = 3;
    MvPoly s(0, n, 2);
    s.add_term({0, 1}, LPoly::variable(n, 2));
    CHECK(jacobi_defect(s).empty());
    CHECK(schouten(s, s).is_zero());
}

TEST_CASE("graded antisymmetry, 500 randomized cases") {
    for (int it = 0; it < 500; ++it) {
        int n = rnd(2, 3);
        int qa = rnd(1, 2), qb = rnd(1, 2);
        MvPoly a = random_mv(n, qa), b = random_mv(n, qb);
        MvPoly lhs = schouten(a, b);
        MvPoly rhs = schouten(b, a).scaled(Rat(-par((qa - 1) * (qb - 1))));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("graded Jacobi, 500 randomized cases") {
    for (int it = 0; it < 500; ++it) {
        int n = rnd(2, 3);
        int qa = rnd(1, 2), qb = rnd(1, 2), qc = rnd(1, 2);
        MvPoly a = random_mv(n, qa), b = random_mv(n, qb), c = random_mv(n, qc);
        MvPoly lhs = schouten(a, schouten(b, c));
        MvPoly rhs = schouten(schouten(a, b), c) +
                     schouten(b, schouten(a, c)).scaled(Rat(par((qa - 1) * (qb - 1))));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("Leibniz over wedge, 500 randomized cases") {
    for (int it = 0; it < 500; ++it) {
        int n = 3;
        int qa = rnd(1, 2), qb = 1, qc = 1;
        MvPoly a = random_mv(n, qa), b = random_mv(n, qb), c = random_mv(n, qc);
        MvPoly lhs = schouten(a, wedge(b, c));
        MvPoly rhs = wedge(schouten(a, b), c) +
                     wedge(b, schouten(a, c)).scaled(Rat(par((qa - 1) * qb)));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("schouten/jacobi_defect normalization: constant -2") {
    for (int it = 0; it < 200; ++it) {
        int n = 3;
        MvPoly s = random_mv(n, 2);
        MvPoly br = schouten(s, s);
        auto defect = jacobi_defect(s);
        const LPoly* brc = br.find_component({0, 1, 2});
        auto dit = defect.find({0, 1, 2});
        LPoly lhs = brc ? *brc : LPoly(n);
        LPoly rhs = dit != defect.end() ? dit->second * Rat(-2) : LPoly(n);
        CHECK(lhs == rhs);
    }
}

namespace {

// Hopf chart ring: coords (z1, z2), constants (a, b); one parameter t.
struct HopfCtx {
    int nvars = 4, ncoords = 2, nparams = 1, order = 3;
    PJet z1 = PJet::variable(4, 1, 3, 0);
    PJet z2 = PJet::variable(4, 1, 3, 1);
    PJet a = PJet::variable(4, 1, 3, 2);
    PJet b = PJet::variable(4, 1, 3, 3);
    PJet t = PJet::param(4, 1, 3, 0);

    // g^n for the exponent-m Hopf surface, with symbolic a, b.
    ChartMap iterate(int n, int m) const {
        ChartMap g;
        g.src = g.tgt = 0;
        g.src_ncoords = g.tgt_ncoords = 2;
        g.comps = {a.pow(n) * z1 + t * z2.pow(m) * a.pow(n - 1) * Rat(n),
                   b.pow(n) * z2};
        auto inv = std::make_shared<ChartMap>();
        inv->src = inv->tgt = 0;
        inv->src_ncoords = inv->tgt_ncoords = 2;
        inv->comps = {a.pow(-n) * z1 -
                          t * a.pow(-1) * b.pow(-n * m) * z2.pow(m) * Rat(n),
                      b.pow(-n) * z2};
        g.inverse = inv;
        return g;
    }
};

} // namespace

TEST_CASE("Hopf iterate pushforward factor a^n b^n") {
    HopfCtx H;
    for (int n = 1; n <= 3; ++n) {
        int m = 2;
        ChartMap g = H.iterate(n, m);
        // Round trip is the identity.
        ChartMap rt = compose_maps(g, *g.inverse);
        CHECK(rt.comps[0].equals(H.z1));
        CHECK(rt.comps[1].equals(H.z2));

        MvJet unit(0, 2, 2);
        unit.add_term({0, 1}, PJet(RatFn(4, Rat(1)), 1, 3));
        MvJet out = pushforward(unit, g, 4);
        REQUIRE(out.find_component({0, 1}) != nullptr);
        CHECK(out.find_component({0, 1})->equals(H.a.pow(n) * H.b.pow(n)));
    }
}

TEST_CASE("Hopf invariance residual and the relation a = b^m") {
    HopfCtx H;
    const int m = 2;
    // Lambda = f(t) z2^{m+1} d1^d2 with f(t) = t.
    MvJet lam(0, 2, 2);
    lam.add_term({0, 1}, H.t * H.z2.pow(m + 1));

    ChartMap g = H.iterate(1, m);
    auto res = poisson_map_residual(g, lam, lam);
    REQUIRE(res.size() == 1);
    // (b^{m+1} - a b) t z2^{m+1}
    PJet expect = (H.b.pow(m + 1) - H.a * H.b) * H.t * H.z2.pow(m + 1);
    CHECK(res.begin()->second.equals(expect));

    // Imposing a = b^m kills the residual.
    ChartMap gr = g;
    std::vector<PJet> rel = {H.z1, H.z2, H.b.pow(m), H.b};
    std::vector<PJet> par = {H.t};
    for (auto& cmp : gr.comps) cmp = compose(cmp, rel, par, 4, 1, 3);
    auto res2 = poisson_map_residual(gr, lam, lam);
    CHECK(res2.empty());
}

TEST_CASE("Hirzebruch chart change sends g(t) x^2 du^dx to -g(t) du^dy") {
    // Charts (u, x) -> (u, y = 1/x); one parameter t; g(t) = t.
    const int N = 2, order = 3;
    PJet u = PJet::variable(N, 1, order, 0);
    PJet x = PJet::variable(N, 1, order, 1);
    PJet t = PJet::param(N, 1, order, 0);
    ChartMap f;
    f.src = 0;
    f.tgt = 1;
    f.src_ncoords = f.tgt_ncoords = 2;
    f.comps = {u, x.pow(-1)};
    auto inv = std::make_shared<ChartMap>();
    inv->src = 1;
    inv->tgt = 0;
    inv->src_ncoords = inv->tgt_ncoords = 2;
    inv->comps = {u, x.pow(-1)}; // same shape in (u, y) variables
    f.inverse = inv;

    MvJet lam(0, 2, 2);
    lam.add_term({0, 1}, t * x.pow(2));
    MvJet out = pushforward(lam, f, N);
    REQUIRE(out.find_component({0, 1}) != nullptr);
    CHECK(out.find_component({0, 1})->equals(-t));

    // Identity map fixes the bivector.
    ChartMap id = identity_map(0, 2, N, 1, order);
    id.inverse = std::make_shared<ChartMap>(identity_map(0, 2, N, 1, order));
    CHECK(pushforward(lam, id, N).equals(lam));
}

namespace {

// Standard P^2 chart maps (no parameters needed; use a 1-param ring anyway).
struct P2Maps {
    int N = 2, order = 2, npar = 0;
    PJet X() const { return PJet::variable(N, npar, order, 0); }
    PJet W() const { return PJet::variable(N, npar, order, 1); }

    ChartMap make(int src, int tgt, PJet c0, PJet c1, PJet i0, PJet i1) const {
        ChartMap f;
        f.src = src;
        f.tgt = tgt;
        f.src_ncoords = f.tgt_ncoords = 2;
        f.comps = {c0, c1};
        auto inv = std::make_shared<ChartMap>();
        inv->src = tgt;
        inv->tgt = src;
        inv->src_ncoords = inv->tgt_ncoords = 2;
        inv->comps = {i0, i1};
        f.inverse = inv;
        return f;
    }

    // chart0 (x,w) -> chart1 (1/x, w/x); inverse has the same shape.
    ChartMap m01() const {
        return make(0, 1, X().pow(-1), W() * X().pow(-1), X().pow(-1),
                    W() * X().pow(-1));
    }
    // chart1 -> chart2: x2 = x1/w1, w2 = 1/w1; inverse x1 = x2/w2, w1 = 1/w2.
    ChartMap m12() const {
        return make(1, 2, X() * W().pow(-1), W().pow(-1), X() * W().pow(-1),
                    W().pow(-1));
    }
};

} // namespace

TEST_CASE("P^2: pushforward of x dx^dw and the Poisson-map residual") {
    P2Maps P;
    ChartMap f = P.m01();
    MvJet lam0(0, 2, 2);
    lam0.add_term({0, 1}, P.X());
    MvJet lam1 = pushforward(lam0, f, 2);
    REQUIRE(lam1.find_component({0, 1}) != nullptr);
    CHECK(lam1.find_component({0, 1})->equals(-P.X().pow(2)));

    auto res = poisson_map_residual(f, lam0, lam1);
    CHECK(res.empty());

    auto res_id = poisson_map_residual(identity_map(0, 2, 2, 0, 2), lam0, lam0);
    CHECK(res_id.empty());
}

TEST_CASE("pushforward functoriality along P^2 transitions") {
    P2Maps P;
    ChartMap f = P.m01(), g = P.m12();
    ChartMap gf = compose_maps(g, f);
    // Composed transition is x2 = 1/w, w2 = x/w.
    CHECK(gf.comps[0].equals(P.W().pow(-1)));
    CHECK(gf.comps[1].equals(P.X() * P.W().pow(-1)));

    for (int it = 0; it < 20; ++it) {
        MvJet m(0, 2, rnd(1, 2));
        int terms = rnd(1, 2);
        for (int k = 0; k < terms; ++k) {
            IdxTuple idx = m.degree() == 1 ? IdxTuple{rnd(0, 1)} : IdxTuple{0, 1};
            ExpVec e = {rnd(-2, 2), rnd(-2, 2)};
            m.add_term(idx, PJet(RatFn(LPoly::monomial(2, e, Rat(rnd(-3, 3)))), 0, 2));
        }
        MvJet two_step = pushforward(pushforward(m, f, 2), g, 2);
        MvJet one_step = pushforward(m, gf, 2);
        CHECK(two_step.equals(one_step));
    }
}

TEST_CASE("pushforward without a declared inverse is rejected") {
    P2Maps P;
    ChartMap f = P.m01();
    f.inverse.reset();
    MvJet m(0, 2, 1);
    m.add_term({0}, P.X());
    CHECK_THROWS_AS(pushforward(m, f, 2), MissingInverse);
}
