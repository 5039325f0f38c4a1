#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pg/errors.hpp"
#include "pg/homothetical.hpp"
#include "pg/surface.hpp"

using namespace pg;

namespace {

HomotheticalSurface pow22() {
    return {SurfaceType::TypeI, FactorFn(FactorKind::Pow, {2}),
            FactorFn(FactorKind::Pow, {2})};
}

SurfacePatch plane(double z0) {
    return build_surface({SurfaceType::TypeI, FactorFn(FactorKind::Const, {z0}),
                          FactorFn(FactorKind::Const, {1})});
}

std::mt19937& rng() {
    static std::mt19937 r(7);
    return r;
}

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

Motion random_motion() {
    return {uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-1.5, 1.5)};
}

} // namespace

TEST_CASE("eval_jets on polynomial and exponential graphs") {
    const SurfacePatch p = build_surface(pow22());
    const auto j = eval_jets(p, 1, 1);
    CHECK(j[2].value() == doctest::Approx(1));
    CHECK(j[2].d(1, 0) == doctest::Approx(2));
    CHECK(j[2].d(0, 1) == doctest::Approx(2));
    CHECK(j[2].d(1, 1) == doctest::Approx(4));
    CHECK(j[2].d(2, 0) == doctest::Approx(2));

    const auto pl = eval_jets(plane(0), 0.3, -0.8);
    for (int k = 1; k < 10; ++k) CHECK(pl[2].a[k] == 0);

    const SurfacePatch e = build_surface({SurfaceType::TypeI,
                                          FactorFn(FactorKind::Exp, {1, 1}),
                                          FactorFn(FactorKind::Exp, {1, 1})});
    const auto je = eval_jets(e, 0, 0);
    for (int k = 0; k < 10; ++k) CHECK(je[2].a[k] == doctest::Approx(1));
}

TEST_CASE("first fundamental form") {
    const SurfacePatch p = build_surface(pow22());
    const FirstFundamental f = first_form(p, 1, 1);
    CHECK(f.g1 == 1);
    CHECK(f.g2 == 0 + 0); // type I: x = v1
    CHECK(f.g2 == 0);
    CHECK(f.h11 == doctest::Approx(4)); // 0 + (2 v1 v2^2)^2
    CHECK(f.h12 == doctest::Approx(4));
    CHECK(f.h22 == doctest::Approx(5)); // 1 + (2 v1^2 v2)^2

    const SurfacePatch t3 = build_surface({SurfaceType::TypeIII,
                                           FactorFn(FactorKind::Poly, {2, 0, 1}),
                                           FactorFn(FactorKind::Poly, {2, 0, 0, 1})});
    const FirstFundamental f3 = first_form(t3, 1.0, 1.0);
    CHECK(f3.g1 == doctest::Approx(2 * 3)); // d/dv2 (phi_a phi_b) = 2 v2 * (v3^3+2)
}

TEST_CASE("normal frame spot values") {
    const SurfacePatch p = build_surface(pow22());
    const NormalFrame f = normal_frame(p, 1, 1);
    CHECK(f.W == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(f.eps == 1);
    CHECK(f.n.x == 0);
    CHECK(f.n.y == doctest::Approx(2 / std::sqrt(3.0)));
    CHECK(f.n.z == doctest::Approx(1 / std::sqrt(3.0)));

    const NormalFrame pf = normal_frame(plane(2.5), 0, 0);
    CHECK(pf.W == doctest::Approx(1));
    CHECK(pf.eps == -1);
    CHECK(pf.n.y == doctest::Approx(0));
    CHECK(pf.n.z == doctest::Approx(1));

    // z = v2: phi1 phi2' = 1, so W = 0
    const SurfacePatch light = build_surface({SurfaceType::TypeI,
                                              FactorFn(FactorKind::Const, {1}),
                                              FactorFn(FactorKind::Poly, {0, 1})});
    CHECK_THROWS_AS(normal_frame(light, 0.2, 0.4), LightlikeNormal);
}

TEST_CASE("second fundamental form spot values") {
    const SurfacePatch p = build_surface(pow22());
    const SecondFundamental s = second_form(p, 1, 1);
    const double r3 = std::sqrt(3.0);
    CHECK(s.L == doctest::Approx(-2 / r3));
    CHECK(s.M == doctest::Approx(-4 / r3));
    CHECK(s.N == doctest::Approx(-2 / r3));
    CHECK(s.detII == doctest::Approx(-4));

    const SurfacePatch e = build_surface({SurfaceType::TypeI,
                                          FactorFn(FactorKind::Exp, {1, 1}),
                                          FactorFn(FactorKind::Exp, {1, 1})});
    CHECK(second_form(e, 0, -1).detII == doctest::Approx(0).epsilon(1e-12));

    const SurfacePatch c = build_surface({SurfaceType::TypeI,
                                          FactorFn(FactorKind::Const, {3}),
                                          FactorFn(FactorKind::Poly, {1, 0.1})});
    const SecondFundamental sc = second_form(c, 1, 1);
    CHECK(sc.L == doctest::Approx(0));
    CHECK(sc.M == doctest::Approx(0));
    CHECK(sc.N == doctest::Approx(0));
}

TEST_CASE("curvature spot values and null-K families") {
    const CurvaturePair k = curvatures(build_surface(pow22()), 1, 1);
    CHECK(k.K == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
    CHECK(k.H == doctest::Approx(1 / (3 * std::sqrt(3.0))).epsilon(1e-10));

    const SurfacePatch e = build_surface({SurfaceType::TypeI,
                                          FactorFn(FactorKind::Exp, {1, 0.8}),
                                          FactorFn(FactorKind::Exp, {2, -0.5})});
    for (double u : {-0.5, 0.1, 0.7})
        CHECK(std::abs(curvatures(e, u, u - 1.3).K) <= 1e-10);

    // n = -1 on the m > 1 factor keeps the base positive on the positive axis
    const SurfacePatch pp = build_surface({SurfaceType::TypeI,
                                           FactorFn(FactorKind::PowerFam, {2, -1, 0}),
                                           FactorFn(FactorKind::PowerFam, {0.5, 1, 0})});
    for (double u : {0.5, 1.0, 1.5})
        CHECK(std::abs(curvatures(pp, u, u + 0.3).K) <= 1e-9);
}

TEST_CASE("the two K routes agree for homothetical patches") {
    for (const auto& cs : catalogue_surfaces()) {
        if (!cs.nondegenerate) continue;
        const SurfacePatch p = build_surface(cs.h);
        for (int i = 0; i < cs.grid.v1.n; i += 3)
            for (int j = 0; j < cs.grid.v2.n; j += 3) {
                const double u = cs.grid.at1(i), w = cs.grid.at2(j);
                const NormalFrame f = normal_frame(p, u, w);
                const CurvaturePair k = curvatures(p, u, w);
                const double viaD =
                    -f.eps * degeneracy(cs.h, u, w) / (f.W * f.W * f.W * f.W);
                CAPTURE(cs.name);
                CHECK(k.K == doctest::Approx(viaD).epsilon(1e-10));
            }
    }
}

TEST_CASE("motion invariance of W, K, H") {
    const SurfacePatch p = build_surface(pow22());
    for (int t = 0; t < 25; ++t) {
        const Motion m = random_motion();
        const SurfacePatch q = transform(p, m);
        const double u = uni(0.6, 1.4), w = uni(0.6, 1.4);
        const NormalFrame f0 = normal_frame(p, u, w), f1 = normal_frame(q, u, w);
        const CurvaturePair k0 = curvatures(p, u, w), k1 = curvatures(q, u, w);
        CHECK(f1.W == doctest::Approx(f0.W).epsilon(1e-9));
        CHECK(k1.K == doctest::Approx(k0.K).epsilon(1e-9));
        CHECK(k1.H == doctest::Approx(k0.H).epsilon(1e-9));
    }
}

TEST_CASE("eps is locally constant on valid grids") {
    for (const auto& cs : catalogue_surfaces()) {
        if (!cs.nondegenerate) continue;
        const SurfacePatch p = build_surface(cs.h);
        int first_eps = 0;
        for (int i = 0; i < cs.grid.v1.n; ++i)
            for (int j = 0; j < cs.grid.v2.n; ++j) {
                const NormalFrame f = normal_frame(p, cs.grid.at1(i), cs.grid.at2(j));
                if (first_eps == 0) first_eps = f.eps;
                CAPTURE(cs.name);
                CHECK(f.eps == first_eps);
            }
    }
}

TEST_CASE("chart swap agreement where both charts are admissible") {
    // type III patches have x1 and x2 both nonzero on generic grids; compare
    // the second form computed from the swapped parametrization
    const HomotheticalSurface h{SurfaceType::TypeIII,
                                FactorFn(FactorKind::Poly, {2, 0, 1}),
                                FactorFn(FactorKind::Poly, {2, 0, 0, 1})};
    const SurfacePatch p = build_surface(h);
    // force the swapped chart by dropping x1 below tol_chart via a patch with
    // reordered parameters (v1 <-> v2), which exchanges the chart roles
    SurfacePatch swapped;
    auto inner = p.eval;
    swapped.eval = [inner](double a, double b) {
        const auto j = inner(b, a);
        std::array<Jet2, 3> r;
        for (int k = 0; k < 3; ++k) {
            // transpose the jet: d(i,j) <-> d(j,i)
            for (int i = 0; i <= 3; ++i)
                for (int jj = 0; i + jj <= 3; ++jj) r[k].d(i, jj) = j[k].d(jj, i);
        }
        return r;
    };
    for (double u : {0.6, 1.0, 1.4})
        for (double w : {0.7, 1.1, 1.3}) {
            const SecondFundamental a = second_form(p, u, w);
            const SecondFundamental b = second_form(swapped, w, u);
            // transposing parameters swaps L and N and reverses the normal
            // orientation (P, Q change sign), so the coefficients flip sign
            CHECK(a.L == doctest::Approx(-b.N).epsilon(1e-9));
            CHECK(a.N == doctest::Approx(-b.L).epsilon(1e-9));
            CHECK(a.M == doctest::Approx(-b.M).epsilon(1e-9));
        }
}

TEST_CASE("inadmissible points are rejected") {
    // x = phi(v1)phi(v2) with both partials vanishing at the origin (type III
    // with even factors)
    const SurfacePatch p = build_surface({SurfaceType::TypeIII,
                                          FactorFn(FactorKind::Poly, {1, 0, 1}),
                                          FactorFn(FactorKind::Poly, {1, 0, 1})});
    CHECK_THROWS_AS(second_form(p, 0, 0), pg::Error);
}

TEST_CASE("grid spec validation") {
    GridSpec g{{0, 1, 10}, {0, 1, 10}};
    CHECK_NOTHROW(g.validate());
    g.v1 = {1, 1, 1};
    CHECK_NOTHROW(g.validate()); // single sample at lo
    g.v1 = {2, 1, 5};
    CHECK_THROWS_AS(g.validate(), pg::Error);
    g.v1 = {0, 1, 0};
    CHECK_THROWS_AS(g.validate(), pg::Error);
}
