#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pg/gcore.hpp"

using namespace pg;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(2026);
    return r;
}

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

GPoint random_point() { return {uni(-3, 3), uni(-3, 3), uni(-3, 3)}; }

Motion random_motion() {
    return {uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-1.5, 1.5)};
}

} // namespace

TEST_CASE("distance branches") {
    CHECK(g_distance({1, 0, 0}, {4, 9, 9}) == 3);
    CHECK(g_distance({1, 1, 2}, {1, 4, 6}) == 5);
    CHECK(g_distance({2, 7, 7}, {2, 7, 7}) == 0);
}

TEST_CASE("scalar product branches") {
    CHECK(g_dot({1, 2, 3}, {2, 5, 7}) == 2);
    CHECK(g_dot({0, 3, 2}, {0, 1, 1}) == 1);
    CHECK(g_dot({0, 1, 1}, {0, 1, 1}) == 0);
}

TEST_CASE("cross product") {
    const GVector a = g_cross({1, 0, 0}, {0, 1, 0});
    CHECK(a.x == 0);
    CHECK(a.y == 0);
    CHECK(a.z == 1);
    const GVector b = g_cross({1, 0, 0}, {0, 0, 1});
    CHECK(b.x == 0);
    CHECK(b.y == 1);
    CHECK(b.z == 0);
    const GVector u{1.5, -2, 0.5};
    const GVector c = g_cross(u, u);
    CHECK(c.x == 0);
    CHECK(c.y == 0);
    CHECK(c.z == 0);
}

TEST_CASE("isotropy classification") {
    CHECK(classify({1, 5, 5}) == IsotropyClass::NonIsotropic);
    CHECK(classify({0, 2, 1}) == IsotropyClass::Spacelike);
    CHECK(classify({0, 1, 2}) == IsotropyClass::Timelike);
    CHECK(classify({0, 1, 1}) == IsotropyClass::Lightlike);
    CHECK(classify({0, 0, 0}) == IsotropyClass::Lightlike);
    // relative tolerance at the lightlike boundary
    CHECK(classify({0, 1, 1 + 1e-14}) == IsotropyClass::Lightlike);
}

TEST_CASE("self-product sign matches classification") {
    for (int k = 0; k < 100; ++k) {
        const GVector v{0, uni(-3, 3), uni(-3, 3)};
        const double q = g_dot(v, v);
        switch (classify(v)) {
            case IsotropyClass::Spacelike: CHECK(q > 0); break;
            case IsotropyClass::Timelike: CHECK(q < 0); break;
            case IsotropyClass::Lightlike:
                CHECK(std::abs(q) <= 1e-12 * (v.y * v.y + v.z * v.z));
                break;
            case IsotropyClass::NonIsotropic: FAIL("isotropic vector misclassified");
        }
    }
}

TEST_CASE("motion application basics") {
    const GPoint p = motion_apply(Motion::identity(), {1, 2, 3});
    CHECK(p.x == 1);
    CHECK(p.y == 2);
    CHECK(p.z == 3);
    const GPoint t = motion_apply({1, 0, 0, 0, 0, 0}, {0, 1, 1});
    CHECK(t.x == 1);
    CHECK(t.y == 1);
    CHECK(t.z == 1);
    const double th = 0.7;
    const GPoint r = motion_apply({0, 0, 0, 0, 0, th}, {0, 1, 0});
    CHECK(r.x == 0);
    CHECK(r.y == doctest::Approx(std::cosh(th)));
    CHECK(r.z == doctest::Approx(std::sinh(th)));
}

TEST_CASE("composition satisfies its defining equation") {
    for (int k = 0; k < 100; ++k) {
        const Motion m1 = random_motion(), m2 = random_motion();
        const Motion m12 = motion_compose(m1, m2);
        const GPoint p = random_point();
        const GPoint a = motion_apply(m12, p);
        const GPoint b = motion_apply(m1, motion_apply(m2, p));
        CHECK(a.x == doctest::Approx(b.x).epsilon(1e-12));
        CHECK(a.y == doctest::Approx(b.y).epsilon(1e-12));
        CHECK(a.z == doctest::Approx(b.z).epsilon(1e-12));
    }
}

TEST_CASE("composition with identity and pure rotations") {
    const Motion m = random_motion();
    auto close = [](const Motion& a, const Motion& b) {
        CHECK(a.a == doctest::Approx(b.a));
        CHECK(a.b == doctest::Approx(b.b));
        CHECK(a.c == doctest::Approx(b.c));
        CHECK(a.d == doctest::Approx(b.d));
        CHECK(a.e == doctest::Approx(b.e));
        CHECK(a.theta == doctest::Approx(b.theta));
    };
    close(motion_compose(Motion::identity(), m), m);
    close(motion_compose(m, Motion::identity()), m);
    Motion rs, rt;
    rs.theta = 0.4;
    rt.theta = 0.9;
    const Motion sum = motion_compose(rs, rt);
    CHECK(sum.theta == doctest::Approx(1.3));
    CHECK(sum.b == doctest::Approx(0));
    CHECK(sum.c == doctest::Approx(0));
}

TEST_CASE("composition is associative") {
    for (int k = 0; k < 50; ++k) {
        const Motion m1 = random_motion(), m2 = random_motion(), m3 = random_motion();
        const Motion left = motion_compose(motion_compose(m1, m2), m3);
        const Motion right = motion_compose(m1, motion_compose(m2, m3));
        CHECK(left.a == doctest::Approx(right.a).epsilon(1e-12));
        CHECK(left.b == doctest::Approx(right.b).epsilon(1e-12));
        CHECK(left.c == doctest::Approx(right.c).epsilon(1e-12));
        CHECK(left.d == doctest::Approx(right.d).epsilon(1e-12));
        CHECK(left.e == doctest::Approx(right.e).epsilon(1e-12));
        CHECK(left.theta == doctest::Approx(right.theta).epsilon(1e-12));
    }
}

TEST_CASE("inverse composes to the identity") {
    for (int k = 0; k < 50; ++k) {
        const Motion m = random_motion();
        const GPoint p = random_point();
        const GPoint q = motion_apply(motion_inverse(m), motion_apply(m, p));
        CHECK(q.x == doctest::Approx(p.x).epsilon(1e-11));
        CHECK(q.y == doctest::Approx(p.y).epsilon(1e-11));
        CHECK(q.z == doctest::Approx(p.z).epsilon(1e-11));
    }
}

TEST_CASE("distance is motion invariant") {
    // The x-branch is invariant under the full motion group.  The printed
    // yz-branch (Euclidean norm) is invariant under the theta = 0 subgroup;
    // the hyperbolic rotations instead preserve the Lorentzian combination
    // |dy^2 - dz^2| of yz-differences, which we check separately.
    for (int k = 0; k < 100; ++k) {
        const Motion m = random_motion();
        GPoint p = random_point(), q = random_point();
        const double d0 = g_distance(p, q);
        const double d1 = g_distance(motion_apply(m, p), motion_apply(m, q));
        CHECK(d1 == doctest::Approx(d0).epsilon(1e-12));

        q.x = p.x;
        Motion shear = m;
        shear.theta = 0;
        const double e0 = g_distance(p, q);
        const double e1 = g_distance(motion_apply(shear, p), motion_apply(shear, q));
        CHECK(e1 == doctest::Approx(e0).epsilon(1e-12));

        const GPoint mp = motion_apply(m, p), mq = motion_apply(m, q);
        const double l0 = std::abs((q.y - p.y) * (q.y - p.y) - (q.z - p.z) * (q.z - p.z));
        const double l1 =
            std::abs((mq.y - mp.y) * (mq.y - mp.y) - (mq.z - mp.z) * (mq.z - mp.z));
        CHECK(l1 == doctest::Approx(l0).epsilon(1e-11));
    }
}

TEST_CASE("vectors transform without the translation part") {
    const Motion m = random_motion();
    const GVector v{0.5, -1, 2};
    const GVector w = motion_apply_vector(m, v);
    CHECK(w.x == v.x);
    const GPoint p0 = motion_apply(m, {0, 0, 0});
    const GPoint p1 = motion_apply(m, {v.x, v.y, v.z});
    CHECK(w.y == doctest::Approx(p1.y - p0.y));
    CHECK(w.z == doctest::Approx(p1.z - p0.z));
}
