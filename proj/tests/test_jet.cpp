#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pg/errors.hpp"
#include "pg/jet.hpp"

using namespace pg;

namespace {

// central finite differences of a scalar function, orders 1..3
template <typename F>
std::array<double, 4> fd_derivs(F f, double x) {
    const double h1 = 1e-5, h2 = 1e-4, h3 = 1e-3;
    std::array<double, 4> d;
    d[0] = f(x);
    d[1] = (f(x + h1) - f(x - h1)) / (2 * h1);
    d[2] = (f(x + h2) - 2 * f(x) + f(x - h2)) / (h2 * h2);
    d[3] = (f(x + 2 * h3) - 2 * f(x + h3) + 2 * f(x - h3) - f(x - 2 * h3)) /
           (2 * h3 * h3 * h3);
    return d;
}

Jet1 random_jet(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    return {u(rng), u(rng), u(rng), u(rng)};
}

void check_close(const Jet1& a, const Jet1& b, double tol) {
    CHECK(a.v == doctest::Approx(b.v).epsilon(tol));
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(tol));
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(tol));
    CHECK(a.d3 == doctest::Approx(b.d3).epsilon(tol));
}

} // namespace

TEST_CASE("jet arithmetic basics") {
    const Jet1 six = Jet1::constant(2) * Jet1::constant(3);
    CHECK(six.v == 6);
    CHECK(six.d1 == 0);
    CHECK(six.d2 == 0);
    CHECK(six.d3 == 0);

    const Jet1 v = Jet1::variable(3);
    const Jet1 v2 = v * v;
    CHECK(v2.v == 9);
    CHECK(v2.d1 == 6);
    CHECK(v2.d2 == 2);
    CHECK(v2.d3 == 0);

    const Jet1 inv = 1.0 / Jet1::variable(2);
    CHECK(inv.v == doctest::Approx(0.5));
    CHECK(inv.d1 == doctest::Approx(-0.25));
    CHECK(inv.d2 == doctest::Approx(0.25));
    CHECK(inv.d3 == doctest::Approx(-0.375));

    CHECK_THROWS_AS(Jet1::constant(1) / Jet1::constant(0), DivisionByZero);
}

TEST_CASE("elementary jets: fixed values") {
    const Jet1 e = exp(Jet1::variable(0));
    CHECK(e.v == 1);
    CHECK(e.d1 == 1);
    CHECK(e.d2 == 1);
    CHECK(e.d3 == 1);

    const Jet1 r = sqrt(Jet1::variable(4));
    CHECK(r.v == doctest::Approx(2));
    CHECK(r.d1 == doctest::Approx(0.25));
    CHECK(r.d2 == doctest::Approx(-0.03125));
    CHECK(r.d3 == doctest::Approx(0.01171875));

    const Jet1 s = sin(Jet1::variable(0));
    CHECK(s.v == 0);
    CHECK(s.d1 == 1);
    CHECK(s.d2 == 0);
    CHECK(s.d3 == -1);
}

TEST_CASE("elementary jets agree with finite differences") {
    struct Case {
        Elem f;
        double lo, hi;
    };
    const Case cases[] = {
        {Elem::Exp, -1, 1},   {Elem::Log, 0.3, 3},   {Elem::Sin, -2, 2},
        {Elem::Cos, -2, 2},   {Elem::Tan, -0.9, 0.9}, {Elem::Sinh, -1.5, 1.5},
        {Elem::Cosh, -1.5, 1.5}, {Elem::Tanh, -1.5, 1.5}, {Elem::Asin, -0.8, 0.8},
        {Elem::Asinh, -2, 2}, {Elem::Atanh, -0.8, 0.8}, {Elem::Sqrt, 0.3, 3},
    };
    std::mt19937 rng(11);
    for (const auto& c : cases) {
        std::uniform_real_distribution<double> u(c.lo, c.hi);
        for (int k = 0; k < 20; ++k) {
            const double x = u(rng);
            const auto got = elem_derivs(c.f, x);
            const auto ref = fd_derivs([&](double t) { return elem_derivs(c.f, t)[0]; }, x);
            CAPTURE(elem_name(c.f));
            CAPTURE(x);
            CHECK(got[1] == doctest::Approx(ref[1]).epsilon(1e-6));
            CHECK(got[2] == doctest::Approx(ref[2]).epsilon(1e-4).scale(1 + std::abs(got[2])));
            CHECK(got[3] == doctest::Approx(ref[3]).epsilon(1e-2).scale(1 + std::abs(got[3])));
        }
    }
}

TEST_CASE("pow derivatives, including integer exponents on nonpositive bases") {
    const auto cube = pow_derivs(-2, 3);
    CHECK(cube[0] == -8);
    CHECK(cube[1] == 12);
    CHECK(cube[2] == -12);
    CHECK(cube[3] == 6);
    const auto at_zero = pow_derivs(0, 2);
    CHECK(at_zero[0] == 0);
    CHECK(at_zero[1] == 0);
    CHECK(at_zero[2] == 2);
    CHECK(at_zero[3] == 0);
    CHECK_THROWS_AS(pow_derivs(-1, 0.5), DomainError);
    CHECK_THROWS_AS(pow_derivs(0, -1), DomainError);
}

TEST_CASE("domain errors of elementary functions") {
    CHECK_THROWS_AS(elem_derivs(Elem::Log, 0), DomainError);
    CHECK_THROWS_AS(elem_derivs(Elem::Sqrt, -1), DomainError);
    CHECK_THROWS_AS(elem_derivs(Elem::Asin, 1.0), DomainError);
    CHECK_THROWS_AS(elem_derivs(Elem::Atanh, -1.0), DomainError);
    CHECK_THROWS_AS(elem_derivs(Elem::Tan, M_PI / 2), DomainError);
}

TEST_CASE("ring axioms on random jets") {
    std::mt19937 rng(23);
    for (int k = 0; k < 50; ++k) {
        const Jet1 a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
        check_close(a * b, b * a, 1e-12);
        check_close((a * b) * c, a * (b * c), 1e-12);
        check_close(a * (b + c), a * b + a * c, 1e-12);
        check_close(a + b, b + a, 1e-12);
    }
}

TEST_CASE("composition consistency: exp(log(v)) is the identity") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.2, 5);
    for (int k = 0; k < 30; ++k) {
        const double x = u(rng);
        check_close(exp(log(Jet1::variable(x))), Jet1::variable(x), 1e-10);
        check_close(sqrt(Jet1::variable(x) * Jet1::variable(x)), Jet1::variable(x), 1e-10);
    }
}

TEST_CASE("division is the inverse of multiplication") {
    std::mt19937 rng(37);
    for (int k = 0; k < 50; ++k) {
        Jet1 a = random_jet(rng), b = random_jet(rng);
        if (std::abs(b.v) < 0.1) b.v += 1;
        check_close((a * b) / b, a, 1e-11);
    }
}

TEST_CASE("Jet2 indexing covers all 10 slots without collisions") {
    bool seen[10] = {};
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            const int idx = Jet2::index(i, j);
            CHECK(idx >= 0);
            CHECK(idx < 10);
            CHECK(!seen[idx]);
            seen[idx] = true;
        }
}

TEST_CASE("Jet2 separable products carry exact mixed partials") {
    // f(v1,v2) = v1^2 * v2^3 at (2, 1)
    const Jet1 f = pow(Jet1::variable(2), 2.0);
    const Jet1 g = pow(Jet1::variable(1), 3.0);
    const Jet2 p = Jet2::separable_product(f, g);
    CHECK(p.d(0, 0) == doctest::Approx(4));
    CHECK(p.d(1, 0) == doctest::Approx(4));
    CHECK(p.d(0, 1) == doctest::Approx(12));
    CHECK(p.d(1, 1) == doctest::Approx(12));
    CHECK(p.d(2, 0) == doctest::Approx(2));
    CHECK(p.d(0, 2) == doctest::Approx(24));
    CHECK(p.d(2, 1) == doctest::Approx(6));
    CHECK(p.d(1, 2) == doctest::Approx(24));
    CHECK(p.d(3, 0) == doctest::Approx(0));
    CHECK(p.d(0, 3) == doctest::Approx(24));
}

TEST_CASE("Jet2 multiplication and division against a closed form") {
    // (v1 + v2)^2 * (v1 v2) at (1.5, 0.5), checked against separable expansion
    const Jet2 v1 = Jet2::variable(1.5, 0), v2 = Jet2::variable(0.5, 1);
    const Jet2 s = v1 + v2;
    const Jet2 prod = s * s * (v1 * v2);
    // reference: expand (v1+v2)^2 v1 v2 = v1^3 v2 + 2 v1^2 v2^2 + v1 v2^3
    auto mono = [&](double a, int p, int q) {
        return a * Jet2::separable_product(pow(Jet1::variable(1.5), double(p)),
                                           pow(Jet1::variable(0.5), double(q)));
    };
    const Jet2 ref = mono(1, 3, 1) + mono(2, 2, 2) + mono(1, 1, 3);
    for (int k = 0; k < 10; ++k) CHECK(prod.a[k] == doctest::Approx(ref.a[k]));
    const Jet2 back = prod / (v1 * v2);
    for (int k = 0; k < 10; ++k) CHECK(back.a[k] == doctest::Approx((s * s).a[k]));
}

TEST_CASE("Jet2 elementary composition against separable closed form") {
    // exp(v1 * v2) at (0.7, -0.4): all partials via Faa di Bruno vs the
    // separable product of exp(v1*c) expansions is nontrivial; use finite
    // differences on the value instead.
    const double x = 0.7, y = -0.4;
    auto f = [](double a, double b) { return std::exp(a * b); };
    const Jet2 e = exp(Jet2::variable(x, 0) * Jet2::variable(y, 1));
    const double h = 1e-4;
    CHECK(e.d(0, 0) == doctest::Approx(f(x, y)));
    CHECK(e.d(1, 0) ==
          doctest::Approx((f(x + h, y) - f(x - h, y)) / (2 * h)).epsilon(1e-6));
    CHECK(e.d(0, 1) ==
          doctest::Approx((f(x, y + h) - f(x, y - h)) / (2 * h)).epsilon(1e-6));
    CHECK(e.d(1, 1) == doctest::Approx((f(x + h, y + h) - f(x + h, y - h) -
                                        f(x - h, y + h) + f(x - h, y - h)) /
                                       (4 * h * h))
                           .epsilon(1e-5));
    CHECK(e.d(2, 0) ==
          doctest::Approx((f(x + h, y) - 2 * f(x, y) + f(x - h, y)) / (h * h))
              .epsilon(1e-5));
    // third-order spot check: d3/dv1^3 exp(v1 v2) = v2^3 exp(v1 v2)
    CHECK(e.d(3, 0) == doctest::Approx(y * y * y * f(x, y)));
    CHECK(e.d(2, 1) == doctest::Approx((2 * y + x * y * y) * f(x, y)));
}

TEST_CASE("Deriv1 extraction and arithmetic") {
    const Jet2 p = Jet2::separable_product(pow(Jet1::variable(2), 2.0),
                                           pow(Jet1::variable(3), 3.0));
    const Deriv1 d = Deriv1::partial(p, 1, 1); // d/dv1 d/dv2 (v1^2 v2^3)
    CHECK(d.v == doctest::Approx(2 * 2 * 3 * 9));    // 2 v1 * 3 v2^2
    CHECK(d.d1 == doctest::Approx(2 * 27));          // 2 * 3 v2^2
    CHECK(d.d2 == doctest::Approx(2 * 2 * 6 * 3));   // 2 v1 * 6 v2

    const Deriv1 q{4, 1, 2};
    const Deriv1 r = sqrt_abs(q);
    CHECK(r.v == doctest::Approx(2));
    CHECK(r.d1 == doctest::Approx(0.25));
    CHECK(r.d2 == doctest::Approx(0.5));
    const Deriv1 neg{-4, 1, 2};
    const Deriv1 rn = sqrt_abs(neg);
    CHECK(rn.v == doctest::Approx(2));
    CHECK(rn.d1 == doctest::Approx(-0.25));
    CHECK(rn.d2 == doctest::Approx(-0.5));
}
