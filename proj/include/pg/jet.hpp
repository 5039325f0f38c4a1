#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "pg/errors.hpp"

namespace pg {

// Truncated Taylor jets storing derivative *values* (not Taylor coefficients):
// Jet1 carries f, f', f'', f''' in one variable; Jet2 carries all mixed
// partials of total order <= 3 of a bivariate function. Third order is exactly
// what the second-form Laplacian consumes (it differentiates second-form
// coefficients once).

struct Jet1 {
    double v = 0, d1 = 0, d2 = 0, d3 = 0;

    static Jet1 constant(double c) { return {c, 0, 0, 0}; }
    /// Seed for the independent variable.
    static Jet1 variable(double x) { return {x, 1, 0, 0}; }

    Jet1 operator-() const { return {-v, -d1, -d2, -d3}; }

    friend Jet1 operator+(const Jet1& a, const Jet1& b) {
        return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
    }
    friend Jet1 operator-(const Jet1& a, const Jet1& b) {
        return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
    }
    friend Jet1 operator*(const Jet1& a, const Jet1& b) {
        return {a.v * b.v,
                a.d1 * b.v + a.v * b.d1,
                a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2,
                a.d3 * b.v + 3 * a.d2 * b.d1 + 3 * a.d1 * b.d2 + a.v * b.d3};
    }
    friend Jet1 operator*(double s, const Jet1& a) { return {s * a.v, s * a.d1, s * a.d2, s * a.d3}; }
    friend Jet1 operator*(const Jet1& a, double s) { return s * a; }
    friend Jet1 operator+(const Jet1& a, double s) { return {a.v + s, a.d1, a.d2, a.d3}; }
    friend Jet1 operator+(double s, const Jet1& a) { return a + s; }
    friend Jet1 operator-(const Jet1& a, double s) { return {a.v - s, a.d1, a.d2, a.d3}; }
    friend Jet1 operator-(double s, const Jet1& a) { return {s - a.v, -a.d1, -a.d2, -a.d3}; }

    friend Jet1 operator/(const Jet1& a, const Jet1& b) {
        if (b.v == 0.0) throw DivisionByZero("jet division by zero");
        // solve a = c*b in graded order
        Jet1 c;
        c.v = a.v / b.v;
        c.d1 = (a.d1 - c.v * b.d1) / b.v;
        c.d2 = (a.d2 - c.v * b.d2 - 2 * c.d1 * b.d1) / b.v;
        c.d3 = (a.d3 - c.v * b.d3 - 3 * c.d1 * b.d2 - 3 * c.d2 * b.d1) / b.v;
        return c;
    }
    friend Jet1 operator/(const Jet1& a, double s) { return a * (1.0 / s); }
    friend Jet1 operator/(double s, const Jet1& a) { return Jet1::constant(s) / a; }
};

/// Elementary functions liftable to jets.
enum class Elem {
    Exp, Log, Sin, Cos, Tan, Sinh, Cosh, Tanh,
    Asin, Asinh, Atanh, Sqrt,
};

std::string_view elem_name(Elem f);

/// f(x), f'(x), f''(x), f'''(x); throws DomainError outside f's domain.
std::array<double, 4> elem_derivs(Elem f, double x);
/// Same for x^p with real exponent (integer p valid on all of R, otherwise x > 0).
std::array<double, 4> pow_derivs(double x, double p);

/// Univariate Faa di Bruno composition through order 3.
inline Jet1 compose(const std::array<double, 4>& f, const Jet1& g) {
    const double g1 = g.d1, g2 = g.d2, g3 = g.d3;
    return {f[0],
            f[1] * g1,
            f[2] * g1 * g1 + f[1] * g2,
            f[3] * g1 * g1 * g1 + 3 * f[2] * g1 * g2 + f[1] * g3};
}

inline Jet1 apply(Elem fn, const Jet1& g) { return compose(elem_derivs(fn, g.v), g); }
inline Jet1 pow(const Jet1& g, double p) { return compose(pow_derivs(g.v, p), g); }

inline Jet1 exp(const Jet1& a) { return apply(Elem::Exp, a); }
inline Jet1 log(const Jet1& a) { return apply(Elem::Log, a); }
inline Jet1 sin(const Jet1& a) { return apply(Elem::Sin, a); }
inline Jet1 cos(const Jet1& a) { return apply(Elem::Cos, a); }
inline Jet1 tan(const Jet1& a) { return apply(Elem::Tan, a); }
inline Jet1 sinh(const Jet1& a) { return apply(Elem::Sinh, a); }
inline Jet1 cosh(const Jet1& a) { return apply(Elem::Cosh, a); }
inline Jet1 tanh(const Jet1& a) { return apply(Elem::Tanh, a); }
inline Jet1 asin(const Jet1& a) { return apply(Elem::Asin, a); }
inline Jet1 asinh(const Jet1& a) { return apply(Elem::Asinh, a); }
inline Jet1 atanh(const Jet1& a) { return apply(Elem::Atanh, a); }
inline Jet1 sqrt(const Jet1& a) { return apply(Elem::Sqrt, a); }

// ---------------------------------------------------------------------------

/// Bivariate jet: mixed partials d(i,j) = d^(i+j) f / dv1^i dv2^j, i+j <= 3.
/// One storage slot per (i,j), so mixed-partial symmetry holds by construction.
struct Jet2 {
    // order: (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3)
    std::array<double, 10> a{};

    static constexpr int index(int i, int j) {
        constexpr int base[4] = {0, 1, 3, 6};
        return base[i + j] + j;
    }
    double& d(int i, int j) { return a[index(i, j)]; }
    double d(int i, int j) const { return a[index(i, j)]; }
    double value() const { return a[0]; }

    static Jet2 constant(double c) {
        Jet2 r;
        r.a[0] = c;
        return r;
    }
    /// Seed for v1 (var == 0) or v2 (var == 1).
    static Jet2 variable(double x, int var) {
        Jet2 r;
        r.a[0] = x;
        r.d(var == 0 ? 1 : 0, var == 0 ? 0 : 1) = 1.0;
        return r;
    }
    /// Lift a product phi1(v1)*phi2(v2) of univariate jets.
    static Jet2 separable_product(const Jet1& f, const Jet1& g) {
        const double fv[4] = {f.v, f.d1, f.d2, f.d3};
        const double gv[4] = {g.v, g.d1, g.d2, g.d3};
        Jet2 r;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) r.d(i, j) = fv[i] * gv[j];
        return r;
    }
    /// Lift a univariate jet in v1 (var == 0) or v2 (var == 1).
    static Jet2 lift(const Jet1& f, int var) {
        return separable_product(var == 0 ? f : Jet1{1, 0, 0, 0},
                                 var == 0 ? Jet1{1, 0, 0, 0} : f);
    }

    Jet2 operator-() const {
        Jet2 r;
        for (int k = 0; k < 10; ++k) r.a[k] = -a[k];
        return r;
    }

    friend Jet2 operator+(const Jet2& x, const Jet2& y) {
        Jet2 r;
        for (int k = 0; k < 10; ++k) r.a[k] = x.a[k] + y.a[k];
        return r;
    }
    friend Jet2 operator-(const Jet2& x, const Jet2& y) {
        Jet2 r;
        for (int k = 0; k < 10; ++k) r.a[k] = x.a[k] - y.a[k];
        return r;
    }
    friend Jet2 operator*(double s, const Jet2& x) {
        Jet2 r;
        for (int k = 0; k < 10; ++k) r.a[k] = s * x.a[k];
        return r;
    }
    friend Jet2 operator*(const Jet2& x, double s) { return s * x; }
    friend Jet2 operator+(const Jet2& x, double s) {
        Jet2 r = x;
        r.a[0] += s;
        return r;
    }
    friend Jet2 operator+(double s, const Jet2& x) { return x + s; }
    friend Jet2 operator-(const Jet2& x, double s) { return x + (-s); }
    friend Jet2 operator-(double s, const Jet2& x) { return (-x) + s; }

    friend Jet2 operator*(const Jet2& x, const Jet2& y);
    friend Jet2 operator/(const Jet2& x, const Jet2& y);
};

Jet2 apply(Elem fn, const Jet2& g);
Jet2 pow(const Jet2& g, double p);

inline Jet2 exp(const Jet2& a) { return apply(Elem::Exp, a); }
inline Jet2 log(const Jet2& a) { return apply(Elem::Log, a); }
inline Jet2 sin(const Jet2& a) { return apply(Elem::Sin, a); }
inline Jet2 cos(const Jet2& a) { return apply(Elem::Cos, a); }
inline Jet2 sqrt(const Jet2& a) { return apply(Elem::Sqrt, a); }

// ---------------------------------------------------------------------------

/// Value plus both first partials: the carrier used when differentiating
/// second-form coefficients once inside the Laplacian.
struct Deriv1 {
    double v = 0, d1 = 0, d2 = 0;

    static Deriv1 constant(double c) { return {c, 0, 0}; }
    /// Extract (d(i,j), d(i+1,j), d(i,j+1)) from an order-3 jet; i+j <= 2.
    static Deriv1 partial(const Jet2& f, int i, int j) {
        return {f.d(i, j), f.d(i + 1, j), f.d(i, j + 1)};
    }

    Deriv1 operator-() const { return {-v, -d1, -d2}; }
    friend Deriv1 operator+(const Deriv1& a, const Deriv1& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
    friend Deriv1 operator-(const Deriv1& a, const Deriv1& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
    friend Deriv1 operator*(const Deriv1& a, const Deriv1& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + a.v * b.d2};
    }
    friend Deriv1 operator*(double s, const Deriv1& a) { return {s * a.v, s * a.d1, s * a.d2}; }
    friend Deriv1 operator*(const Deriv1& a, double s) { return s * a; }
    friend Deriv1 operator/(const Deriv1& a, const Deriv1& b) {
        if (b.v == 0.0) throw DivisionByZero("Deriv1 division by zero");
        const double q = a.v / b.v;
        return {q, (a.d1 - q * b.d1) / b.v, (a.d2 - q * b.d2) / b.v};
    }
    friend Deriv1 operator/(const Deriv1& a, double s) { return a * (1.0 / s); }
};

/// sqrt(|u|) with the derivative of the absolute value folded in
/// (valid away from u = 0).
inline Deriv1 sqrt_abs(const Deriv1& u) {
    const double s = u.v >= 0 ? 1.0 : -1.0;
    const double r = std::sqrt(s * u.v);
    if (r == 0.0) throw DomainError("sqrt_abs at zero");
    return {r, s * u.d1 / (2 * r), s * u.d2 / (2 * r)};
}

} // namespace pg
