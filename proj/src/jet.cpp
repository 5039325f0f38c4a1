#include "pg/jet.hpp"

#include <string>

namespace pg {

namespace {
constexpr double kPoleTol = 1e-12;

[[noreturn]] void domain_fail(Elem f, double x, const char* what) {
    throw DomainError(std::string(elem_name(f)) + ": " + what + " (argument " +
                      std::to_string(x) + ")");
}
} // namespace

std::string_view elem_name(Elem f) {
    switch (f) {
        case Elem::Exp: return "exp";
        case Elem::Log: return "log";
        case Elem::Sin: return "sin";
        case Elem::Cos: return "cos";
        case Elem::Tan: return "tan";
        case Elem::Sinh: return "sinh";
        case Elem::Cosh: return "cosh";
        case Elem::Tanh: return "tanh";
        case Elem::Asin: return "asin";
        case Elem::Asinh: return "asinh";
        case Elem::Atanh: return "atanh";
        case Elem::Sqrt: return "sqrt";
    }
    return "?";
}

std::array<double, 4> elem_derivs(Elem f, double x) {
    switch (f) {
        case Elem::Exp: {
            const double e = std::exp(x);
            return {e, e, e, e};
        }
        case Elem::Log: {
            if (x <= 0) domain_fail(f, x, "requires a positive argument");
            const double i = 1.0 / x;
            return {std::log(x), i, -i * i, 2 * i * i * i};
        }
        case Elem::Sin: {
            const double s = std::sin(x), c = std::cos(x);
            return {s, c, -s, -c};
        }
        case Elem::Cos: {
            const double s = std::sin(x), c = std::cos(x);
            return {c, -s, -c, s};
        }
        case Elem::Tan: {
            const double c = std::cos(x);
            if (std::abs(c) < kPoleTol) domain_fail(f, x, "pole of tan");
            const double t = std::tan(x), s2 = 1 + t * t;
            return {t, s2, 2 * t * s2, 2 * s2 * (s2 + 2 * t * t)};
        }
        case Elem::Sinh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return {s, c, s, c};
        }
        case Elem::Cosh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return {c, s, c, s};
        }
        case Elem::Tanh: {
            const double t = std::tanh(x), s = 1 - t * t;
            return {t, s, -2 * t * s, s * (4 * t * t - 2 * s)};
        }
        case Elem::Asin: {
            if (!(std::abs(x) < 1)) domain_fail(f, x, "requires |argument| < 1");
            const double w = 1 - x * x, r = 1.0 / std::sqrt(w);
            return {std::asin(x), r, x * r / w, (1 + 2 * x * x) * r / (w * w)};
        }
        case Elem::Asinh: {
            const double w = 1 + x * x, r = 1.0 / std::sqrt(w);
            return {std::asinh(x), r, -x * r / w, (2 * x * x - 1) * r / (w * w)};
        }
        case Elem::Atanh: {
            if (!(std::abs(x) < 1)) domain_fail(f, x, "requires |argument| < 1");
            const double w = 1 - x * x;
            return {std::atanh(x), 1 / w, 2 * x / (w * w), (2 + 6 * x * x) / (w * w * w)};
        }
        case Elem::Sqrt: {
            if (!(x > 0)) domain_fail(f, x, "requires a positive argument");
            const double r = std::sqrt(x);
            return {r, 0.5 / r, -0.25 / (x * r), 0.375 / (x * x * r)};
        }
    }
    domain_fail(f, x, "unknown elementary");
}

std::array<double, 4> pow_derivs(double x, double p) {
    const bool integral = p == std::floor(p) && std::abs(p) < 1e9;
    if (!integral && !(x > 0))
        throw DomainError("pow: non-integer exponent requires a positive base (base " +
                          std::to_string(x) + ")");
    if (integral && x == 0 && p < 3)
        // derivatives of x^p at 0 with small integer p
        switch (static_cast<long>(p)) {
            case 0: return {1, 0, 0, 0};
            case 1: return {0, 1, 0, 0};
            case 2: return {0, 0, 2, 0};
            default:
                if (p < 0) throw DomainError("pow: negative exponent at zero base");
        }
    const double f0 = std::pow(x, p);
    const double f1 = p * std::pow(x, p - 1);
    const double f2 = p * (p - 1) * std::pow(x, p - 2);
    const double f3 = p * (p - 1) * (p - 2) * std::pow(x, p - 3);
    return {f0, f1, f2, f3};
}

Jet2 operator*(const Jet2& x, const Jet2& y) {
    static constexpr double binom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    Jet2 r;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            double s = 0;
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q)
                    s += binom[i][p] * binom[j][q] * x.d(p, q) * y.d(i - p, j - q);
            r.d(i, j) = s;
        }
    return r;
}

Jet2 operator/(const Jet2& x, const Jet2& y) {
    if (y.a[0] == 0.0) throw DivisionByZero("jet division by zero");
    static constexpr double binom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    Jet2 c;
    // graded order so that every c(p,q) needed below is already known
    static constexpr int order[10][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                                         {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
    for (auto [i, j] : order) {
        double s = 0;
        for (int p = 0; p <= i; ++p)
            for (int q = 0; q <= j; ++q) {
                if (p == i && q == j) continue;
                s += binom[i][p] * binom[j][q] * c.d(p, q) * y.d(i - p, j - q);
            }
        c.d(i, j) = (x.d(i, j) - s) / y.a[0];
    }
    return c;
}

namespace {
// bivariate Faa di Bruno through total order 3
Jet2 compose2(const std::array<double, 4>& f, const Jet2& u) {
    const double u10 = u.d(1, 0), u01 = u.d(0, 1);
    const double u20 = u.d(2, 0), u11 = u.d(1, 1), u02 = u.d(0, 2);
    const double u30 = u.d(3, 0), u21 = u.d(2, 1), u12 = u.d(1, 2), u03 = u.d(0, 3);
    Jet2 r;
    r.d(0, 0) = f[0];
    r.d(1, 0) = f[1] * u10;
    r.d(0, 1) = f[1] * u01;
    r.d(2, 0) = f[2] * u10 * u10 + f[1] * u20;
    r.d(1, 1) = f[2] * u10 * u01 + f[1] * u11;
    r.d(0, 2) = f[2] * u01 * u01 + f[1] * u02;
    r.d(3, 0) = f[3] * u10 * u10 * u10 + 3 * f[2] * u10 * u20 + f[1] * u30;
    r.d(2, 1) = f[3] * u10 * u10 * u01 + f[2] * (2 * u10 * u11 + u20 * u01) + f[1] * u21;
    r.d(1, 2) = f[3] * u10 * u01 * u01 + f[2] * (2 * u01 * u11 + u02 * u10) + f[1] * u12;
    r.d(0, 3) = f[3] * u01 * u01 * u01 + 3 * f[2] * u01 * u02 + f[1] * u03;
    return r;
}
} // namespace

Jet2 apply(Elem fn, const Jet2& g) { return compose2(elem_derivs(fn, g.a[0]), g); }
Jet2 pow(const Jet2& g, double p) { return compose2(pow_derivs(g.a[0], p), g); }

} // namespace pg
