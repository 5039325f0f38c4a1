#include "pg/surface.hpp"

#include <cmath>
#include <string>

#include "pg/errors.hpp"

namespace pg {

void GridSpec::validate() const {
    auto check = [](const GridAxis& a, const char* name) {
        if (a.n < 1) throw Error(std::string("grid axis ") + name + ": n must be >= 1");
        if (a.n > 1 && !(a.lo < a.hi))
            throw Error(std::string("grid axis ") + name + ": lo < hi required when n > 1");
        if (a.n == 1 && !(a.lo <= a.hi))
            throw Error(std::string("grid axis ") + name + ": lo <= hi required");
    };
    check(v1, "v1");
    check(v2, "v2");
}

std::array<Jet2, 3> eval_jets(const SurfacePatch& patch, double v1, double v2) {
    if (v1 < patch.a1 || v1 > patch.b1 || v2 < patch.a2 || v2 > patch.b2)
        throw DomainError("parameter point outside patch domain");
    return patch.eval(v1, v2);
}

FirstFundamental first_form(const SurfacePatch& patch, double v1, double v2) {
    const auto j = eval_jets(patch, v1, v2);
    const Jet2 &X = j[0], &Y = j[1], &Z = j[2];
    FirstFundamental f;
    f.g1 = X.d(1, 0);
    f.g2 = X.d(0, 1);
    // Euclidean product of yz-projections, as printed in the h_ij definition
    f.h11 = Y.d(1, 0) * Y.d(1, 0) + Z.d(1, 0) * Z.d(1, 0);
    f.h12 = Y.d(1, 0) * Y.d(0, 1) + Z.d(1, 0) * Z.d(0, 1);
    f.h22 = Y.d(0, 1) * Y.d(0, 1) + Z.d(0, 1) * Z.d(0, 1);
    return f;
}

namespace {

NormalFrame frame_from_jets(const std::array<Jet2, 3>& j, const Tolerances& tol) {
    const Jet2 &X = j[0], &Y = j[1], &Z = j[2];
    const double P = X.d(1, 0) * Y.d(0, 1) - X.d(0, 1) * Y.d(1, 0);
    const double Q = X.d(1, 0) * Z.d(0, 1) - X.d(0, 1) * Z.d(1, 0);
    const double w2 = P * P - Q * Q;
    const double W = std::sqrt(std::abs(w2));
    if (W < tol.tol_admissible)
        throw LightlikeNormal("W = " + std::to_string(W) + " below tol_admissible");
    NormalFrame f;
    f.W = W;
    f.n = GVector{0.0, Q / W, P / W};
    const double nn = g_dot(f.n, f.n); // (Q^2 - P^2)/W^2, exactly +-1 up to rounding
    // rounding in Q/W and P/W is amplified by (P^2+Q^2)/W^2 near lightlike frames
    const double conditioning = (P * P + Q * Q) / (W * W);
    if (std::abs(std::abs(nn) - 1.0) > 1e-12 * (100 + conditioning))
        throw Error("normal frame: |N.N| deviates from 1 beyond rounding");
    f.eps = w2 < 0 ? 1 : -1;
    return f;
}

} // namespace

NormalFrame normal_frame(const SurfacePatch& patch, double v1, double v2,
                         const Tolerances& tol) {
    return frame_from_jets(eval_jets(patch, v1, v2), tol);
}

SecondFundamental second_form(const SurfacePatch& patch, double v1, double v2,
                              const Tolerances& tol) {
    const auto sj = second_form_jets(eval_jets(patch, v1, v2), tol);
    SecondFundamental s;
    s.L = sj.L.v;
    s.M = sj.M.v;
    s.N = sj.N.v;
    s.detII = sj.detII.v;
    return s;
}

SecondFormJets second_form_jets(const std::array<Jet2, 3>& jets, const Tolerances& tol) {
    const Jet2 &X = jets[0], &Y = jets[1], &Z = jets[2];
    const Deriv1 X1 = Deriv1::partial(X, 1, 0), X2 = Deriv1::partial(X, 0, 1);
    const Deriv1 Y1 = Deriv1::partial(Y, 1, 0), Y2 = Deriv1::partial(Y, 0, 1);
    const Deriv1 Z1 = Deriv1::partial(Z, 1, 0), Z2 = Deriv1::partial(Z, 0, 1);

    const Deriv1 P = X1 * Y2 - X2 * Y1;
    const Deriv1 Q = X1 * Z2 - X2 * Z1;
    const Deriv1 w2 = P * P - Q * Q;
    if (std::sqrt(std::abs(w2.v)) < tol.tol_admissible)
        throw LightlikeNormal("W below tol_admissible");
    SecondFormJets out;
    out.W = sqrt_abs(w2);
    out.eps = w2.v > 0 ? -1 : 1; // eps = sign(Q^2 - P^2)
    const Deriv1 ny = Q / out.W, nz = P / out.W;

    // chart anchor: the coordinate derivative x_c with |x_c| >= tol_chart
    const bool chart1 = std::abs(X1.v) >= tol.tol_chart;
    if (!chart1 && std::abs(X2.v) < tol.tol_chart)
        throw InadmissiblePoint("both |x1| and |x2| below tol_chart");
    const Deriv1& Xc = chart1 ? X1 : X2;
    const Deriv1& Yc = chart1 ? Y1 : Y2;
    const Deriv1& Zc = chart1 ? Z1 : Z2;

    auto coeff = [&](int i, int j) {
        const Deriv1 Xij = Deriv1::partial(X, i, j);
        const Deriv1 Yij = Deriv1::partial(Y, i, j);
        const Deriv1 Zij = Deriv1::partial(Z, i, j);
        const Deriv1 ay = (Xc * Yij - Xij * Yc) / Xc;
        const Deriv1 az = (Xc * Zij - Xij * Zc) / Xc;
        // pseudo-Galilean product of the isotropic vectors (0, ay, az) and n
        return static_cast<double>(out.eps) * (ay * ny - az * nz);
    };
    out.L = coeff(2, 0);
    out.M = coeff(1, 1);
    out.N = coeff(0, 2);
    out.detII = out.L * out.N - out.M * out.M;
    return out;
}

CurvaturePair curvatures(const SurfacePatch& patch, double v1, double v2,
                         const Tolerances& tol) {
    const auto j = eval_jets(patch, v1, v2);
    const auto f = frame_from_jets(j, tol);
    const auto sj = second_form_jets(j, tol);
    const double g1 = j[0].d(1, 0), g2 = j[0].d(0, 1);
    CurvaturePair c;
    c.K = -f.eps * sj.detII.v / (f.W * f.W);
    c.H = -f.eps * (g2 * g2 * sj.L.v - 2 * g1 * g2 * sj.M.v + g1 * g1 * sj.N.v) /
          (2 * f.W * f.W);
    return c;
}

FrameData frame_data(const SurfacePatch& patch, double v1, double v2,
                     const Tolerances& tol) {
    const auto j = eval_jets(patch, v1, v2);
    FrameData d;
    d.first = first_form(patch, v1, v2);
    d.frame = frame_from_jets(j, tol);
    const auto sj = second_form_jets(j, tol);
    d.second = {sj.L.v, sj.M.v, sj.N.v, sj.detII.v};
    const double g1 = d.first.g1, g2 = d.first.g2;
    d.curv.K = -d.frame.eps * d.second.detII / (d.frame.W * d.frame.W);
    d.curv.H = -d.frame.eps *
               (g2 * g2 * d.second.L - 2 * g1 * g2 * d.second.M + g1 * g1 * d.second.N) /
               (2 * d.frame.W * d.frame.W);
    return d;
}

SurfacePatch transform(const SurfacePatch& patch, const Motion& m) {
    SurfacePatch out = patch;
    const double ch = std::cosh(m.theta), sh = std::sinh(m.theta);
    auto inner = patch.eval;
    out.eval = [inner, m, ch, sh](double v1, double v2) {
        const auto j = inner(v1, v2);
        const Jet2 &X = j[0], &Y = j[1], &Z = j[2];
        std::array<Jet2, 3> r;
        r[0] = X + m.a;
        r[1] = m.c * X + ch * Y + sh * Z + m.b;
        r[2] = m.e * X + sh * Y + ch * Z + m.d;
        return r;
    };
    return out;
}

} // namespace pg
