#include "pg/laplace2.hpp"

#include <cmath>
#include <string>

#include "pg/errors.hpp"

namespace pg {

LaplaceSample laplacian_ii(const SurfacePatch& patch, double v1, double v2,
                           const Tolerances& tol) {
    const auto jets = eval_jets(patch, v1, v2);
    const auto sj = second_form_jets(jets, tol);
    if (std::abs(sj.detII.v) < tol.tol_nondeg)
        throw DegenerateSecondForm("|detII| = " + std::to_string(std::abs(sj.detII.v)) +
                                   " below tol_nondeg");
    LaplaceSample s;
    s.v1 = v1;
    s.v2 = v2;
    s.detII_sign = sj.detII.v > 0 ? 1 : -1;
    s.W = sj.W.v;
    s.eps = sj.eps;
    const Deriv1& d = sj.detII;
    const double d2 = 2 * d.v * d.v;
    for (int k = 0; k < 3; ++k) {
        const Deriv1 F1 = Deriv1::partial(jets[k], 1, 0);
        const Deriv1 F2 = Deriv1::partial(jets[k], 0, 1);
        const Deriv1 G = sj.N * F1 - sj.M * F2;
        const Deriv1 H = sj.M * F1 - sj.L * F2;
        // d/dv1 (G / sqrt(d)) / sqrt(d) - d/dv2 (H / sqrt(d)) / sqrt(d) with
        // the paired roots combined into the signed 1/d
        s.lap[k] = -(G.d1 / d.v - G.v * d.d1 / d2 - H.d2 / d.v + H.v * d.d2 / d2);
    }
    return s;
}

ChainIdentityReport chain_identity_residual(const HomotheticalSurface& h,
                                            const GridSpec& grid,
                                            const Tolerances& tol) {
    if (h.stype == SurfaceType::TypeII)
        throw Error("chain identity applies to type I and type III surfaces only");
    grid.validate();
    const SurfacePatch patch = build_surface(h);
    ChainIdentityReport rep;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            const double u = grid.at1(i), w = grid.at2(j);
            const LaplaceSample s = laplacian_ii(patch, u, w, tol);
            const Jet1 fa = h.phi_a.eval(u), fb = h.phi_b.eval(w);
            const double extra = 2.0 * s.eps * s.W;
            double resid;
            if (h.stype == SurfaceType::TypeI)
                resid = s.lap[2] -
                        (fa.d1 * fb.v * s.lap[0] + fa.v * fb.d1 * s.lap[1] + extra);
            else
                resid = s.lap[0] -
                        (fa.d1 * fb.v * s.lap[1] + fa.v * fb.d1 * s.lap[2] + extra);
            rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(resid));
            ++rep.points_checked;
        }
    return rep;
}

EigenFit eigen_fit_from_samples(const std::vector<std::array<double, 3>>& x,
                                const std::vector<std::array<double, 3>>& lap,
                                const Tolerances& tol) {
    if (x.size() != lap.size()) throw Error("eigen_fit: mismatched sample arrays");
    if (x.size() < 2) throw InsufficientData("eigen_fit needs at least 2 valid points");
    EigenFit fit;
    fit.n_points = static_cast<int>(x.size());
    for (int i = 0; i < 3; ++i) {
        double sxx = 0, sxl = 0;
        for (std::size_t p = 0; p < x.size(); ++p) {
            sxx += x[p][i] * x[p][i];
            sxl += x[p][i] * lap[p][i];
        }
        if (sxx == 0) {
            fit.zero_coordinate[i] = true;
            fit.lambda[i] = 0;
        } else {
            fit.lambda[i] = sxl / sxx;
        }
        double srr = 0, sll = 0;
        for (std::size_t p = 0; p < x.size(); ++p) {
            const double r = lap[p][i] - fit.lambda[i] * x[p][i];
            srr += r * r;
            sll += lap[p][i] * lap[p][i];
        }
        const double rms_l = std::sqrt(sll / x.size());
        fit.rel_residual[i] = std::sqrt(srr / x.size()) / std::max(rms_l, tol.tol_nondeg);
    }
    return fit;
}

EigenFit eigen_fit(const SurfacePatch& patch, const GridSpec& grid,
                   const Tolerances& tol) {
    grid.validate();
    std::vector<std::array<double, 3>> xs, laps;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            const double u = grid.at1(i), w = grid.at2(j);
            try {
                const LaplaceSample s = laplacian_ii(patch, u, w, tol);
                const auto jets = eval_jets(patch, u, w);
                xs.push_back({jets[0].value(), jets[1].value(), jets[2].value()});
                laps.push_back(s.lap);
            } catch (const Error&) {
                // invalid points are skipped; callers needing them use the CLI rows
            }
        }
    return eigen_fit_from_samples(xs, laps, tol);
}

} // namespace pg
