#pragma once

#include <array>
#include <functional>

#include "pg/gcore.hpp"
#include "pg/jet.hpp"

namespace pg {

/// All numeric thresholds in one place; every entry matches the documented
/// default and is overridable from the CLI where a flag exists.
struct Tolerances {
    double tol_light = 1e-12;      // relative, lightlike classification
    double tol_admissible = 1e-10; // absolute, on W
    double tol_chart = 1e-10;      // absolute, on |x_i| for chart choice
    double tol_nondeg = 1e-8;      // absolute, on |detII| for the Laplacian
    double tol_deg = 1e-9;         // absolute, |D| threshold in audits
    double resid_floor = 1e-3;     // relative, audit non-existence floor
};

struct GridAxis {
    double lo = 0, hi = 0;
    int n = 1;
};

/// Inclusive rectangular sampling grid; n = 1 samples the single point lo.
struct GridSpec {
    GridAxis v1, v2;

    void validate() const;
    double at1(int i) const { return at(v1, i); }
    double at2(int j) const { return at(v2, j); }
    int size() const { return v1.n * v2.n; }

private:
    static double at(const GridAxis& a, int i) {
        return a.n == 1 ? a.lo : a.lo + (a.hi - a.lo) * i / (a.n - 1);
    }
};

/// Parametrized surface patch; eval returns order-3 jets of the three
/// coordinate maps (x, y, z) at a parameter point.
struct SurfacePatch {
    std::function<std::array<Jet2, 3>(double, double)> eval;
    double a1 = -1e100, b1 = 1e100; // domain rectangle, v1 range
    double a2 = -1e100, b2 = 1e100; // v2 range
};

struct FirstFundamental {
    double g1 = 0, g2 = 0;
    double h11 = 0, h12 = 0, h22 = 0;
};

struct NormalFrame {
    GVector n;      // n.x == 0
    double W = 0;   // > 0 at valid points
    int eps = 0;    // +1 (timelike surface) or -1 (spacelike surface)
};

struct SecondFundamental {
    double L = 0, M = 0, N = 0;
    double detII = 0; // LN - M^2
};

struct CurvaturePair {
    double K = 0, H = 0;
};

/// Everything the per-point report row needs.
struct FrameData {
    FirstFundamental first;
    NormalFrame frame;
    SecondFundamental second;
    CurvaturePair curv;
};

std::array<Jet2, 3> eval_jets(const SurfacePatch& patch, double v1, double v2);

FirstFundamental first_form(const SurfacePatch& patch, double v1, double v2);

/// Throws LightlikeNormal when W < tol.tol_admissible.
NormalFrame normal_frame(const SurfacePatch& patch, double v1, double v2,
                         const Tolerances& tol = {});

/// Throws InadmissiblePoint when both |x1| and |x2| < tol.tol_chart.
SecondFundamental second_form(const SurfacePatch& patch, double v1, double v2,
                              const Tolerances& tol = {});

CurvaturePair curvatures(const SurfacePatch& patch, double v1, double v2,
                         const Tolerances& tol = {});

FrameData frame_data(const SurfacePatch& patch, double v1, double v2,
                     const Tolerances& tol = {});

/// The same surface with every point moved by m (coordinate maps composed
/// with the motion).
SurfacePatch transform(const SurfacePatch& patch, const Motion& m);

// Jet-valued second-form data, the input to the second-form Laplacian: each
// coefficient carries its own first partials so that the outer derivatives in
// the Laplacian can be taken analytically.
struct SecondFormJets {
    Deriv1 L, M, N;
    Deriv1 detII; // signed LN - M^2
    Deriv1 W;     // sqrt|P^2 - Q^2| with the |.| derivative folded in
    int eps = 0;
};

SecondFormJets second_form_jets(const std::array<Jet2, 3>& jets,
                                const Tolerances& tol = {});

} // namespace pg
