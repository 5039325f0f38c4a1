#pragma once

#include <array>
#include <vector>

#include "pg/homothetical.hpp"
#include "pg/surface.hpp"

namespace pg {

/// One evaluation of the second-form Laplacian applied to the three
/// coordinate functions. The paired formal roots sqrt(LN - M^2) in the
/// Laplacian are combined into the signed LN - M^2 (real-valued analytic
/// continuation); detII_sign records the branch.
struct LaplaceSample {
    double v1 = 0, v2 = 0;
    std::array<double, 3> lap{};
    int detII_sign = 0;
    double W = 0;
    int eps = 0;
};

/// Throws DegenerateSecondForm when |detII| < tol.tol_nondeg; propagates
/// chart and domain errors.
LaplaceSample laplacian_ii(const SurfacePatch& patch, double v1, double v2,
                           const Tolerances& tol = {});

struct ChainIdentityReport {
    double max_abs_residual = 0;
    int points_checked = 0;
};

/// For type I: residual of  lap3 - [phi_a' phi_b lap1 + phi_a phi_b' lap2 + 2 eps W];
/// for type III: residual of lap1 - [phi_a' phi_b lap2 + phi_a phi_b' lap3 + 2 eps W].
/// Type II is not covered by the identity and is rejected.
ChainIdentityReport chain_identity_residual(const HomotheticalSurface& h,
                                            const GridSpec& grid,
                                            const Tolerances& tol = {});

struct EigenFit {
    std::array<double, 3> lambda{};
    std::array<double, 3> rel_residual{};
    std::array<bool, 3> zero_coordinate{};
    int n_points = 0;
};

/// Least-squares fit of lambda_i in  lap_i = lambda_i x_i  over the valid
/// grid points (deterministic grid-index summation order). Throws
/// InsufficientData below 2 valid points.
EigenFit eigen_fit(const SurfacePatch& patch, const GridSpec& grid,
                   const Tolerances& tol = {});

/// Fit from precollected (x, lap) pairs; exposed for testability.
EigenFit eigen_fit_from_samples(const std::vector<std::array<double, 3>>& x,
                                const std::vector<std::array<double, 3>>& lap,
                                const Tolerances& tol = {});

} // namespace pg
