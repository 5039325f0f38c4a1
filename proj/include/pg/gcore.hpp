#pragma once

#include <cmath>

namespace pg {

// Pseudo-Galilean linear algebra: the x coordinate is absolute, the (y, z)
// plane is isotropic and carries a Lorentzian product y1*y2 - z1*z2.

struct GPoint {
    double x = 0, y = 0, z = 0;
};

struct GVector {
    double x = 0, y = 0, z = 0;
};

enum class IsotropyClass { NonIsotropic, Spacelike, Timelike, Lightlike };

/// Six-parameter motion: translations (a, b, d), shears (c, e) and the
/// hyperbolic angle theta of the isotropic-plane rotation.
struct Motion {
    double a = 0, b = 0, c = 0, d = 0, e = 0, theta = 0;

    static Motion identity() { return {}; }
};

/// Pseudo-Galilean distance: |x2 - x1| when the absolute coordinates differ
/// (exact comparison on stored reals), Euclidean yz-distance otherwise.
double g_distance(const GPoint& p, const GPoint& q);

/// Scalar product: x1*y1 on the non-isotropic branch, y2*y2 - z3*z3 when both
/// first components vanish. Branch selection is exact by design; callers
/// needing tolerance-aware branching must quantize first.
double g_dot(const GVector& u, const GVector& v);

/// Formal determinant with first row (0, -e2, e3); the result is always
/// isotropic (first component exactly 0).
GVector g_cross(const GVector& u, const GVector& v);

/// tol_light is a relative tolerance applied only at the lightlike boundary
/// |y^2 - z^2| vs y^2 + z^2; the zero vector classifies Lightlike.
IsotropyClass classify(const GVector& v, double tol_light = 1e-12);

GPoint motion_apply(const Motion& m, const GPoint& p);
GVector motion_apply_vector(const Motion& m, const GVector& v);

/// Group composition in parameter form: apply(compose(m1, m2), p) ==
/// apply(m1, apply(m2, p)).
Motion motion_compose(const Motion& m1, const Motion& m2);

Motion motion_inverse(const Motion& m);

} // namespace pg
