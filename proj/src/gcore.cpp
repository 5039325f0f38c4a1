#include "pg/gcore.hpp"

namespace pg {

double g_distance(const GPoint& p, const GPoint& q) {
    if (p.x != q.x) return std::abs(q.x - p.x);
    return std::hypot(q.y - p.y, q.z - p.z);
}

double g_dot(const GVector& u, const GVector& v) {
    if (u.x != 0.0 || v.x != 0.0) return u.x * v.x;
    return u.y * v.y - u.z * v.z;
}

GVector g_cross(const GVector& u, const GVector& v) {
    return {0.0, u.x * v.z - u.z * v.x, u.x * v.y - u.y * v.x};
}

IsotropyClass classify(const GVector& v, double tol_light) {
    if (v.x != 0.0) return IsotropyClass::NonIsotropic;
    const double q = v.y * v.y - v.z * v.z;
    const double scale = v.y * v.y + v.z * v.z;
    if (std::abs(q) <= tol_light * scale) return IsotropyClass::Lightlike;
    return q > 0 ? IsotropyClass::Spacelike : IsotropyClass::Timelike;
}

GPoint motion_apply(const Motion& m, const GPoint& p) {
    const double ch = std::cosh(m.theta), sh = std::sinh(m.theta);
    return {m.a + p.x,
            m.b + m.c * p.x + p.y * ch + p.z * sh,
            m.d + m.e * p.x + p.y * sh + p.z * ch};
}

GVector motion_apply_vector(const Motion& m, const GVector& v) {
    const double ch = std::cosh(m.theta), sh = std::sinh(m.theta);
    return {v.x,
            m.c * v.x + v.y * ch + v.z * sh,
            m.e * v.x + v.y * sh + v.z * ch};
}

Motion motion_compose(const Motion& m1, const Motion& m2) {
    const double ch = std::cosh(m1.theta), sh = std::sinh(m1.theta);
    Motion r;
    r.a = m1.a + m2.a;
    r.theta = m1.theta + m2.theta;
    r.b = m1.b + m1.c * m2.a + m2.b * ch + m2.d * sh;
    r.d = m1.d + m1.e * m2.a + m2.b * sh + m2.d * ch;
    r.c = m1.c + m2.c * ch + m2.e * sh;
    r.e = m1.e + m2.c * sh + m2.e * ch;
    return r;
}

Motion motion_inverse(const Motion& m) {
    const double ch = std::cosh(m.theta), sh = std::sinh(m.theta);
    Motion r;
    r.a = -m.a;
    r.theta = -m.theta;
    // undo the shear/rotation of the translated point
    r.c = -(m.c * ch - m.e * sh);
    r.e = -(-m.c * sh + m.e * ch);
    r.b = -(m.b * ch - m.d * sh) - r.c * m.a;
    r.d = -(-m.b * sh + m.d * ch) - r.e * m.a;
    return r;
}

} // namespace pg
