#include <algorithm>
#include <cmath>
#include <string>

#include "pg/errors.hpp"
#include "pg/homothetical.hpp"

namespace pg {

std::string_view surface_type_name(SurfaceType t) {
    switch (t) {
        case SurfaceType::TypeI: return "I";
        case SurfaceType::TypeII: return "II";
        case SurfaceType::TypeIII: return "III";
    }
    return "?";
}

SurfaceType parse_surface_type(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return SurfaceType::TypeI;
    if (s == "II" || s == "ii" || s == "2") return SurfaceType::TypeII;
    if (s == "III" || s == "iii" || s == "3") return SurfaceType::TypeIII;
    throw Error("unknown surface type '" + s + "' (expected I, II or III)");
}

std::string_view nullk_name(NullKClass c) {
    switch (c) {
        case NullKClass::ConstantFactor: return "ConstantFactor";
        case NullKClass::ExponentialPair: return "ExponentialPair";
        case NullKClass::PowerPairReciprocal: return "PowerPairReciprocal";
        case NullKClass::NotNullK: return "NotNullK";
    }
    return "?";
}

std::string_view contradiction_name(Contradiction c) {
    switch (c) {
        case Contradiction::WVanishes: return "WVanishes";
        case Contradiction::Degenerate: return "Degenerate";
        case Contradiction::ReducedEqFails: return "ReducedEqFails";
        case Contradiction::NoCandidate: return "NoCandidate";
    }
    return "?";
}

SurfacePatch build_surface(const HomotheticalSurface& h) {
    SurfacePatch patch;
    patch.a1 = h.phi_a.lo;
    patch.b1 = h.phi_a.hi;
    patch.a2 = h.phi_b.lo;
    patch.b2 = h.phi_b.hi;
    const FactorFn fa = h.phi_a, fb = h.phi_b;
    const SurfaceType t = h.stype;
    patch.eval = [fa, fb, t](double u, double w) {
        const Jet2 prod = Jet2::separable_product(fa.eval(u), fb.eval(w));
        const Jet2 U = Jet2::variable(u, 0), V = Jet2::variable(w, 1);
        std::array<Jet2, 3> r;
        switch (t) {
            case SurfaceType::TypeI: r = {U, V, prod}; break;
            case SurfaceType::TypeII: r = {U, prod, V}; break;
            case SurfaceType::TypeIII: r = {prod, U, V}; break;
        }
        return r;
    };
    return patch;
}

double degeneracy(const HomotheticalSurface& h, double u, double w) {
    const Jet1 fa = h.phi_a.eval(u), fb = h.phi_b.eval(w);
    return fa.v * fb.v * fa.d2 * fb.d2 - fa.d1 * fa.d1 * fb.d1 * fb.d1;
}

NullKClass classify_nullK(const HomotheticalSurface& h, const GridSpec& grid,
                          const Tolerances& tol) {
    grid.validate();
    // structural verdict per the three null-K families
    NullKClass structural = NullKClass::NotNullK;
    const FactorFn &fa = h.phi_a, &fb = h.phi_b;
    auto is_const = [](const FactorFn& f) {
        if (f.kind == FactorKind::Const) return true;
        if (f.kind == FactorKind::Poly)
            return std::all_of(f.params.begin() + 1, f.params.end(),
                               [](double c) { return c == 0; });
        return false;
    };
    if (is_const(fa) || is_const(fb)) {
        structural = NullKClass::ConstantFactor;
    } else if (fa.kind == FactorKind::Exp && fb.kind == FactorKind::Exp) {
        structural = NullKClass::ExponentialPair;
    } else if (fa.kind == FactorKind::PowerFam && fb.kind == FactorKind::PowerFam &&
               std::abs(fa.params[0] * fb.params[0] - 1) <= 1e-10) {
        structural = NullKClass::PowerPairReciprocal;
    }
    // numeric verdict: max |D| over the evaluable part of the grid (factor
    // domains may exclude points; the structural verdict stands when no grid
    // point is evaluable)
    double max_abs_D = 0;
    int evaluable = 0;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            try {
                const double u = grid.at1(i), w = grid.at2(j);
                if (h.phi_a.value(u) == 0 || h.phi_b.value(w) == 0)
                    continue; // factorable surfaces assume phi_a phi_b != 0
                const double D = degeneracy(h, u, w);
                if (!std::isfinite(D)) continue; // overflow in extreme families
                max_abs_D = std::max(max_abs_D, std::abs(D));
                ++evaluable;
            } catch (const DomainError&) {
            }
        }
    if (evaluable == 0) return structural;
    const bool numeric_null = max_abs_D <= tol.tol_deg;
    const bool structural_null = structural != NullKClass::NotNullK;
    if (numeric_null != structural_null)
        throw ClassifierConflict("structural verdict " + std::string(nullk_name(structural)) +
                                 " disagrees with max|D| = " + std::to_string(max_abs_D));
    return structural;
}

double reduced_equation_residual(const HomotheticalSurface& h,
                                 const std::array<double, 3>& lambdas,
                                 const GridSpec& grid, const Tolerances& tol) {
    grid.validate();
    // index roles: type I/II pair (l1, l2) with rhs l3; type III (l2, l3), rhs l1
    double lam_u, lam_w, lam_rhs;
    switch (h.stype) {
        case SurfaceType::TypeI:
            lam_u = lambdas[0], lam_w = lambdas[1], lam_rhs = lambdas[2];
            break;
        case SurfaceType::TypeII:
            lam_u = lambdas[0], lam_w = lambdas[2], lam_rhs = lambdas[1];
            break;
        case SurfaceType::TypeIII:
            lam_u = lambdas[1], lam_w = lambdas[2], lam_rhs = lambdas[0];
            break;
    }
    const SurfacePatch patch = build_surface(h);
    double max_resid = 0;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            const double u = grid.at1(i), w = grid.at2(j);
            const Jet1 fa = h.phi_a.eval(u), fb = h.phi_b.eval(w);
            if (fa.v == 0 || fb.v == 0)
                throw DomainError("reduced equation requires phi_a phi_b != 0");
            const NormalFrame f = normal_frame(patch, u, w, tol);
            const double resid = (fa.d1 / fa.v) * lam_u * u + (fb.d1 / fb.v) * lam_w * w +
                                 2.0 * f.eps * f.W / (fa.v * fb.v) - lam_rhs;
            max_resid = std::max(max_resid, std::abs(resid));
        }
    return max_resid;
}

std::vector<CatalogueSurface> catalogue_surfaces() {
    std::vector<CatalogueSurface> cat;
    auto grid = [](double lo1, double hi1, double lo2, double hi2, int n = 10) {
        return GridSpec{{lo1, hi1, n}, {lo2, hi2, n}};
    };
    const FactorFn pow2(FactorKind::Pow, {2});
    const FactorFn cosh1(FactorKind::Cosh, {1, 1});
    const FactorFn quad_a(FactorKind::Poly, {2, 0, 1});   // v^2 + 2
    const FactorFn cubic_b(FactorKind::Poly, {2, 0, 0, 1}); // v^3 + 2
    const FactorFn lin_a(FactorKind::Poly, {2, 3, 0.1});
    const FactorFn lin_b(FactorKind::Poly, {1, 2, 0.1});
    // Grids are chosen so W stays bounded away from zero and eps is constant
    // (no lightlike crossing inside the grid).
    // type I, detII < 0 (D = -12 u^2 w^2); phi1 phi2' = 2u^2 w > 1 throughout
    cat.push_back({"I-pow2-pow2",
                   {SurfaceType::TypeI, pow2, pow2},
                   grid(0.9, 1.5, 0.9, 1.5)});
    // type I, detII > 0; phi1 phi2' = cosh u sinh w < 1 throughout
    cat.push_back({"I-cosh-cosh",
                   {SurfaceType::TypeI, cosh1, cosh1},
                   grid(0.1, 0.6, 0.1, 0.6)});
    // type III, detII > 0; phi_a phi_b' > phi_a' phi_b throughout
    cat.push_back({"III-quad-cubic",
                   {SurfaceType::TypeIII, quad_a, cubic_b},
                   grid(0.5, 0.9, 1.2, 1.6)});
    // type III, detII < 0 (dominant slopes, small curvature of the factors)
    cat.push_back({"III-lin-lin",
                   {SurfaceType::TypeIII, lin_a, lin_b},
                   grid(1.0, 1.5, 0.5, 1.0)});
    // type I with mixed transcendental factors, detII > 0
    cat.push_back({"I-cosh-pow2",
                   {SurfaceType::TypeI, cosh1, pow2},
                   grid(0.2, 0.8, 0.7, 1.3)});
    // type III transcendental, detII > 0
    cat.push_back({"III-cosh-quad",
                   {SurfaceType::TypeIII, cosh1, quad_a},
                   grid(0.3, 0.6, 0.8, 1.5)});
    // null-K exponential pair (degenerate second form everywhere)
    cat.push_back({"I-exp-exp",
                   {SurfaceType::TypeI,
                    FactorFn(FactorKind::Exp, {1, 1}),
                    FactorFn(FactorKind::Exp, {1, 1})},
                   grid(-0.5, 0.5, -1.5, -0.5), /*nondegenerate=*/false});
    return cat;
}

} // namespace pg
