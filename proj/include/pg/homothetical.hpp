#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pg/jet.hpp"
#include "pg/surface.hpp"

namespace pg {

/// Closed-form single-variable factor families. Parameter layout (positional
/// order; names accepted in the text grammar):
///   const(c)                     c
///   poly(a0,a1,...)              a0 + a1 v + a2 v^2 + ...   (low-to-high)
///   pow(p[,c])                   c v^p                       (default c = 1)
///   exp(c[,d])                   c e^{d v}                   (default d = 1)
///   sin(a[,b])  cos / sinh / cosh alike                      a f(b v)
///   log(a[,b])                   a log(b v), v > 0
///   powerfam(m,n,l)              [(1-m) n v + l]^{1/(1-m)},  m != 0, 1
///   tanform(c,lam,c1[,s])        s (sqrt(c)/lam) t/sqrt(1+t^2),
///                                t = tan(lam (v + 2 c1)/2),  c > 0
///   logtrig(ct,c1,c2)            c1 cos(sqrt(ct) log v) + c2 sin(sqrt(ct) log v)
///   asinhform(c,lam,s)           s (sqrt(c)/lam) asinh(lam v / 2)
///   asinhform(c,lam,s,k)         k = 1: (1/lam) e^{s sqrt(c) asinh(lam v/2)}
///                                k = 2: (1/lam) e^{s sqrt(c) asin(lam v/2)}
///   atanhexpform(l1,l3,c,c2,s)   the closed form with
///                                m = sqrt(4c + (l3 l1^2 + l3^2 l1) v^2),
///                                n = sqrt(l3 l1^2 + l3^2 l1):
///                                (1/l3^2) (4 + l3^2 v^2)^{l1/(2 l3)}
///                                  (n^2 v + n m)^{-n/l3^2}
///                                  e^{s l3 l1 atanh(l3 l1 v / m) + c2}
enum class FactorKind {
    Const, Poly, Pow, Exp, Sin, Cos, Sinh, Cosh, Log,
    PowerFam, TanForm, LogTrig, AsinhForm, AtanhExpForm,
};

std::string_view factor_kind_name(FactorKind k);

struct FactorFn {
    FactorKind kind = FactorKind::Const;
    std::vector<double> params;
    double lo = -1e100, hi = 1e100; // valid interval (informative; eval still checks)

    FactorFn() = default;
    /// Validates arity and computes the default validity interval.
    FactorFn(FactorKind kind, std::vector<double> params);

    /// Evaluate as an order-3 jet at v; throws DomainError outside the domain.
    Jet1 eval(double v) const;
    double value(double v) const { return eval(v).v; }

    /// Canonical text form, re-parseable by parse_factor.
    std::string render() const;
};

/// Grammar: kind '(' args? ')' with arg := [name '='] number. Offsets in
/// ParseError are 1-based character positions.
FactorFn parse_factor(const std::string& text);

enum class SurfaceType { TypeI, TypeII, TypeIII };

std::string_view surface_type_name(SurfaceType t);
SurfaceType parse_surface_type(const std::string& s); // "I"/"II"/"III"

/// Homothetical (factorable) surface: the graph coordinate carries the
/// product phi_a * phi_b of the two single-variable factors.
///   TypeI   (v1, v2, phi_a(v1) phi_b(v2))
///   TypeII  (v1, phi_a(v1) phi_b(v3), v3)
///   TypeIII (phi_a(v2) phi_b(v3), v2, v3)
struct HomotheticalSurface {
    SurfaceType stype = SurfaceType::TypeI;
    FactorFn phi_a, phi_b;
};

SurfacePatch build_surface(const HomotheticalSurface& h);

/// Degeneracy function D = phi_a phi_b phi_a'' phi_b'' - phi_a'^2 phi_b'^2
/// at parameter point (u, w) of the factor pair.
double degeneracy(const HomotheticalSurface& h, double u, double w);

enum class NullKClass { ConstantFactor, ExponentialPair, PowerPairReciprocal, NotNullK };

std::string_view nullk_name(NullKClass c);

/// Structural null-K family match cross-checked against max|D| on the grid;
/// throws ClassifierConflict when the verdicts disagree.
NullKClass classify_nullK(const HomotheticalSurface& h, const GridSpec& grid,
                          const Tolerances& tol = {});

/// Max over the grid of the reduced eigencondition defect
/// |(phi_a'/phi_a) lam_u u + (phi_b'/phi_b) lam_w w + 2 eps W/(phi_a phi_b) - lam_rhs|
/// with (lam_u, lam_w, lam_rhs) = (l1, l2, l3) for type I/II and (l2, l3, l1)
/// for type III.
double reduced_equation_residual(const HomotheticalSurface& h,
                                 const std::array<double, 3>& lambdas,
                                 const GridSpec& grid, const Tolerances& tol = {});

// --------------------------------------------------------------------------
// Case-audit catalogue for the non-existence results.

enum class Contradiction { WVanishes, Degenerate, ReducedEqFails, NoCandidate };

std::string_view contradiction_name(Contradiction c);

struct CaseAudit {
    std::string case_id;                // "I.1" ... "III.8"
    std::array<bool, 3> lambda_nonzero{}; // case pattern for (l1, l2, l3)
    std::optional<HomotheticalSurface> candidate;
    std::string candidate_desc;
    Contradiction expected = Contradiction::NoCandidate;
    // measured evidence (NaN where not applicable)
    double max_abs_D = 0;       // Degenerate check
    double min_W = 0;           // WVanishes check
    double reduced_residual = 0; // reduced-equation defect with the case lambdas
    double eigen_residual = 0;   // max per-coordinate |lap_i - lam_i x_i|
    bool confirmed = false;
    std::string notes;
};

/// Audits one catalogued case; "II.k" aliases "I.k" with a sign note.
/// params override the case's default free constants (UnknownCase for bad ids).
CaseAudit audit_case(const std::string& case_id,
                     const std::map<std::string, double>& params,
                     const GridSpec& grid, unsigned seed = 7,
                     const Tolerances& tol = {});

/// All 16 catalogue ids in report order.
std::vector<std::string> audit_catalogue_ids();

/// Named non-degenerate reference surfaces used by identity checks: both
/// surface types, both signs of detII, plus the null-K exponential pair.
struct CatalogueSurface {
    std::string name;
    HomotheticalSurface h;
    GridSpec grid;        // a grid on which the surface is valid
    bool nondegenerate = true;
};

std::vector<CatalogueSurface> catalogue_surfaces();

} // namespace pg
