#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "pg/errors.hpp"
#include "pg/homothetical.hpp"
#include "pg/laplace2.hpp"

namespace pg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double getp(const std::map<std::string, double>& params, const std::string& key,
            double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

double max_abs_D(const HomotheticalSurface& h, const GridSpec& grid) {
    double m = 0;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j)
            m = std::max(m, std::abs(degeneracy(h, grid.at1(i), grid.at2(j))));
    return m;
}

double min_W(const HomotheticalSurface& h, const GridSpec& grid, const Tolerances& tol) {
    const SurfacePatch patch = build_surface(h);
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            try {
                m = std::min(m, normal_frame(patch, grid.at1(i), grid.at2(j), tol).W);
            } catch (const LightlikeNormal&) {
                m = 0;
            }
        }
    return m;
}

/// Normalized defect of the per-coordinate eigencondition lap_i = lam_i x_i:
/// max_i RMS(lap_i - lam_i x_i) / max(RMS(lap_i), tol_nondeg) over the valid
/// grid points. NaN when fewer than 2 points are valid.
double eigencond_residual(const HomotheticalSurface& h,
                          const std::array<double, 3>& lambdas, const GridSpec& grid,
                          const Tolerances& tol) {
    const SurfacePatch patch = build_surface(h);
    std::array<double, 3> srr{}, sll{};
    int n = 0;
    for (int i = 0; i < grid.v1.n; ++i)
        for (int j = 0; j < grid.v2.n; ++j) {
            try {
                const double u = grid.at1(i), w = grid.at2(j);
                const LaplaceSample s = laplacian_ii(patch, u, w, tol);
                const auto jets = eval_jets(patch, u, w);
                const std::array<double, 3> x{jets[0].value(), jets[1].value(),
                                              jets[2].value()};
                for (int k = 0; k < 3; ++k) {
                    const double r = s.lap[k] - lambdas[k] * x[k];
                    srr[k] += r * r;
                    sll[k] += s.lap[k] * s.lap[k];
                }
                ++n;
            } catch (const Error&) {
            }
        }
    if (n < 2) return kNaN;
    double worst = 0;
    for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::sqrt(srr[k] / n) /
                                    std::max(std::sqrt(sll[k] / n), tol.tol_nondeg));
    return worst;
}

double safe_reduced(const HomotheticalSurface& h, const std::array<double, 3>& lambdas,
                    const GridSpec& grid, const Tolerances& tol) {
    try {
        return reduced_equation_residual(h, lambdas, grid, tol);
    } catch (const Error&) {
        return kNaN;
    }
}

/// Documented falsification lattice: one representative per closed-form
/// family valid on positive unit-scale grids, parameters jittered by the
/// seeded RNG so repeated runs with different seeds probe nearby families.
std::vector<FactorFn> audit_lattice(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jit(-0.05, 0.05);
    auto j = [&] { return jit(rng); };
    std::vector<FactorFn> fns;
    fns.emplace_back(FactorKind::Poly, std::vector<double>{1 + j(), 1 + j()});
    fns.emplace_back(FactorKind::Poly, std::vector<double>{2 + j(), 0.0, 1 + j()});
    fns.emplace_back(FactorKind::Pow, std::vector<double>{2 + j()});
    fns.emplace_back(FactorKind::Pow, std::vector<double>{1.5 + j()});
    fns.emplace_back(FactorKind::Exp, std::vector<double>{1.0, 0.7 + j()});
    fns.emplace_back(FactorKind::Cosh, std::vector<double>{1.0, 1 + j()});
    fns.emplace_back(FactorKind::Sinh, std::vector<double>{1.0, 1 + j()});
    fns.emplace_back(FactorKind::Sin, std::vector<double>{1.0, 1 + j()});
    fns.emplace_back(FactorKind::Log, std::vector<double>{1.0, 3 + j()});
    fns.emplace_back(FactorKind::PowerFam, std::vector<double>{0.5 + j(), 1.0, 0.1});
    return fns;
}

struct SweepOutcome {
    double worst_metric = std::numeric_limits<double>::infinity(); // min over pairs
    double min_W = std::numeric_limits<double>::infinity();
    int pairs_checked = 0;
    int pairs_skipped = 0;
};

/// Sweeps lattice x lattice pairs of the given surface type. For each valid
/// non-degenerate pair, metric = best-fit eigencondition defect (lambda free,
/// least squares); a case is falsified on the lattice when every pair keeps
/// the metric at or above resid_floor.
SweepOutcome falsification_sweep(SurfaceType stype, const GridSpec& grid, unsigned seed,
                                 const Tolerances& tol) {
    const auto lattice = audit_lattice(seed);
    SweepOutcome out;
    for (const auto& fa : lattice)
        for (const auto& fb : lattice) {
            const HomotheticalSurface h{stype, fa, fb};
            try {
                if (max_abs_D(h, grid) <= tol.tol_deg) {
                    ++out.pairs_skipped; // degenerate II: eigencondition undefined
                    continue;
                }
                const SurfacePatch patch = build_surface(h);
                const EigenFit fit = eigen_fit(patch, grid, tol);
                double metric = 0;
                for (int k = 0; k < 3; ++k)
                    if (!fit.zero_coordinate[k])
                        metric = std::max(metric, fit.rel_residual[k]);
                out.worst_metric = std::min(out.worst_metric, metric);
                out.min_W = std::min(out.min_W, min_W(h, grid, tol));
                ++out.pairs_checked;
            } catch (const Error&) {
                ++out.pairs_skipped;
            }
        }
    return out;
}

/// II-harmonicity sweep: with all lambda zero the reduced equation demands
/// 2 eps W / (phi_a phi_b) = 0, i.e. W = 0; metric is the grid max of that
/// defect, which must stay at or above resid_floor for every admissible pair.
SweepOutcome harmonic_sweep(SurfaceType stype, const GridSpec& grid, unsigned seed,
                            const Tolerances& tol) {
    const auto lattice = audit_lattice(seed);
    SweepOutcome out;
    for (const auto& fa : lattice)
        for (const auto& fb : lattice) {
            const HomotheticalSurface h{stype, fa, fb};
            try {
                const double metric =
                    reduced_equation_residual(h, {0, 0, 0}, grid, tol);
                out.worst_metric = std::min(out.worst_metric, metric);
                out.min_W = std::min(out.min_W, min_W(h, grid, tol));
                ++out.pairs_checked;
            } catch (const Error&) {
                ++out.pairs_skipped;
            }
        }
    return out;
}

void require_nonzero(const std::string& case_id, const char* name, double v) {
    if (v == 0)
        throw DomainError(case_id + ": parameter " + name + " must be nonzero");
}

} // namespace

std::vector<std::string> audit_catalogue_ids() {
    std::vector<std::string> ids;
    for (const char* t : {"I", "III"})
        for (int k = 1; k <= 8; ++k) ids.push_back(std::string(t) + "." + std::to_string(k));
    return ids;
}

CaseAudit audit_case(const std::string& case_id,
                     const std::map<std::string, double>& params, const GridSpec& grid,
                     unsigned seed, const Tolerances& tol) {
    grid.validate();
    std::string id = case_id;
    std::string alias_note;
    if (id.rfind("II.", 0) == 0) {
        // type II surfaces have the type I second fundamental form up to a
        // global sign, so their audits coincide with the type I catalogue
        id = "I" + id.substr(2);
        alias_note = "alias of " + id + " (type II second form equals type I up to sign); ";
    }

    CaseAudit a;
    a.case_id = case_id;
    a.max_abs_D = kNaN;
    a.min_W = kNaN;
    a.reduced_residual = kNaN;
    a.eigen_residual = kNaN;

    auto finish_candidate = [&](const HomotheticalSurface& h,
                                const std::array<double, 3>& lambdas) {
        a.candidate = h;
        a.candidate_desc = std::string(surface_type_name(h.stype)) + ": " +
                           h.phi_a.render() + " * " + h.phi_b.render();
        a.max_abs_D = max_abs_D(h, grid);
        a.min_W = min_W(h, grid, tol);
        a.reduced_residual = safe_reduced(h, lambdas, grid, tol);
        a.eigen_residual = eigencond_residual(h, lambdas, grid, tol);
        switch (a.expected) {
            case Contradiction::Degenerate:
                a.confirmed = a.max_abs_D <= tol.tol_deg;
                break;
            case Contradiction::WVanishes:
                a.confirmed = a.min_W <= tol.tol_admissible;
                break;
            case Contradiction::ReducedEqFails:
                a.confirmed = a.eigen_residual >= tol.resid_floor;
                break;
            case Contradiction::NoCandidate:
                a.confirmed = false;
                break;
        }
    };

    auto run_sweep = [&](SurfaceType stype, bool harmonic) {
        const SweepOutcome out = harmonic
                                     ? harmonic_sweep(stype, grid, seed, tol)
                                     : falsification_sweep(stype, grid, seed, tol);
        a.min_W = out.min_W;
        if (harmonic)
            a.reduced_residual = out.worst_metric;
        else
            a.eigen_residual = out.worst_metric;
        a.confirmed = out.pairs_checked > 0 && out.worst_metric >= tol.resid_floor;
        a.notes += "lattice sweep over " + std::to_string(out.pairs_checked) +
                   " factor pairs (" + std::to_string(out.pairs_skipped) +
                   " skipped); evidence, not proof";
    };

    const bool type3 = id.rfind("III.", 0) == 0;
    const SurfaceType stype = type3 ? SurfaceType::TypeIII : SurfaceType::TypeI;
    const int num = id.back() - '0';
    if ((id.rfind("I.", 0) != 0 && !type3) || num < 1 || num > 8 ||
        id != std::string(type3 ? "III" : "I") + "." + std::to_string(num))
        throw UnknownCase("unknown audit case id '" + case_id + "'");

    if (!type3) {
        switch (num) {
            case 1: { // II-harmonic: forces W = 0
                a.lambda_nonzero = {false, false, false};
                a.expected = Contradiction::WVanishes;
                run_sweep(stype, /*harmonic=*/true);
                a.notes += "; II-harmonicity demands W = 0, defect 2W/|phi1 phi2|";
                break;
            }
            case 2: { // constant phi1 x tan-form phi2
                a.lambda_nonzero = {false, false, true};
                a.expected = Contradiction::Degenerate;
                const double c = getp(params, "c", 4), lam3 = getp(params, "lam3", 1);
                const double c1 = getp(params, "c1", 0), s = getp(params, "s", 1);
                if (!(c > 0)) throw DomainError("I.2: c must be positive");
                require_nonzero(id, "lam3", lam3);
                finish_candidate(
                    {stype, FactorFn(FactorKind::Const, {s * 2 / std::sqrt(c)}),
                     FactorFn(FactorKind::TanForm, {c, lam3, c1, s})},
                    {0, 0, lam3});
                break;
            }
            case 3: { // separated system pins phi1 constant; phi2 unconstrained
                a.lambda_nonzero = {false, true, true};
                a.expected = Contradiction::Degenerate;
                const double c = getp(params, "c", 4);
                if (!(c > 0)) throw DomainError("I.3: c must be positive");
                const double lam2 = getp(params, "lam2", 1), lam3 = getp(params, "lam3", 1);
                require_nonzero(id, "lam2", lam2);
                require_nonzero(id, "lam3", lam3);
                finish_candidate({stype, FactorFn(FactorKind::Const, {2 / std::sqrt(c)}),
                                  FactorFn(FactorKind::Poly, {2, 0, 1})},
                                 {0, lam2, lam3});
                a.notes += "second factor left free (constant first factor already kills D)";
                break;
            }
            case 4: { // log-trig x exponential candidate
                a.lambda_nonzero = {true, false, false};
                a.expected = Contradiction::ReducedEqFails;
                const double lam1 = getp(params, "lam1", 1);
                require_nonzero(id, "lam1", lam1);
                const double c = getp(params, "c", 1);
                if (!(c > 0)) throw DomainError("I.4: c must be positive");
                const double ct = getp(params, "ct", 1);
                if (ct < 0) throw DomainError("I.4: ct must be nonnegative");
                const double c1 = getp(params, "c1", 1), c2 = getp(params, "c2", 1);
                const double c3 = getp(params, "c3", 1), s = getp(params, "s", 1);
                require_nonzero(id, "c3", c3);
                finish_candidate({stype, FactorFn(FactorKind::LogTrig, {ct, c1, c2}),
                                  FactorFn(FactorKind::Exp, {c3, s * std::sqrt(c)})},
                                 {lam1, 0, 0});
                break;
            }
            case 5: { // constant phi1 x direct arsinh phi2
                a.lambda_nonzero = {false, true, false};
                a.expected = Contradiction::Degenerate;
                const double c = getp(params, "c", 4), lam2 = getp(params, "lam2", 1);
                if (!(c > 0)) throw DomainError("I.5: c must be positive");
                require_nonzero(id, "lam2", lam2);
                const double s = getp(params, "s", 1);
                finish_candidate(
                    {stype, FactorFn(FactorKind::Const, {s * 2 / std::sqrt(c)}),
                     FactorFn(FactorKind::AsinhForm, {c, lam2, s})},
                    {0, lam2, 0});
                break;
            }
            case 6: {
                a.lambda_nonzero = {true, true, false};
                a.expected = Contradiction::NoCandidate;
                run_sweep(stype, /*harmonic=*/false);
                break;
            }
            case 7: { // separated system pins phi1 constant again
                a.lambda_nonzero = {true, false, true};
                a.expected = Contradiction::Degenerate;
                const double c1 = getp(params, "c1", 1);
                if (!(c1 > 0)) throw DomainError("I.7: c1 must be positive");
                const double lam1 = getp(params, "lam1", 1), lam3 = getp(params, "lam3", 1);
                require_nonzero(id, "lam1", lam1);
                require_nonzero(id, "lam3", lam3);
                finish_candidate(
                    {stype, FactorFn(FactorKind::Const, {1 / std::sqrt(c1)}),
                     FactorFn(FactorKind::Poly, {2, 0, 1})},
                    {lam1, 0, lam3});
                a.notes += "second factor left free (constant first factor already kills D)";
                break;
            }
            case 8: {
                a.lambda_nonzero = {true, true, true};
                a.expected = Contradiction::NoCandidate;
                run_sweep(stype, /*harmonic=*/false);
                break;
            }
        }
    } else {
        switch (num) {
            case 1: {
                a.lambda_nonzero = {false, false, false};
                a.expected = Contradiction::WVanishes;
                run_sweep(stype, /*harmonic=*/true);
                a.notes += "; II-harmonicity demands W = 0, defect 2W/|phi1 phi2|";
                break;
            }
            case 2: { // exponential pair, c < lam1/8
                a.lambda_nonzero = {true, false, false};
                a.expected = Contradiction::Degenerate;
                const double lam1 = getp(params, "lam1", 1);
                require_nonzero(id, "lam1", lam1);
                const double c = getp(params, "c", 0);
                if (!(c < lam1 / 8))
                    throw DomainError("III.2: requires c < lam1/8");
                if (!(lam1 + 8 * c > 0))
                    throw DomainError("III.2: requires lam1 + 8c > 0");
                const double c1 = getp(params, "c1", 1);
                require_nonzero(id, "c1", c1);
                const double s1 = getp(params, "s1", 1), s2 = getp(params, "s2", 1);
                const double ra = s1 * std::sqrt(lam1 + 8 * c) / (2 * std::sqrt(2.0));
                const double rb = s2 * std::sqrt(lam1 - 8 * c) / (2 * std::sqrt(2.0));
                finish_candidate({stype, FactorFn(FactorKind::Exp, {c1, ra}),
                                  FactorFn(FactorKind::Exp, {c1, rb})},
                                 {lam1, 0, 0});
                break;
            }
            case 3: { // exponential x atanh-exp closed form
                a.lambda_nonzero = {true, false, true};
                a.expected = Contradiction::ReducedEqFails;
                const double lam1 = getp(params, "lam1", 1), lam3 = getp(params, "lam3", 1);
                require_nonzero(id, "lam1", lam1);
                require_nonzero(id, "lam3", lam3);
                const double c = getp(params, "c", 1);
                if (!(lam1 * lam1 + c > 0))
                    throw DomainError("III.3: requires lam1^2 + c > 0");
                const double c1 = getp(params, "c1", 1), c2 = getp(params, "c2", 0);
                require_nonzero(id, "c1", c1);
                const double s = getp(params, "s", 1);
                finish_candidate(
                    {stype,
                     FactorFn(FactorKind::Exp, {c1, s * std::sqrt(lam1 * lam1 + c) / 2}),
                     FactorFn(FactorKind::AtanhExpForm, {lam1, lam3, c, c2, s})},
                    {lam1, 0, lam3});
                a.notes += "closed-form second factor taken literally as printed; "
                           "validity checked pointwise";
                break;
            }
            case 4: { // arcsin-exp x exponential
                a.lambda_nonzero = {false, true, false};
                a.expected = Contradiction::ReducedEqFails;
                const double lam2 = getp(params, "lam2", 1);
                require_nonzero(id, "lam2", lam2);
                const double c = getp(params, "c", 1);
                if (!(c > 0)) throw DomainError("III.4: c must be positive");
                const double c2 = getp(params, "c2", 1), s = getp(params, "s", 1);
                require_nonzero(id, "c2", c2);
                finish_candidate(
                    {stype, FactorFn(FactorKind::AsinhForm, {c, lam2, s, 2}),
                     FactorFn(FactorKind::Exp, {c2, s * std::sqrt(c) / 2})},
                    {0, lam2, 0});
                break;
            }
            case 5: { // exponential x arsinh-exp
                a.lambda_nonzero = {false, false, true};
                a.expected = Contradiction::ReducedEqFails;
                const double lam3 = getp(params, "lam3", 1);
                require_nonzero(id, "lam3", lam3);
                const double c = getp(params, "c", 1);
                if (!(c > 0)) throw DomainError("III.5: c must be positive");
                const double c1 = getp(params, "c1", 1), s = getp(params, "s", 1);
                require_nonzero(id, "c1", c1);
                finish_candidate(
                    {stype, FactorFn(FactorKind::Exp, {c1, s * std::sqrt(c) / 2}),
                     FactorFn(FactorKind::AsinhForm, {c, lam3, s, 1})},
                    {0, 0, lam3});
                break;
            }
            case 6: {
                a.lambda_nonzero = {false, true, true};
                a.expected = Contradiction::NoCandidate;
                run_sweep(stype, /*harmonic=*/false);
                break;
            }
            case 7: { // only the second factor is exhibited; pair it with the lattice
                a.lambda_nonzero = {true, true, false};
                a.expected = Contradiction::ReducedEqFails;
                const double c = getp(params, "c", 1);
                if (!(c > 0)) throw DomainError("III.7: c must be positive");
                const double s = getp(params, "s", 1);
                const FactorFn fb(FactorKind::Exp, {1, s * std::sqrt(c)});
                const auto lattice = audit_lattice(seed);
                double worst = std::numeric_limits<double>::infinity();
                double wmin = std::numeric_limits<double>::infinity();
                int checked = 0, skipped = 0;
                for (std::size_t k = 0; k < lattice.size() && k < 5; ++k) {
                    const HomotheticalSurface h{stype, lattice[k], fb};
                    try {
                        if (max_abs_D(h, grid) <= tol.tol_deg) {
                            ++skipped;
                            continue;
                        }
                        const EigenFit fit = eigen_fit(build_surface(h), grid, tol);
                        double metric = 0;
                        for (int q = 0; q < 3; ++q)
                            if (!fit.zero_coordinate[q])
                                metric = std::max(metric, fit.rel_residual[q]);
                        worst = std::min(worst, metric);
                        wmin = std::min(wmin, min_W(h, grid, tol));
                        ++checked;
                        if (!a.candidate) {
                            a.candidate = h;
                            a.candidate_desc =
                                std::string(surface_type_name(stype)) + ": " +
                                lattice[k].render() + " * " + fb.render();
                        }
                    } catch (const Error&) {
                        ++skipped;
                    }
                }
                a.eigen_residual = worst;
                a.min_W = wmin;
                a.confirmed = checked > 0 && worst >= tol.resid_floor;
                a.notes += "half-exhibited family: phi_2 fixed, phi_1 swept over " +
                           std::to_string(checked) + " lattice factors (" +
                           std::to_string(skipped) + " skipped)";
                break;
            }
            case 8: {
                a.lambda_nonzero = {true, true, true};
                a.expected = Contradiction::NoCandidate;
                run_sweep(stype, /*harmonic=*/false);
                break;
            }
        }
    }
    a.notes = alias_note + a.notes;
    return a;
}

} // namespace pg
