// pgsurf: evaluate curvature and second-form Laplacian fields of homothetical
// surfaces in pseudo-Galilean space, run the non-existence case audits, and
// check motion invariance. Emits JSON or CSV reports on stdout.
//
// Exit codes: 0 success, 2 usage/parse/config error, 3 audit non-confirmation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pg/errors.hpp"
#include "pg/homothetical.hpp"
#include "pg/laplace2.hpp"
#include "pg/report.hpp"
#include "pg/surface.hpp"

namespace {

using namespace pg;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (std::sscanf(s.c_str(), "v1=%lf:%lf:%d,v2=%lf:%lf:%d", &g.v1.lo, &g.v1.hi,
                    &g.v1.n, &g.v2.lo, &g.v2.hi, &g.v2.n) != 6)
        throw Error("grid must have the form v1=lo:hi:n,v2=lo:hi:n");
    g.validate();
    return g;
}

std::string error_flag(const Error& e) {
    if (dynamic_cast<const LightlikeNormal*>(&e)) return "LightlikeNormal";
    if (dynamic_cast<const InadmissiblePoint*>(&e)) return "InadmissiblePoint";
    if (dynamic_cast<const DegenerateSecondForm*>(&e)) return "DegenerateSecondForm";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    return "Error";
}

std::map<std::string, double> parse_params_file(const std::string& path) {
    std::map<std::string, double> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw Error("cannot open params file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto notblank = line.find_first_not_of(" \t\r");
        if (notblank == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("params file line " + std::to_string(lineno) +
                        ": expected key=value");
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        try {
            out[key] = std::stod(line.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error("params file line " + std::to_string(lineno) + ": bad number");
        }
    }
    return out;
}

struct CommonOpts {
    std::string type = "I";
    std::string phi1, phi2;
    std::string grid = "v1=0.5:1.5:10,v2=0.5:1.5:10";
    std::string out = "json";
    unsigned seed = 7;
    Tolerances tol;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool surface_opts) {
    if (surface_opts) {
        cmd->add_option("--type", o.type, "surface type: I, II or III");
        cmd->add_option("--phi1", o.phi1, "first factor, e.g. pow(2)")->required();
        cmd->add_option("--phi2", o.phi2, "second factor")->required();
    }
    cmd->add_option("--grid", o.grid, "grid v1=lo:hi:n,v2=lo:hi:n");
    cmd->add_option("--out", o.out, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", o.seed, "RNG seed for sweeps/jitter");
    cmd->add_option("--tol-nondeg", o.tol.tol_nondeg, "absolute |detII| threshold");
    cmd->add_option("--tol-deg", o.tol.tol_deg, "absolute |D| threshold in audits");
}

HomotheticalSurface make_surface(const CommonOpts& o) {
    return {parse_surface_type(o.type), parse_factor(o.phi1), parse_factor(o.phi2)};
}

void emit(const Report& r, const std::string& fmt) {
    std::cout << (fmt == "csv" ? to_csv(r) : to_json(r));
}

Report base_report(const CommonOpts& o, int argc, char** argv) {
    Report r;
    r.seed = o.seed;
    r.tol = o.tol;
    r.timestamp = iso_timestamp();
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    r.command = cmd.str();
    return r;
}

void fill_rows(Report& r, const SurfacePatch& patch, const GridSpec& g,
               const Tolerances& tol, bool with_laplacian) {
    for (int i = 0; i < g.v1.n; ++i)
        for (int j = 0; j < g.v2.n; ++j) {
            ReportRow row;
            row.i = i;
            row.j = j;
            row.v1 = g.at1(i);
            row.v2 = g.at2(j);
            try {
                const FrameData d = frame_data(patch, row.v1, row.v2, tol);
                row.W = d.frame.W;
                row.eps = d.frame.eps;
                row.L = d.second.L;
                row.M = d.second.M;
                row.N = d.second.N;
                row.detII = d.second.detII;
                row.K = d.curv.K;
                row.H = d.curv.H;
                if (std::abs(row.K) <= 1e-10) row.flag = "null-K";
                if (with_laplacian) {
                    const LaplaceSample s = laplacian_ii(patch, row.v1, row.v2, tol);
                    row.lap1 = s.lap[0];
                    row.lap2 = s.lap[1];
                    row.lap3 = s.lap[2];
                }
            } catch (const Error& e) {
                row.valid = false;
                row.flag = error_flag(e);
            }
            r.rows.push_back(row);
        }
}

int cmd_curvature(const CommonOpts& o, int argc, char** argv) {
    const GridSpec g = parse_grid(o.grid);
    const SurfacePatch patch = build_surface(make_surface(o));
    Report r = base_report(o, argc, argv);
    fill_rows(r, patch, g, o.tol, /*with_laplacian=*/false);
    emit(r, o.out);
    return 0;
}

int cmd_laplacian(const CommonOpts& o, bool fit_lambda, int argc, char** argv) {
    const GridSpec g = parse_grid(o.grid);
    const HomotheticalSurface h = make_surface(o);
    const SurfacePatch patch = build_surface(h);
    Report r = base_report(o, argc, argv);
    fill_rows(r, patch, g, o.tol, /*with_laplacian=*/true);
    const bool none_valid =
        std::none_of(r.rows.begin(), r.rows.end(), [](const ReportRow& x) { return x.valid; });
    if (none_valid) r.summary_note = "Delta^II undefined on the whole grid";
    if (fit_lambda && !none_valid) {
        r.eigen = eigen_fit(patch, g, o.tol);
        if (h.stype != SurfaceType::TypeII)
            r.chain = chain_identity_residual(h, g, o.tol);
    }
    emit(r, o.out);
    return 0;
}

int cmd_audit(const CommonOpts& o, const std::string& case_id,
              const std::string& params_path, int argc, char** argv) {
    const GridSpec g = parse_grid(o.grid);
    const auto params = parse_params_file(params_path);
    Report r = base_report(o, argc, argv);
    std::vector<std::string> ids;
    if (case_id == "all")
        ids = audit_catalogue_ids();
    else
        ids.push_back(case_id);
    bool all_confirmed = true;
    for (const auto& id : ids) {
        r.audits.push_back(audit_case(id, params, g, o.seed, o.tol));
        all_confirmed = all_confirmed && r.audits.back().confirmed;
    }
    emit(r, o.out);
    return all_confirmed ? 0 : 3;
}

int cmd_invariance(const CommonOpts& o, const std::vector<double>& motion_params,
                   int argc, char** argv) {
    const GridSpec g = parse_grid(o.grid);
    const SurfacePatch patch = build_surface(make_surface(o));
    Motion m;
    if (!motion_params.empty()) {
        if (motion_params.size() != 6)
            throw Error("--motion needs 6 values: a b c d e theta");
        m = {motion_params[0], motion_params[1], motion_params[2],
             motion_params[3], motion_params[4], motion_params[5]};
    } else {
        std::mt19937 rng(o.seed);
        std::uniform_real_distribution<double> par(-2, 2), ang(-1.5, 1.5);
        m = {par(rng), par(rng), par(rng), par(rng), par(rng), ang(rng)};
    }
    const SurfacePatch moved = transform(patch, m);
    Report r = base_report(o, argc, argv);
    double dK = 0, dH = 0, dW = 0;
    for (int i = 0; i < g.v1.n; ++i)
        for (int j = 0; j < g.v2.n; ++j) {
            ReportRow row;
            row.i = i;
            row.j = j;
            row.v1 = g.at1(i);
            row.v2 = g.at2(j);
            try {
                const FrameData d0 = frame_data(patch, row.v1, row.v2, o.tol);
                const FrameData d1 = frame_data(moved, row.v1, row.v2, o.tol);
                row.K = std::abs(d1.curv.K - d0.curv.K);
                row.H = std::abs(d1.curv.H - d0.curv.H);
                row.W = std::abs(d1.frame.W - d0.frame.W);
                dK = std::max(dK, row.K);
                dH = std::max(dH, row.H);
                dW = std::max(dW, row.W);
            } catch (const Error& e) {
                row.valid = false;
                row.flag = error_flag(e);
            }
            r.rows.push_back(row);
        }
    r.invariance_max_dK = dK;
    r.invariance_max_dH = dH;
    r.invariance_max_dW = dW;
    r.summary_note = "rows carry |dK|, |dH|, |dW| between the original and moved patch";
    if (std::abs(m.theta) > 3)
        r.summary_note = *r.summary_note +
                         "; large hyperbolic angle: cosh/sinh conditioning degrades "
                         "absolute accuracy";
    emit(r, o.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential geometry of homothetical surfaces in the "
                 "pseudo-Galilean space G3_1"};
    app.require_subcommand(1);

    CommonOpts oc, ol, oa, oi;
    bool fit_lambda = false;
    std::string case_id = "all", params_path;
    std::vector<double> motion_params;

    auto* curvature = app.add_subcommand("curvature", "per-point fundamental forms and K, H");
    add_common(curvature, oc, true);
    auto* laplacian = app.add_subcommand("laplacian", "second-form Laplacian field");
    add_common(laplacian, ol, true);
    laplacian->add_flag("--fit-lambda", fit_lambda,
                        "least-squares eigenvalue fit and chain-identity summary");
    auto* audit = app.add_subcommand("audit", "non-existence case audits");
    add_common(audit, oa, false);
    audit->add_option("--case", case_id, "case id (I.1..III.8, II.k aliases) or 'all'");
    audit->add_option("--params", params_path, "key=value file of case constants");
    auto* invariance = app.add_subcommand("invariance", "motion-invariance deltas");
    add_common(invariance, oi, true);
    invariance->add_option("--motion", motion_params,
                           "motion parameters a b c d e theta (default: random)")
        ->expected(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (curvature->parsed()) return cmd_curvature(oc, argc, argv);
        if (laplacian->parsed()) return cmd_laplacian(ol, fit_lambda, argc, argv);
        if (audit->parsed()) return cmd_audit(oa, case_id, params_path, argc, argv);
        if (invariance->parsed()) return cmd_invariance(oi, motion_params, argc, argv);
    } catch (const UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
