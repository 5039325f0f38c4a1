#include "pg/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace pg {

ReportRow::ReportRow() {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    W = eps = L = M = N = detII = K = H = lap1 = lap2 = lap3 = nan;
}

namespace {

using json = nlohmann::ordered_json;

// NaN is not representable in JSON; nlohmann would emit null for the whole
// number anyway, but we make the mapping explicit.
json num(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

json tol_json(const Tolerances& t) {
    return json{{"tol_light", t.tol_light},
                {"tol_admissible", t.tol_admissible},
                {"tol_chart", t.tol_chart},
                {"tol_nondeg", t.tol_nondeg},
                {"tol_deg", t.tol_deg},
                {"resid_floor", t.resid_floor}};
}

json audit_json(const CaseAudit& a) {
    json j{{"case_id", a.case_id},
           {"lambda_nonzero",
            json::array({a.lambda_nonzero[0], a.lambda_nonzero[1], a.lambda_nonzero[2]})},
           {"expected", std::string(contradiction_name(a.expected))},
           {"confirmed", a.confirmed}};
    j["candidate"] = a.candidate ? json(a.candidate_desc) : json(nullptr);
    j["evidence"] = json{{"max_abs_D", num(a.max_abs_D)},
                         {"min_W", num(a.min_W)},
                         {"reduced_residual", num(a.reduced_residual)},
                         {"eigen_residual", num(a.eigen_residual)}};
    j["notes"] = a.notes;
    return j;
}

} // namespace

std::string to_json(const Report& r) {
    json j;
    j["meta"] = json{{"version", r.version},
                     {"command", r.command},
                     {"seed", r.seed},
                     {"tolerances", tol_json(r.tol)},
                     {"timestamp", r.timestamp}};
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back(json{{"i", row.i},
                                 {"j", row.j},
                                 {"v1", row.v1},
                                 {"v2", row.v2},
                                 {"valid", row.valid},
                                 {"flag", row.flag},
                                 {"W", num(row.W)},
                                 {"eps", num(row.eps)},
                                 {"L", num(row.L)},
                                 {"M", num(row.M)},
                                 {"N", num(row.N)},
                                 {"detII", num(row.detII)},
                                 {"K", num(row.K)},
                                 {"H", num(row.H)},
                                 {"lap1", num(row.lap1)},
                                 {"lap2", num(row.lap2)},
                                 {"lap3", num(row.lap3)}});
    json summary = json::object();
    if (r.eigen) {
        summary["eigen_fit"] =
            json{{"lambda", json::array({r.eigen->lambda[0], r.eigen->lambda[1],
                                         r.eigen->lambda[2]})},
                 {"rel_residual",
                  json::array({r.eigen->rel_residual[0], r.eigen->rel_residual[1],
                               r.eigen->rel_residual[2]})},
                 {"zero_coordinate",
                  json::array({r.eigen->zero_coordinate[0], r.eigen->zero_coordinate[1],
                               r.eigen->zero_coordinate[2]})},
                 {"n_points", r.eigen->n_points}};
    }
    if (r.chain)
        summary["chain_identity"] = json{{"max_abs_residual", r.chain->max_abs_residual},
                                         {"points_checked", r.chain->points_checked}};
    if (!r.audits.empty()) {
        summary["audits"] = json::array();
        for (const auto& a : r.audits) summary["audits"].push_back(audit_json(a));
    }
    if (r.invariance_max_dK)
        summary["invariance"] = json{{"max_abs_dK", *r.invariance_max_dK},
                                     {"max_abs_dH", *r.invariance_max_dH},
                                     {"max_abs_dW", *r.invariance_max_dW}};
    if (r.summary_note) summary["note"] = *r.summary_note;
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_num(double x) {
    if (std::isnan(x)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv(const Report& r) {
    std::string out = "i,j,v1,v2,valid,flag,W,eps,L,M,N,detII,K,H,lap1,lap2,lap3\r\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.i) + ',' + std::to_string(row.j) + ',';
        out += csv_num(row.v1) + ',' + csv_num(row.v2) + ',';
        out += (row.valid ? "true" : "false");
        out += ',';
        out += csv_quote(row.flag);
        for (double x : {row.W, row.eps, row.L, row.M, row.N, row.detII, row.K, row.H,
                         row.lap1, row.lap2, row.lap3}) {
            out += ',';
            out += csv_num(x);
        }
        out += "\r\n";
    }
    return out;
}

} // namespace pg
