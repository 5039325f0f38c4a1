#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/homothetical.hpp"
#include "pg/laplace2.hpp"
#include "pg/surface.hpp"

namespace pg {

inline constexpr const char* kToolVersion = "1.0.0";

/// One grid point. Numeric fields are NaN when not applicable (NaN serializes
/// to null in JSON and to an empty CSV cell). Invalid points stay in the row
/// list with valid = false and the error kind in flag.
struct ReportRow {
    int i = 0, j = 0;
    double v1 = 0, v2 = 0;
    bool valid = true;
    std::string flag;
    double W, eps, L, M, N, detII, K, H, lap1, lap2, lap3;

    ReportRow();
};

struct Report {
    // meta
    std::string version = kToolVersion;
    std::string command;
    unsigned seed = 0;
    Tolerances tol;
    std::string timestamp; // excluded from determinism comparisons

    std::vector<ReportRow> rows;

    // summary blocks (present when the command produced them)
    std::optional<EigenFit> eigen;
    std::optional<ChainIdentityReport> chain;
    std::vector<CaseAudit> audits;
    std::optional<std::string> summary_note;
    std::optional<double> invariance_max_dK, invariance_max_dH, invariance_max_dW;
};

std::string to_json(const Report& r);
std::string to_csv(const Report& r);

} // namespace pg
