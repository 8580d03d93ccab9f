#pragma once

#include <qmf/verify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace qmf {

// Report schema:
// {"identity_id": str, "order": int, "status": "pass"|"fail"|"recorded-discrepancy",
//  "first_mismatch": null | {"n": int, "lhs": str, "rhs": str}, "elapsed_ms": int}
// plus an optional "note" with the resolved reading on recorded discrepancies.
inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["identity_id"] = rep.identity_id;
    j["order"] = rep.order;
    j["status"] = status_str(rep.status);
    if (rep.first_mismatch) {
        j["first_mismatch"] = {{"n", rep.first_mismatch->n},
                               {"lhs", rep.first_mismatch->lhs},
                               {"rhs", rep.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = rep.elapsed_ms;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

inline nlohmann::ordered_json reports_json(const std::vector<VerificationReport>& reps) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reps) arr.push_back(report_json(r));
    return arr;
}

inline std::string report_csv_header() {
    return "identity_id,order,status,mismatch_n,lhs,rhs,elapsed_ms\n";
}

inline std::string report_csv_row(const VerificationReport& rep) {
    std::string row = rep.identity_id + "," + std::to_string(rep.order) + "," +
                      status_str(rep.status) + ",";
    if (rep.first_mismatch)
        row += std::to_string(rep.first_mismatch->n) + "," + rep.first_mismatch->lhs + "," +
               rep.first_mismatch->rhs;
    else
        row += ",,";
    row += "," + std::to_string(rep.elapsed_ms) + "\n";
    return row;
}

inline std::string report_text(const VerificationReport& rep) {
    std::string line = "[" + status_str(rep.status) + "] " + rep.identity_id +
                       " (order " + std::to_string(rep.order) + ", " +
                       std::to_string(rep.elapsed_ms) + " ms)";
    if (rep.first_mismatch)
        line += " first mismatch at n=" + std::to_string(rep.first_mismatch->n) + ": " +
                rep.first_mismatch->lhs + " != " + rep.first_mismatch->rhs;
    if (!rep.note.empty()) line += "\n    note: " + rep.note;
    line += "\n";
    return line;
}

}  // namespace qmf
