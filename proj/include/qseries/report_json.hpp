#ifndef QSERIES_REPORT_JSON_HPP
#define QSERIES_REPORT_JSON_HPP

#include <vector>

#include <json.hpp>

#include <qseries/identities.hpp>

namespace qseries
{

// {"id", "terms_checked", "status", "first_mismatch", "notes", "elapsed_ms"};
// big integers travel as decimal strings.
inline nlohmann::json to_json(const verification_report &r)
{
    nlohmann::json j;
    j["id"] = r.id;
    j["terms_checked"] = r.terms_checked;
    j["status"] = to_string(r.status);
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["notes"] = r.notes ? nlohmann::json(*r.notes) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

inline nlohmann::json to_json(const std::vector<verification_report> &reports)
{
    auto arr = nlohmann::json::array();
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

} // namespace qseries

#endif
