#ifndef HAMSPAN_REPORT_JSON_HPP
#define HAMSPAN_REPORT_JSON_HPP

#include <string>
#include <variant>

#include "json.hpp"

#include "hamspan/report.hpp"
#include "hamspan/suites.hpp"

namespace hamspan {

inline nlohmann::ordered_json to_json(const Value& v)
{
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool with_elapsed = true)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["check_id"] = r.check_id;
    j["status"] = status_name(r.status);
    ordered_json computed = ordered_json::object();
    for (const auto& [k, v] : r.computed) computed[k] = to_json(v);
    j["computed"] = computed;
    ordered_json expected = ordered_json::object();
    for (const auto& [k, e] : r.expected) {
        ordered_json item;
        item["value"] = to_json(e.value);
        item["provenance"] = provenance_name(e.provenance);
        expected[k] = item;
    }
    j["expected"] = expected;
    j["notes"] = r.notes;
    if (with_elapsed) j["elapsed_seconds"] = r.elapsed;
    return j;
}

// Thread count is deliberately not part of the document.
inline nlohmann::ordered_json to_json(const SuiteRun& run, const SuiteConfig& cfg, bool with_elapsed = true)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = "report-v1";
    j["suite"] = run.suite;
    ordered_json params;
    params["r"] = run.r_values;
    params["n"] = run.n_values;
    params["seed"] = cfg.seed;
    params["trials"] = cfg.trials;
    params["cap"] = cfg.search.cap;
    j["parameters"] = params;
    const SuiteTally t = tally(run);
    j["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"finding", t.finding}, {"skip", t.skip}};
    ordered_json checks = ordered_json::array();
    for (const auto& r : run.reports) checks.push_back(to_json(r, with_elapsed));
    j["checks"] = checks;
    return j;
}

// Drops every "elapsed_seconds" member, recursively.
inline void strip_elapsed(nlohmann::ordered_json& j)
{
    if (j.is_object()) {
        j.erase("elapsed_seconds");
        for (auto& item : j.items()) strip_elapsed(item.value());
    } else if (j.is_array()) {
        for (auto& v : j) strip_elapsed(v);
    }
}

} // namespace hamspan

#endif // HAMSPAN_REPORT_JSON_HPP
