#ifndef HAMSPAN_SURVEY_HPP
#define HAMSPAN_SURVEY_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamspan/cycle_space.hpp"
#include "hamspan/errors.hpp"
#include "hamspan/generatedness.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"

namespace hamspan {

enum class SurveyMode { Dirac, BipartiteQuarter };

inline const char* survey_mode_name(SurveyMode m) { return m == SurveyMode::Dirac ? "dirac" : "bipartite-quarter"; }

inline SurveyMode parse_survey_mode(const std::string& s)
{
    if (s == "dirac") return SurveyMode::Dirac;
    if (s == "bipartite-quarter") return SurveyMode::BipartiteQuarter;
    throw ParseError("unknown survey mode '" + s + "' (expected dirac or bipartite-quarter)");
}

struct SurveyConfig {
    int n = 7;
    // "any", "odd" or "even"; a constraint on n that is checked, not a filter.
    std::string parity = "any";
    // 0 selects the mode's threshold: ceil(n/2) for dirac, ceil(n/4)+1 for bipartite-quarter.
    int delta_floor = 0;
    int samples = 200;
    std::uint64_t seed = 42;
    SurveyMode mode = SurveyMode::Dirac;
    SearchOptions search;
    std::size_t max_rejections = 1'000'000;
};

inline constexpr int survey_max_order = 14;
inline constexpr const char* survey_generator = "mt19937_64";

inline int default_delta_floor(SurveyMode mode, int n)
{
    return mode == SurveyMode::Dirac ? (n + 1) / 2 : (n + 3) / 4 + 1;
}

inline int effective_delta_floor(const SurveyConfig& cfg)
{
    return cfg.delta_floor > 0 ? cfg.delta_floor : default_delta_floor(cfg.mode, cfg.n);
}

inline void validate(const SurveyConfig& cfg)
{
    if (cfg.n < 3) throw PreconditionError("survey: n must be at least 3");
    if (cfg.n > survey_max_order)
        throw CapacityError("survey: n = " + std::to_string(cfg.n) + " exceeds the feasible order " +
                            std::to_string(survey_max_order));
    if (cfg.parity != "any" && cfg.parity != "odd" && cfg.parity != "even")
        throw PreconditionError("survey: parity must be any, odd or even");
    if ((cfg.parity == "odd" && cfg.n % 2 == 0) || (cfg.parity == "even" && cfg.n % 2 == 1))
        throw PreconditionError("survey: n = " + std::to_string(cfg.n) + " violates the parity constraint " + cfg.parity);
    if (cfg.mode == SurveyMode::BipartiteQuarter && cfg.n % 2 == 1)
        throw PreconditionError("survey: bipartite-quarter mode needs an even n");
    const int delta = effective_delta_floor(cfg);
    const int cap = cfg.mode == SurveyMode::Dirac ? cfg.n - 1 : cfg.n / 2;
    if (delta > cap) throw PreconditionError("survey: degree floor " + std::to_string(delta) + " is unreachable");
    if (cfg.samples < 0) throw PreconditionError("survey: sample count must be non-negative");
}

// Candidate edge slots in a fixed order: all pairs u < v (dirac) or all pairs
// between {0..n/2-1} and {n/2..n-1} (bipartite-quarter).
inline std::vector<Edge> survey_slots(const SurveyConfig& cfg)
{
    std::vector<Edge> out;
    const int n = cfg.n;
    if (cfg.mode == SurveyMode::Dirac) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) out.push_back({u, v});
    } else {
        for (int u = 0; u < n / 2; ++u)
            for (int v = n / 2; v < n; ++v) out.push_back({u, v});
    }
    return out;
}

// Each attempt draws fresh 64-bit words; slot k is present iff bit k%64 of word k/64 is set.
inline Graph draw_graph(std::mt19937_64& rng, int n, const std::vector<Edge>& slots)
{
    std::vector<Edge> chosen;
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if (k % 64 == 0) word = rng();
        if ((word >> (k % 64)) & 1U) chosen.push_back(slots[k]);
    }
    return new_graph(n, chosen);
}

struct SurveySummary {
    int samples = 0;
    std::uint64_t attempts = 0;
    std::map<int, int> histogram;
    int capacity_limited = 0;
    std::vector<int> candidates;
    int not_hamilton_connected = 0;
};

// Samples graphs, writes one JSON line per record (header, samples, summary).
inline SurveySummary run_survey(const SurveyConfig& cfg, std::ostream& out)
{
    using nlohmann::ordered_json;
    validate(cfg);
    const int delta = effective_delta_floor(cfg);
    const auto slots = survey_slots(cfg);
    const bool bip = cfg.mode == SurveyMode::BipartiteQuarter;

    ordered_json header;
    header["format"] = "report-v1";
    header["kind"] = "survey-header";
    header["generator"] = survey_generator;
    header["seed"] = cfg.seed;
    header["mode"] = survey_mode_name(cfg.mode);
    header["n"] = cfg.n;
    header["parity"] = cfg.parity;
    header["delta_floor"] = delta;
    header["samples"] = cfg.samples;
    header["cap"] = cfg.search.cap;
    out << header.dump() << '\n';

    std::mt19937_64 rng(cfg.seed);
    SurveySummary sum;
    for (int i = 0; i < cfg.samples; ++i) {
        Graph g;
        std::uint64_t tries = 0;
        while (true) {
            if (tries == cfg.max_rejections)
                throw CapacityError("survey: no graph met the degree floor after " + std::to_string(tries) + " draws");
            ++tries;
            g = draw_graph(rng, cfg.n, slots);
            if (min_degree(g) >= delta) break;
        }
        sum.attempts += tries;

        ordered_json rec;
        rec["kind"] = "sample";
        rec["index"] = i;
        rec["attempts"] = tries;
        rec["f1"] = g.size();
        rec["min_degree"] = min_degree(g);
        rec["betti1"] = betti1(g);

        const HamiltonSpanProbe probe = hamilton_span_probe(g, cfg.search.cap);
        rec["span_dim"] = probe.span_dim;
        rec["hamilton_circuits_examined"] = probe.circuits_seen;
        const bool exact = probe.exact();
        if (exact) {
            rec["codimension"] = probe.codimension();
            ++sum.histogram[probe.codimension()];
        } else {
            rec["codimension"] = nullptr;
            ++sum.capacity_limited;
        }
        const PairCheck joined = bip ? is_hamilton_laceable(g, cfg.search.threads)
                                     : is_hamilton_connected(g, cfg.search.threads);
        rec[bip ? "hamilton_laceable" : "hamilton_connected"] = joined.holds;
        if (!joined.holds) ++sum.not_hamilton_connected;
        const bool candidate = exact && probe.codimension() > 0 && !bip && cfg.n % 2 == 1 &&
                               delta >= default_delta_floor(SurveyMode::Dirac, cfg.n);
        rec["candidate"] = candidate;
        if (candidate) sum.candidates.push_back(i);
        ordered_json edges = ordered_json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        rec["edges"] = edges;
        out << rec.dump() << '\n';
        ++sum.samples;
    }

    ordered_json tail;
    tail["kind"] = "survey-summary";
    tail["samples"] = sum.samples;
    tail["attempts"] = sum.attempts;
    ordered_json hist = ordered_json::object();
    for (auto [k, v] : sum.histogram) hist[std::to_string(k)] = v;
    tail["codimension_histogram"] = hist;
    tail["capacity_limited"] = sum.capacity_limited;
    tail[bip ? "not_hamilton_laceable" : "not_hamilton_connected"] = sum.not_hamilton_connected;
    tail["candidates"] = sum.candidates;
    out << tail.dump() << '\n';
    return sum;
}

} // namespace hamspan

#endif // HAMSPAN_SURVEY_HPP
