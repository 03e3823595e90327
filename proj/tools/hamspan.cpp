#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamspan/families.hpp"
#include "hamspan/generatedness.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/report_json.hpp"
#include "hamspan/suites.hpp"
#include "hamspan/survey.hpp"

namespace {

using namespace hamspan;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_capacity = 3;

// "4..10", "4,6,8" or a mix such as "4,7..9".
std::vector<int> parse_range(const std::string& text)
{
    std::vector<int> out;
    for (const auto& part : detail::split(text, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(detail::parse_int(part, "range"));
            continue;
        }
        const int lo = detail::parse_int(part.substr(0, dots), "range");
        const int hi = detail::parse_int(part.substr(dots + 2), "range");
        if (hi < lo) throw ParseError("range: empty interval '" + part + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path);
    return read_graph(in);
}

// The sidecar holds "index name" per line; missing sidecars give an empty layout.
Layout load_layout(const std::string& graph_path)
{
    Layout layout;
    std::ifstream in(graph_path + ".layout");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int index = 0;
        std::string name;
        if (!(ss >> index >> name)) throw ParseError("layout sidecar: bad line '" + line + "'");
        if (index != static_cast<int>(layout.names.size())) throw ParseError("layout sidecar: indices out of order");
        layout.names.push_back(name);
    }
    return layout;
}

// Vertices given as indices or, when a layout is present, as names.
std::vector<int> parse_circuit_vertices(const std::string& text, const Layout& layout)
{
    std::vector<int> out;
    for (const auto& tok : detail::split(text, ',')) {
        const bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) out.push_back(detail::parse_int(tok, "circuit"));
        else if (!layout.names.empty()) out.push_back(layout.index_of(tok));
        else throw ParseError("circuit: '" + tok + "' is not a vertex index and no layout sidecar was found");
    }
    return out;
}

std::string vertex_label(const Layout& layout, int v)
{
    return v < static_cast<int>(layout.names.size()) ? layout.names[static_cast<std::size_t>(v)] : std::to_string(v);
}

int cmd_build(const std::string& family, const std::string& out_path)
{
    const BuiltGraph b = build(parse_family(family));
    write_text(out_path, graph_to_string(b.graph));
    if (out_path != "-") {
        std::ostringstream layout;
        for (std::size_t i = 0; i < b.layout.names.size(); ++i) layout << i << ' ' << b.layout.names[i] << '\n';
        write_text(out_path + ".layout", layout.str());
        std::cout << family << ": " << b.graph.order() << " vertices, " << b.graph.size() << " edges -> " << out_path
                  << '\n';
    }
    if (!b.connected) std::cerr << "note: connection set does not generate the group\n";
    return exit_ok;
}

// Generic report for an arbitrary graph file.
VerificationReport graph_report(const Graph& g, const LengthSet& L, const SearchOptions& opt)
{
    VerificationReport rep("graph");
    rep.record("order", g.order());
    rep.record("size", g.size());
    rep.record("betti1", betti1(g));
    rep.record("min_degree", min_degree(g));
    rep.record("three_connected", is_k_connected(g, 3));
    const SpanReport s = span_report(g, L, opt);
    rep.record("lengths", L.to_string());
    rep.record("span_dim", s.span_dim);
    rep.record("codimension", s.codimension);
    if (bipartition(g)) rep.record("hamilton_laceable", is_hamilton_laceable(g, opt.threads).holds);
    else rep.record("hamilton_connected", is_hamilton_connected(g, opt.threads).holds);
    return rep;
}

void print_run(const SuiteRun& run, std::ostream& out)
{
    for (const auto& r : run.reports) {
        out << status_name(r.status) << "  " << r.check_id << "  (" << r.elapsed << " s)\n";
        for (const auto& n : r.notes) out << "      " << n << '\n';
    }
    const SuiteTally t = tally(run);
    out << run.suite << ": " << t.pass << " pass, " << t.fail << " fail, " << t.finding << " finding, " << t.skip
              << " skip\n";
}

struct VerifyArgs {
    std::string suite;
    std::string r;
    std::string n;
    std::string graph;
    std::string lengths = "f0";
    std::string json;
    bool strict = false;
    bool no_elapsed = false;
    std::uint64_t seed = SuiteConfig{}.seed;
    int trials = 100;
};

int cmd_verify(const VerifyArgs& a, const SearchOptions& opt)
{
    SuiteConfig cfg;
    cfg.search = opt;
    cfg.seed = a.seed;
    cfg.trials = a.trials;
    if (!a.r.empty()) cfg.r_values = parse_range(a.r);
    if (!a.n.empty()) cfg.n_values = parse_range(a.n);

    SuiteRun run;
    if (!a.graph.empty()) {
        if (a.suite != "graph") throw PreconditionError("--graph goes with the suite name 'graph'");
        run.suite = "graph";
        const Graph g = load_graph(a.graph);
        const LengthSet L = LengthSet::parse(a.lengths);
        detail::run_check(run.reports, "graph", [&] { return graph_report(g, L, opt); });
    } else {
        run = run_suite(a.suite, cfg);
    }
    // Keep stdout parseable when the document goes there.
    print_run(run, a.json == "-" ? std::cerr : std::cout);
    if (!a.json.empty()) write_text(a.json, to_json(run, cfg, !a.no_elapsed).dump(2) + "\n");
    const SuiteTally t = tally(run);
    if (t.fail > 0) return exit_failed;
    if (a.strict && t.skip > 0) return exit_capacity;
    return exit_ok;
}

int cmd_survey(const SurveyConfig& cfg, const std::string& json_path)
{
    SurveySummary s;
    if (json_path.empty() || json_path == "-") {
        s = run_survey(cfg, std::cout);
    } else {
        std::ofstream out(json_path);
        if (!out) throw Error("cannot write " + json_path);
        s = run_survey(cfg, out);
    }
    std::ostream& log = json_path.empty() || json_path == "-" ? std::cerr : std::cout;
    log << "survey: " << s.samples << " samples from " << s.attempts << " draws; codimension histogram:";
    for (auto [k, v] : s.histogram) log << ' ' << k << ':' << v;
    log << "; candidates: " << s.candidates.size() << "; capacity-limited: " << s.capacity_limited << '\n';
    return exit_ok;
}

int cmd_realize(const std::string& graph_path, const std::string& circuit, const std::string& lengths,
                const SearchOptions& opt)
{
    const Graph g = load_graph(graph_path);
    const Layout layout = load_layout(graph_path);
    const Circuit target = Circuit::make(g, parse_circuit_vertices(circuit, layout));
    const LengthSet L = LengthSet::parse(lengths);
    const auto parts = realize(g, target, L, opt);
    auto show = [&](const Circuit& c) {
        std::string s;
        for (int v : c.vertices()) s += (s.empty() ? "" : " ") + vertex_label(layout, v);
        return s;
    };
    if (!parts) {
        std::cout << "no realization: the circuit " << show(target) << " lies outside the span of the circuits with lengths "
                  << L.to_string() << '\n';
        return exit_ok;
    }
    std::cout << "realization of " << show(target) << " by " << parts->size() << " circuit(s) with lengths "
              << L.to_string() << " (sum verified):\n";
    for (const auto& c : *parts) std::cout << "  " << show(c) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cycle-space generation checks for Hamilton circuits"};
    app.require_subcommand(1);

    SearchOptions opt;
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--cap", opt.cap, "Circuit-count cap for enumerations")->check(CLI::PositiveNumber);
        sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    };

    std::string family, out_path;
    auto* build_cmd = app.add_subcommand("build", "Write a family member as a graph file plus layout sidecar");
    build_cmd->add_option("family", family, "Family, e.g. pr:4, m-boxtimes:5, cn2:7, ce-i1, x7")->required();
    build_cmd->add_option("output", out_path, "Output path ('-' for stdout)")->required();

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("graph");
    verify_cmd->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--r", va.r, "r values, e.g. 4..10 or 4,6,8");
    verify_cmd->add_option("--n", va.n, "n values for the squared-cycle checks");
    verify_cmd->add_option("--graph", va.graph, "Graph file (suite 'graph')");
    verify_cmd->add_option("--lengths", va.lengths, "Length set for --graph, e.g. f0 or f0-1,f0");
    verify_cmd->add_option("--seed", va.seed, "Seed for the randomized suites");
    verify_cmd->add_option("--samples", va.trials, "Trials per randomized family")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--json", va.json, "Write the report-v1 document here ('-' for stdout)");
    verify_cmd->add_flag("--strict", va.strict, "Exit 3 when any check was skipped");
    verify_cmd->add_flag("--no-elapsed", va.no_elapsed, "Leave timings out of the JSON document");
    add_search(verify_cmd);

    SurveyConfig sc;
    std::string mode = "dirac", survey_json;
    auto* survey_cmd = app.add_subcommand("survey", "Sample graphs above a degree floor and record Hamilton codimensions");
    survey_cmd->add_option("--n", sc.n, "Vertex count (at most 14)")->required();
    survey_cmd->add_option("--samples", sc.samples, "Number of accepted samples");
    survey_cmd->add_option("--seed", sc.seed, "64-bit seed")->required();
    survey_cmd->add_option("--mode", mode, "dirac or bipartite-quarter");
    survey_cmd->add_option("--delta", sc.delta_floor, "Minimum-degree floor (default: the mode's threshold)");
    survey_cmd->add_option("--parity", sc.parity, "Required parity of n: any, odd, even");
    survey_cmd->add_option("--json", survey_json, "Write the JSON lines here (default stdout)");
    add_search(survey_cmd);

    std::string graph_path, circuit, lengths = "f0";
    auto* realize_cmd = app.add_subcommand("realize", "Write a circuit as a sum of circuits with given lengths");
    realize_cmd->add_option("graph", graph_path, "Graph file")->required();
    realize_cmd->add_option("circuit", circuit, "Comma-separated vertices (indices or layout names)")->required();
    realize_cmd->add_option("--lengths", lengths, "Length set, e.g. f0 or f0-1,f0");
    add_search(realize_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build_cmd) return cmd_build(family, out_path);
        if (*verify_cmd) return cmd_verify(va, opt);
        if (*survey_cmd) {
            sc.mode = parse_survey_mode(mode);
            sc.search = opt;
            return cmd_survey(sc, survey_json);
        }
        if (*realize_cmd) return cmd_realize(graph_path, circuit, lengths, opt);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const ParseError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const CircuitError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const VertexError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
