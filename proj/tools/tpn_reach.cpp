// tpn-reach: state space exploration, reachability and automaton export for
// Time Petri Nets.
//
// Exit codes: 0 success, 1 property does not hold, 2 usage or input error,
// 3 inconclusive (a cap or the timeout stopped the search).

#include "tpn/clock_reduction.hpp"
#include "tpn/cross_simulation.hpp"
#include "tpn/explorer.hpp"
#include "tpn/net_format.hpp"
#include "tpn/predicate.hpp"
#include "tpn/state_class.hpp"
#include "tpn/ta_export.hpp"
#include "tpn/timed_automaton.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tpn;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kInconclusive = 3 };

struct Options {
    std::string input;
    std::string query;
    std::string format = "xta";
    std::string output;
    bool reduce_clocks = false;
    std::size_t max_markings = 0;
    Tokens max_tokens = 255;
    double timeout = 0;
    std::string order = "bfs";
    std::uint64_t seed = 1;
    bool porcelain = false;
    bool no_kapprox = false;
    std::size_t max_steps = 0;
    std::size_t runs = 100;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "key: value" for people, "key=value" with --porcelain.
class Report {
public:
    explicit Report(bool porcelain) : porcelain_(porcelain) {}

    template <typename T>
    Report& field(const std::string& key, const T& value) {
        std::ostringstream v;
        v << value;
        fields_.emplace_back(key, v.str());
        return *this;
    }

    void print(std::ostream& out) {
        if (porcelain_) {
            for (const auto& [k, v] : fields_)
                out << k << '=' << v << '\n';
        } else {
            for (std::size_t i = 0; i < fields_.size(); ++i)
                out << (i ? ", " : "") << fields_[i].first << ": " << fields_[i].second;
            if (!fields_.empty())
                out << '\n';
        }
        fields_.clear();
    }

private:
    bool porcelain_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

StopCriteria criteria_of(const Options& o) {
    if (o.no_kapprox != (o.max_steps > 0))
        throw UsageError("--no-kapprox and --max-steps must be given together");
    StopCriteria c;
    if (o.max_markings)
        c.max_markings = o.max_markings;
    c.max_tokens_per_place = o.max_tokens;
    if (o.timeout > 0)
        c.wall_timeout = std::chrono::duration<double>(o.timeout);
    c.k_approx = !o.no_kapprox;
    if (o.max_steps)
        c.max_steps = o.max_steps;
    return c;
}

SearchOrder order_of(const Options& o) {
    return o.order == "dfs" ? SearchOrder::Dfs : SearchOrder::Bfs;
}

void write_output(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + o.output + "'");
    out << text;
}

std::string lower(std::string s) {
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

int cmd_explore(const Options& o) {
    const ScaledNet net = scale_net(load_net(o.input));
    const ExploreResult r = explore(net, criteria_of(o), order_of(o));
    Report rep(o.porcelain);
    rep.field("markings", r.graph.nodes.size())
        .field("edges", r.graph.edges.size())
        .field("zones", r.graph.stored_zone_count())
        .field("status", to_string(r.status));
    rep.print(std::cout);
    if (r.status != ExploreStatus::Complete) {
        std::size_t widest = 0;
        for (std::size_t i = 1; i < r.graph.zone_lists.size(); ++i)
            if (r.graph.zone_lists[i].size() > r.graph.zone_lists[widest].size())
                widest = i;
        rep.field("steps", r.steps)
            .field("largest_zone_list", "M" + std::to_string(widest))
            .field("largest_zone_list_size", r.graph.zone_lists[widest].size());
        rep.print(std::cout);
    }
    if (!o.output.empty())
        write_output(o, marking_graph_dot(net.net(), r.graph));
    return r.status == ExploreStatus::Complete ? kOk : kInconclusive;
}

int cmd_reach(const Options& o) {
    const ScaledNet net = scale_net(load_net(o.input));
    const MarkingPredicate pred = parse_predicate(o.query, net.net());
    const ReachabilityResult r = check_reachability(net, pred, criteria_of(o), order_of(o));
    Report rep(o.porcelain);
    const char* verdict = r.verdict == Verdict::Reachable     ? "Reachable"
                          : r.verdict == Verdict::Unreachable ? "Unreachable"
                                                              : "Unknown";
    rep.field("verdict", verdict).field("markings", r.markings).field("status", to_string(r.status));
    rep.print(std::cout);
    if (r.trace) {
        if (o.porcelain) {
            for (std::size_t i = 0; i < r.trace->steps.size(); ++i) {
                const auto& s = r.trace->steps[i];
                std::cout << "step" << i << '=' << net.net().transition(s.transition).name << ' '
                          << format_interval(s.interval, r.trace->scale) << '\n';
            }
        } else {
            std::cout << r.trace->to_string(net.net());
        }
    }
    switch (r.verdict) {
    case Verdict::Reachable: return kOk;
    case Verdict::Unreachable: return kNegative;
    case Verdict::Unknown: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_export(const Options& o) {
    const ScaledNet net = scale_net(load_net(o.input));
    const ExploreResult r = explore(net, criteria_of(o), order_of(o));
    if (r.status != ExploreStatus::Complete) {
        std::cerr << "error: exploration stopped early (" << to_string(r.status) << ")\n";
        return kInconclusive;
    }
    TimedAutomaton ta = build_marking_ta(net, r);
    // the report goes to stderr when the automaton itself is on stdout
    std::ostream& info = o.output.empty() || o.output == "-" ? std::cerr : std::cout;
    if (o.reduce_clocks) {
        ReductionResult red = reduce_clocks(ta);
        if (o.porcelain)
            info << "clocks_original=" << red.original << "\nclocks_reduced=" << red.reduced << '\n';
        else
            info << "clocks: " << red.original << " -> " << red.reduced << '\n';
        ta = std::move(red.automaton);
    }
    const std::string format = lower(o.format);
    const TaFormat f = format == "kronos" ? TaFormat::Kronos
                       : format == "dot"  ? TaFormat::Dot
                                          : TaFormat::Xta;
    write_output(o, export_ta(ta, f));
    return kOk;
}

int cmd_scg(const Options& o) {
    const ScaledNet net = scale_net(load_net(o.input));
    const ClassGraph g = build_scg(net, criteria_of(o));
    Report rep(o.porcelain);
    rep.field("classes", g.classes.size())
        .field("edges", g.edges.size())
        .field("markings", g.markings().size())
        .field("status", to_string(g.status));
    rep.print(std::cout);
    if (!o.output.empty())
        write_output(o, class_graph_dot(net.net(), g));
    return g.status == ExploreStatus::Complete ? kOk : kInconclusive;
}

int cmd_compare(const Options& o) {
    const ScaledNet net = scale_net(load_net(o.input));
    const StopCriteria c = criteria_of(o);
    const ExploreResult zones = explore(net, c, order_of(o));
    const ClassGraph classes = build_scg(net, c);
    if (zones.status != ExploreStatus::Complete || classes.status != ExploreStatus::Complete) {
        Report rep(o.porcelain);
        rep.field("explorer_status", to_string(zones.status))
            .field("scg_status", to_string(classes.status));
        rep.print(std::cout);
        return kInconclusive;
    }

    std::set<Marking> zm(zones.graph.nodes.begin(), zones.graph.nodes.end());
    const auto cm_list = classes.markings();
    std::set<Marking> cm(cm_list.begin(), cm_list.end());
    const auto ze = marking_edges(zones.graph);
    const auto ce = classes.marking_edges();
    const bool same = zm == cm && ze == ce;

    if (o.porcelain) {
        std::cout << "markings_explorer=" << zm.size() << "\nmarkings_scg=" << cm.size()
                  << "\nedges_explorer=" << ze.size() << "\nedges_scg=" << ce.size()
                  << "\nequal=" << (same ? "true" : "false") << '\n';
    } else {
        std::cout << "markings: " << zm.size() << (zm == cm ? " = " : " != ") << cm.size()
                  << ", edges: " << ze.size() << (ze == ce ? " = " : " != ") << ce.size() << '\n';
        for (const auto& m : zm)
            if (!cm.count(m))
                std::cout << "  only explorer: " << m.to_string() << '\n';
        for (const auto& m : cm)
            if (!zm.count(m))
                std::cout << "  only scg: " << m.to_string() << '\n';
    }

    int code = same ? kOk : kNegative;
    if (o.runs > 0) {
        const TimedAutomaton ta = build_marking_ta(net, zones);
        const SimulationReport sim = cross_simulate(net, ta, o.runs, 20, o.seed);
        if (o.porcelain)
            std::cout << "simulation_runs=" << sim.runs << "\nsimulation_divergences="
                      << sim.divergences << '\n';
        else
            std::cout << "simulation: " << sim.runs << " runs, " << sim.divergences
                      << " divergences\n";
        for (const auto& s : sim.samples)
            std::cout << "  " << s << '\n';
        if (!sim.ok())
            code = kNegative;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reachability analysis of Time Petri Nets"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--max-markings", o.max_markings, "Stop after this many markings");
    app.add_option("--max-tokens", o.max_tokens, "Token cap per place")->capture_default_str();
    app.add_option("--timeout", o.timeout, "Wall-clock limit in seconds");
    app.add_option("--order", o.order, "Search order")
        ->check(CLI::IsMember({"bfs", "dfs"}))
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_flag("--porcelain", o.porcelain, "key=value output");
    app.add_flag("--no-kapprox", o.no_kapprox, "Disable k-approximation (needs --max-steps)");
    app.add_option("--max-steps", o.max_steps, "Iteration cap (with --no-kapprox)");

    auto* explore_cmd = app.add_subcommand("explore", "Compute the marking graph");
    explore_cmd->add_option("net", o.input, "Net file")->required();
    explore_cmd->add_option("-o", o.output, "Write the graph as DOT");

    auto* reach_cmd = app.add_subcommand("reach", "Check whether a marking is reachable");
    reach_cmd->add_option("net", o.input, "Net file")->required();
    reach_cmd->add_option("-q,--query", o.query, "Marking predicate")->required();

    auto* export_cmd = app.add_subcommand("export", "Export the marking timed automaton");
    export_cmd->add_option("net", o.input, "Net file")->required();
    export_cmd->add_option("--format", o.format, "xta, kronos or dot")
        ->transform(CLI::IsMember({"xta", "kronos", "dot"}, CLI::ignore_case))
        ->capture_default_str();
    export_cmd->add_flag("--reduce-clocks", o.reduce_clocks, "Apply clock reduction first");
    export_cmd->add_option("-o", o.output, "Output file (default stdout)");

    auto* scg_cmd = app.add_subcommand("scg", "Compute the state class graph");
    scg_cmd->add_option("net", o.input, "Net file")->required();
    scg_cmd->add_option("-o", o.output, "Write the class graph as DOT");

    auto* compare_cmd = app.add_subcommand("compare", "Compare the explorer with the state class graph");
    compare_cmd->add_option("net", o.input, "Net file")->required();
    compare_cmd->add_option("--runs", o.runs, "Cross-simulation runs (0 to skip)")
        ->capture_default_str();

    for (auto* sub : {explore_cmd, reach_cmd, export_cmd, scg_cmd, compare_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*explore_cmd)
            return cmd_explore(o);
        if (*reach_cmd)
            return cmd_reach(o);
        if (*export_cmd)
            return cmd_export(o);
        if (*scg_cmd)
            return cmd_scg(o);
        if (*compare_cmd)
            return cmd_compare(o);
    } catch (const ParseError& e) {
        std::cerr << o.input << ":" << e.what() << '\n';
        return kInputError;
    } catch (const ValidationError& e) {
        std::cerr << o.input << ": " << e.what() << '\n';
        return kInputError;
    } catch (const QueryParseError& e) {
        std::cerr << "query: " << e.what() << '\n';
        return kInputError;
    } catch (const UnsupportedFeature& e) {
        std::cerr << "error: unsupported feature: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
