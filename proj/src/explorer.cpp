#include "tpn/explorer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace tpn {

std::string to_string(ExploreStatus status) {
    switch (status) {
    case ExploreStatus::Complete: return "Complete";
    case ExploreStatus::MarkingCapHit: return "MarkingCapHit";
    case ExploreStatus::TokenCapHit: return "TokenCapHit";
    case ExploreStatus::Timeout: return "Timeout";
    case ExploreStatus::StepCapHit: return "StepCapHit";
    }
    return "?";
}

std::optional<std::size_t> MarkingGraph::find(const Marking& m) const {
    auto it = index.find(m);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

std::size_t MarkingGraph::stored_zone_count() const {
    std::size_t n = 0;
    for (const auto& list : zone_lists)
        n += list.size();
    return n;
}

SymbolicState initial_state(const ScaledNet& net) {
    const Marking& m0 = net.net().initial_marking();
    return {m0, Zone::zero(enabled(net.net(), m0))};
}

Zone time_closure(const ScaledNet& net, const SymbolicState& s) {
    const auto en = enabled(net.net(), s.marking);
    if (s.zone.clocks() != en)
        throw ExplorerError("zone clocks do not match the enabled transitions of " +
                            s.marking.to_string());
    Zone z = s.zone.future();
    for (TransitionId t : en)
        if (net.lft[t])
            z = z.constrain(ClockConstraint::upper(t, Bound::weak(*net.lft[t])));
    if (z.is_empty())
        throw ExplorerError("dead state: no legal valuation in " + s.marking.to_string());
    return z;
}

namespace {

Zone constrain_firing(const ScaledNet& net, const Zone& closure, TransitionId t) {
    return closure.constrain(ClockConstraint::lower(t, net.eft[t]));
}

/// Zone entering `next` after firing `t` from a valuation of `fired`.
Zone entering_zone(const ScaledNet& net, const Marking& from, const Zone& fired, TransitionId t,
                   const Marking& next, bool apply_k_approx) {
    const auto newly = newly_enabled(net.net(), from, t);
    const auto after = enabled(net.net(), next);
    Zone z = fired;
    for (ClockId c : fired.clocks()) {
        const bool persists = std::binary_search(after.begin(), after.end(), c) &&
                              !std::binary_search(newly.begin(), newly.end(), c);
        if (!persists)
            z = z.remove_clock(c);
    }
    for (TransitionId n : newly)
        z = z.add_clock(n);
    z = z.reset(newly);
    if (apply_k_approx)
        z = z.k_approx(net.k);
    return z;
}

bool exceeds_cap(const Marking& m, Tokens cap) {
    return std::any_of(m.tokens().begin(), m.tokens().end(), [cap](Tokens t) { return t > cap; });
}

}  // namespace

std::vector<TransitionId> firable(const ScaledNet& net, const SymbolicState& s) {
    const Zone closure = time_closure(net, s);
    std::vector<TransitionId> out;
    for (TransitionId t : closure.clocks())
        if (!constrain_firing(net, closure, t).is_empty())
            out.push_back(t);
    return out;
}

Zone firing_zone(const ScaledNet& net, const SymbolicState& s, TransitionId t) {
    if (!net.net().is_enabled(s.marking, t))
        throw ExplorerError("transition '" + net.net().transition(t).name + "' is not enabled");
    return constrain_firing(net, time_closure(net, s), t);
}

SymbolicState successor(const ScaledNet& net, const SymbolicState& s, TransitionId t,
                        bool apply_k_approx) {
    const Zone fired = firing_zone(net, s, t);
    if (fired.is_empty())
        throw ExplorerError("transition '" + net.net().transition(t).name + "' is not firable");
    Marking next = fire_marking(net.net(), s.marking, t);
    Zone z = entering_zone(net, s.marking, fired, t, next, apply_k_approx);
    return {std::move(next), std::move(z)};
}

// ── Search ──────────────────────────────────────────────────────────────────

namespace {

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct StoredState {
    std::size_t node;
    Zone zone;
    std::size_t parent;
    TransitionId via;
};

/// Called for every discovered (source state, transition, target marking);
/// returning true stops the search.
using DiscoveryHook =
    std::function<bool(std::size_t parent, TransitionId t, const Zone& fired, const Marking& next)>;

class Search {
public:
    Search(const ScaledNet& net, const StopCriteria& criteria, SearchOrder order)
        : net_(net), criteria_(criteria), order_(order) {
        if (!criteria.k_approx && !criteria.max_steps)
            throw std::invalid_argument("disabling k-approximation requires a step cap");
    }

    ExploreResult run(const DiscoveryHook& hook) {
        const auto start = std::chrono::steady_clock::now();
        ExploreResult result;
        auto& g = result.graph;

        SymbolicState s0 = initial_state(net_);
        add_node(g, s0.marking, 0);
        g.zone_lists[0].push_back(s0.zone);
        stored_.push_back({0, s0.zone, kNoParent, 0});
        std::deque<std::size_t> waiting{0};

        bool token_cap = false;
        bool marking_cap = false;
        std::unordered_set<std::uint64_t> edge_keys;
        const std::uint64_t tcount = net_.net().transition_count();

        while (!waiting.empty()) {
            if (criteria_.wall_timeout &&
                std::chrono::steady_clock::now() - start > *criteria_.wall_timeout) {
                result.status = ExploreStatus::Timeout;
                break;
            }
            if (criteria_.max_steps && result.steps >= *criteria_.max_steps) {
                result.status = ExploreStatus::StepCapHit;
                break;
            }
            std::size_t idx;
            if (order_ == SearchOrder::Bfs) {
                idx = waiting.front();
                waiting.pop_front();
            } else {
                idx = waiting.back();
                waiting.pop_back();
            }
            ++result.steps;

            const std::size_t node = stored_[idx].node;
            const Marking marking = g.nodes[node];
            const std::size_t depth = g.depth[node];
            const Zone closure = time_closure(net_, {marking, stored_[idx].zone});

            for (TransitionId t : closure.clocks()) {
                const Zone fired = constrain_firing(net_, closure, t);
                if (fired.is_empty())
                    continue;
                Marking next = fire_marking(net_.net(), marking, t);
                if (exceeds_cap(next, criteria_.max_tokens_per_place)) {
                    token_cap = true;
                    continue;
                }
                std::size_t target;
                if (auto found = g.find(next)) {
                    target = *found;
                } else {
                    if (criteria_.max_markings && g.nodes.size() >= *criteria_.max_markings) {
                        marking_cap = true;
                        continue;
                    }
                    target = add_node(g, next, depth + 1);
                }
                if (edge_keys.insert(node * tcount + t).second)
                    g.edges.push_back({node, t, target});
                if (hook && hook(idx, t, fired, next)) {
                    stopped_ = true;
                    return finish(std::move(result), token_cap, marking_cap);
                }

                Zone entering =
                    entering_zone(net_, marking, fired, t, next, criteria_.k_approx);
                auto& list = g.zone_lists[target];
                const bool covered = std::any_of(list.begin(), list.end(), [&](const Zone& z) {
                    return includes(z, entering);
                });
                if (covered)
                    continue;
                list.push_back(entering);
                stored_.push_back({target, std::move(entering), idx, t});
                waiting.push_back(stored_.size() - 1);
            }
        }
        return finish(std::move(result), token_cap, marking_cap);
    }

    const std::vector<StoredState>& stored() const { return stored_; }
    bool stopped() const { return stopped_; }

private:
    static std::size_t add_node(MarkingGraph& g, const Marking& m, std::size_t depth) {
        const std::size_t id = g.nodes.size();
        g.nodes.push_back(m);
        g.zone_lists.emplace_back();
        g.depth.push_back(depth);
        g.index.emplace(m, id);
        return id;
    }

    static ExploreResult finish(ExploreResult result, bool token_cap, bool marking_cap) {
        if (result.status == ExploreStatus::Complete) {
            if (marking_cap)
                result.status = ExploreStatus::MarkingCapHit;
            else if (token_cap)
                result.status = ExploreStatus::TokenCapHit;
        }
        return result;
    }

    const ScaledNet& net_;
    const StopCriteria& criteria_;
    SearchOrder order_;
    std::vector<StoredState> stored_;
    bool stopped_ = false;
};

}  // namespace

ExploreResult explore(const ScaledNet& net, const StopCriteria& criteria, SearchOrder order) {
    return Search(net, criteria, order).run({});
}

ReachabilityResult check_reachability(const ScaledNet& net, const MarkingPredicate& pred,
                                      const StopCriteria& criteria, SearchOrder order) {
    ReachabilityResult out;
    if (pred.holds(net.net().initial_marking())) {
        out.verdict = Verdict::Reachable;
        out.trace = TimedTrace{{}, net.scale};
        out.markings = 1;
        return out;
    }

    Search search(net, criteria, order);
    std::vector<TransitionId> path;
    auto hook = [&](std::size_t parent, TransitionId t, const Zone&, const Marking& next) {
        if (!pred.holds(next))
            return false;
        const auto& stored = search.stored();
        path.push_back(t);
        for (std::size_t i = parent; stored[i].parent != kNoParent; i = stored[i].parent)
            path.push_back(stored[i].via);
        std::reverse(path.begin(), path.end());
        return true;
    };
    ExploreResult res = search.run(hook);
    out.status = res.status;
    out.markings = res.graph.nodes.size();

    if (search.stopped()) {
        // Stored zones are exact successors, so replaying the path rebuilds them.
        TimedTrace trace{{}, net.scale};
        SymbolicState s = initial_state(net);
        for (TransitionId t : path) {
            trace.steps.push_back({t, firing_zone(net, s, t).project_interval(t)});
            s = successor(net, s, t, criteria.k_approx);
        }
        out.verdict = Verdict::Reachable;
        out.trace = std::move(trace);
        return out;
    }
    out.verdict = res.status == ExploreStatus::Complete ? Verdict::Unreachable : Verdict::Unknown;
    return out;
}

// ── Output ──────────────────────────────────────────────────────────────────

std::string format_interval(const ClockInterval& interval, std::int64_t scale) {
    std::string out = interval.lower.is_strict() ? "(" : "[";
    out += format_rational(Rational(interval.lower.value(), scale));
    out += ',';
    if (interval.upper.is_infinity())
        return out + "inf)";
    out += format_rational(Rational(interval.upper.value(), scale));
    out += interval.upper.is_strict() ? ")" : "]";
    return out;
}

std::string TimedTrace::to_string(const TimePetriNet& net) const {
    std::ostringstream out;
    for (const auto& step : steps)
        out << "fire " << net.transition(step.transition).name << " in "
            << format_interval(step.interval, scale) << '\n';
    return out.str();
}

std::string marking_graph_dot(const TimePetriNet& net, const MarkingGraph& graph) {
    std::ostringstream out;
    out << "digraph marking_graph {\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        out << "  M" << i << " [label=\"M" << i << ": " << graph.nodes[i].to_string() << "\"";
        if (i == graph.initial)
            out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& e : graph.edges)
        out << "  M" << e.source << " -> M" << e.target << " [label=\""
            << net.transition(e.transition).name << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace tpn
