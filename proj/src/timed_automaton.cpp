#include "tpn/timed_automaton.hpp"

#include <algorithm>

namespace tpn {

bool ClockAtom::holds(const Rational& v) const {
    const Rational c(constant);
    switch (rel) {
    case ClockRel::Le: return v <= c;
    case ClockRel::Lt: return v < c;
    case ClockRel::Ge: return v >= c;
    case ClockRel::Gt: return v > c;
    }
    return false;
}

bool TimedAutomaton::has_copies() const {
    for (const auto& e : edges)
        for (const auto& a : e.assignments)
            if (a.source)
                return true;
    return false;
}

TimedAutomaton build_marking_ta(const ScaledNet& net, const ExploreResult& explored) {
    if (explored.status != ExploreStatus::Complete)
        throw IncompleteGraph(explored.status);
    const TimePetriNet& pn = net.net();
    const MarkingGraph& g = explored.graph;

    TimedAutomaton ta;
    for (const auto& t : pn.transitions()) {
        ta.clocks.push_back("x_" + t.name);
        ta.actions.push_back(t.name);
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        TaLocation loc;
        loc.name = "M" + std::to_string(i);
        loc.marking = g.nodes[i];
        loc.clock_of.assign(pn.transition_count(), std::nullopt);
        for (TransitionId t : enabled(pn, g.nodes[i])) {
            loc.clock_of[t] = t;
            if (net.lft[t])
                loc.invariant.push_back({t, ClockRel::Le, *net.lft[t]});
        }
        ta.locations.push_back(std::move(loc));
    }
    ta.initial = g.initial;
    for (const auto& e : g.edges) {
        TaEdge edge{e.source, e.target, e.transition, {{e.transition, ClockRel::Ge, net.eft[e.transition]}}, {}};
        for (TransitionId n : newly_enabled(pn, g.nodes[e.source], e.transition))
            edge.assignments.push_back({n, std::nullopt});
        ta.edges.push_back(std::move(edge));
    }
    return ta;
}

TaState initial_ta_state(const TimedAutomaton& ta) {
    return {ta.initial, std::vector<Rational>(ta.clocks.size(), Rational(0))};
}

bool invariant_holds(const TimedAutomaton& ta, std::size_t location,
                     const std::vector<Rational>& valuation) {
    const auto& inv = ta.locations[location].invariant;
    return std::all_of(inv.begin(), inv.end(),
                       [&](const ClockAtom& a) { return a.holds(valuation[a.clock]); });
}

std::optional<Rational> ta_max_delay(const TimedAutomaton& ta, const TaState& s) {
    std::optional<Rational> best;
    for (const auto& a : ta.locations[s.location].invariant) {
        if (a.rel != ClockRel::Le && a.rel != ClockRel::Lt)
            continue;
        const Rational room = Rational(a.constant) - s.valuation[a.clock];
        if (!best || room < *best)
            best = room;
    }
    return best;
}

namespace {

std::vector<Rational> apply(const std::vector<Assignment>& assignments, std::vector<Rational> v) {
    for (const auto& a : assignments)
        v[a.target] = a.source ? v[*a.source] : Rational(0);
    return v;
}

bool guard_holds(const TaEdge& e, const std::vector<Rational>& v) {
    return std::all_of(e.guard.begin(), e.guard.end(),
                       [&](const ClockAtom& a) { return a.holds(v[a.clock]); });
}

}  // namespace

std::vector<TaState> ta_step(const TimedAutomaton& ta, const TaState& s, const TaMove& move) {
    std::vector<TaState> out;
    if (const auto* d = std::get_if<Delay>(&move)) {
        if (d->amount < 0)
            return out;
        TaState next = s;
        for (auto& v : next.valuation)
            v += d->amount;
        // invariants are convex, so both endpoints suffice
        if (invariant_holds(ta, s.location, s.valuation) &&
            invariant_holds(ta, s.location, next.valuation))
            out.push_back(std::move(next));
        return out;
    }
    const TransitionId label = std::get<Action>(move).label;
    for (const auto& e : ta.edges) {
        if (e.source != s.location || e.label != label || !guard_holds(e, s.valuation))
            continue;
        TaState next{e.target, apply(e.assignments, s.valuation)};
        if (invariant_holds(ta, e.target, next.valuation))
            out.push_back(std::move(next));
    }
    return out;
}

std::vector<TransitionId> ta_enabled_actions(const TimedAutomaton& ta, const TaState& s) {
    std::vector<TransitionId> out;
    for (const auto& e : ta.edges) {
        if (e.source != s.location || !guard_holds(e, s.valuation))
            continue;
        if (invariant_holds(ta, e.target, apply(e.assignments, s.valuation)))
            out.push_back(e.label);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tpn
