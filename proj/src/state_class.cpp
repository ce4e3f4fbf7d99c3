#include "tpn/state_class.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tpn {

namespace {

Zone with_static_interval(const ScaledNet& net, Zone d, TransitionId t) {
    d = d.constrain(ClockConstraint::lower(t, net.eft[t]));
    if (net.lft[t])
        d = d.constrain(ClockConstraint::upper(t, Bound::weak(*net.lft[t])));
    return d;
}

Zone fire_first(const Zone& domain, TransitionId t) {
    Zone d = domain;
    for (ClockId other : domain.clocks())
        if (other != t)
            d = d.constrain(ClockConstraint::difference(t, other, Bound::zero()));
    return d;
}

}  // namespace

StateClass initial_class(const ScaledNet& net) {
    const Marking& m0 = net.net().initial_marking();
    const auto en = enabled(net.net(), m0);
    Zone d = Zone::universe(en);
    for (TransitionId t : en)
        d = with_static_interval(net, d, t);
    return {m0, d.canonicalize()};
}

std::vector<TransitionId> class_firable(const StateClass& c) {
    std::vector<TransitionId> out;
    for (TransitionId t : c.domain.clocks())
        if (!fire_first(c.domain, t).is_empty())
            out.push_back(t);
    return out;
}

StateClass class_successor(const ScaledNet& net, const StateClass& c, TransitionId t) {
    if (!c.domain.has_clock(t))
        throw ExplorerError("transition '" + net.net().transition(t).name + "' is not enabled");
    const Zone d = fire_first(c.domain, t).canonicalize();
    if (d.is_empty())
        throw ExplorerError("transition '" + net.net().transition(t).name + "' is not firable");

    Marking next = fire_marking(net.net(), c.marking, t);
    const auto newly = newly_enabled(net.net(), c.marking, t);
    const auto after = enabled(net.net(), next);

    // Persistent variables are shifted by x_t: x_t takes the role of the
    // reference, and the old reference is projected away.
    std::vector<ClockId> kept;
    std::vector<std::size_t> rows{*d.index_of(t)};
    for (ClockId x : d.clocks()) {
        if (x == t || std::binary_search(newly.begin(), newly.end(), x) ||
            !std::binary_search(after.begin(), after.end(), x))
            continue;
        kept.push_back(x);
        rows.push_back(*d.index_of(x));
    }
    std::vector<Bound> mat;
    mat.reserve(rows.size() * rows.size());
    for (std::size_t i : rows)
        for (std::size_t j : rows)
            mat.push_back(d.at(i, j));
    Zone next_domain = Zone::from_matrix(std::move(kept), std::move(mat)).canonicalize();

    for (TransitionId n : newly)
        next_domain = with_static_interval(net, next_domain.add_clock(n), n);
    return {std::move(next), next_domain.canonicalize()};
}

std::vector<Marking> ClassGraph::markings() const {
    std::vector<Marking> out;
    std::set<Marking> seen;
    for (const auto& c : classes)
        if (seen.insert(c.marking).second)
            out.push_back(c.marking);
    return out;
}

std::vector<MarkingEdge> ClassGraph::marking_edges() const {
    std::set<MarkingEdge> set;
    for (const auto& e : edges)
        set.emplace(classes[e.source].marking, e.transition, classes[e.target].marking);
    return {set.begin(), set.end()};
}

std::vector<MarkingEdge> marking_edges(const MarkingGraph& graph) {
    std::set<MarkingEdge> set;
    for (const auto& e : graph.edges)
        set.emplace(graph.nodes[e.source], e.transition, graph.nodes[e.target]);
    return {set.begin(), set.end()};
}

ClassGraph build_scg(const ScaledNet& net, const StopCriteria& criteria) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t class_cap = criteria.max_steps.value_or(kDefaultClassCap);
    ClassGraph g;
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    std::set<Marking> markings;

    auto key = [](const StateClass& c) { return MarkingHash{}(c.marking) ^ (c.domain.hash() << 1); };
    auto intern = [&](StateClass c) -> std::pair<std::size_t, bool> {
        auto& bucket = buckets[key(c)];
        for (std::size_t i : bucket)
            if (g.classes[i] == c)
                return {i, false};
        g.classes.push_back(std::move(c));
        bucket.push_back(g.classes.size() - 1);
        return {g.classes.size() - 1, true};
    };

    intern(initial_class(net));
    markings.insert(g.classes[0].marking);
    std::deque<std::size_t> waiting{0};
    bool token_cap = false;
    bool marking_cap = false;

    while (!waiting.empty()) {
        if (criteria.wall_timeout && std::chrono::steady_clock::now() - start > *criteria.wall_timeout) {
            g.status = ExploreStatus::Timeout;
            return g;
        }
        const std::size_t idx = waiting.front();
        waiting.pop_front();
        const StateClass current = g.classes[idx];
        for (TransitionId t : class_firable(current)) {
            StateClass next = class_successor(net, current, t);
            if (std::any_of(next.marking.tokens().begin(), next.marking.tokens().end(),
                            [&](Tokens n) { return n > criteria.max_tokens_per_place; })) {
                token_cap = true;
                continue;
            }
            if (!markings.count(next.marking)) {
                if (criteria.max_markings && markings.size() >= *criteria.max_markings) {
                    marking_cap = true;
                    continue;
                }
                markings.insert(next.marking);
            }
            auto [target, fresh] = intern(std::move(next));
            g.edges.push_back({idx, t, target});
            if (fresh) {
                if (g.classes.size() > class_cap) {
                    g.status = ExploreStatus::StepCapHit;
                    return g;
                }
                waiting.push_back(target);
            }
        }
    }
    if (marking_cap)
        g.status = ExploreStatus::MarkingCapHit;
    else if (token_cap)
        g.status = ExploreStatus::TokenCapHit;
    return g;
}

std::string class_graph_dot(const TimePetriNet& net, const ClassGraph& graph) {
    std::ostringstream out;
    out << "digraph state_classes {\n";
    for (std::size_t i = 0; i < graph.classes.size(); ++i) {
        out << "  C" << i << " [label=\"C" << i << ": " << graph.classes[i].marking.to_string()
            << "\\n" << graph.classes[i].domain.to_string() << "\"";
        if (i == 0)
            out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& e : graph.edges)
        out << "  C" << e.source << " -> C" << e.target << " [label=\""
            << net.transition(e.transition).name << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace tpn
