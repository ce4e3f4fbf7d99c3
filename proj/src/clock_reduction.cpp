#include "tpn/clock_reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tpn {

namespace {

void add_reads(const std::vector<ClockAtom>& atoms, std::set<std::size_t>& out) {
    for (const auto& a : atoms)
        if (!a.is_vacuous())
            out.insert(a.clock);
}

/// Clocks whose value before `assignments` flows into `live` after them.
std::set<std::size_t> live_before(const std::vector<Assignment>& assignments,
                                  std::set<std::size_t> live) {
    for (auto it = assignments.rbegin(); it != assignments.rend(); ++it) {
        const bool needed = live.erase(it->target) > 0;
        if (needed && it->source)
            live.insert(*it->source);
    }
    return live;
}

/// Parallel copy new[dst] = old[src] as a sequence, using `scratch` to break
/// cycles.
std::vector<Assignment> sequentialize(std::map<std::size_t, std::size_t> pending,
                                      std::size_t scratch, bool& used_scratch) {
    std::vector<Assignment> out;
    while (!pending.empty()) {
        bool progressed = false;
        for (auto it = pending.begin(); it != pending.end();) {
            const std::size_t dst = it->first;
            const bool read_later = std::any_of(pending.begin(), pending.end(), [&](const auto& p) {
                return p.first != dst && p.second == dst;
            });
            if (read_later) {
                ++it;
                continue;
            }
            out.push_back({dst, it->second});
            it = pending.erase(it);
            progressed = true;
        }
        if (progressed)
            continue;
        // only cycles remain: park one source in the scratch clock
        auto first = pending.begin();
        const std::size_t parked = first->second;
        out.push_back({scratch, parked});
        used_scratch = true;
        for (auto& p : pending)
            if (p.second == parked)
                p.second = scratch;
    }
    return out;
}

}  // namespace

std::vector<std::set<std::size_t>> active_clocks(const TimedAutomaton& ta) {
    const std::size_t n = ta.locations.size();
    std::vector<std::set<std::size_t>> act(n);
    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t i = 0; i < ta.edges.size(); ++i)
        incoming[ta.edges[i].target].push_back(i);

    for (std::size_t l = 0; l < n; ++l)
        add_reads(ta.locations[l].invariant, act[l]);
    for (const auto& e : ta.edges)
        add_reads(e.guard, act[e.source]);

    std::deque<std::size_t> work;
    std::vector<bool> queued(n, true);
    for (std::size_t l = 0; l < n; ++l)
        work.push_back(l);
    while (!work.empty()) {
        const std::size_t l = work.front();
        work.pop_front();
        queued[l] = false;
        for (std::size_t ei : incoming[l]) {
            const auto& e = ta.edges[ei];
            bool grew = false;
            for (std::size_t c : live_before(e.assignments, act[l]))
                grew |= act[e.source].insert(c).second;
            if (grew && !queued[e.source]) {
                queued[e.source] = true;
                work.push_back(e.source);
            }
        }
    }
    return act;
}

ReductionResult reduce_clocks(const TimedAutomaton& ta) {
    const std::size_t n = ta.locations.size();
    const auto act = active_clocks(ta);

    std::vector<std::vector<std::size_t>> out_edges(n);
    for (std::size_t i = 0; i < ta.edges.size(); ++i)
        out_edges[ta.edges[i].source].push_back(i);

    // BFS order from the initial location; unreachable locations follow.
    std::vector<std::size_t> order;
    std::vector<std::optional<std::size_t>> parent(n);
    std::vector<bool> seen(n, false);
    auto bfs_from = [&](std::size_t root) {
        std::deque<std::size_t> q{root};
        seen[root] = true;
        while (!q.empty()) {
            const std::size_t l = q.front();
            q.pop_front();
            order.push_back(l);
            for (std::size_t ei : out_edges[l]) {
                const std::size_t t = ta.edges[ei].target;
                if (!seen[t]) {
                    seen[t] = true;
                    parent[t] = l;
                    q.push_back(t);
                }
            }
        }
    };
    if (n > 0)
        bfs_from(ta.initial);
    for (std::size_t l = 0; l < n; ++l)
        if (!seen[l])
            bfs_from(l);

    // greedy first-fit, preferring the slot the BFS parent used
    std::vector<std::map<std::size_t, std::size_t>> slot(n);
    std::size_t pool = 0;
    for (std::size_t l : order) {
        std::set<std::size_t> used;
        for (std::size_t c : act[l]) {
            if (!parent[l])
                continue;
            auto it = slot[*parent[l]].find(c);
            if (it != slot[*parent[l]].end() && !used.count(it->second)) {
                slot[l][c] = it->second;
                used.insert(it->second);
            }
        }
        std::size_t next = 0;
        for (std::size_t c : act[l]) {
            if (slot[l].count(c))
                continue;
            while (used.count(next))
                ++next;
            slot[l][c] = next;
            used.insert(next);
        }
        for (const auto& [c, s] : slot[l])
            pool = std::max(pool, s + 1);
    }

    ReductionResult result;
    result.original = ta.clocks.size();
    TimedAutomaton& out = result.automaton;
    out.actions = ta.actions;
    out.initial = ta.initial;

    auto rename_atoms = [&](const std::vector<ClockAtom>& atoms, std::size_t l) {
        std::vector<ClockAtom> renamed;
        for (const auto& a : atoms) {
            if (a.is_vacuous() && !slot[l].count(a.clock))
                continue;  // x >= 0 on an inactive clock
            renamed.push_back({slot[l].at(a.clock), a.rel, a.constant});
        }
        return renamed;
    };

    for (std::size_t l = 0; l < n; ++l) {
        TaLocation loc = ta.locations[l];
        loc.invariant = rename_atoms(ta.locations[l].invariant, l);
        for (auto& c : loc.clock_of) {
            if (!c)
                continue;
            auto it = slot[l].find(*c);
            c = it == slot[l].end() ? std::nullopt : std::optional<std::size_t>(it->second);
        }
        out.locations.push_back(std::move(loc));
    }

    const std::size_t scratch = pool;
    bool used_scratch = false;
    for (const auto& e : ta.edges) {
        TaEdge edge{e.source, e.target, e.label, rename_atoms(e.guard, e.source), {}};
        // value flowing into each active target clock: a source clock or zero
        std::map<std::size_t, std::optional<std::size_t>> current;
        auto origin_of = [&](std::size_t c) -> std::optional<std::size_t> {
            auto it = current.find(c);
            return it == current.end() ? std::optional<std::size_t>(c) : it->second;
        };
        for (const auto& a : e.assignments)
            current[a.target] = a.source ? origin_of(*a.source) : std::nullopt;
        std::map<std::size_t, std::optional<std::size_t>> origin;
        for (std::size_t c : act[e.target])
            origin[c] = origin_of(c);
        std::map<std::size_t, std::size_t> copies;
        std::vector<Assignment> resets;
        for (const auto& [c, src] : origin) {
            const std::size_t dst = slot[e.target].at(c);
            if (!src)
                resets.push_back({dst, std::nullopt});
            else if (slot[e.source].at(*src) != dst)
                copies[dst] = slot[e.source].at(*src);
        }
        edge.assignments = sequentialize(std::move(copies), scratch, used_scratch);
        edge.assignments.insert(edge.assignments.end(), resets.begin(), resets.end());
        out.edges.push_back(std::move(edge));
    }

    const std::size_t total = pool + (used_scratch ? 1 : 0);
    for (std::size_t i = 0; i < total; ++i)
        out.clocks.push_back("c" + std::to_string(i));
    result.reduced = total;
    return result;
}

}  // namespace tpn
