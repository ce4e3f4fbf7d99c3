#include "tpn/cross_simulation.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tpn {

std::uint64_t run_seed(std::uint64_t master, std::size_t index) {
    // splitmix64 step
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

constexpr std::size_t kMaxSamples = 10;

std::string show(const Rational& r) { return format_rational(r); }

std::string show(const std::optional<Rational>& r) { return r ? show(*r) : "inf"; }

class Run {
public:
    Run(const ScaledNet& net, const TimedAutomaton& ta, std::uint64_t seed, bool net_driven)
        : net_(net), ta_(ta), rng_(seed), net_driven_(net_driven) {}

    /// Empty string when the run completes without divergence.
    std::string play(std::size_t depth, std::size_t& moves) {
        NetState ns = initial_net_state(net_);
        TaState ts = initial_ta_state(ta_);
        if (auto diff = compare(ns, ts); !diff.empty())
            return "initial state: " + diff;
        for (std::size_t step = 0; step < depth; ++step) {
            const auto net_max = max_delay(net_, ns);
            const auto ta_max = ta_max_delay(ta_, ts);
            if (net_max != ta_max)
                return at(step) + "maximal delay " + show(net_max) + " on the net, " +
                       show(ta_max) + " on the automaton";

            const Rational d = pick_delay(ns, ts, net_max);
            auto delayed = ta_step(ta_, ts, Delay{d});
            if (!can_delay(net_, ns, d) || delayed.empty())
                return at(step) + "delay " + show(d) + " accepted by one side only";
            ns = delay(net_, ns, d);
            ts = delayed.front();
            ++moves;
            if (auto diff = compare(ns, ts); !diff.empty())
                return at(step) + "after delay " + show(d) + ": " + diff;

            const auto net_fire = concrete_firable(net_, ns);
            const auto ta_fire = ta_enabled_actions(ta_, ts);
            if (net_fire != ta_fire)
                return at(step) + "firable sets differ: net {" + names(net_fire) +
                       "}, automaton {" + names(ta_fire) + "}";
            if (net_fire.empty())
                return {};

            const TransitionId t = net_fire[pick(net_fire.size())];
            NetState next_net = fire(net_, ns, t);
            auto next_ta = ta_step(ta_, ts, Action{t});
            if (next_ta.empty())
                return at(step) + "action " + net_.net().transition(t).name +
                       " blocked on the automaton";
            // a deterministic automaton has one successor; otherwise, the
            // driving side picks and the other must match it
            std::optional<TaState> matched;
            if (net_driven_) {
                for (const auto& cand : next_ta)
                    if (compare(next_net, cand).empty()) {
                        matched = cand;
                        break;
                    }
            } else {
                const auto& cand = next_ta[pick(next_ta.size())];
                if (compare(next_net, cand).empty())
                    matched = cand;
            }
            if (!matched)
                return at(step) + "after firing " + net_.net().transition(t).name + ": " +
                       compare(next_net, next_ta.front());
            ns = std::move(next_net);
            ts = std::move(*matched);
            ++moves;
        }
        return {};
    }

private:
    std::string at(std::size_t step) const {
        return "step " + std::to_string(step) + (net_driven_ ? " (net-driven): " : " (automaton-driven): ");
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    std::string names(const std::vector<TransitionId>& ts) const {
        std::string out;
        for (TransitionId t : ts)
            out += (out.empty() ? "" : ",") + net_.net().transition(t).name;
        return out;
    }

    Rational pick_delay(const NetState& ns, const TaState& ts, const std::optional<Rational>& limit) {
        std::vector<Rational> candidates{Rational(0)};
        auto consider = [&](const Rational& d) {
            if (d > 0 && (!limit || d <= *limit))
                candidates.push_back(d);
        };
        if (limit)
            consider(*limit);
        if (net_driven_) {
            for (TransitionId t : enabled(net_.net(), ns.marking))
                consider(Rational(net_.eft[t]) - ns.clocks[t]);
        } else {
            for (const auto& e : ta_.edges)
                if (e.source == ts.location)
                    for (const auto& a : e.guard)
                        consider(Rational(a.constant) - ts.valuation[a.clock]);
        }
        const Rational span = limit ? *limit : Rational(net_.k + 2);
        const auto quarters = boost::rational_cast<double>(span) * 4;
        const auto q = std::uniform_int_distribution<std::int64_t>(
            0, static_cast<std::int64_t>(quarters))(rng_);
        consider(Rational(q, 4));
        return candidates[pick(candidates.size())];
    }

    std::string compare(const NetState& ns, const TaState& ts) const {
        const TaLocation& loc = ta_.locations[ts.location];
        if (loc.marking != ns.marking)
            return "marking " + ns.marking.to_string() + " on the net, location " + loc.name + " " +
                   loc.marking.to_string();
        for (TransitionId t : enabled(net_.net(), ns.marking)) {
            const auto& c = loc.clock_of[t];
            if (c && ts.valuation[*c] != ns.clocks[t])
                return "clock of " + net_.net().transition(t).name + " is " + show(ns.clocks[t]) +
                       " on the net, " + ta_.clocks[*c] + " = " + show(ts.valuation[*c]) +
                       " in " + loc.name;
        }
        return {};
    }

    const ScaledNet& net_;
    const TimedAutomaton& ta_;
    std::mt19937_64 rng_;
    bool net_driven_;
};

}  // namespace

SimulationReport cross_simulate(const ScaledNet& net, const TimedAutomaton& ta, std::size_t runs,
                                std::size_t depth, std::uint64_t seed) {
    SimulationReport report;
    for (std::size_t i = 0; i < runs; ++i) {
        Run run(net, ta, run_seed(seed, i), i % 2 == 0);
        const std::string diff = run.play(depth, report.moves);
        ++report.runs;
        if (diff.empty())
            continue;
        ++report.divergences;
        if (report.samples.size() < kMaxSamples)
            report.samples.push_back("run " + std::to_string(i) + ", " + diff);
    }
    return report;
}

}  // namespace tpn
