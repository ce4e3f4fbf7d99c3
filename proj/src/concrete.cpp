#include "tpn/concrete.hpp"

#include <stdexcept>

namespace tpn {

NetState initial_net_state(const ScaledNet& net) {
    return {net.net().initial_marking(),
            std::vector<Rational>(net.net().transition_count(), Rational(0))};
}

std::optional<Rational> max_delay(const ScaledNet& net, const NetState& s) {
    std::optional<Rational> best;
    for (TransitionId t : enabled(net.net(), s.marking)) {
        if (!net.lft[t])
            continue;
        const Rational room = Rational(*net.lft[t]) - s.clocks[t];
        if (!best || room < *best)
            best = room;
    }
    return best;
}

bool can_delay(const ScaledNet& net, const NetState& s, const Rational& d) {
    if (d < 0)
        return false;
    const auto limit = max_delay(net, s);
    return !limit || d <= *limit;
}

NetState delay(const ScaledNet& net, const NetState& s, const Rational& d) {
    if (!can_delay(net, s, d))
        throw std::logic_error("delay not allowed");
    NetState out = s;
    for (TransitionId t : enabled(net.net(), s.marking))
        out.clocks[t] += d;
    return out;
}

bool can_fire(const ScaledNet& net, const NetState& s, TransitionId t) {
    return net.net().is_enabled(s.marking, t) && s.clocks[t] >= Rational(net.eft[t]);
}

std::vector<TransitionId> concrete_firable(const ScaledNet& net, const NetState& s) {
    std::vector<TransitionId> out;
    for (TransitionId t : enabled(net.net(), s.marking))
        if (s.clocks[t] >= Rational(net.eft[t]))
            out.push_back(t);
    return out;
}

NetState fire(const ScaledNet& net, const NetState& s, TransitionId t) {
    if (!can_fire(net, s, t))
        throw FiredNotEnabled(net.net().transition(t).name);
    NetState out = s;
    out.marking = fire_marking(net.net(), s.marking, t);
    for (TransitionId n : newly_enabled(net.net(), s.marking, t))
        out.clocks[n] = 0;
    for (TransitionId u = 0; u < net.net().transition_count(); ++u)
        if (!net.net().is_enabled(out.marking, u))
            out.clocks[u] = 0;
    return out;
}

}  // namespace tpn
