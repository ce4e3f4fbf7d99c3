// ============================================================================
// tpn/concrete.hpp - concrete timed semantics of a net
// ============================================================================
//
// States pair a marking with one clock value per transition (only the values
// of enabled transitions are meaningful; others are kept at 0). Time is
// measured in the scaled units of the ScaledNet, as exact rationals.
//
//   delay d  allowed iff v(t) + d <= lft(t) for every enabled t
//   fire t   allowed iff t enabled and eft(t) <= v(t)
//
// ============================================================================

#ifndef TPN_CONCRETE_HPP
#define TPN_CONCRETE_HPP

#include "tpn/net.hpp"

#include <optional>
#include <vector>

namespace tpn {

struct NetState {
    Marking marking;
    std::vector<Rational> clocks;  // indexed by transition

    friend bool operator==(const NetState&, const NetState&) = default;
};

NetState initial_net_state(const ScaledNet& net);

/// Largest legal delay; nullopt when time may pass forever.
std::optional<Rational> max_delay(const ScaledNet& net, const NetState& s);

bool can_delay(const ScaledNet& net, const NetState& s, const Rational& d);
NetState delay(const ScaledNet& net, const NetState& s, const Rational& d);

bool can_fire(const ScaledNet& net, const NetState& s, TransitionId t);
std::vector<TransitionId> concrete_firable(const ScaledNet& net, const NetState& s);
NetState fire(const ScaledNet& net, const NetState& s, TransitionId t);

}  // namespace tpn

#endif  // TPN_CONCRETE_HPP
