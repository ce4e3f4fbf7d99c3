// ============================================================================
// tpn/clock_reduction.hpp - activity-based clock reduction
// ============================================================================
//
// A clock is active at a location when its current value may still be read
// (by an invariant or a non-vacuous guard) before being reset:
//
//   act(l) = reads(l)  ∪  ⋃ over edges l --R--> l'  of  (act(l') \ R)
//
// Active clocks are renamed per location into a pool of size max |act(l)|;
// edges copy values between pool clocks where the renamings disagree.
//
// ============================================================================

#ifndef TPN_CLOCK_REDUCTION_HPP
#define TPN_CLOCK_REDUCTION_HPP

#include "tpn/timed_automaton.hpp"

#include <set>

namespace tpn {

/// Active clocks per location (least fixpoint).
std::vector<std::set<std::size_t>> active_clocks(const TimedAutomaton& ta);

struct ReductionResult {
    TimedAutomaton automaton;
    std::size_t original = 0;
    std::size_t reduced = 0;
};

ReductionResult reduce_clocks(const TimedAutomaton& ta);

}  // namespace tpn

#endif  // TPN_CLOCK_REDUCTION_HPP
