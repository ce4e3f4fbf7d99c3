// ============================================================================
// tpn/timed_automaton.hpp - the marking timed automaton and its semantics
// ============================================================================
//
// One location per reachable marking, one edge per marking-graph edge:
//
//   Inv(M)          = { x_t <= lft(t) | t enabled in M, lft(t) finite }
//   M --t--> M'     guard x_t >= eft(t), resets the newly enabled clocks
//
// Constants are in the scaled units of the source net.
//
// ============================================================================

#ifndef TPN_TIMED_AUTOMATON_HPP
#define TPN_TIMED_AUTOMATON_HPP

#include "tpn/explorer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tpn {

class IncompleteGraph : public std::runtime_error {
public:
    explicit IncompleteGraph(ExploreStatus status)
        : std::runtime_error("marking graph is incomplete (" + to_string(status) + ")") {}
};

enum class ClockRel { Le, Lt, Ge, Gt };

struct ClockAtom {
    std::size_t clock;
    ClockRel rel;
    std::int64_t constant;

    bool holds(const Rational& v) const;
    /// x >= 0
    bool is_vacuous() const { return rel == ClockRel::Ge && constant == 0; }

    friend bool operator==(const ClockAtom&, const ClockAtom&) = default;
};

/// target := 0, or target := source when a source clock is given.
struct Assignment {
    std::size_t target;
    std::optional<std::size_t> source;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct TaLocation {
    std::string name;
    Marking marking;
    std::vector<ClockAtom> invariant;
    /// Clock measuring each transition's enabling time here (indexed by
    /// transition); empty when the transition is disabled or its clock
    /// carries no information.
    std::vector<std::optional<std::size_t>> clock_of;
};

struct TaEdge {
    std::size_t source;
    std::size_t target;
    TransitionId label;
    std::vector<ClockAtom> guard;
    std::vector<Assignment> assignments;  // applied in order
};

struct TimedAutomaton {
    std::vector<std::string> clocks;
    std::vector<std::string> actions;  // indexed by TransitionId
    std::vector<TaLocation> locations;
    std::vector<TaEdge> edges;
    std::size_t initial = 0;

    bool has_copies() const;
};

TimedAutomaton build_marking_ta(const ScaledNet& net, const ExploreResult& explored);

// ── Semantics ───────────────────────────────────────────────────────────────

struct TaState {
    std::size_t location;
    std::vector<Rational> valuation;

    friend bool operator==(const TaState&, const TaState&) = default;
};

struct Delay {
    Rational amount;
};
struct Action {
    TransitionId label;
};
using TaMove = std::variant<Delay, Action>;

TaState initial_ta_state(const TimedAutomaton& ta);

bool invariant_holds(const TimedAutomaton& ta, std::size_t location,
                     const std::vector<Rational>& valuation);

/// Largest delay allowed by the invariant of the current location; nullopt
/// when unbounded.
std::optional<Rational> ta_max_delay(const TimedAutomaton& ta, const TaState& s);

/// Every successor of `s` under `move`; empty when the move is blocked.
std::vector<TaState> ta_step(const TimedAutomaton& ta, const TaState& s, const TaMove& move);

/// Labels with at least one enabled edge from `s`, sorted, without duplicates.
std::vector<TransitionId> ta_enabled_actions(const TimedAutomaton& ta, const TaState& s);

}  // namespace tpn

#endif  // TPN_TIMED_AUTOMATON_HPP
