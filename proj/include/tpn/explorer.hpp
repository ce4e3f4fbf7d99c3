// ============================================================================
// tpn/explorer.hpp - forward zone-based state space exploration
// ============================================================================
//
// One iteration from a symbolic state (M, Z):
//
//   Z'  = future(Z) ∩ { x_i <= lft_i | t_i enabled in M }
//   t_i firable iff Z' ∩ { x_i >= eft_i } is non-empty
//   Z_i = k_approx((Z' ∩ { x_i >= eft_i })[newly enabled := 0])
//
// Each reachable marking keeps the list of zones it was entered with; a
// successor is explored only if its zone is not included in one of them.
//
// ============================================================================

#ifndef TPN_EXPLORER_HPP
#define TPN_EXPLORER_HPP

#include "tpn/net.hpp"
#include "tpn/predicate.hpp"
#include "tpn/zone.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tpn {

class ExplorerError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct StopCriteria {
    std::optional<std::size_t> max_markings;
    Tokens max_tokens_per_place = 255;
    std::optional<std::chrono::duration<double>> wall_timeout;

    // Diagnostics only: disabling k-approximation requires a step cap.
    bool k_approx = true;
    std::optional<std::size_t> max_steps;
};

enum class SearchOrder { Bfs, Dfs };

enum class ExploreStatus { Complete, MarkingCapHit, TokenCapHit, Timeout, StepCapHit };

std::string to_string(ExploreStatus status);

struct SymbolicState {
    Marking marking;
    Zone zone;
};

struct GraphEdge {
    std::size_t source;
    TransitionId transition;
    std::size_t target;

    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct MarkingGraph {
    std::vector<Marking> nodes;         // discovery order: M0, M1, ...
    std::vector<GraphEdge> edges;       // discovery order, no duplicates
    std::vector<std::vector<Zone>> zone_lists;
    std::vector<std::size_t> depth;     // fewest firings reaching each marking
    std::size_t initial = 0;

    std::optional<std::size_t> find(const Marking& m) const;
    std::size_t stored_zone_count() const;

    std::unordered_map<Marking, std::size_t, MarkingHash> index;
};

struct ExploreResult {
    MarkingGraph graph;
    ExploreStatus status = ExploreStatus::Complete;
    std::size_t steps = 0;
};

SymbolicState initial_state(const ScaledNet& net);

/// Largest zone reachable from `s` by letting time pass while the marking
/// stays legal.
Zone time_closure(const ScaledNet& net, const SymbolicState& s);

std::vector<TransitionId> firable(const ScaledNet& net, const SymbolicState& s);

/// Clock valuations at which `t` can fire from `s` (before any reset).
Zone firing_zone(const ScaledNet& net, const SymbolicState& s, TransitionId t);

SymbolicState successor(const ScaledNet& net, const SymbolicState& s, TransitionId t,
                        bool apply_k_approx = true);

ExploreResult explore(const ScaledNet& net, const StopCriteria& criteria = {},
                      SearchOrder order = SearchOrder::Bfs);

// ── Reachability ────────────────────────────────────────────────────────────

struct TimedTrace {
    struct Step {
        TransitionId transition;
        ClockInterval interval;  // value of the fired clock, scaled units
    };
    std::vector<Step> steps;
    std::int64_t scale = 1;

    /// One "fire <t> in [<lo>,<hi>]" line per step, in net time units.
    std::string to_string(const TimePetriNet& net) const;
};

enum class Verdict { Reachable, Unreachable, Unknown };

struct ReachabilityResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<TimedTrace> trace;
    ExploreStatus status = ExploreStatus::Complete;
    std::size_t markings = 0;
};

ReachabilityResult check_reachability(const ScaledNet& net, const MarkingPredicate& pred,
                                      const StopCriteria& criteria = {},
                                      SearchOrder order = SearchOrder::Bfs);

std::string format_interval(const ClockInterval& interval, std::int64_t scale);

/// DOT rendering with nodes "M<i>: (c1,c2,...)" and transition-labelled edges.
std::string marking_graph_dot(const TimePetriNet& net, const MarkingGraph& graph);

}  // namespace tpn

#endif  // TPN_EXPLORER_HPP
