// ============================================================================
// tpn/state_class.hpp - state class graph (firing domains)
// ============================================================================
//
// A class is a marking plus a firing domain: one variable per enabled
// transition, giving its firing time relative to the moment the class was
// entered. Domains reuse the zone representation; variable ids are
// transition ids.
//
// Used as an independent check on the zone-based explorer.
//
// ============================================================================

#ifndef TPN_STATE_CLASS_HPP
#define TPN_STATE_CLASS_HPP

#include "tpn/explorer.hpp"

#include <tuple>

namespace tpn {

struct StateClass {
    Marking marking;
    Zone domain;

    bool operator==(const StateClass& o) const {
        return marking == o.marking && domain.equals(o.domain);
    }
};

StateClass initial_class(const ScaledNet& net);

/// Transitions that can fire first from `c`.
std::vector<TransitionId> class_firable(const StateClass& c);

StateClass class_successor(const ScaledNet& net, const StateClass& c, TransitionId t);

struct ClassEdge {
    std::size_t source;
    TransitionId transition;
    std::size_t target;
};

using MarkingEdge = std::tuple<Marking, TransitionId, Marking>;

struct ClassGraph {
    std::vector<StateClass> classes;
    std::vector<ClassEdge> edges;
    ExploreStatus status = ExploreStatus::Complete;

    /// Distinct markings in discovery order.
    std::vector<Marking> markings() const;
    /// Edges projected on markings, sorted, without duplicates.
    std::vector<MarkingEdge> marking_edges() const;
};

/// Classes are merged only when equal. Without `criteria.max_steps` the class
/// count is capped at kDefaultClassCap.
inline constexpr std::size_t kDefaultClassCap = 1'000'000;

ClassGraph build_scg(const ScaledNet& net, const StopCriteria& criteria = {});

std::vector<MarkingEdge> marking_edges(const MarkingGraph& graph);

std::string class_graph_dot(const TimePetriNet& net, const ClassGraph& graph);

}  // namespace tpn

#endif  // TPN_STATE_CLASS_HPP
