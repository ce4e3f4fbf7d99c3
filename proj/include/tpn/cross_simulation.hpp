// ============================================================================
// tpn/cross_simulation.hpp - randomized bisimulation check between a net and
// a timed automaton
// ============================================================================
//
// Runs alternate delays and firings. Even-numbered runs pick moves from the
// net, odd-numbered runs from the automaton; every move is replayed on the
// other side and the two states are compared through the locations'
// clock_of maps. Any move accepted by one side only, or any mismatch in
// marking, clock values, maximal delay or enabled actions, is a divergence.
//
// ============================================================================

#ifndef TPN_CROSS_SIMULATION_HPP
#define TPN_CROSS_SIMULATION_HPP

#include "tpn/concrete.hpp"
#include "tpn/timed_automaton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tpn {

struct SimulationReport {
    std::size_t runs = 0;
    std::size_t moves = 0;
    std::size_t divergences = 0;
    std::vector<std::string> samples;  // first few divergence descriptions

    bool ok() const { return divergences == 0; }
};

SimulationReport cross_simulate(const ScaledNet& net, const TimedAutomaton& ta, std::size_t runs,
                                std::size_t depth, std::uint64_t seed);

/// Seed of run `index` derived from the master seed.
std::uint64_t run_seed(std::uint64_t master, std::size_t index);

}  // namespace tpn

#endif  // TPN_CROSS_SIMULATION_HPP
