// ============================================================================
// tpn/generators.hpp - net families used by the tests and bundled examples
// ============================================================================

#ifndef TPN_GENERATORS_HPP
#define TPN_GENERATORS_HPP

#include "tpn/net.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace tpn {

/// Incremental construction by name.
class NetBuilder {
public:
    explicit NetBuilder(std::string name) : name_(std::move(name)) {}

    PlaceId place(const std::string& name, Tokens init = 0);
    TransitionId transition(const std::string& name, Rational eft, std::optional<Rational> lft);
    void pre(const std::string& place, const std::string& transition, Tokens weight = 1);
    void post(const std::string& transition, const std::string& place, Tokens weight = 1);

    TimePetriNet build() const;

private:
    std::string name_;
    std::vector<std::string> places_;
    std::vector<Tokens> init_;
    std::vector<std::string> transitions_;
    std::vector<std::pair<Rational, std::optional<Rational>>> intervals_;
    std::map<std::pair<std::size_t, std::size_t>, Tokens> pre_, post_;  // (t, p)
};

struct RandomNetParams {
    std::size_t max_places = 5;
    std::size_t max_transitions = 5;
    std::int64_t max_bound = 3;
    bool finite_lft = true;
};

/// Small connected-ish net with integer bounds, deterministic in `seed`.
TimePetriNet random_net(std::uint64_t seed, const RandomNetParams& params = {});

/// Level crossing: controller, barrier and `trains` trains, fused on the
/// App/Exit/Down/Up transitions (one fused transition per controller
/// variant and train).
TimePetriNet level_crossing(std::size_t trains);

/// Producer and consumer around a buffer of `capacity` slots.
TimePetriNet producer_consumer(std::size_t capacity);

}  // namespace tpn

#endif  // TPN_GENERATORS_HPP
