#include "tpn/generators.hpp"

#include <algorithm>
#include <random>

namespace tpn {

PlaceId NetBuilder::place(const std::string& name, Tokens init) {
    places_.push_back(name);
    init_.push_back(init);
    return static_cast<PlaceId>(places_.size() - 1);
}

TransitionId NetBuilder::transition(const std::string& name, Rational eft,
                                    std::optional<Rational> lft) {
    transitions_.push_back(name);
    intervals_.emplace_back(eft, lft);
    return static_cast<TransitionId>(transitions_.size() - 1);
}

namespace {

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw ValidationError("unknown name '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

void NetBuilder::pre(const std::string& place, const std::string& transition, Tokens weight) {
    pre_[{index_of(transitions_, transition), index_of(places_, place)}] += weight;
}

void NetBuilder::post(const std::string& transition, const std::string& place, Tokens weight) {
    post_[{index_of(transitions_, transition), index_of(places_, place)}] += weight;
}

TimePetriNet NetBuilder::build() const {
    std::vector<Transition> ts;
    for (std::size_t t = 0; t < transitions_.size(); ++t) {
        Transition tr{transitions_[t], std::vector<Tokens>(places_.size(), 0),
                      std::vector<Tokens>(places_.size(), 0), intervals_[t].first,
                      intervals_[t].second};
        ts.push_back(std::move(tr));
    }
    for (const auto& [key, w] : pre_)
        ts[key.first].pre[key.second] = w;
    for (const auto& [key, w] : post_)
        ts[key.first].post[key.second] = w;
    return TimePetriNet(name_, places_, std::move(ts), Marking(init_));
}

TimePetriNet random_net(std::uint64_t seed, const RandomNetParams& params) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto places = static_cast<std::size_t>(uniform(2, static_cast<std::int64_t>(params.max_places)));
    const auto transitions =
        static_cast<std::size_t>(uniform(2, static_cast<std::int64_t>(params.max_transitions)));

    std::vector<Tokens> init(places, 0);
    init[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(places) - 1))] = 1;
    for (std::size_t p = 0; p < places; ++p)
        if (uniform(0, 3) == 0)
            init[p] += 1;

    NetBuilder out("random" + std::to_string(seed));
    for (std::size_t p = 0; p < places; ++p)
        out.place("P" + std::to_string(p + 1), init[p]);
    auto place_name = [&]() {
        return "P" + std::to_string(uniform(1, static_cast<std::int64_t>(places)));
    };
    for (std::size_t t = 0; t < transitions; ++t) {
        const std::string name = "T" + std::to_string(t + 1);
        const std::int64_t eft = uniform(0, params.max_bound);
        std::optional<Rational> lft;
        if (params.finite_lft || uniform(0, 3) != 0)
            lft = Rational(uniform(eft, params.max_bound));
        out.transition(name, Rational(eft), lft);
        const auto pres = uniform(1, 2);
        for (std::int64_t i = 0; i < pres; ++i)
            out.pre(place_name(), name);
        const auto posts = uniform(0, 2);
        for (std::int64_t i = 0; i < posts; ++i)
            out.post(name, place_name());
    }
    return out.build();
}

TimePetriNet level_crossing(std::size_t trains) {
    if (trains < 2)
        throw std::invalid_argument("the level crossing needs at least two trains");
    const auto n = static_cast<Tokens>(trains);
    const std::optional<Rational> inf;
    NetBuilder b("gate" + std::to_string(trains));

    // controller
    b.place("far", n);
    b.place("in");
    b.place("Coming");
    b.place("Leaving");
    // barrier
    b.place("Open", 1);
    b.place("Lowering");
    b.place("Raising");
    b.place("Closed");
    for (std::size_t i = 1; i <= trains; ++i) {
        const std::string k = std::to_string(i);
        b.place("Far" + k, 1);
        b.place("Close" + k);
        b.place("On" + k);
        b.place("Left" + k);
    }

    for (std::size_t i = 1; i <= trains; ++i) {
        const std::string k = std::to_string(i);
        // first train to approach: all trains far
        b.transition("App" + k + "a", 0, inf);
        b.pre("Far" + k, "App" + k + "a");
        b.pre("far", "App" + k + "a", n);
        b.post("App" + k + "a", "Close" + k);
        b.post("App" + k + "a", "Coming");
        b.post("App" + k + "a", "in");
        b.post("App" + k + "a", "far", n - 1);
        // another train already in
        b.transition("App" + k + "b", 0, inf);
        b.pre("Far" + k, "App" + k + "b");
        b.pre("far", "App" + k + "b");
        b.pre("in", "App" + k + "b");
        b.post("App" + k + "b", "Close" + k);
        b.post("App" + k + "b", "in", 2);

        b.transition("In" + k, 3, Rational(5));
        b.pre("Close" + k, "In" + k);
        b.post("In" + k, "On" + k);
        b.transition("Ex" + k, 2, Rational(4));
        b.pre("On" + k, "Ex" + k);
        b.post("Ex" + k, "Left" + k);

        // another train still in
        b.transition("Exit" + k + "a", 0, Rational(0));
        b.pre("Left" + k, "Exit" + k + "a");
        b.pre("in", "Exit" + k + "a", 2);
        b.post("Exit" + k + "a", "Far" + k);
        b.post("Exit" + k + "a", "far");
        b.post("Exit" + k + "a", "in");
        // last train leaving
        b.transition("Exit" + k + "b", 0, Rational(0));
        b.pre("Left" + k, "Exit" + k + "b");
        b.pre("in", "Exit" + k + "b");
        b.pre("far", "Exit" + k + "b", n - 1);
        b.post("Exit" + k + "b", "Far" + k);
        b.post("Exit" + k + "b", "far", n);
        b.post("Exit" + k + "b", "Leaving");
    }

    b.transition("DownOpen", 0, Rational(0));
    b.pre("Coming", "DownOpen");
    b.pre("Open", "DownOpen");
    b.post("DownOpen", "Lowering");
    b.transition("DownRaising", 0, Rational(0));
    b.pre("Coming", "DownRaising");
    b.pre("Raising", "DownRaising");
    b.post("DownRaising", "Lowering");
    b.transition("Up", 0, Rational(0));
    b.pre("Leaving", "Up");
    b.pre("Closed", "Up");
    b.post("Up", "Raising");
    b.transition("L", 1, Rational(2));
    b.pre("Lowering", "L");
    b.post("L", "Closed");
    b.transition("R", 1, Rational(2));
    b.pre("Raising", "R");
    b.post("R", "Open");
    return b.build();
}

TimePetriNet producer_consumer(std::size_t capacity) {
    NetBuilder b("prodcons" + std::to_string(capacity));
    b.place("Idle", 1);
    b.place("Ready");
    b.place("Buffer");
    b.place("Slots", static_cast<Tokens>(capacity));
    b.place("Waiting", 1);
    b.place("Busy");
    b.transition("Produce", 1, Rational(2));
    b.pre("Idle", "Produce");
    b.post("Produce", "Ready");
    b.transition("Put", 0, Rational(1));
    b.pre("Ready", "Put");
    b.pre("Slots", "Put");
    b.post("Put", "Idle");
    b.post("Put", "Buffer");
    b.transition("Get", 0, Rational(1));
    b.pre("Buffer", "Get");
    b.pre("Waiting", "Get");
    b.post("Get", "Busy");
    b.post("Get", "Slots");
    b.transition("Consume", 1, Rational(3));
    b.pre("Busy", "Consume");
    b.post("Consume", "Waiting");
    return b.build();
}

}  // namespace tpn
