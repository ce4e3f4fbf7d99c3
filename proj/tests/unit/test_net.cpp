#include "support.hpp"

#include "tpn/generators.hpp"

#include <doctest.h>

using namespace tpn;
using support::marking;

namespace {

TimePetriNet two_place_net() {
    NetBuilder b("tiny");
    b.place("A", 1);
    b.place("B");
    b.transition("t", 0, Rational(1));
    b.pre("A", "t");
    b.post("t", "B");
    b.transition("u", 0, Rational(1));
    b.pre("B", "u");
    return b.build();
}

}  // namespace

TEST_CASE("enabled transitions of fig1") {
    const auto net = support::bundled("fig1");
    CHECK(enabled(net.net(), marking({1, 1, 0})) == std::vector<TransitionId>{0, 1});
    CHECK(enabled(net.net(), marking({1, 0, 1})) == std::vector<TransitionId>{0, 2});
    CHECK(enabled(net.net(), marking({0, 0, 0})).empty());
}

TEST_CASE("newly enabled transitions") {
    const auto net = support::bundled("fig1");
    CHECK(newly_enabled(net.net(), marking({1, 1, 0}), 1) == std::vector<TransitionId>{2});
    CHECK(newly_enabled(net.net(), marking({0, 0, 1}), 2) == std::vector<TransitionId>{1});
    CHECK(newly_enabled(net.net(), marking({1, 1, 0}), 0).empty());
    CHECK_THROWS_AS(newly_enabled(net.net(), marking({0, 1, 0}), 0), FiredNotEnabled);
}

TEST_CASE("a transition still enabled after firing is newly enabled") {
    NetBuilder b("loop");
    b.place("P", 1);
    b.transition("t", 1, Rational(1));
    b.pre("P", "t");
    b.post("t", "P");
    const auto net = b.build();
    CHECK(newly_enabled(net, marking({1}), 0) == std::vector<TransitionId>{0});
    CHECK(fire_marking(net, marking({1}), 0) == marking({1}));
}

TEST_CASE("newly enabled excludes transitions enabled by the intermediate marking") {
    NetBuilder b("shared");
    b.place("P", 2);
    b.place("Q");
    b.transition("t", 0, Rational(1));
    b.pre("P", "t");
    b.post("t", "Q");
    b.transition("u", 0, Rational(1));
    b.pre("P", "u");
    const auto net = b.build();
    // P keeps one token after t fires, so u persists
    CHECK(newly_enabled(net, marking({2, 0}), 0) == std::vector<TransitionId>{0});
    // from a single token nothing stays enabled in between
    CHECK(newly_enabled(net, marking({1, 0}), 0).empty());
}

TEST_CASE("firing markings") {
    const auto net = support::bundled("fig1");
    CHECK(fire_marking(net.net(), marking({1, 1, 0}), 0) == marking({0, 1, 0}));
    CHECK(fire_marking(net.net(), marking({1, 1, 0}), 1) == marking({1, 0, 1}));
    CHECK_THROWS_AS(fire_marking(net.net(), marking({0, 0, 0}), 0), FiredNotEnabled);
}

TEST_CASE("enabledness after firing splits into persistent and newly enabled") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto net = random_net(seed);
        const Marking m0 = net.initial_marking();
        for (TransitionId t : enabled(net, m0)) {
            const Marking after = fire_marking(net, m0, t);
            const auto newly = newly_enabled(net, m0, t);
            const auto en = enabled(net, after);
            Marking mid = m0;
            for (PlaceId p = 0; p < net.place_count(); ++p)
                mid[p] -= net.transition(t).pre[p];
            for (TransitionId n : newly) {
                CHECK(std::find(en.begin(), en.end(), n) != en.end());
                if (n != t) {
                    CHECK_FALSE(net.is_enabled(mid, n));
                }
            }
        }
    }
}

TEST_CASE("scaling bounds") {
    const auto fig1 = support::bundled("fig1");
    CHECK(fig1.scale == 1);
    CHECK(fig1.k == 1);
    CHECK_FALSE(fig1.lft[0].has_value());

    NetBuilder b("halves");
    b.place("P", 1);
    b.transition("a", Rational(1, 2), Rational(3, 4));
    b.transition("b", 0, std::nullopt);
    b.pre("P", "a");
    b.pre("P", "b");
    const auto scaled = scale_net(b.build());
    CHECK(scaled.scale == 4);
    CHECK(scaled.eft == std::vector<std::int64_t>{2, 0});
    CHECK(scaled.lft[0] == 3);
    CHECK_FALSE(scaled.lft[1].has_value());
    CHECK(scaled.k == 3);
    CHECK(scaled.unscale(3) == Rational(3, 4));

    const auto again = scale_net(two_place_net());
    CHECK(again.scale == 1);
    CHECK(again.k == 1);
}

TEST_CASE("net validation") {
    Transition t{"t", {0}, {0}, Rational(2), Rational(1)};
    CHECK_THROWS_AS(TimePetriNet("bad", {"P"}, {t}, marking({0})), ValidationError);
    t.lft = Rational(3);
    CHECK_THROWS_AS(TimePetriNet("bad", {"P", "P"}, {}, marking({0, 0})), ValidationError);
    CHECK_THROWS_AS(TimePetriNet("bad", {"P"}, {t, t}, marking({0})), ValidationError);
    CHECK_NOTHROW(TimePetriNet("ok", {"P"}, {t}, marking({0})));
}

TEST_CASE("marking rendering") {
    CHECK(marking({1, 1, 0}).to_string() == "(1,1,0)");
    CHECK(marking({}).to_string() == "()");
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(2)) == "2");
}
