#include "support.hpp"

#include "oracles/brute_force.hpp"
#include "oracles/zone_oracle.hpp"

#include "tpn/generators.hpp"

#include <doctest.h>

using namespace tpn;
using support::marking;

TEST_CASE("brute force on fig1") {
    const auto r = oracle::brute_force(support::bundled("fig1"), 3);
    CHECK_FALSE(r.token_cap_hit);
    CHECK_FALSE(r.state_cap_hit);
    CHECK(r.depth.at(marking({1, 1, 0})) == 0);
    CHECK(r.depth.at(marking({0, 1, 0})) == 1);
    CHECK(r.depth.at(marking({1, 0, 1})) == 1);
    CHECK(r.depth.at(marking({0, 0, 1})) == 2);
    CHECK(r.markings().size() == 4);
    CHECK(r.markings(1).size() == 3);
}

TEST_CASE("brute force respects urgency") {
    NetBuilder b("race");
    b.place("P", 1);
    b.place("Q", 1);
    b.place("A");
    b.place("B");
    b.transition("early", 0, Rational(1));
    b.transition("late", 2, Rational(3));
    b.pre("P", "early");
    b.post("early", "A");
    b.pre("Q", "late");
    b.post("late", "B");
    const auto r = oracle::brute_force(scale_net(b.build()), 3);
    // late fires only after early, which cannot wait past 1
    CHECK(r.markings() == std::set<Marking>{marking({1, 1, 0, 0}), marking({0, 1, 1, 0}),
                                            marking({0, 0, 1, 1})});
}

TEST_CASE("zone oracle") {
    const Zone z = Zone::universe({0, 1})
                       .constrain(ClockConstraint::upper(0, Bound::weak(2)))
                       .constrain(ClockConstraint::difference(1, 0, Bound::strict(1)));
    CHECK(oracle::member(z, {8, 11}));
    CHECK_FALSE(oracle::member(z, {8, 12}));
    CHECK_FALSE(oracle::member(z, {9, 0}));

    const auto past = oracle::past_closure(z);
    CHECK(past.contains({9, 2}));
    CHECK_FALSE(past.contains({9, 0}));
    CHECK(past.contains({40, 41}));
    CHECK_FALSE(past.contains({40, 44}));

    const auto drop_x = oracle::projection(z, {0});
    CHECK(drop_x.contains({0, 11}));
    CHECK_FALSE(drop_x.contains({0, 12}));

    CHECK(oracle::included(z, z.future()));
    CHECK_FALSE(oracle::included(z.future(), z));
    CHECK(oracle::meets_region(z, {2, 6}, 1));
    CHECK_FALSE(oracle::meets_region(z, {0, 10}, 1));
    CHECK_FALSE(oracle::Polyhedron::of(z.constrain(ClockConstraint::lower(0, 3))).feasible());
}
