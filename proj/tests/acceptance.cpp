// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "oracles/brute_force.hpp"
#include "oracles/zone_oracle.hpp"

#include "tpn/clock_reduction.hpp"
#include "tpn/cross_simulation.hpp"
#include "tpn/generators.hpp"
#include "tpn/net_format.hpp"
#include "tpn/state_class.hpp"
#include "tpn/timed_automaton.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace tpn;

namespace {

// Limits, in seconds.
constexpr double kFig1Limit = 1.0;
constexpr double kCorpusLimit = 60.0;
constexpr double kGateLimit = 30.0;
constexpr double kDbmLimit = 30.0;

constexpr std::size_t kCorpusNets = 30;
constexpr Tokens kCorpusTokenCap = 3;
constexpr std::size_t kCorpusDepth = 8;
constexpr std::size_t kSimRuns = 1000;
constexpr std::size_t kSimDepth = 20;
constexpr std::uint64_t kSimSeed = 20260101;
constexpr std::size_t kDbmCases = 10000;
constexpr std::uint64_t kDbmSeed = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ScaledNet bundled(const std::string& name) {
    return scale_net(load_net(std::string(TPN_SOURCE_DIR) + "/nets/" + name + ".tpn"));
}

Marking marking(std::initializer_list<Tokens> tokens) { return Marking(std::vector<Tokens>(tokens)); }

/// Collects failed checks for one criterion.
class Criterion {
public:
    void check(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5)
            failures_.push_back(what);
        failed_ |= !ok;
    }
    void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
    bool passed() const { return !failed_; }

    std::string summary() const {
        std::string out = notes_;
        for (const auto& f : failures_)
            out += (out.empty() ? "" : "; ") + std::string("failed: ") + f;
        return out;
    }

private:
    bool failed_ = false;
    std::vector<std::string> failures_;
    std::string notes_;
};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", v);
    return buf;
}

// ── 1 ───────────────────────────────────────────────────────────────────────

void fig1_graph(Criterion& c) {
    const auto net = bundled("fig1");
    const auto start = Clock::now();
    const auto r = explore(net);
    const double t = seconds_since(start);
    c.check(r.status == ExploreStatus::Complete, "status " + to_string(r.status));
    c.check(r.graph.nodes.size() == 4, "4 markings");
    c.check(r.graph.edges.size() == 6, "6 edges");
    using E = std::tuple<Marking, std::string, Marking>;
    std::set<E> got;
    for (const auto& e : r.graph.edges)
        got.insert({r.graph.nodes[e.source], net.net().transition(e.transition).name,
                    r.graph.nodes[e.target]});
    const Marking a = marking({1, 1, 0}), b = marking({0, 1, 0}), m = marking({1, 0, 1}),
                  d = marking({0, 0, 1});
    const std::set<E> want{{a, "T1", b}, {a, "T2", m}, {b, "T2", d},
                           {m, "T1", d}, {m, "T3", a}, {d, "T3", b}};
    c.check(got == want, "edge set");
    c.check(t < kFig1Limit, "runtime");
    c.note(std::to_string(r.graph.nodes.size()) + " markings, " +
           std::to_string(r.graph.edges.size()) + " edges, " + fixed(t));
}

// ── 2 ───────────────────────────────────────────────────────────────────────

void first_zones(Criterion& c) {
    const auto net = bundled("fig1");
    const SymbolicState s0 = initial_state(net);
    const std::string closure = time_closure(net, s0).to_string();
    const std::string z1 = successor(net, s0, 0).zone.to_string();
    const SymbolicState s3 = successor(net, s0, 1);
    const std::string z3 = s3.zone.to_string();
    const std::string z3c = time_closure(net, s3).to_string();
    c.check(closure == "x1 = x2 & x1 <= 1", "closure of initial zone: " + closure);
    c.check(z1 == "x2 <= 1", "after T1: " + z1);
    c.check(z3 == "x1 = 1 & x3 = 0", "after T2: " + z3);
    c.check(z3c == "x1 - x3 = 1 & x3 <= 1", "closure after T2: " + z3c);
    c.note("4 renderings");
}

// ── 3 ───────────────────────────────────────────────────────────────────────

void nontermination(Criterion& c) {
    const auto net = bundled("fig1");
    StopCriteria raw;
    raw.k_approx = false;
    raw.max_steps = 50;
    const auto r = explore(net, raw);
    c.check(r.status == ExploreStatus::StepCapHit, "raw status " + to_string(r.status));
    const auto& zones = r.graph.zone_lists[0];
    std::size_t shaped = 0;
    for (std::int64_t j = 0; j <= 10; ++j) {
        const Zone want = Zone::universe({0, 1})
                              .constrain(ClockConstraint::lower(0, 2 * j))
                              .constrain(ClockConstraint::upper(0, Bound::weak(2 * j + 1)))
                              .constrain(ClockConstraint::difference(0, 1, Bound::weak(2 * j)))
                              .constrain(ClockConstraint::difference(1, 0, Bound::weak(-2 * j)));
        bool found = false;
        for (const auto& z : zones)
            found |= time_closure(net, {r.graph.nodes[0], z}).equals(want);
        c.check(found, "zone for j = " + std::to_string(j));
        shaped += found;
    }
    c.check(zones.size() >= 10, "at least 10 zones");
    const auto approx = explore(net);
    c.check(approx.status == ExploreStatus::Complete, "k-approx status " + to_string(approx.status));
    c.note(std::to_string(zones.size()) + " zones for M0, " + std::to_string(shaped) +
           " shapes j<=10, with k-approx " + to_string(approx.status));
}

// ── 4 ───────────────────────────────────────────────────────────────────────

std::string describe(const std::set<Marking>& s) {
    std::string out;
    for (const auto& m : s)
        out += m.to_string();
    return out;
}

void corpus_exactness(Criterion& c) {
    const auto start = Clock::now();
    StopCriteria criteria;
    criteria.max_tokens_per_place = kCorpusTokenCap;
    std::size_t capped = 0, total_markings = 0;
    for (std::uint64_t seed = 0; seed < kCorpusNets; ++seed) {
        const auto net = scale_net(random_net(seed));
        const std::string tag = "seed " + std::to_string(seed);
        const auto zones = explore(net, criteria);
        const auto classes = build_scg(net, criteria);
        const auto brute = oracle::brute_force(net, kCorpusTokenCap);
        c.check(!brute.state_cap_hit, tag + " brute force state cap");
        c.check(zones.status == ExploreStatus::Complete || zones.status == ExploreStatus::TokenCapHit,
                tag + " status " + to_string(zones.status));
        capped += zones.status == ExploreStatus::TokenCapHit;

        const std::set<Marking> explored(zones.graph.nodes.begin(), zones.graph.nodes.end());
        const auto cm = classes.markings();
        const std::set<Marking> scg(cm.begin(), cm.end());
        const std::set<Marking> concrete = brute.markings();
        c.check(explored == scg, tag + " zones " + describe(explored) + " vs classes " + describe(scg));
        c.check(explored == concrete,
                tag + " zones " + describe(explored) + " vs concrete " + describe(concrete));

        std::set<Marking> shallow;
        for (std::size_t i = 0; i < zones.graph.nodes.size(); ++i)
            if (zones.graph.depth[i] <= kCorpusDepth)
                shallow.insert(zones.graph.nodes[i]);
        c.check(shallow == brute.markings(kCorpusDepth), tag + " depth <= 8");
        total_markings += explored.size();
    }
    const double t = seconds_since(start);
    c.check(t < kCorpusLimit, "runtime");
    c.note(std::to_string(kCorpusNets) + " nets, " + std::to_string(total_markings) + " markings, " +
           std::to_string(capped) + " hit the token cap, " + fixed(t));
}

// ── 5 ───────────────────────────────────────────────────────────────────────

void fig1_automaton(Criterion& c) {
    const auto net = bundled("fig1");
    const auto ta = build_marking_ta(net, explore(net));
    c.check(ta.locations.size() == 4, "4 locations");
    c.check(ta.edges.size() == 6, "6 edges");
    auto loc = [&](const Marking& m) -> const TaLocation* {
        for (const auto& l : ta.locations)
            if (l.marking == m)
                return &l;
        return nullptr;
    };
    const Marking a = marking({1, 1, 0}), b = marking({0, 1, 0}), m = marking({1, 0, 1}),
                  d = marking({0, 0, 1});
    const std::vector<ClockAtom> x2le1{{1, ClockRel::Le, 1}}, x3le1{{2, ClockRel::Le, 1}};
    c.check(loc(b) && loc(b)->invariant == x2le1, "Inv(M1) = {x2 <= 1}");
    c.check(loc(d) && loc(d)->invariant == x3le1, "Inv(M2) = {x3 <= 1}");
    c.check(loc(a) && loc(a)->invariant == x2le1, "Inv(M0) = {x2 <= 1}");
    c.check(loc(m) && loc(m)->invariant == x3le1, "Inv(M3) = {x3 <= 1}");

    struct Expected {
        Marking from;
        TransitionId label;
        Marking to;
        std::vector<ClockAtom> guard;
        std::vector<Assignment> resets;
    };
    const std::vector<Expected> want{
        {a, 0, b, {{0, ClockRel::Ge, 0}}, {}},
        {a, 1, m, {{1, ClockRel::Ge, 1}}, {{2, std::nullopt}}},
        {b, 1, d, {{1, ClockRel::Ge, 1}}, {{2, std::nullopt}}},
        {m, 0, d, {{0, ClockRel::Ge, 0}}, {}},
        {m, 2, a, {{2, ClockRel::Ge, 1}}, {{1, std::nullopt}}},
        {d, 2, b, {{2, ClockRel::Ge, 1}}, {{1, std::nullopt}}},
    };
    for (const auto& w : want) {
        bool found = false;
        for (const auto& e : ta.edges)
            found |= ta.locations[e.source].marking == w.from && e.label == w.label &&
                     ta.locations[e.target].marking == w.to && e.guard == w.guard &&
                     e.assignments == w.resets;
        c.check(found, w.from.to_string() + " " + ta.actions[w.label] + " " + w.to.to_string());
    }
    c.note("4 locations, 6 edges, invariants, guards and resets");
}

// ── 6 ───────────────────────────────────────────────────────────────────────

/// Random nets whose exploration under the corpus token cap is complete.
std::vector<std::pair<std::uint64_t, ScaledNet>> bounded_corpus(std::size_t count) {
    std::vector<std::pair<std::uint64_t, ScaledNet>> out;
    StopCriteria criteria;
    criteria.max_tokens_per_place = kCorpusTokenCap;
    for (std::uint64_t seed = 0; out.size() < count; ++seed) {
        auto net = scale_net(random_net(seed));
        if (explore(net, criteria).status == ExploreStatus::Complete)
            out.emplace_back(seed, std::move(net));
    }
    return out;
}

void simulate(Criterion& c, const std::string& name, const ScaledNet& net, const TimedAutomaton& ta,
              std::size_t& moves) {
    const auto report = cross_simulate(net, ta, kSimRuns, kSimDepth, kSimSeed);
    moves += report.moves;
    c.check(report.ok(), name + ": " + std::to_string(report.divergences) + " divergences" +
                             (report.samples.empty() ? "" : " (" + report.samples.front() + ")"));
}

void bisimulation(Criterion& c) {
    std::size_t moves = 0, nets = 0;
    for (const char* name : {"fig1", "gate3"}) {
        const auto net = bundled(name);
        simulate(c, name, net, build_marking_ta(net, explore(net)), moves);
        ++nets;
    }
    StopCriteria criteria;
    criteria.max_tokens_per_place = kCorpusTokenCap;
    for (const auto& [seed, net] : bounded_corpus(20)) {
        simulate(c, "seed " + std::to_string(seed), net, build_marking_ta(net, explore(net, criteria)),
                 moves);
        ++nets;
    }
    const auto fig1 = bundled("fig1");
    auto mutant = build_marking_ta(fig1, explore(fig1));
    mutant.locations[mutant.initial].invariant[0].constant -= 1;
    const auto report = cross_simulate(fig1, mutant, kSimRuns, kSimDepth, kSimSeed);
    c.check(report.divergences >= 1, "mutant went undetected");
    c.note(std::to_string(nets) + " nets, " + std::to_string(moves) + " moves, mutant " +
           std::to_string(report.divergences) + " divergences");
}

// ── 7 ───────────────────────────────────────────────────────────────────────

void gate_study(Criterion& c) {
    const auto net = bundled("gate3");
    const auto start = Clock::now();
    const auto r = explore(net);
    const auto safety = check_reachability(
        net, parse_predicate("On1>=1 & Closed=0 | On2>=1 & Closed=0 | On3>=1 & Closed=0", net.net()));
    const double t = seconds_since(start);
    c.check(r.status == ExploreStatus::Complete, "status " + to_string(r.status));
    c.check(r.graph.nodes.size() == 94, "94 markings");
    c.check(r.graph.edges.size() == 271, "271 edges");
    c.check(safety.verdict == Verdict::Unreachable, "safety verdict");
    c.check(t < kGateLimit, "runtime");
    c.note(std::to_string(r.graph.nodes.size()) + " markings, " +
           std::to_string(r.graph.edges.size()) + " edges, unsafe state " +
           (safety.verdict == Verdict::Unreachable ? "unreachable" : "reachable or unknown") + ", " +
           fixed(t));
}

// ── 8 ───────────────────────────────────────────────────────────────────────

void clock_reduction(Criterion& c) {
    const auto net = bundled("gate3");
    const auto ta = build_marking_ta(net, explore(net));
    const auto r = reduce_clocks(ta);
    c.check(r.original == 23, "23 original clocks");
    c.check(r.reduced < 23, "fewer than 23 clocks");
    std::size_t moves = 0;
    simulate(c, "reduced gate3", net, r.automaton, moves);
    c.note(std::to_string(r.original) + " -> " + std::to_string(r.reduced) + " clocks, " +
           std::to_string(moves) + " moves");
}

// ── 9 ───────────────────────────────────────────────────────────────────────

class DbmCases {
public:
    explicit DbmCases(Criterion& c) : c_(c), rng_(kDbmSeed) {}

    void run_one(std::size_t index) {
        tag_ = "case " + std::to_string(index);
        clocks_ = random_clocks();
        const Zone z = random_zone(clocks_, pick(0, 4));
        grid_ = &grid(clocks_.size());

        const Zone canon = z.canonicalize();
        c_.check(same_matrix(canon, canon.canonicalize()), tag_ + " canonicalize idempotent");
        const bool empty = z.is_empty();
        c_.check(empty == !oracle::Polyhedron::of(z).feasible(), tag_ + " emptiness");
        for_grid([&](const oracle::Quarters& v) {
            return oracle::member(z, v) == oracle::member(canon, v);
        }, "canonical form keeps the valuations");
        if (empty) {
            ++empty_;
            return;
        }

        const ClockConstraint g = random_constraint(clocks_);
        const Zone constrained = z.constrain(g);
        for_grid([&](const oracle::Quarters& v) {
            return oracle::member(constrained, v) == (oracle::member(z, v) && holds(g, v));
        }, "constrain");

        const Zone future = z.future();
        const auto past = oracle::past_closure(z);
        for_grid([&](const oracle::Quarters& v) { return oracle::member(future, v) == past.contains(v); },
                 "future");

        std::vector<ClockId> reset;
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < clocks_.size(); ++i)
            if (pick(0, 1)) {
                reset.push_back(clocks_[i]);
                positions.push_back(i);
            }
        const Zone after_reset = z.reset(reset);
        const auto exists = oracle::projection(z, positions);
        for_grid([&](const oracle::Quarters& v) {
            bool zeroed = true;
            for (std::size_t p : positions)
                zeroed &= v[p] == 0;
            return oracle::member(after_reset, v) == (zeroed && exists.contains(v));
        }, "reset");

        check_remove(z);
        check_add(z);
        check_k_approx(z, constrained);
        check_inclusion(z, constrained);
    }

    std::size_t empty_count() const { return empty_; }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::vector<ClockId> random_clocks() {
        const std::size_t n = static_cast<std::size_t>(pick(1, 3));
        std::vector<ClockId> pool{0, 1, 2, 3, 4};
        std::shuffle(pool.begin(), pool.end(), rng_);
        pool.resize(n);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    ClockConstraint random_constraint(const std::vector<ClockId>& clocks) {
        const ClockId x = clocks[pick(0, static_cast<int>(clocks.size()) - 1)];
        const bool strict = pick(0, 1);
        switch (clocks.size() > 1 ? pick(0, 2) : pick(0, 1)) {
        case 0: return ClockConstraint::upper(x, strict ? Bound::strict(pick(0, 4)) : Bound::weak(pick(0, 4)));
        case 1: return ClockConstraint::lower(x, pick(0, 4), strict);
        default: {
            ClockId y = x;
            while (y == x)
                y = clocks[pick(0, static_cast<int>(clocks.size()) - 1)];
            const int v = pick(-4, 4);
            return ClockConstraint::difference(x, y, strict ? Bound::strict(v) : Bound::weak(v));
        }
        }
    }

    Zone random_zone(const std::vector<ClockId>& clocks, int constraints) {
        Zone z = Zone::universe(clocks);
        for (int i = 0; i < constraints; ++i)
            z = z.constrain(random_constraint(clocks));
        return z;
    }

    /// Quarter points of [0,5]^n.
    static const std::vector<oracle::Quarters>& grid(std::size_t n) {
        static std::map<std::size_t, std::vector<oracle::Quarters>> cache;
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
        std::vector<oracle::Quarters> out{{}};
        for (std::size_t d = 0; d < n; ++d) {
            std::vector<oracle::Quarters> next;
            for (const auto& v : out)
                for (std::int64_t q = 0; q <= 20; ++q) {
                    auto w = v;
                    w.push_back(q);
                    next.push_back(std::move(w));
                }
            out = std::move(next);
        }
        return cache[n] = std::move(out);
    }

    void for_grid(const std::function<bool(const oracle::Quarters&)>& ok, const std::string& what) {
        for (const auto& v : *grid_)
            if (!ok(v)) {
                c_.check(false, tag_ + " " + what);
                return;
            }
    }

    std::int64_t value(const oracle::Quarters& v, ClockId x) const {
        if (x == kReferenceClock)
            return 0;
        const auto it = std::find(clocks_.begin(), clocks_.end(), x);
        return v[static_cast<std::size_t>(it - clocks_.begin())];
    }

    bool holds(const ClockConstraint& g, const oracle::Quarters& v) const {
        return oracle::satisfies(value(v, g.lhs) - value(v, g.rhs), g.bound);
    }

    static bool same_matrix(const Zone& a, const Zone& b) {
        if (a.clocks() != b.clocks())
            return false;
        for (std::size_t i = 0; i < a.dimension(); ++i)
            for (std::size_t j = 0; j < a.dimension(); ++j)
                if (a.at(i, j) != b.at(i, j))
                    return false;
        return true;
    }

    void check_remove(const Zone& z) {
        const std::size_t pos = static_cast<std::size_t>(pick(0, static_cast<int>(clocks_.size()) - 1));
        const Zone removed = z.remove_clock(clocks_[pos]);
        const auto exists = oracle::projection(z, {pos});
        for (const auto& v : grid(clocks_.size() - 1)) {
            oracle::Quarters full = v;
            full.insert(full.begin() + static_cast<std::ptrdiff_t>(pos), 0);
            if (oracle::member(removed, v) != exists.contains(full)) {
                c_.check(false, tag_ + " remove_clock");
                return;
            }
        }
    }

    void check_add(const Zone& z) {
        if (clocks_.size() == 3)
            return;
        ClockId x = 0;
        while (std::find(clocks_.begin(), clocks_.end(), x) != clocks_.end())
            ++x;
        const Zone added = z.add_clock(x);
        const std::size_t pos = *added.index_of(x) - 1;
        for (const auto& v : grid(clocks_.size() + 1)) {
            oracle::Quarters rest = v;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            if (oracle::member(added, v) != oracle::member(z, rest)) {
                c_.check(false, tag_ + " add_clock");
                return;
            }
        }
    }

    void check_k_approx(const Zone& z, const Zone& smaller) {
        const std::int64_t k = pick(0, 3);
        const Zone a = z.k_approx(k);
        c_.check(a.k_approx(k).equals(a), tag_ + " k_approx idempotent");
        c_.check(includes(a, z), tag_ + " Z included in k_approx(Z)");
        if (!smaller.is_empty())
            c_.check(includes(a, smaller.k_approx(k)), tag_ + " k_approx monotone");

        // every point of the approximation shares a region with a point of Z
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& v : *grid_)
            if (oracle::member(z, v))
                seen.insert(region_key(v, k));
        for_grid([&](const oracle::Quarters& v) {
            if (!oracle::member(a, v))
                return true;
            if (!oracle::member(z, v) && !seen.count(region_key(v, k))) {
                if (!oracle::meets_region(z, v, k))
                    return false;
                seen.insert(region_key(v, k));
            }
            return true;
        }, "k_approx adds only points region-equivalent to Z");
    }

    static std::vector<std::int64_t> region_key(const oracle::Quarters& v, std::int64_t k) {
        std::vector<std::int64_t> key;
        for (std::int64_t q : v)
            key.push_back(q > 4 * k ? -1 : q / 4 * 2 + (q % 4 != 0));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[i] <= 4 * k && v[j] <= 4 * k)
                    key.push_back((v[i] % 4 > v[j] % 4) - (v[i] % 4 < v[j] % 4));
        return key;
    }

    void check_inclusion(const Zone& z, const Zone& smaller) {
        c_.check(includes(z, z), tag_ + " inclusion reflexive");
        const Zone smallest = smaller.constrain(random_constraint(clocks_));
        const bool chain = includes(z, smaller) && includes(smaller, smallest);
        c_.check(chain, tag_ + " constraining shrinks");
        c_.check(!chain || includes(z, smallest), tag_ + " inclusion transitive");
        const Zone other = random_zone(clocks_, pick(0, 4));
        c_.check(includes(z, other) == oracle::included(other, z), tag_ + " inclusion matches oracle");
        c_.check(includes(other, z) == oracle::included(z, other), tag_ + " inclusion matches oracle");
    }

    Criterion& c_;
    std::mt19937_64 rng_;
    std::string tag_;
    std::vector<ClockId> clocks_;
    const std::vector<oracle::Quarters>* grid_ = nullptr;
    std::size_t empty_ = 0;
};

void dbm_properties(Criterion& c) {
    const auto start = Clock::now();
    DbmCases cases(c);
    for (std::size_t i = 0; i < kDbmCases; ++i)
        cases.run_one(i);
    const double t = seconds_since(start);
    c.check(t < kDbmLimit, "runtime");
    c.note(std::to_string(kDbmCases) + " cases (" + std::to_string(cases.empty_count()) + " empty), " +
           fixed(t));
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<void(Criterion&)> body;
    };
    const std::vector<Entry> entries{
        {1, "fig1 marking graph", fig1_graph},
        {2, "zones along the first firings of fig1", first_zones},
        {3, "nontermination without k-approximation", nontermination},
        {4, "marking sets on random nets", corpus_exactness},
        {5, "fig1 marking timed automaton", fig1_automaton},
        {6, "bisimulation sampling", bisimulation},
        {7, "level crossing with 3 trains", gate_study},
        {8, "clock reduction on gate3", clock_reduction},
        {9, "DBM properties", dbm_properties},
    };
    bool all = true;
    for (const auto& e : entries) {
        Criterion c;
        try {
            e.body(c);
        } catch (const std::exception& ex) {
            c.check(false, std::string("exception: ") + ex.what());
        }
        all &= c.passed();
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.title << " ("
                  << c.summary() << ")" << std::endl;
    }
    return all ? 0 : 1;
}
