// ============================================================================
// tpn/net.hpp - Time Petri Nets, markings and the enabledness relations
// ============================================================================
//
// A net carries one firing interval [eft, lft] per transition. Bounds are
// exact rationals; `scale_net` maps them onto integers so that zones can be
// built over integer constants.
//
// Multi-enabledness follows single-server semantics: one clock per
// transition, whatever the enabling degree.
//
// ============================================================================

#ifndef TPN_NET_HPP
#define TPN_NET_HPP

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpn {

using Rational = boost::rational<std::int64_t>;
using PlaceId = std::uint32_t;
using TransitionId = std::uint32_t;
using Tokens = std::uint32_t;

// ── Marking ─────────────────────────────────────────────────────────────────

class Marking {
public:
    Marking() = default;
    explicit Marking(std::vector<Tokens> tokens) : tokens_(std::move(tokens)) {}

    std::size_t size() const { return tokens_.size(); }
    Tokens operator[](PlaceId p) const { return tokens_[p]; }
    Tokens& operator[](PlaceId p) { return tokens_[p]; }
    const std::vector<Tokens>& tokens() const { return tokens_; }

    /// Componentwise `*this >= other`.
    bool covers(const std::vector<Tokens>& other) const;

    /// "(1,1,0)"
    std::string to_string() const;

    friend auto operator<=>(const Marking&, const Marking&) = default;
    friend bool operator==(const Marking&, const Marking&) = default;

private:
    std::vector<Tokens> tokens_;
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const noexcept;
};

// ── TimePetriNet ────────────────────────────────────────────────────────────

struct Transition {
    std::string name;
    std::vector<Tokens> pre;   // indexed by place
    std::vector<Tokens> post;  // indexed by place
    Rational eft;
    std::optional<Rational> lft;  // nullopt is +inf

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Semantic violation in a net definition (duplicate names, eft > lft, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class FiredNotEnabled : public std::logic_error {
public:
    explicit FiredNotEnabled(const std::string& transition)
        : std::logic_error("transition '" + transition + "' is not enabled") {}
};

class TimePetriNet {
public:
    TimePetriNet() = default;
    TimePetriNet(std::string name, std::vector<std::string> places,
                 std::vector<Transition> transitions, Marking initial);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& places() const { return places_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const Transition& transition(TransitionId t) const { return transitions_[t]; }
    const Marking& initial_marking() const { return initial_; }

    std::size_t place_count() const { return places_.size(); }
    std::size_t transition_count() const { return transitions_.size(); }

    std::optional<PlaceId> find_place(const std::string& name) const;
    std::optional<TransitionId> find_transition(const std::string& name) const;

    bool is_enabled(const Marking& m, TransitionId t) const;

    friend bool operator==(const TimePetriNet&, const TimePetriNet&) = default;

private:
    std::string name_;
    std::vector<std::string> places_;
    std::vector<Transition> transitions_;
    Marking initial_;
};

/// Transitions enabled by `m`, in declaration order.
std::vector<TransitionId> enabled(const TimePetriNet& net, const Marking& m);

/// Transitions newly enabled when `fired` fires from `m`. The fired
/// transition is included whenever it is enabled again afterwards.
std::vector<TransitionId> newly_enabled(const TimePetriNet& net, const Marking& m,
                                        TransitionId fired);

Marking fire_marking(const TimePetriNet& net, const Marking& m, TransitionId t);

// ── ScaledNet ───────────────────────────────────────────────────────────────
// Integer view of the time bounds: every bound is multiplied by `scale`,
// the lcm of all denominators. `k` is the largest finite scaled constant.

struct ScaledNet {
    TimePetriNet base;
    std::int64_t scale = 1;
    std::vector<std::int64_t> eft;
    std::vector<std::optional<std::int64_t>> lft;
    std::int64_t k = 0;

    const TimePetriNet& net() const { return base; }
    Rational unscale(std::int64_t v) const { return Rational(v, scale); }
};

ScaledNet scale_net(TimePetriNet net);

/// Human-readable rational: "3" or "3/4".
std::string format_rational(const Rational& r);

}  // namespace tpn

#endif  // TPN_NET_HPP
