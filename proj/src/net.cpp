#include "tpn/net.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace tpn {

bool Marking::covers(const std::vector<Tokens>& other) const {
    for (std::size_t p = 0; p < tokens_.size(); ++p)
        if (tokens_[p] < other[p])
            return false;
    return true;
}

std::string Marking::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t p = 0; p < tokens_.size(); ++p) {
        if (p > 0)
            out << ',';
        out << tokens_[p];
    }
    out << ')';
    return out.str();
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Tokens t : m.tokens()) {
        h ^= t;
        h *= 0x100000001b3ULL;
    }
    return h;
}

TimePetriNet::TimePetriNet(std::string name, std::vector<std::string> places,
                           std::vector<Transition> transitions, Marking initial)
    : name_(std::move(name)),
      places_(std::move(places)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)) {
    std::set<std::string> seen;
    for (const auto& p : places_)
        if (!seen.insert(p).second)
            throw ValidationError("duplicate place '" + p + "'");
    seen.clear();
    for (const auto& t : transitions_) {
        if (!seen.insert(t.name).second)
            throw ValidationError("duplicate transition '" + t.name + "'");
        if (t.pre.size() != places_.size() || t.post.size() != places_.size())
            throw ValidationError("transition '" + t.name + "' has malformed arcs");
        if (t.eft < 0)
            throw ValidationError("transition '" + t.name + "' has negative eft");
        if (t.lft && *t.lft < t.eft)
            throw ValidationError("transition '" + t.name + "' has eft > lft");
    }
    if (initial_.size() != places_.size())
        throw ValidationError("initial marking does not match the place count");
}

std::optional<PlaceId> TimePetriNet::find_place(const std::string& name) const {
    for (PlaceId p = 0; p < places_.size(); ++p)
        if (places_[p] == name)
            return p;
    return std::nullopt;
}

std::optional<TransitionId> TimePetriNet::find_transition(const std::string& name) const {
    for (TransitionId t = 0; t < transitions_.size(); ++t)
        if (transitions_[t].name == name)
            return t;
    return std::nullopt;
}

bool TimePetriNet::is_enabled(const Marking& m, TransitionId t) const {
    return m.covers(transitions_[t].pre);
}

std::vector<TransitionId> enabled(const TimePetriNet& net, const Marking& m) {
    std::vector<TransitionId> out;
    for (TransitionId t = 0; t < net.transition_count(); ++t)
        if (net.is_enabled(m, t))
            out.push_back(t);
    return out;
}

namespace {

Marking consume(const TimePetriNet& net, const Marking& m, TransitionId t) {
    if (!net.is_enabled(m, t))
        throw FiredNotEnabled(net.transition(t).name);
    Marking out = m;
    const auto& pre = net.transition(t).pre;
    for (PlaceId p = 0; p < out.size(); ++p)
        out[p] -= pre[p];
    return out;
}

}  // namespace

Marking fire_marking(const TimePetriNet& net, const Marking& m, TransitionId t) {
    Marking out = consume(net, m, t);
    const auto& post = net.transition(t).post;
    for (PlaceId p = 0; p < out.size(); ++p)
        out[p] += post[p];
    return out;
}

std::vector<TransitionId> newly_enabled(const TimePetriNet& net, const Marking& m,
                                        TransitionId fired) {
    const Marking intermediate = consume(net, m, fired);
    const Marking next = fire_marking(net, m, fired);
    std::vector<TransitionId> out;
    for (TransitionId t = 0; t < net.transition_count(); ++t) {
        if (!net.is_enabled(next, t))
            continue;
        if (t == fired || !net.is_enabled(intermediate, t))
            out.push_back(t);
    }
    return out;
}

ScaledNet scale_net(TimePetriNet net) {
    std::int64_t scale = 1;
    auto absorb = [&scale](const Rational& r) {
        const std::int64_t g = std::gcd(scale, r.denominator());
        const std::int64_t factor = r.denominator() / g;
        if (__builtin_mul_overflow(scale, factor, &scale))
            throw ValidationError("time bounds need a scale factor beyond 64 bits");
    };
    for (const auto& t : net.transitions()) {
        absorb(t.eft);
        if (t.lft)
            absorb(*t.lft);
    }

    ScaledNet out;
    out.scale = scale;
    auto to_int = [scale](const Rational& r) {
        std::int64_t v = 0;
        if (__builtin_mul_overflow(r.numerator(), scale / r.denominator(), &v))
            throw ValidationError("scaled time bound overflows 64 bits");
        return v;
    };
    for (const auto& t : net.transitions()) {
        out.eft.push_back(to_int(t.eft));
        out.k = std::max(out.k, out.eft.back());
        if (t.lft) {
            out.lft.push_back(to_int(*t.lft));
            out.k = std::max(out.k, *out.lft.back());
        } else {
            out.lft.push_back(std::nullopt);
        }
    }
    out.base = std::move(net);
    return out;
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tpn
