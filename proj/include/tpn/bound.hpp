// ============================================================================
// tpn/bound.hpp - DBM entries
// ============================================================================
//
// A bound is (<, c), (<=, c) or infinity. The encoding packs the constant and
// the strictness into one integer, 2c for (<, c) and 2c + 1 for (<=, c), so
// that the natural integer order is the bound order:
//
//   (<, c) < (<=, c) < (<, c + 1) < ... < infinity
//
// ============================================================================

#ifndef TPN_BOUND_HPP
#define TPN_BOUND_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tpn {

class BoundOverflow : public std::overflow_error {
public:
    BoundOverflow() : std::overflow_error("DBM bound arithmetic overflow") {}
};

class Bound {
public:
    /// Largest magnitude accepted for a finite constant.
    static constexpr std::int64_t kMaxValue = (std::int64_t{1} << 60);

    constexpr Bound() : raw_(kInfinityRaw) {}

    static Bound weak(std::int64_t c) { return Bound(encode(c, true)); }
    static Bound strict(std::int64_t c) { return Bound(encode(c, false)); }
    static constexpr Bound infinity() { return Bound(kInfinityRaw); }
    static Bound zero() { return weak(0); }

    bool is_infinity() const { return raw_ == kInfinityRaw; }
    bool is_strict() const { return !is_infinity() && (raw_ & 1) == 0; }
    bool is_weak() const { return !is_infinity() && (raw_ & 1) == 1; }

    /// The constant; undefined for infinity.
    std::int64_t value() const { return raw_ >> 1; }

    std::int64_t raw() const { return raw_; }

    friend Bound operator+(Bound a, Bound b) {
        if (a.is_infinity() || b.is_infinity())
            return infinity();
        std::int64_t sum = 0;
        if (__builtin_add_overflow(a.value(), b.value(), &sum))
            throw BoundOverflow();
        return Bound(encode(sum, a.is_weak() && b.is_weak()));
    }

    friend constexpr auto operator<=>(Bound a, Bound b) { return a.raw_ <=> b.raw_; }
    friend constexpr bool operator==(Bound a, Bound b) { return a.raw_ == b.raw_; }

    /// "<=3", "<3" or "inf".
    std::string to_string() const;

private:
    static constexpr std::int64_t kInfinityRaw = std::numeric_limits<std::int64_t>::max();

    constexpr explicit Bound(std::int64_t raw) : raw_(raw) {}

    static std::int64_t encode(std::int64_t c, bool weak) {
        if (c > kMaxValue || c < -kMaxValue)
            throw BoundOverflow();
        return c * 2 + (weak ? 1 : 0);
    }

    std::int64_t raw_;
};

inline Bound min(Bound a, Bound b) { return b < a ? b : a; }

}  // namespace tpn

#endif  // TPN_BOUND_HPP
