// ============================================================================
// tpn/zone.hpp - zones as difference bound matrices over a dynamic clock set
// ============================================================================
//
// Entry (i, j) bounds x_i - x_j. Index 0 is the reference clock whose value is
// always 0; indices 1..n follow the zone's clock list, which is kept sorted by
// clock id. Zones are values: every operation returns a new zone.
//
// Clocks are identified by the transition they measure.
//
// ============================================================================

#ifndef TPN_ZONE_HPP
#define TPN_ZONE_HPP

#include "tpn/bound.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpn {

using ClockId = std::uint32_t;

/// Marker for the reference clock in constraints.
inline constexpr ClockId kReferenceClock = std::numeric_limits<ClockId>::max();

class ZoneError : public std::logic_error {
public:
    enum class Kind { EmptyZone, UnknownClock, DuplicateClock, ClockSetMismatch };

    ZoneError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Atomic constraint `lhs - rhs ≺ c`; either side may be the reference clock.
struct ClockConstraint {
    ClockId lhs;
    ClockId rhs;
    Bound bound;

    static ClockConstraint upper(ClockId x, Bound b) { return {x, kReferenceClock, b}; }
    /// x >= c (or x > c when strict)
    static ClockConstraint lower(ClockId x, std::int64_t c, bool strict = false) {
        return {kReferenceClock, x, strict ? Bound::strict(-c) : Bound::weak(-c)};
    }
    static ClockConstraint difference(ClockId x, ClockId y, Bound b) { return {x, y, b}; }
};

/// Tightest interval of one clock. `lower` holds the constant and strictness of
/// the lower bound (x >= c when weak, x > c when strict).
struct ClockInterval {
    Bound lower;
    Bound upper;
};

using ClockNamer = std::function<std::string(ClockId)>;

class Zone {
public:
    /// Zone with no clocks (just the reference clock).
    Zone();

    /// All clocks equal to zero.
    static Zone zero(std::vector<ClockId> clocks);
    /// All clocks nonnegative, otherwise unconstrained.
    static Zone universe(std::vector<ClockId> clocks);

    const std::vector<ClockId>& clocks() const { return clocks_; }
    std::size_t dimension() const { return clocks_.size() + 1; }
    bool is_canonical() const { return canonical_; }

    /// Matrix index of a clock (0 for the reference clock).
    std::optional<std::size_t> index_of(ClockId x) const;
    bool has_clock(ClockId x) const { return index_of(x).has_value(); }

    Bound at(std::size_t i, std::size_t j) const { return mat_[i * dimension() + j]; }
    /// Bound on x - y, looked up by clock id.
    Bound bound(ClockId x, ClockId y) const;

    // ── Algebra ─────────────────────────────────────────────────────────

    Zone canonicalize() const;
    bool is_empty() const;

    /// Removes all upper bounds (time elapse).
    Zone future() const;
    Zone constrain(const ClockConstraint& c) const;
    Zone reset(std::span<const ClockId> clocks) const;
    Zone add_clock(ClockId x) const;
    /// Existential projection.
    Zone remove_clock(ClockId x) const;
    /// Diagonal-free extrapolation with a single constant k.
    Zone k_approx(std::int64_t k) const;

    ClockInterval project_interval(ClockId x) const;

    /// Semantic equality on canonical forms; clock sets must match.
    bool equals(const Zone& other) const;
    std::size_t hash() const;

    // ── Rendering ───────────────────────────────────────────────────────

    /// Conjunction of atomic constraints in reduced form, e.g.
    /// "x1 - x3 = 1 & x3 <= 1". Clock names default to "x<id+1>".
    std::string to_string(const ClockNamer& name = {}) const;

    /// Builds a zone from a raw matrix (testing and diagnostics).
    static Zone from_matrix(std::vector<ClockId> clocks, std::vector<Bound> mat);

private:
    Zone(std::vector<ClockId> clocks, std::vector<Bound> mat, bool canonical);

    Bound& ref(std::size_t i, std::size_t j) { return mat_[i * dimension() + j]; }
    std::size_t require_index(ClockId x) const;
    void close();                       // Floyd-Warshall in place
    void tighten(std::size_t i, std::size_t j, Bound b);  // incremental closure
    void mark_empty();
    bool empty_flag() const { return at(0, 0) < Bound::zero(); }
    void require_nonempty(const char* op) const;

    std::vector<ClockId> clocks_;
    std::vector<Bound> mat_;
    bool canonical_;
};

/// True iff every valuation of `inner` lies in `outer`.
bool includes(const Zone& outer, const Zone& inner);

}  // namespace tpn

#endif  // TPN_ZONE_HPP
