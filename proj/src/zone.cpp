#include "tpn/zone.hpp"

#include <algorithm>
#include <sstream>

namespace tpn {

std::string Bound::to_string() const {
    if (is_infinity())
        return "inf";
    return (is_strict() ? "<" : "<=") + std::to_string(value());
}

namespace {

void check_unique(const std::vector<ClockId>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ZoneError(ZoneError::Kind::DuplicateClock,
                            "duplicate clock " + std::to_string(sorted[i]));
}

std::string default_name(ClockId x) { return "x" + std::to_string(x + 1); }

}  // namespace

Zone::Zone() : clocks_(), mat_{Bound::zero()}, canonical_(true) {}

Zone::Zone(std::vector<ClockId> clocks, std::vector<Bound> mat, bool canonical)
    : clocks_(std::move(clocks)), mat_(std::move(mat)), canonical_(canonical) {}

Zone Zone::zero(std::vector<ClockId> clocks) {
    std::sort(clocks.begin(), clocks.end());
    check_unique(clocks);
    const std::size_t dim = clocks.size() + 1;
    return Zone(std::move(clocks), std::vector<Bound>(dim * dim, Bound::zero()), true);
}

Zone Zone::universe(std::vector<ClockId> clocks) {
    std::sort(clocks.begin(), clocks.end());
    check_unique(clocks);
    const std::size_t dim = clocks.size() + 1;
    std::vector<Bound> mat(dim * dim, Bound::infinity());
    for (std::size_t i = 0; i < dim; ++i) {
        mat[i * dim + i] = Bound::zero();
        mat[i] = Bound::zero();  // row 0: -x <= 0
    }
    return Zone(std::move(clocks), std::move(mat), true);
}

Zone Zone::from_matrix(std::vector<ClockId> clocks, std::vector<Bound> mat) {
    const std::size_t dim = clocks.size() + 1;
    if (mat.size() != dim * dim)
        throw std::invalid_argument("matrix size does not match the clock count");
    if (!std::is_sorted(clocks.begin(), clocks.end()))
        throw std::invalid_argument("clock list must be sorted");
    check_unique(clocks);
    return Zone(std::move(clocks), std::move(mat), false);
}

std::optional<std::size_t> Zone::index_of(ClockId x) const {
    if (x == kReferenceClock)
        return 0;
    auto it = std::lower_bound(clocks_.begin(), clocks_.end(), x);
    if (it == clocks_.end() || *it != x)
        return std::nullopt;
    return static_cast<std::size_t>(it - clocks_.begin()) + 1;
}

std::size_t Zone::require_index(ClockId x) const {
    auto idx = index_of(x);
    if (!idx)
        throw ZoneError(ZoneError::Kind::UnknownClock, "unknown clock " + std::to_string(x));
    return *idx;
}

Bound Zone::bound(ClockId x, ClockId y) const { return at(require_index(x), require_index(y)); }

void Zone::mark_empty() {
    ref(0, 0) = Bound::strict(0);
    canonical_ = true;
}

void Zone::close() {
    const std::size_t n = dimension();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const Bound ik = at(i, k);
            if (ik.is_infinity())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Bound kj = at(k, j);
                if (kj.is_infinity())
                    continue;
                const Bound via = ik + kj;
                if (via < at(i, j))
                    ref(i, j) = via;
            }
            if (at(i, i) < Bound::zero()) {
                mark_empty();
                return;
            }
        }
    }
    canonical_ = true;
}

void Zone::tighten(std::size_t i, std::size_t j, Bound b) {
    if (!(b < at(i, j)))
        return;
    if (at(j, i) + b < Bound::zero()) {
        mark_empty();
        return;
    }
    ref(i, j) = b;
    const std::size_t n = dimension();
    for (std::size_t a = 0; a < n; ++a) {
        const Bound ai = at(a, i);
        if (ai.is_infinity())
            continue;
        const Bound aij = ai + b;
        for (std::size_t c = 0; c < n; ++c) {
            const Bound jc = at(j, c);
            if (jc.is_infinity())
                continue;
            const Bound via = aij + jc;
            if (via < at(a, c))
                ref(a, c) = via;
        }
    }
}

void Zone::require_nonempty(const char* op) const {
    if (empty_flag())
        throw ZoneError(ZoneError::Kind::EmptyZone, std::string(op) + " on an empty zone");
}

Zone Zone::canonicalize() const {
    if (canonical_)
        return *this;
    Zone z = *this;
    z.close();
    return z;
}

bool Zone::is_empty() const {
    if (canonical_)
        return empty_flag();
    return canonicalize().empty_flag();
}

Zone Zone::future() const {
    Zone z = canonicalize();
    z.require_nonempty("future");
    for (std::size_t i = 1; i < z.dimension(); ++i)
        z.ref(i, 0) = Bound::infinity();
    return z;
}

Zone Zone::constrain(const ClockConstraint& c) const {
    const std::size_t i = require_index(c.lhs);
    const std::size_t j = require_index(c.rhs);
    Zone z = *this;
    if (z.canonical_) {
        if (!z.empty_flag())
            z.tighten(i, j, c.bound);
        return z;
    }
    z.ref(i, j) = min(z.at(i, j), c.bound);
    z.close();
    return z;
}

Zone Zone::reset(std::span<const ClockId> clocks) const {
    std::vector<std::size_t> indices;
    for (ClockId x : clocks)
        indices.push_back(require_index(x));
    Zone z = canonicalize();
    z.require_nonempty("reset");
    const std::size_t n = z.dimension();
    for (std::size_t x : indices) {
        for (std::size_t j = 0; j < n; ++j) {
            z.ref(x, j) = z.at(0, j);
            z.ref(j, x) = z.at(j, 0);
        }
        z.ref(x, x) = Bound::zero();
    }
    return z;
}

Zone Zone::add_clock(ClockId x) const {
    if (index_of(x))
        throw ZoneError(ZoneError::Kind::DuplicateClock, "clock " + std::to_string(x) +
                                                             " already present");
    const Zone src = canonicalize();
    std::vector<ClockId> clocks = src.clocks_;
    auto pos = std::lower_bound(clocks.begin(), clocks.end(), x);
    const std::size_t at_idx = static_cast<std::size_t>(pos - clocks.begin()) + 1;
    clocks.insert(pos, x);

    const std::size_t n = clocks.size() + 1;
    auto old_index = [at_idx](std::size_t i) { return i < at_idx ? i : i - 1; };
    std::vector<Bound> mat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == at_idx && j == at_idx)
                mat[i * n + j] = Bound::zero();
            else if (i == at_idx)
                mat[i * n + j] = Bound::infinity();
            else if (j == at_idx)
                mat[i * n + j] = src.at(old_index(i), 0);  // x_i - x <= x_i since x >= 0
            else
                mat[i * n + j] = src.at(old_index(i), old_index(j));
        }
    }
    Zone z(std::move(clocks), std::move(mat), true);
    if (src.empty_flag())
        z.mark_empty();
    return z;
}

Zone Zone::remove_clock(ClockId x) const {
    const std::size_t idx = require_index(x);
    const Zone src = canonicalize();
    std::vector<ClockId> clocks = src.clocks_;
    clocks.erase(clocks.begin() + static_cast<std::ptrdiff_t>(idx - 1));
    const std::size_t n = clocks.size() + 1;
    std::vector<Bound> mat;
    mat.reserve(n * n);
    for (std::size_t i = 0; i < src.dimension(); ++i) {
        if (i == idx)
            continue;
        for (std::size_t j = 0; j < src.dimension(); ++j)
            if (j != idx)
                mat.push_back(src.at(i, j));
    }
    Zone z(std::move(clocks), std::move(mat), true);
    if (src.empty_flag())
        z.mark_empty();
    return z;
}

Zone Zone::k_approx(std::int64_t k) const {
    Zone z = canonicalize();
    z.require_nonempty("k_approx");
    const std::size_t n = z.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const Bound b = z.at(i, j);
            if (b.is_infinity())
                continue;
            if (b.value() > k)
                z.ref(i, j) = Bound::infinity();
            else if (b.value() < -k)
                z.ref(i, j) = Bound::strict(-k);
        }
    }
    z.canonical_ = false;
    z.close();
    return z;
}

ClockInterval Zone::project_interval(ClockId x) const {
    const std::size_t idx = require_index(x);
    const Zone z = canonicalize();
    z.require_nonempty("project_interval");
    const Bound low = z.at(0, idx);
    return {low.is_strict() ? Bound::strict(-low.value()) : Bound::weak(-low.value()),
            z.at(idx, 0)};
}

bool Zone::equals(const Zone& other) const {
    if (clocks_ != other.clocks_)
        return false;
    const Zone a = canonicalize();
    const Zone b = other.canonicalize();
    if (a.empty_flag() || b.empty_flag())
        return a.empty_flag() && b.empty_flag();
    return a.mat_ == b.mat_;
}

std::size_t Zone::hash() const {
    const Zone z = canonicalize();
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (ClockId c : z.clocks_)
        mix(c);
    if (z.empty_flag())
        return h;
    for (Bound b : z.mat_)
        mix(static_cast<std::uint64_t>(b.raw()));
    return h;
}

bool includes(const Zone& outer, const Zone& inner) {
    if (outer.clocks() != inner.clocks())
        throw ZoneError(ZoneError::Kind::ClockSetMismatch,
                        "inclusion test between zones over different clocks");
    const Zone in = inner.canonicalize();
    if (in.is_empty())
        return true;
    const Zone out = outer.canonicalize();
    if (out.is_empty())
        return false;
    const std::size_t n = in.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (out.at(i, j) < in.at(i, j))
                return false;
    return true;
}

// ── Rendering ───────────────────────────────────────────────────────────────
// Clocks tied by zero-weight cycles (fixed offsets) are grouped; each group is
// printed as equalities against a representative, and only the constraints
// between representatives not implied through a third representative remain.
// Nonnegativity of clocks is implicit.

std::string Zone::to_string(const ClockNamer& namer) const {
    const Zone z = canonicalize();
    if (z.empty_flag())
        return "false";
    const std::size_t n = z.dimension();
    auto name = [&](std::size_t i) {
        const ClockId id = z.clocks_[i - 1];
        return namer ? namer(id) : default_name(id);
    };

    std::vector<std::size_t> rep(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rep[i] != n)
            continue;
        std::vector<std::size_t> members{i};
        for (std::size_t j = i + 1; j < n; ++j)
            if (rep[j] == n && z.at(i, j) + z.at(j, i) == Bound::zero())
                members.push_back(j);
        // the reference clock, else the member with the smallest lower bound
        std::size_t best = members.front();
        for (std::size_t m : members)
            if (z.at(0, m) > z.at(0, best))
                best = m;
        for (std::size_t m : members)
            rep[m] = best;
    }

    using Keyed = std::pair<std::pair<std::size_t, std::size_t>, std::string>;
    std::vector<Keyed> differences;
    std::vector<Keyed> singles;

    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t r = rep[i];
        if (r == i)
            continue;
        if (r == 0) {
            singles.push_back({{i, 0}, name(i) + " = " + std::to_string(z.at(i, 0).value())});
            continue;
        }
        const std::size_t a = std::min(i, r), b = std::max(i, r);
        const std::int64_t c = z.at(a, b).value();
        differences.push_back({{a, b},
                               c == 0 ? name(a) + " = " + name(b)
                                      : name(a) + " - " + name(b) + " = " + std::to_string(c)});
    }

    auto kept = [&](std::size_t a, std::size_t b) {
        const Bound ab = z.at(a, b);
        if (ab.is_infinity())
            return false;
        if (a == 0 && ab == Bound::zero())
            return false;  // x >= 0
        for (std::size_t c = 0; c < n; ++c) {
            if (rep[c] != c || c == a || c == b)
                continue;
            if (z.at(a, c) + z.at(c, b) <= ab)
                return false;
        }
        return true;
    };
    auto render = [](const std::string& term, bool has_low, Bound low_raw, bool has_up,
                     Bound up) {
        // low_raw bounds (-term); its negation is the lower bound of term
        std::string out;
        if (has_low && has_up) {
            out = std::to_string(-low_raw.value()) + (low_raw.is_strict() ? " < " : " <= ") +
                  term + (up.is_strict() ? " < " : " <= ") + std::to_string(up.value());
        } else if (has_up) {
            out = term + (up.is_strict() ? " < " : " <= ") + std::to_string(up.value());
        } else {
            out = term + (low_raw.is_strict() ? " > " : " >= ") +
                  std::to_string(-low_raw.value());
        }
        return out;
    };

    for (std::size_t a = 0; a < n; ++a) {
        if (rep[a] != a)
            continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rep[b] != b)
                continue;
            if (a == 0) {
                const bool up = kept(b, 0), low = kept(0, b);
                if (up || low)
                    singles.push_back({{b, 0}, render(name(b), low, z.at(0, b), up, z.at(b, 0))});
            } else {
                const bool up = kept(a, b), low = kept(b, a);
                if (up || low)
                    differences.push_back(
                        {{a, b}, render(name(a) + " - " + name(b), low, z.at(b, a), up, z.at(a, b))});
            }
        }
    }

    auto by_key = [](const Keyed& l, const Keyed& r) { return l.first < r.first; };
    std::stable_sort(differences.begin(), differences.end(), by_key);
    std::stable_sort(singles.begin(), singles.end(), by_key);
    std::ostringstream out;
    bool first = true;
    for (const auto& d : differences) {
        out << (first ? "" : " & ") << d.second;
        first = false;
    }
    for (const auto& s : singles) {
        out << (first ? "" : " & ") << s.second;
        first = false;
    }
    return first ? "true" : out.str();
}

}  // namespace tpn
