#include "zone_oracle.hpp"

#include <algorithm>

namespace oracle {

bool member(const tpn::Zone& z, const Quarters& v) {
    const std::size_t n = z.dimension();
    auto value = [&](std::size_t i) { return i == 0 ? std::int64_t{0} : v[i - 1]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!satisfies(value(i) - value(j), z.at(i, j)))
                return false;
    return true;
}

namespace {

void drop_zeros(Linear& l) {
    std::erase_if(l.coef, [](const auto& e) { return e.second == 0; });
}

bool trivially_true(const Linear& l) { return l.coef.empty() && (l.strict ? 0 < l.c : 0 <= l.c); }

/// u_i - u_j ≺ c with index 0 standing for the constant zero.
Linear difference(std::size_t i, std::size_t j, std::int64_t c, bool strict) {
    Linear l{{}, c, strict};
    if (i > 0)
        l.coef[i] += 1;
    if (j > 0)
        l.coef[j] -= 1;
    drop_zeros(l);
    return l;
}

}  // namespace

Polyhedron Polyhedron::of(const tpn::Zone& z) {
    Polyhedron p;
    const std::size_t n = z.dimension();
    for (std::size_t i = 1; i < n; ++i)
        p.rows.push_back(difference(0, i, 0, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const tpn::Bound b = z.at(i, j);
            if (i != j && !b.is_infinity())
                p.rows.push_back(difference(i, j, 4 * b.value(), b.is_strict()));
            else if (i == j && b < tpn::Bound::zero())
                p.rows.push_back({{}, -1, false});
        }
    return p;
}

void Polyhedron::eliminate(std::size_t var) {
    std::vector<Linear> pos, neg, rest;
    for (auto& l : rows) {
        auto it = l.coef.find(var);
        const std::int64_t a = it == l.coef.end() ? 0 : it->second;
        (a > 0 ? pos : a < 0 ? neg : rest).push_back(std::move(l));
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            const std::int64_t a = p.coef.at(var), b = -q.coef.at(var);
            Linear sum{{}, b * p.c + a * q.c, p.strict || q.strict};
            for (const auto& [x, k] : p.coef)
                sum.coef[x] += b * k;
            for (const auto& [x, k] : q.coef)
                sum.coef[x] += a * k;
            sum.coef.erase(var);
            drop_zeros(sum);
            if (!trivially_true(sum))
                rest.push_back(std::move(sum));
        }
    rows = std::move(rest);
}

bool Polyhedron::feasible() const {
    Polyhedron p = *this;
    for (;;) {
        auto it = std::find_if(p.rows.begin(), p.rows.end(), [](const Linear& l) { return !l.coef.empty(); });
        if (it == p.rows.end())
            break;
        p.eliminate(it->coef.begin()->first);
    }
    return std::all_of(p.rows.begin(), p.rows.end(), trivially_true);
}

bool Polyhedron::contains(const Quarters& v) const {
    for (const auto& l : rows) {
        std::int64_t sum = 0;
        for (const auto& [x, a] : l.coef)
            sum += a * v[x - 1];
        if (l.strict ? !(sum < l.c) : !(sum <= l.c))
            return false;
    }
    return true;
}

Polyhedron projection(const tpn::Zone& z, const std::vector<std::size_t>& free) {
    Polyhedron p = Polyhedron::of(z);
    for (std::size_t pos : free)
        p.eliminate(pos + 1);
    return p;
}

Polyhedron past_closure(const tpn::Zone& z) {
    // substitute u_i - d for every clock, then drop d
    const std::size_t d = z.dimension();
    Polyhedron p = Polyhedron::of(z);
    for (auto& l : p.rows) {
        std::int64_t total = 0;
        for (const auto& [x, a] : l.coef)
            total += a;
        l.coef[d] -= total;
        drop_zeros(l);
    }
    p.rows.push_back(difference(0, d, 0, false));
    p.eliminate(d);
    return p;
}

bool included(const tpn::Zone& inner, const tpn::Zone& outer) {
    const Polyhedron base = Polyhedron::of(inner);
    const std::size_t n = outer.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const tpn::Bound b = outer.at(i, j);
            if (b.is_infinity())
                continue;
            if (i == j) {
                if (b < tpn::Bound::zero() && base.feasible())
                    return false;
                continue;
            }
            // negation of u_i - u_j ≺ c is u_j - u_i ≺' -c
            Polyhedron p = base;
            p.rows.push_back(difference(j, i, -4 * b.value(), !b.is_strict()));
            if (p.feasible())
                return false;
        }
    return true;
}

bool meets_region(const tpn::Zone& z, const Quarters& w, std::int64_t k) {
    Polyhedron p = Polyhedron::of(z);
    const std::size_t n = w.size();
    const std::int64_t top = 4 * k;
    auto bounded = [&](std::size_t i) { return w[i] <= top; };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t u = i + 1;
        if (!bounded(i)) {
            p.rows.push_back(difference(0, u, -top, true));
            continue;
        }
        const std::int64_t floor = w[i] / 4 * 4;
        if (w[i] % 4 == 0) {
            p.rows.push_back(difference(u, 0, floor, false));
            p.rows.push_back(difference(0, u, -floor, false));
        } else {
            p.rows.push_back(difference(u, 0, floor + 4, true));
            p.rows.push_back(difference(0, u, -floor, true));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !bounded(i) || !bounded(j))
                continue;
            const std::int64_t fi = w[i] % 4, fj = w[j] % 4;
            const std::int64_t gap = w[i] / 4 * 4 - w[j] / 4 * 4;
            if (fi < fj)
                p.rows.push_back(difference(i + 1, j + 1, gap, true));
            else if (fi == fj)
                p.rows.push_back(difference(i + 1, j + 1, gap, false));
        }
    return p.feasible();
}

}  // namespace oracle
