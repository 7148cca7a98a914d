#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls the code under test except the E0 tables
// themselves and the FiniteModel container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sea/e0.hpp"
#include "sea/finite_model.hpp"

namespace oracle {

using sea::finite::FiniteModel;
using sea::finite::Index;
using sea::finite::kUndefined;

// ---- E0 -------------------------------------------------------------------

/// Every element with a/b subscript <= nb, c/d first indices <= ikb and
/// |m| <= mb, written out without enumerate_window.
inline std::vector<sea::e0::Element> e0_box(std::int64_t nb, std::int64_t ikb, std::int64_t mb)
{
    using sea::e0::Element;
    std::vector<Element> out{Element::zero(), Element::one()};
    for (std::int64_t n = 1; n <= nb; ++n) {
        out.push_back(Element::a(n));
        out.push_back(Element::b(n));
    }
    for (std::int64_t i = 0; i <= ikb; ++i)
        for (std::int64_t k = 0; k <= ikb; ++k)
            for (std::int64_t m = -mb; m <= mb; ++m)
                if (i != 0 || k != 0) {
                    out.push_back(Element::c(i, k, m));
                    out.push_back(Element::d(i, k, m));
                }
    return out;
}

struct Magnitudes {
    std::int64_t n = 0, ik = 0, m = 0;
};

inline Magnitudes magnitudes(const sea::e0::Element& x)
{
    using sea::e0::Kind;
    if (x.is(Kind::A) || x.is(Kind::B))
        return {x.n(), 0, 0};
    if (x.is(Kind::C) || x.is(Kind::D))
        return {0, std::max(x.i(), x.k()), std::abs(x.m())};
    return {};
}

/// x <= y by looking for c with x + c = y among elements whose indices are
/// bounded by the summed magnitudes of x and y (plus one of slack).
inline bool e0_leq_search(const sea::e0::Element& x, const sea::e0::Element& y)
{
    const auto a = magnitudes(x), b = magnitudes(y);
    const std::int64_t nb = a.n + b.n + a.m + b.m + 1;
    const std::int64_t ikb = a.ik + b.ik + 1;
    const std::int64_t mb = a.m + b.m + a.n + b.n + 1;
    for (const auto& c : e0_box(nb, ikb, mb))
        if (auto s = sea::e0::oplus(x, c); s && *s == y)
            return true;
    return false;
}

// ---- finite models --------------------------------------------------------

struct Tables {
    int n;
    std::vector<Index> op; // kUndefined when undefined
    std::vector<Index> sp; // empty when absent

    Index plus(int a, int b) const { return op[static_cast<std::size_t>(a * n + b)]; }
    Index times(int a, int b) const { return sp[static_cast<std::size_t>(a * n + b)]; }
};

inline Tables tables(const FiniteModel& m)
{
    return {m.order(), m.oplus_table(), m.sprod_table() ? *m.sprod_table() : std::vector<Index>{}};
}

/// Which of EA1..EA4 fail (indices 0..3), straight from the definitions.
inline std::array<bool, 4> effect_failures(const FiniteModel& model)
{
    const auto t = tables(model);
    const int n = t.n, one = n - 1;
    std::array<bool, 4> bad{};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.plus(a, b) != t.plus(b, a))
                bad[0] = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const Index bc = t.plus(b, c), ab = t.plus(a, b);
                const bool left = bc != kUndefined && t.plus(a, bc) != kUndefined;
                const bool right = ab != kUndefined && t.plus(ab, c) != kUndefined;
                if (left != right || (left && t.plus(a, bc) != t.plus(ab, c)))
                    bad[1] = true;
            }
    for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int b = 0; b < n; ++b)
            count += t.plus(a, b) == one;
        if (count != 1)
            bad[2] = true;
        if (a != 0 && t.plus(a, one) != kUndefined)
            bad[3] = true;
    }
    return bad;
}

/// Which of SEA1..SEA5 fail (indices 0..4). Requires a valid effect algebra.
inline std::array<bool, 5> sequential_failures(const FiniteModel& model)
{
    const auto t = tables(model);
    const int n = t.n, one = n - 1;
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.plus(a, b) == one)
                comp[static_cast<std::size_t>(a)] = b;
    auto commute = [&](int a, int b) { return t.times(a, b) == t.times(b, a); };

    std::array<bool, 5> bad{};
    for (int a = 0; a < n; ++a) {
        if (t.times(one, a) != a)
            bad[1] = true;
        for (int b = 0; b < n; ++b) {
            if (t.times(a, b) == 0 && t.times(b, a) != 0)
                bad[2] = true;
            if (commute(a, b)) {
                if (!commute(a, comp[static_cast<std::size_t>(b)]))
                    bad[3] = true;
                for (int c = 0; c < n; ++c)
                    if (t.times(a, t.times(b, c)) != t.times(t.times(a, b), c))
                        bad[3] = true;
            }
            for (int c = 0; c < n; ++c) {
                if (t.plus(b, c) == kUndefined)
                    continue;
                const Index s = t.plus(t.times(a, b), t.times(a, c));
                if (s == kUndefined || s != t.times(a, t.plus(b, c)))
                    bad[0] = true;
            }
        }
    }
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (commute(c, a) && commute(c, b)) {
                    if (!commute(c, t.times(a, b)))
                        bad[4] = true;
                    if (t.plus(a, b) != kUndefined && !commute(c, t.plus(a, b)))
                        bad[4] = true;
                }
    return bad;
}

/// All effect algebras of the given order with labelled elements, from
/// every symmetric table whose 0 row is the identity.
inline std::vector<FiniteModel> all_effect_algebras(int n)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            cells.push_back({i, j});
    std::vector<Index> op(static_cast<std::size_t>(n * n), kUndefined);
    for (int x = 0; x < n; ++x)
        op[static_cast<std::size_t>(x)] = op[static_cast<std::size_t>(x * n)] = static_cast<Index>(x);

    std::vector<FiniteModel> out;
    std::vector<int> digit(cells.size(), 0);
    while (true) {
        for (std::size_t q = 0; q < cells.size(); ++q) {
            const auto [i, j] = cells[q];
            const Index v = digit[q] == n ? kUndefined : static_cast<Index>(digit[q]);
            op[static_cast<std::size_t>(i * n + j)] = op[static_cast<std::size_t>(j * n + i)] = v;
        }
        auto m = FiniteModel::from_tables(n, op, std::nullopt);
        const auto bad = effect_failures(m);
        if (std::none_of(bad.begin(), bad.end(), [](bool b) { return b; }))
            out.push_back(std::move(m));
        std::size_t q = 0;
        while (q < digit.size() && ++digit[q] > n)
            digit[q++] = 0;
        if (q == digit.size())
            break;
    }
    std::sort(out.begin(), out.end(), [](const FiniteModel& a, const FiniteModel& b) {
        return a.oplus_table() < b.oplus_table();
    });
    return out;
}

/// All sequential products on `ea`. With `fix_units` the rows and columns
/// of 0 and 1 are set to their forced values; otherwise every cell is free.
inline std::vector<FiniteModel> all_sequential_products(const FiniteModel& ea, bool fix_units)
{
    const int n = ea.order(), one = n - 1;
    std::vector<Index> sp(static_cast<std::size_t>(n * n), 0);
    std::vector<std::size_t> free;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto at = static_cast<std::size_t>(a * n + b);
            if (fix_units && (a == 0 || b == 0))
                sp[at] = 0;
            else if (fix_units && a == one)
                sp[at] = static_cast<Index>(b);
            else if (fix_units && b == one)
                sp[at] = static_cast<Index>(a);
            else
                free.push_back(at);
        }
    std::vector<FiniteModel> out;
    while (true) {
        FiniteModel m(ea.names(), ea.oplus_table(), sp);
        const auto bad = sequential_failures(m);
        if (std::none_of(bad.begin(), bad.end(), [](bool b) { return b; }))
            out.push_back(std::move(m));
        std::size_t q = 0;
        while (q < free.size() && ++sp[free[q]] == n)
            sp[free[q++]] = 0;
        if (q == free.size())
            break;
    }
    std::sort(out.begin(), out.end(), [](const FiniteModel& a, const FiniteModel& b) {
        return *a.sprod_table() < *b.sprod_table();
    });
    return out;
}

/// Relabelling of both tables by `p` (p[old] = new).
inline std::pair<std::vector<Index>, std::vector<Index>> relabel(const FiniteModel& m, const std::vector<int>& p)
{
    const int n = m.order();
    const auto t = tables(m);
    std::vector<Index> op(static_cast<std::size_t>(n * n)), sp;
    if (!t.sp.empty())
        sp.resize(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto at = static_cast<std::size_t>(p[a] * n + p[b]);
            const Index v = t.plus(a, b);
            op[at] = v == kUndefined ? kUndefined : static_cast<Index>(p[v]);
            if (!sp.empty())
                sp[at] = static_cast<Index>(p[t.times(a, b)]);
        }
    return {op, sp};
}

inline std::vector<std::vector<int>> unit_fixing_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (p.front() == 0 && p.back() == n - 1)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Smallest relabelling of the tables: equal for isomorphic models.
inline std::pair<std::vector<Index>, std::vector<Index>> canonical_form(const FiniteModel& m)
{
    std::optional<std::pair<std::vector<Index>, std::vector<Index>>> best;
    for (const auto& p : unit_fixing_permutations(m.order())) {
        auto r = relabel(m, p);
        if (!best || r < *best)
            best = std::move(r);
    }
    return *best;
}

inline std::size_t automorphism_count(const FiniteModel& m)
{
    const auto self = relabel(m, unit_fixing_permutations(m.order()).front());
    std::size_t count = 0;
    for (const auto& p : unit_fixing_permutations(m.order()))
        count += relabel(m, p) == self;
    return count;
}

inline std::size_t isomorphism_classes(const std::vector<FiniteModel>& models)
{
    std::set<std::pair<std::vector<Index>, std::vector<Index>>> forms;
    for (const auto& m : models)
        forms.insert(canonical_form(m));
    return forms.size();
}

} // namespace oracle
