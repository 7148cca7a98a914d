#include "sea/axiom_checker.hpp"

#include <algorithm>
#include <functional>
#include <span>

namespace sea {

std::string_view axiom_name(Axiom a)
{
    static constexpr std::array<std::string_view, kAxiomCount> names{
        "EA1", "EA2", "EA3", "EA4", "SEA1", "SEA2", "SEA3", "SEA4", "SEA5", "IDENTITY"};
    return names[static_cast<std::size_t>(a)];
}

std::string ViolationReport::render() const
{
    std::string out = "AXIOM ";
    out += axiom_name(axiom);
    out += " VIOLATION witnesses=";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i)
            out += ',';
        out += witnesses[i];
    }
    out += " expected=" + expected + " actual=" + actual;
    return out;
}

bool CheckSummary::same_content(const CheckSummary& other) const
{
    return triples_checked == other.triples_checked && instances == other.instances &&
           violation_count == other.violation_count && violations == other.violations && notes == other.notes;
}

void CheckSummary::absorb(const CheckSummary& other, std::size_t max_reports)
{
    triples_checked += other.triples_checked;
    for (std::size_t i = 0; i < kAxiomCount; ++i)
        instances[i] += other.instances[i];
    violation_count += other.violation_count;
    for (const auto& v : other.violations)
        if (violations.size() < max_reports)
            violations.push_back(v);
    std::ranges::stable_sort(violations, {}, [](const ViolationReport& v) { return v.render(); });
    for (const auto& n : other.notes)
        notes.push_back(n);
    elapsed += other.elapsed;
}

std::vector<std::string> render_lines(const CheckSummary& s)
{
    std::vector<std::string> lines;
    lines.reserve(s.violations.size());
    for (const auto& v : s.violations)
        lines.push_back(v.render());
    std::ranges::sort(lines);
    return lines;
}

namespace detail {

CheckSummary Collector::finish(std::chrono::steady_clock::time_point start, std::vector<std::string> notes) const
{
    CheckSummary s;
    s.instances = instances_;
    for (auto n : instances_)
        s.triples_checked += n;
    s.violation_count = violations_;
    s.violations = reports_;
    std::ranges::stable_sort(s.violations, {}, [](const ViolationReport& v) { return v.render(); });
    s.notes = std::move(notes);
    s.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return s;
}

} // namespace detail

namespace {

using e0::Element;
using e0::Kind;
using e0::Partial;
using i64 = std::int64_t;

// Closed forms below are computed from subscripts directly, independently of
// the table implementation in e0.cpp.
Element a_or_zero(i64 s) { return s != 0 ? Element::a(s) : Element::zero(); }
Element b_or_one(i64 s) { return s != 0 ? Element::b(s) : Element::one(); }

Partial add(const Partial& x, const Partial& y)
{
    if (!x || !y)
        return std::nullopt;
    return e0::oplus(*x, *y);
}

Partial mul(const Partial& x, const Partial& y)
{
    if (!x || !y)
        return std::nullopt;
    return e0::sprod(*x, *y);
}

struct IdentityContext {
    const std::string& name;
    detail::Collector& out;

    // Every listed form must equal the closed form (both undefined counts as
    // equal, which is how "defined iff" conditions are checked).
    void expect(std::span<const Element> tuple, std::initializer_list<Partial> forms, const Partial& closed)
    {
        out.count(Axiom::IDENTITY);
        std::size_t idx = 0;
        for (const auto& f : forms) {
            ++idx;
            if (f != closed) {
                std::vector<std::string> w;
                for (const auto& t : tuple)
                    w.push_back(e0::render(t));
                out.violation(Axiom::IDENTITY, std::move(w), closed ? e0::render(*closed) : "undef",
                              f ? e0::render(*f) : "undef", name + " form " + std::to_string(idx));
            }
        }
    }
};

using Body = std::function<void(std::span<const Element>, IdentityContext&)>;

struct Identity {
    std::string name;
    std::vector<Kind> signature;
    Body body;
};

// Parameter names follow the identities' own subscripts; `e` is the tuple.
std::vector<Identity> identities()
{
    std::vector<Identity> ids;
    auto add_id = [&](std::string name, std::vector<Kind> sig, Body body) {
        ids.push_back({std::move(name), std::move(sig), std::move(body)});
    };
    using K = Kind;

    // Complements. The unit laws for 0 and 1 are run separately over the
    // whole window.
    add_id("a_n+b_n=1", {K::A}, [](auto e, auto& cx) {
        cx.expect(e, {e0::oplus(e[0], Element::b(e[0].n()))}, Element::one());
    });
    add_id("c[i,k,m]+d[i,k,m]=1", {K::C}, [](auto e, auto& cx) {
        cx.expect(e, {e0::oplus(e[0], Element::d(e[0].i(), e[0].k(), e[0].m()))}, Element::one());
    });

    // Associativity of ⊕.
    add_id("a_n+(a_m+a_k)=a[k+m+n]", {K::A, K::A, K::A}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)}, Element::a(e[0].n() + e[1].n() + e[2].n()));
    });
    add_id("a_n+(a_m+c[i,j,k])=c[i,j,k+m+n]", {K::A, K::A, K::C}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)},
                  Element::c(e[2].i(), e[2].k(), e[2].m() + e[1].n() + e[0].n()));
    });
    add_id("a_n+(a_m+d[i,j,k])=d[i,j,k-m-n]", {K::A, K::A, K::D}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)},
                  Element::d(e[2].i(), e[2].k(), e[2].m() - e[1].n() - e[0].n()));
    });
    add_id("a_n+(c[r,s,t]+c[i,j,k])=c[i+r,s+j,k+t+n]", {K::A, K::C, K::C}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        const auto &cr = e[1], &ci = e[2];
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)},
                  Element::c(ci.i() + cr.i(), cr.k() + ci.k(), ci.m() + cr.m() + e[0].n()));
    });
    add_id("c[l,m,n]+(c[r,s,t]+c[i,j,k])=c[i+l+r,j+m+s,k+n+t]", {K::C, K::C, K::C}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        cx.expect(e, {add(x, add(y, z)), add(add(x, z), y)},
                  Element::c(e[0].i() + e[1].i() + e[2].i(), e[0].k() + e[1].k() + e[2].k(),
                             e[0].m() + e[1].m() + e[2].m()));
    });
    add_id("a_n+(a_m+b_k) defined iff n+m<=k", {K::A, K::A, K::B}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        const i64 n = e[0].n(), m = e[1].n(), k = e[2].n();
        const Partial closed = n + m <= k ? Partial(b_or_one(k - m - n)) : std::nullopt;
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)}, closed);
    });
    add_id("a_n+(c[r,s,t]+d[i,j,k]) defined iff case (1) or (2)", {K::A, K::C, K::D}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        const i64 n = e[0].n(), r = e[1].i(), s = e[1].k(), t = e[1].m();
        const i64 i = e[2].i(), j = e[2].k(), k = e[2].m();
        Partial closed;
        if (r <= i && s <= j && (i - r) * (i - r) + (j - s) * (j - s) != 0)
            closed = Element::d(i - r, j - s, k - t - n);
        else if (r == i && s == j && n + t <= k)
            closed = b_or_one(k - t - n);
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z), add(add(x, z), y)}, closed);
    });
    add_id("c[l,m,n]+(c[r,s,t]+d[i,j,k]) defined iff case (1) or (2)", {K::C, K::C, K::D}, [](auto e, auto& cx) {
        const Partial x = e[0], y = e[1], z = e[2];
        const i64 l = e[0].i(), m = e[0].k(), n = e[0].m();
        const i64 r = e[1].i(), s = e[1].k(), t = e[1].m();
        const i64 i = e[2].i(), j = e[2].k(), k = e[2].m();
        Partial closed;
        if (l + r <= i && m + s <= j && (i - l - r) * (i - l - r) + (j - m - s) * (j - m - s) != 0)
            closed = Element::d(i - l - r, j - m - s, k - t - n);
        else if (l + r == i && m + s == j && n + t <= k)
            closed = b_or_one(k - t - n);
        cx.expect(e, {add(x, add(y, z)), add(add(x, y), z)}, closed);
    });

    // Distributivity of ∘ over ⊕: outer ∘ (p ⊕ q) = outer∘p ⊕ outer∘q.
    auto distributes = [](auto e, IdentityContext& cx, const Partial& closed) {
        const Partial o = e[0], p = e[1], q = e[2];
        cx.expect(e, {mul(o, add(p, q)), add(mul(o, p), mul(o, q))}, closed);
    };

    // p = a_m, q = a_k
    add_id("a_n*(a_m+a_k)=0", {K::A, K::A, K::A}, [=](auto e, auto& cx) { distributes(e, cx, Element::zero()); });
    add_id("b_n*(a_m+a_k)=a[m+k]", {K::B, K::A, K::A},
           [=](auto e, auto& cx) { distributes(e, cx, Element::a(e[1].n() + e[2].n())); });
    add_id("c*(a_m+a_k)=0", {K::C, K::A, K::A}, [=](auto e, auto& cx) { distributes(e, cx, Element::zero()); });
    add_id("d*(a_m+a_k)=a[m+k]", {K::D, K::A, K::A},
           [=](auto e, auto& cx) { distributes(e, cx, Element::a(e[1].n() + e[2].n())); });

    // p = a_m, q = c[r,s,t]
    add_id("a_n*(a_m+c)=0", {K::A, K::A, K::C}, [=](auto e, auto& cx) { distributes(e, cx, Element::zero()); });
    add_id("b_n*(a_m+c[r,s,t])=c[r,s,m+t]", {K::B, K::A, K::C}, [=](auto e, auto& cx) {
        distributes(e, cx, Element::c(e[2].i(), e[2].k(), e[1].n() + e[2].m()));
    });
    add_id("c[x,y,z]*(a_m+c[r,s,t])=a[xs+yr] or 0", {K::C, K::A, K::C}, [=](auto e, auto& cx) {
        distributes(e, cx, a_or_zero(e[0].i() * e[2].k() + e[0].k() * e[2].i()));
    });
    add_id("d[x,y,z]*(a_m+c[r,s,t])=c[r,s,m+t-xs-yr]", {K::D, K::A, K::C}, [=](auto e, auto& cx) {
        const i64 x = e[0].i(), y = e[0].k(), m = e[1].n(), r = e[2].i(), s = e[2].k(), t = e[2].m();
        distributes(e, cx, Element::c(r, s, m + t - x * s - y * r));
    });

    // p = a_m, q = d[r,s,t]
    add_id("a_n*(a_m+d)=a_n", {K::A, K::A, K::D}, [=](auto e, auto& cx) { distributes(e, cx, e[0]); });
    add_id("b_n*(a_m+d[r,s,t])=d[r,s,n+t-m]", {K::B, K::A, K::D}, [=](auto e, auto& cx) {
        distributes(e, cx, Element::d(e[2].i(), e[2].k(), e[0].n() + e[2].m() - e[1].n()));
    });
    add_id("c[x,y,z]*(a_m+d[r,s,t])=c[x,y,z-xs-yr]", {K::C, K::A, K::D}, [=](auto e, auto& cx) {
        const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), r = e[2].i(), s = e[2].k();
        distributes(e, cx, Element::c(x, y, z - x * s - y * r));
    });
    add_id("d[x,y,z]*(a_m+d[r,s,t])=d[x+r,y+s,z+t-m-xs-yr]", {K::D, K::A, K::D}, [=](auto e, auto& cx) {
        const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), m = e[1].n(), r = e[2].i(), s = e[2].k(),
                  t = e[2].m();
        distributes(e, cx, Element::d(x + r, y + s, z + t - m - x * s - y * r));
    });

    // p = c[x,y,z], q = c[r,s,t]
    add_id("a_n*(c+c)=0", {K::A, K::C, K::C}, [=](auto e, auto& cx) { distributes(e, cx, Element::zero()); });
    add_id("b_n*(c[x,y,z]+c[r,s,t])=c[x+r,y+s,z+t]", {K::B, K::C, K::C}, [=](auto e, auto& cx) {
        distributes(e, cx, Element::c(e[1].i() + e[2].i(), e[1].k() + e[2].k(), e[1].m() + e[2].m()));
    });
    add_id("c[i,k,m]*(c[x,y,z]+c[r,s,t])=a[i(y+s)+k(x+r)] or 0", {K::C, K::C, K::C}, [=](auto e, auto& cx) {
        const i64 i = e[0].i(), k = e[0].k(), x = e[1].i(), y = e[1].k(), r = e[2].i(), s = e[2].k();
        distributes(e, cx, a_or_zero(i * (y + s) + k * (x + r)));
    });
    add_id("d[i,k,m]*(c[x,y,z]+c[r,s,t])=c[x+r,y+s,z+t-i(y+s)-k(x+r)]", {K::D, K::C, K::C},
           [=](auto e, auto& cx) {
               const i64 i = e[0].i(), k = e[0].k(), x = e[1].i(), y = e[1].k(), z = e[1].m(), r = e[2].i(),
                         s = e[2].k(), t = e[2].m();
               distributes(e, cx, Element::c(x + r, y + s, z + t - i * (y + s) - k * (x + r)));
           });

    // p = a_m, q = b_k with m <= k
    auto ab_case = [](auto e) { return e[1].n() <= e[2].n(); };
    add_id("a_n*(a_m+b_k)=a_n", {K::A, K::A, K::B}, [=](auto e, auto& cx) {
        if (ab_case(e))
            distributes(e, cx, e[0]);
    });
    add_id("b_n*(a_m+b_k)=b[n+k-m]", {K::B, K::A, K::B}, [=](auto e, auto& cx) {
        if (ab_case(e))
            distributes(e, cx, Element::b(e[0].n() + e[2].n() - e[1].n()));
    });
    add_id("c*(a_m+b_k)=c", {K::C, K::A, K::B}, [=](auto e, auto& cx) {
        if (ab_case(e))
            distributes(e, cx, e[0]);
    });
    add_id("d[x,y,z]*(a_m+b_k)=d[x,y,z+k-m]", {K::D, K::A, K::B}, [=](auto e, auto& cx) {
        if (ab_case(e))
            distributes(e, cx, Element::d(e[0].i(), e[0].k(), e[0].m() + e[2].n() - e[1].n()));
    });

    // p = c[i,k,m], q = d[r,s,t] with i<=r, k<=s, (r-i)^2+(s-k)^2 != 0
    auto cd_proper = [](auto e) {
        const i64 i = e[1].i(), k = e[1].k(), r = e[2].i(), s = e[2].k();
        return i <= r && k <= s && (r - i) * (r - i) + (s - k) * (s - k) != 0;
    };
    add_id("a_n*(c+d)=a_n [proper]", {K::A, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_proper(e))
            distributes(e, cx, e[0]);
    });
    add_id("b_n*(c[i,k,m]+d[r,s,t])=d[r-i,s-k,n+t-m]", {K::B, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_proper(e))
            distributes(e, cx,
                        Element::d(e[2].i() - e[1].i(), e[2].k() - e[1].k(), e[0].n() + e[2].m() - e[1].m()));
    });
    add_id("c[x,y,z]*(c[i,k,m]+d[r,s,t])=c[x,y,z-x(s-k)-y(r-i)]", {K::C, K::C, K::D}, [=](auto e, auto& cx) {
        if (!cd_proper(e))
            return;
        const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), i = e[1].i(), k = e[1].k(), r = e[2].i(),
                  s = e[2].k();
        distributes(e, cx, Element::c(x, y, z - x * (s - k) - y * (r - i)));
    });
    add_id("d[x,y,z]*(c[i,k,m]+d[r,s,t])=d[x+r-i,y+s-k,z+t-m-x(s-k)-y(r-i)]", {K::D, K::C, K::D},
           [=](auto e, auto& cx) {
               if (!cd_proper(e))
                   return;
               const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), i = e[1].i(), k = e[1].k(), m = e[1].m(),
                         r = e[2].i(), s = e[2].k(), t = e[2].m();
               distributes(e, cx, Element::d(x + r - i, y + s - k, z + t - m - x * (s - k) - y * (r - i)));
           });

    // p = c[i,k,m], q = d[i,k,t] with m <= t
    auto cd_same = [](auto e) {
        return e[1].i() == e[2].i() && e[1].k() == e[2].k() && e[1].m() <= e[2].m();
    };
    add_id("a_n*(c+d)=a_n [same]", {K::A, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_same(e))
            distributes(e, cx, e[0]);
    });
    add_id("b_n*(c[i,k,m]+d[i,k,t])=b[n+t-m]", {K::B, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_same(e))
            distributes(e, cx, Element::b(e[0].n() + e[2].m() - e[1].m()));
    });
    add_id("c*(c[i,k,m]+d[i,k,t])=c", {K::C, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_same(e))
            distributes(e, cx, e[0]);
    });
    add_id("d[x,y,z]*(c[i,k,m]+d[i,k,t])=d[x,y,z+t-m]", {K::D, K::C, K::D}, [=](auto e, auto& cx) {
        if (cd_same(e))
            distributes(e, cx, Element::d(e[0].i(), e[0].k(), e[0].m() + e[2].m() - e[1].m()));
    });

    // Associativity of ∘: x*(y*z) = z*(x*y) = y*(x*z).
    auto associates = [](auto e, IdentityContext& cx, const Partial& closed) {
        const Partial x = e[0], y = e[1], z = e[2];
        cx.expect(e, {mul(x, mul(y, z)), mul(z, mul(x, y)), mul(y, mul(x, z))}, closed);
    };
    auto assoc = [&](std::string name, std::vector<Kind> sig, std::function<Partial(std::span<const Element>)> f) {
        add_id(std::move(name), std::move(sig), [=](auto e, auto& cx) { associates(e, cx, f(e)); });
    };
    auto zero = [](auto) -> Partial { return Element::zero(); };
    auto first = [](auto e) -> Partial { return e[0]; };

    assoc("a*(a*a)=0", {K::A, K::A, K::A}, zero);
    assoc("a*(a*b)=0", {K::A, K::A, K::B}, zero);
    assoc("a*(a*c)=0", {K::A, K::A, K::C}, zero);
    assoc("a*(a*d)=0", {K::A, K::A, K::D}, zero);
    assoc("a_n*(b*b)=a_n", {K::A, K::B, K::B}, first);
    assoc("a*(b*c)=0", {K::A, K::B, K::C}, zero);
    assoc("a_n*(b*d)=a_n", {K::A, K::B, K::D}, first);
    assoc("a*(c*c)=0", {K::A, K::C, K::C}, zero);
    assoc("a*(c*d)=0", {K::A, K::C, K::D}, zero);
    assoc("a_n*(d*d)=a_n", {K::A, K::D, K::D}, first);
    assoc("b_n*(b_m*b_k)=b[m+n+k]", {K::B, K::B, K::B},
          [](auto e) -> Partial { return Element::b(e[0].n() + e[1].n() + e[2].n()); });
    assoc("b*(b*c[r,s,t])=c[r,s,t]", {K::B, K::B, K::C}, [](auto e) -> Partial { return e[2]; });
    assoc("b_n*(b_m*d[r,s,t])=d[r,s,n+m+t]", {K::B, K::B, K::D}, [](auto e) -> Partial {
        return Element::d(e[2].i(), e[2].k(), e[0].n() + e[1].n() + e[2].m());
    });
    assoc("b*(c[i,k,m]*c[r,s,t])=a[is+kr] or 0", {K::B, K::C, K::C},
          [](auto e) -> Partial { return a_or_zero(e[1].i() * e[2].k() + e[1].k() * e[2].i()); });
    assoc("b*(c[i,k,m]*d[r,s,t])=c[i,k,m-is-kr]", {K::B, K::C, K::D}, [](auto e) -> Partial {
        const i64 i = e[1].i(), k = e[1].k(), m = e[1].m(), r = e[2].i(), s = e[2].k();
        return Element::c(i, k, m - i * s - k * r);
    });
    assoc("b_n*(d[i,k,m]*d[r,s,t])=d[i+r,k+s,n+m+t-is-kr]", {K::B, K::D, K::D}, [](auto e) -> Partial {
        const i64 n = e[0].n(), i = e[1].i(), k = e[1].k(), m = e[1].m(), r = e[2].i(), s = e[2].k(),
                  t = e[2].m();
        return Element::d(i + r, k + s, n + m + t - i * s - k * r);
    });
    assoc("c*(c*c)=0", {K::C, K::C, K::C}, zero);
    assoc("c[x,y,z]*(c[i,k,m]*d[r,s,t])=a[xk+yi] or 0", {K::C, K::C, K::D},
          [](auto e) -> Partial { return a_or_zero(e[0].i() * e[1].k() + e[0].k() * e[1].i()); });
    assoc("c[x,y,z]*(d[i,k,m]*d[r,s,t])=c[x,y,z-x(k+s)-y(i+r)]", {K::C, K::D, K::D}, [](auto e) -> Partial {
        const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), i = e[1].i(), k = e[1].k(), r = e[2].i(),
                  s = e[2].k();
        return Element::c(x, y, z - x * (k + s) - y * (i + r));
    });
    assoc("d[x,y,z]*(d[i,k,m]*d[r,s,t])=d[x+i+r,y+k+s,z+m+t-(is+kr+xk+xs+yi+yr)]", {K::D, K::D, K::D},
          [](auto e) -> Partial {
              const i64 x = e[0].i(), y = e[0].k(), z = e[0].m(), i = e[1].i(), k = e[1].k(), m = e[1].m(),
                        r = e[2].i(), s = e[2].k(), t = e[2].m();
              return Element::d(x + i + r, y + k + s,
                                z + m + t - (i * s + k * r + x * k + x * s + y * i + y * r));
          });

    return ids;
}

std::vector<Element> elements_of(Kind kind, const std::vector<Element>& window)
{
    std::vector<Element> out;
    for (const auto& e : window)
        if (e.kind() == kind)
            out.push_back(e);
    return out;
}

} // namespace

std::vector<std::string> identity_names()
{
    std::vector<std::string> names{"0+x=x", "0*x=0", "1*x=x"};
    for (const auto& id : identities())
        names.push_back(id.name);
    return names;
}

CheckSummary verify_prop3_identities(const e0::Window& w, const CheckOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    w.validate();
    const auto window = e0::enumerate_window(w);
    detail::Collector all(opt.max_reports);

    {
        const std::string unit_names[] = {"0+x=x", "0*x=0", "1*x=x"};
        detail::Collector out(opt.max_reports);
        for (const auto& x : window) {
            const Element t[] = {x};
            IdentityContext{unit_names[0], out}.expect(t, {e0::oplus(Element::zero(), x)}, x);
            IdentityContext{unit_names[1], out}.expect(t, {e0::sprod(Element::zero(), x)}, Element::zero());
            IdentityContext{unit_names[2], out}.expect(t, {e0::sprod(Element::one(), x)}, x);
        }
        all.append(out);
    }

    for (const auto& id : identities()) {
        std::vector<std::vector<Element>> domains;
        for (auto k : id.signature)
            domains.push_back(elements_of(k, window));
        const auto& first = domains.front();
        all.append(detail::sharded(first.size(), opt, [&](std::size_t i0, detail::Collector& out) {
            IdentityContext cx{id.name, out};
            std::array<Element, 3> t{};
            t[0] = first[i0];
            const std::size_t arity = domains.size();
            if (arity == 1) {
                id.body(std::span<const Element>(t.data(), 1), cx);
                return;
            }
            for (const auto& e1 : domains[1]) {
                t[1] = e1;
                if (arity == 2) {
                    id.body(std::span<const Element>(t.data(), 2), cx);
                    continue;
                }
                for (const auto& e2 : domains[2]) {
                    t[2] = e2;
                    id.body(std::span<const Element>(t.data(), 3), cx);
                }
            }
        }));
    }
    return all.finish(start, {"identities instantiated over the window's parameter tuples"});
}

} // namespace sea
