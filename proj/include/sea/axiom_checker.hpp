#pragma once

// Bounded verification of the effect-algebra axioms EA1-EA4 and the
// sequential-product axioms SEA1-SEA5 over a carrier's sample.

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sea/core_algebra.hpp"
#include "sea/e0.hpp"
#include "sea/parallel.hpp"

namespace sea {

enum class Axiom : std::uint8_t { EA1, EA2, EA3, EA4, SEA1, SEA2, SEA3, SEA4, SEA5, IDENTITY };
inline constexpr std::size_t kAxiomCount = 10;

std::string_view axiom_name(Axiom a);

struct ViolationReport {
    Axiom axiom = Axiom::EA1;
    std::vector<std::string> witnesses;
    std::string expected;
    std::string actual;
    /// What was compared, e.g. "a+(b+c) vs (a+b)+c", or the identity name.
    std::string detail;

    /// `AXIOM <id> VIOLATION witnesses=<w,...> expected=<e> actual=<a>`
    std::string render() const;

    friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

struct CheckOptions {
    unsigned threads = 0;
    /// Reports kept per summary; the total count is always exact.
    std::size_t max_reports = 1000;
};

struct CheckSummary {
    std::uint64_t triples_checked = 0;
    std::array<std::uint64_t, kAxiomCount> instances{};
    std::uint64_t violation_count = 0;
    /// The first `max_reports` violations in evaluation order, then sorted by
    /// rendering.
    std::vector<ViolationReport> violations;
    /// Bounded-checking caveats (sample-relative quantifiers).
    std::vector<std::string> notes;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const { return violation_count == 0; }

    /// Everything except elapsed time.
    bool same_content(const CheckSummary& other) const;
    /// Appends another summary (evaluated after this one).
    void absorb(const CheckSummary& other, std::size_t max_reports);
};

/// Report lines sorted, one per violation.
std::vector<std::string> render_lines(const CheckSummary& s);

namespace detail {

// Per-shard accumulator; shards are concatenated in order.
class Collector {
public:
    explicit Collector(std::size_t cap = 0) : cap_(cap) {}

    void count(Axiom a, std::uint64_t n = 1) { instances_[static_cast<std::size_t>(a)] += n; }

    void violation(Axiom a, std::vector<std::string> witnesses, std::string expected, std::string actual,
                   std::string detail)
    {
        ++violations_;
        if (reports_.size() < cap_)
            reports_.push_back({a, std::move(witnesses), std::move(expected), std::move(actual), std::move(detail)});
    }

    void append(const Collector& other)
    {
        for (std::size_t i = 0; i < kAxiomCount; ++i)
            instances_[i] += other.instances_[i];
        violations_ += other.violations_;
        for (const auto& r : other.reports_)
            if (reports_.size() < cap_)
                reports_.push_back(r);
    }

    CheckSummary finish(std::chrono::steady_clock::time_point start, std::vector<std::string> notes = {}) const;

private:
    std::size_t cap_;
    std::array<std::uint64_t, kAxiomCount> instances_{};
    std::uint64_t violations_ = 0;
    std::vector<ViolationReport> reports_;
};

template <class F>
Collector sharded(std::size_t count, const CheckOptions& opt, F&& body)
{
    auto parts = map_shards<Collector>(count, opt.threads, [&](std::size_t lo, std::size_t hi) {
        Collector c(opt.max_reports);
        for (std::size_t i = lo; i < hi; ++i)
            body(i, c);
        return c;
    });
    Collector all(opt.max_reports);
    for (const auto& p : parts)
        all.append(p);
    return all;
}

} // namespace detail

template <EffectCarrier C>
CheckSummary check_effect_axioms(const C& carrier, const CheckOptions& opt = {})
{
    const auto start = std::chrono::steady_clock::now();
    const auto& s = carrier.sample();
    const std::size_t n = std::ranges::size(s);
    const auto zero = carrier.zero();
    const auto one = carrier.one();
    auto r = [&](const auto& x) { return carrier.render(x); };
    auto rp = [&](const auto& x) { return sea::render(carrier, x); };

    detail::Collector all(opt.max_reports);

    // EA1, EA3, EA4 per element / pair.
    all.append(detail::sharded(n, opt, [&](std::size_t ia, detail::Collector& out) {
        const auto& a = s[ia];
        for (const auto& b : s) {
            out.count(Axiom::EA1);
            auto ab = carrier.oplus(a, b);
            auto ba = carrier.oplus(b, a);
            if (ab != ba)
                out.violation(Axiom::EA1, {r(a), r(b)}, rp(ab), rp(ba), "a+b vs b+a");
        }

        out.count(Axiom::EA3);
        std::vector<ElementOf<C>> complements;
        for (const auto& b : witness_domain(carrier, a, one)) {
            auto sum = carrier.oplus(a, b);
            if (sum && *sum == one)
                complements.push_back(b);
        }
        if (complements.empty()) {
            out.violation(Axiom::EA3, {r(a)}, "one complement", "none", "a+b=1");
        } else if (complements.size() > 1) {
            out.violation(Axiom::EA3, {r(a), r(complements[0]), r(complements[1])}, "one complement",
                          std::to_string(complements.size()) + " complements", "a+b=1");
        } else if constexpr (HasClosedComplement<C>) {
            if (carrier.complement(a) != complements.front())
                out.violation(Axiom::EA3, {r(a)}, r(complements.front()), r(carrier.complement(a)),
                              "closed-form complement");
        }

        out.count(Axiom::EA4);
        if (carrier.oplus(a, one) && a != zero)
            out.violation(Axiom::EA4, {r(a)}, "undef", rp(carrier.oplus(a, one)), "a+1");
    }));

    // EA2 in both directions: a+(b+c) and (a+b)+c are defined together and agree.
    all.append(detail::sharded(n, opt, [&](std::size_t ia, detail::Collector& out) {
        const auto& a = s[ia];
        for (const auto& b : s) {
            const auto ab = carrier.oplus(a, b);
            for (const auto& c : s) {
                out.count(Axiom::EA2);
                const auto bc = carrier.oplus(b, c);
                const auto left = bc ? carrier.oplus(a, *bc) : std::nullopt;
                const auto right = ab ? carrier.oplus(*ab, c) : std::nullopt;
                if (left != right)
                    out.violation(Axiom::EA2, {r(a), r(b), r(c)}, rp(left), rp(right), "a+(b+c) vs (a+b)+c");
            }
        }
    }));

    std::vector<std::string> notes;
    if constexpr (HasWitnessSample<C>)
        notes.push_back("EA3 uniqueness checked within per-element witness windows");
    return all.finish(start, std::move(notes));
}

template <SequentialCarrier C>
CheckSummary check_sequential_axioms(const C& carrier, const CheckOptions& opt = {})
{
    const auto start = std::chrono::steady_clock::now();
    const auto& s = carrier.sample();
    const std::size_t n = std::ranges::size(s);
    const auto zero = carrier.zero();
    const auto one = carrier.one();
    auto r = [&](const auto& x) { return carrier.render(x); };
    auto rp = [&](const auto& x) { return sea::render(carrier, x); };

    detail::Collector all(opt.max_reports);

    // SEA2, SEA3, SEA4 (complement part) per element / pair.
    all.append(detail::sharded(n, opt, [&](std::size_t ia, detail::Collector& out) {
        const auto& a = s[ia];
        out.count(Axiom::SEA2);
        if (carrier.sprod(one, a) != a)
            out.violation(Axiom::SEA2, {r(a)}, r(a), r(carrier.sprod(one, a)), "1*a");
        for (const auto& b : s) {
            const auto ab = carrier.sprod(a, b);
            const auto ba = carrier.sprod(b, a);
            if (ab == zero) {
                out.count(Axiom::SEA3);
                if (ba != ab)
                    out.violation(Axiom::SEA3, {r(a), r(b)}, r(ab), r(ba), "a*b=0 so b*a");
            }
            // Without a complement for b, EA3 already fails; nothing to compare here.
            const auto bc = find_orthosupplement(carrier, b);
            if (ab == ba && bc) {
                out.count(Axiom::SEA4);
                const auto x = carrier.sprod(a, *bc);
                const auto y = carrier.sprod(*bc, a);
                if (x != y)
                    out.violation(Axiom::SEA4, {r(a), r(b)}, r(x), r(y), "a*b' vs b'*a");
            }
        }
    }));

    // SEA1 and SEA4 (associativity) over triples.
    all.append(detail::sharded(n, opt, [&](std::size_t ia, detail::Collector& out) {
        const auto& a = s[ia];
        for (const auto& b : s) {
            const auto ab = carrier.sprod(a, b);
            const bool commute = ab == carrier.sprod(b, a);
            for (const auto& c : s) {
                if (const auto bc = carrier.oplus(b, c)) {
                    out.count(Axiom::SEA1);
                    const auto lhs = carrier.sprod(a, *bc);
                    const auto rhs = carrier.oplus(ab, carrier.sprod(a, c));
                    if (!rhs || *rhs != lhs)
                        out.violation(Axiom::SEA1, {r(a), r(b), r(c)}, r(lhs), rp(rhs), "a*(b+c) vs a*b+a*c");
                }
                if (commute) {
                    out.count(Axiom::SEA4);
                    const auto lhs = carrier.sprod(a, carrier.sprod(b, c));
                    const auto rhs = carrier.sprod(ab, c);
                    if (lhs != rhs)
                        out.violation(Axiom::SEA4, {r(a), r(b), r(c)}, r(lhs), r(rhs), "a*(b*c) vs (a*b)*c");
                }
            }
        }
    }));

    // SEA5: c commuting with a and b commutes with a*b and a+b.
    all.append(detail::sharded(n, opt, [&](std::size_t ic, detail::Collector& out) {
        const auto& c = s[ic];
        std::vector<ElementOf<C>> commuting;
        for (const auto& a : s)
            if (carrier.sprod(c, a) == carrier.sprod(a, c))
                commuting.push_back(a);
        for (const auto& a : commuting)
            for (const auto& b : commuting) {
                out.count(Axiom::SEA5);
                const auto p = carrier.sprod(a, b);
                const auto cp = carrier.sprod(c, p);
                const auto pc = carrier.sprod(p, c);
                if (cp != pc)
                    out.violation(Axiom::SEA5, {r(c), r(a), r(b)}, r(cp), r(pc), "c*(a*b) vs (a*b)*c");
                if (const auto sum = carrier.oplus(a, b)) {
                    const auto cs = carrier.sprod(c, *sum);
                    const auto sc = carrier.sprod(*sum, c);
                    if (cs != sc)
                        out.violation(Axiom::SEA5, {r(c), r(a), r(b)}, r(cs), r(sc), "c*(a+b) vs (a+b)*c");
                }
            }
    }));

    std::vector<std::string> notes;
    if constexpr (HasWitnessSample<C>)
        notes.push_back("SEA4 associativity quantified over the sample only");
    return all.finish(start, std::move(notes));
}

/// Closed-form identities from the verification of E0's axioms, instantiated
/// for every parameter tuple drawn from `w`. Violations carry axiom IDENTITY
/// and the identity's name in `detail`.
CheckSummary verify_prop3_identities(const e0::Window& w, const CheckOptions& opt = {});

/// Names of the identities run by verify_prop3_identities, in run order.
std::vector<std::string> identity_names();

} // namespace sea
