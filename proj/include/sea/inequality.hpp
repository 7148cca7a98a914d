#pragma once

// The average-value inequality 2(a∘b) <= a²⊕b² (under a ⊥ b and
// (a∘b) ⊥ (a∘b)), the two sufficient conditions under which it holds, and
// the E0 counterexample.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "sea/core_algebra.hpp"
#include "sea/e0.hpp"
#include "sea/parallel.hpp"

namespace sea {

enum class VerdictStatus { HypothesesNotMet, Holds, Fails };

std::string_view status_name(VerdictStatus s);

template <class E>
struct InequalityVerdict {
    VerdictStatus status = VerdictStatus::HypothesesNotMet;
    E a{};
    E b{};
    E product{};                 // a∘b
    PartialResult<E> doubled;    // 2(a∘b)
    E square_a{};
    E square_b{};
    PartialResult<E> squares_sum; // a²⊕b²
    /// Fails only because a²⊕b² is undefined while 2(a∘b) != 0.
    bool sum_undefined = false;

    friend bool operator==(const InequalityVerdict&, const InequalityVerdict&) = default;
};

template <SequentialCarrier C>
InequalityVerdict<ElementOf<C>> avg_inequality(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    InequalityVerdict<ElementOf<C>> v;
    v.a = a;
    v.b = b;
    v.product = carrier.sprod(a, b);
    v.doubled = doubled(carrier, v.product);
    v.square_a = square(carrier, a);
    v.square_b = square(carrier, b);
    v.squares_sum = carrier.oplus(v.square_a, v.square_b);

    if (!orthogonal(carrier, a, b) || !v.doubled)
        return v;
    if (v.squares_sum) {
        v.status = leq(carrier, *v.doubled, *v.squares_sum) ? VerdictStatus::Holds : VerdictStatus::Fails;
    } else {
        v.sum_undefined = true;
        v.status = *v.doubled == carrier.zero() ? VerdictStatus::Holds : VerdictStatus::Fails;
    }
    return v;
}

/// Line form: `FAIL a=<el> b=<el> prod=<el> 2prod=<el> squares=<el>,<el> sum=<el|undef>`.
/// The leading word is the status (FAIL, HOLDS, NA).
template <SequentialCarrier C>
std::string render_verdict(const C& carrier, const InequalityVerdict<ElementOf<C>>& v)
{
    std::string head = v.status == VerdictStatus::Fails   ? "FAIL"
                       : v.status == VerdictStatus::Holds ? "HOLDS"
                                                          : "NA";
    return head + " a=" + carrier.render(v.a) + " b=" + carrier.render(v.b) + " prod=" + carrier.render(v.product) +
           " 2prod=" + sea::render(carrier, v.doubled) + " squares=" + carrier.render(v.square_a) + "," +
           carrier.render(v.square_b) + " sum=" + sea::render(carrier, v.squares_sum);
}

/// Outcome of checking one of the sufficient conditions on a pair.
/// Holds/Fails refer to the conclusions once the hypotheses are met.
struct ConditionCheck {
    VerdictStatus status = VerdictStatus::HypothesesNotMet;
    std::string failed_step;
};

/// If a²⊥b², (a<=b or b<=a) and a|b, then (a∘b)⊥(a∘b) and 2(a∘b) <= a²⊕b².
template <SequentialCarrier C>
ConditionCheck check_prop1(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    const auto sa = square(carrier, a);
    const auto sb = square(carrier, b);
    const auto sum = carrier.oplus(sa, sb);
    if (!sum || !(leq(carrier, a, b) || leq(carrier, b, a)) || !seq_independent(carrier, a, b))
        return {};
    const auto p = carrier.sprod(a, b);
    const auto twice = doubled(carrier, p);
    if (!twice)
        return {VerdictStatus::Fails, "(a*b) orthogonal to (a*b)"};
    if (!leq(carrier, *twice, *sum))
        return {VerdictStatus::Fails, "2(a*b) <= a^2+b^2"};
    return {VerdictStatus::Holds, {}};
}

/// If a⊥b and a or b is sharp, then a∘b = 0 and the inequality holds.
template <SequentialCarrier C>
ConditionCheck check_prop2(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    if (!orthogonal(carrier, a, b) || !(is_sharp(carrier, a) || is_sharp(carrier, b)))
        return {};
    if (carrier.sprod(a, b) != carrier.zero())
        return {VerdictStatus::Fails, "a*b = 0"};
    if (avg_inequality(carrier, a, b).status != VerdictStatus::Holds)
        return {VerdictStatus::Fails, "2(a*b) <= a^2+b^2"};
    return {VerdictStatus::Holds, {}};
}

/// Every ordered pair of `sample`, failures only, in sample order (a-major).
template <SequentialCarrier C, std::ranges::random_access_range S>
std::vector<InequalityVerdict<ElementOf<C>>> scan_window(const C& carrier, const S& sample, unsigned threads = 0)
{
    using V = std::vector<InequalityVerdict<ElementOf<C>>>;
    const std::size_t n = std::ranges::size(sample);
    auto parts = map_shards<V>(n, threads, [&](std::size_t lo, std::size_t hi) {
        V out;
        for (std::size_t i = lo; i < hi; ++i)
            for (const auto& b : sample)
                if (auto v = avg_inequality(carrier, sample[i], b); v.status == VerdictStatus::Fails)
                    out.push_back(std::move(v));
        return out;
    });
    V all;
    for (auto& p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return all;
}

struct ProofStep {
    std::string claim;    // e.g. "c[1,0,0] + c[0,1,0] = c[1,1,0]"
    std::string expected;
    std::string actual;
    bool ok = false;

    friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct CounterexampleReplay {
    std::vector<ProofStep> steps;
    bool reproduced = false;
};

/// Replays the seven steps of the counterexample c[1,0,0], c[0,1,0] against
/// any carrier over E0 elements (the hook for mutated tables).
template <SequentialCarrier C>
    requires std::same_as<ElementOf<C>, e0::Element>
CounterexampleReplay replay_counterexample(const C& carrier)
{
    using e0::Element;
    const auto x = Element::c(1, 0, 0);
    const auto y = Element::c(0, 1, 0);
    auto r = [](const Element& e) { return e0::render(e); };
    auto rp = [&](const PartialResult<Element>& e) { return sea::render(carrier, e); };
    auto yes = [](bool b) { return std::string(b ? "true" : "false"); };

    CounterexampleReplay out;
    auto step = [&](std::string claim, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        out.steps.push_back({std::move(claim), std::move(expected), std::move(actual), ok});
    };

    step(r(x) + " ⊥ " + r(y), "true", yes(orthogonal(carrier, x, y)));
    step(r(x) + " + " + r(y), r(Element::c(1, 1, 0)), rp(carrier.oplus(x, y)));
    const auto product = carrier.sprod(x, y);
    step(r(x) + " * " + r(y), r(Element::a(1)), r(product));
    step(r(product) + " ⊥ " + r(product), "true", yes(orthogonal(carrier, product, product)));
    const auto twice = doubled(carrier, product);
    step("2(" + r(product) + ") = " + r(product) + " + " + r(product), r(Element::a(2)), rp(twice));
    const auto sx = square(carrier, x);
    const auto sy = square(carrier, y);
    step(r(x) + "^2, " + r(y) + "^2", "0,0", r(sx) + "," + r(sy));
    const auto sum = carrier.oplus(sx, sy);
    const bool below = twice && sum && leq(carrier, *twice, *sum);
    step(rp(twice) + " ≤ " + rp(sum), "false", yes(below));

    out.reproduced = std::ranges::all_of(out.steps, &ProofStep::ok);
    return out;
}

CounterexampleReplay replay_counterexample();

/// True exactly when every step of the replay against E0 matches.
bool verify_theorem1();

} // namespace sea
