#pragma once

// Vocabulary of effect algebras and sequential effect algebras, expressed
// generically over any carrier type that satisfies the concepts below.

#include <concepts>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <vector>

namespace sea {

/// Outcome of a partial operation. `std::nullopt` means "undefined"; that is a
/// domain value, not an error.
template <class E>
using PartialResult = std::optional<E>;

/// A carrier for an effect algebra (E, 0, 1, ⊕) with a finite quantification
/// surface `sample()`.
template <class C>
concept EffectCarrier = requires(const C& c, const typename C::Element& x) {
    typename C::Element;
    requires std::equality_comparable<typename C::Element>;
    { c.zero() } -> std::convertible_to<typename C::Element>;
    { c.one() } -> std::convertible_to<typename C::Element>;
    { c.oplus(x, x) } -> std::same_as<PartialResult<typename C::Element>>;
    { c.sample() } -> std::ranges::random_access_range;
    { c.render(x) } -> std::convertible_to<std::string>;
};

/// An effect carrier that also has a total sequential product ∘.
template <class C>
concept SequentialCarrier = EffectCarrier<C> && requires(const C& c, const typename C::Element& x) {
    { c.sprod(x, x) } -> std::same_as<typename C::Element>;
};

// Optional capabilities. Carriers that know a closed form expose it; the
// generic functions fall back to exhaustive search otherwise.
template <class C>
concept HasClosedComplement = requires(const C& c, const typename C::Element& x) {
    { c.complement(x) } -> std::same_as<typename C::Element>;
};

template <class C>
concept HasClosedOrder = requires(const C& c, const typename C::Element& x) {
    { c.leq(x, x) } -> std::same_as<bool>;
};

/// Carriers whose witnesses may live outside `sample()` (infinite models)
/// provide a larger per-pair search domain.
template <class C>
concept HasWitnessSample = requires(const C& c, const typename C::Element& x) {
    { c.witness_sample(x, x) } -> std::ranges::random_access_range;
};

template <EffectCarrier C>
using ElementOf = typename C::Element;

/// Elements that may serve as the `c` in `a ⊕ c = b`.
template <EffectCarrier C>
auto witness_domain(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    if constexpr (HasWitnessSample<C>) {
        return carrier.witness_sample(a, b);
    } else {
        (void)a;
        (void)b;
        const auto& s = carrier.sample();
        return std::vector<ElementOf<C>>(std::ranges::begin(s), std::ranges::end(s));
    }
}

template <EffectCarrier C>
bool orthogonal(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    return carrier.oplus(a, b).has_value();
}

/// The first b in the witness domain with a ⊕ b = 1, if any.
template <EffectCarrier C>
PartialResult<ElementOf<C>> find_orthosupplement(const C& carrier, const ElementOf<C>& a)
{
    if constexpr (HasClosedComplement<C>) {
        return carrier.complement(a);
    } else {
        for (const auto& b : witness_domain(carrier, a, carrier.one())) {
            auto sum = carrier.oplus(a, b);
            if (sum && *sum == carrier.one())
                return b;
        }
        return std::nullopt;
    }
}

/// a′: the unique b with a ⊕ b = 1.
template <EffectCarrier C>
ElementOf<C> orthosupplement(const C& carrier, const ElementOf<C>& a)
{
    if (auto b = find_orthosupplement(carrier, a))
        return *b;
    throw std::runtime_error("no complement found within sample for " + carrier.render(a));
}

/// a ≤ b decided by scanning the witness domain for c with a ⊕ c = b.
template <EffectCarrier C>
bool leq_by_search(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    for (const auto& c : witness_domain(carrier, a, b)) {
        auto sum = carrier.oplus(a, c);
        if (sum && *sum == b)
            return true;
    }
    return false;
}

template <EffectCarrier C>
bool leq(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    if constexpr (HasClosedOrder<C>)
        return carrier.leq(a, b);
    else
        return leq_by_search(carrier, a, b);
}

/// 2a, defined iff a ⊥ a.
template <EffectCarrier C>
PartialResult<ElementOf<C>> doubled(const C& carrier, const ElementOf<C>& a)
{
    return carrier.oplus(a, a);
}

template <SequentialCarrier C>
ElementOf<C> square(const C& carrier, const ElementOf<C>& a)
{
    return carrier.sprod(a, a);
}

/// Sharpness via the a² = a criterion.
template <SequentialCarrier C>
bool is_sharp(const C& carrier, const ElementOf<C>& a)
{
    return square(carrier, a) == a;
}

/// a | b: a ∘ b = b ∘ a.
template <SequentialCarrier C>
bool seq_independent(const C& carrier, const ElementOf<C>& a, const ElementOf<C>& b)
{
    return carrier.sprod(a, b) == carrier.sprod(b, a);
}

template <SequentialCarrier C>
std::vector<ElementOf<C>> sharp_elements(const C& carrier)
{
    std::vector<ElementOf<C>> out;
    for (const auto& a : carrier.sample())
        if (is_sharp(carrier, a))
            out.push_back(a);
    return out;
}

template <EffectCarrier C>
std::string render(const C& carrier, const PartialResult<ElementOf<C>>& r)
{
    return r ? carrier.render(*r) : std::string("undef");
}

} // namespace sea
