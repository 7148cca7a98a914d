#pragma once

// The countable sequential effect algebra E0 with elements
//   0, 1, a_n, b_n (n >= 1), c_{i,k,m}, d_{i,k,m} (i,k >= 0, i^2+k^2 != 0, m in Z)
// and closed-form ⊕ / ∘ tables.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sea/core_algebra.hpp"

namespace sea::e0 {

enum class Kind : std::uint8_t { Zero, One, A, B, C, D };

/// Thrown by the element and expression parsers. `position` is a 0-based
/// byte offset into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class Element {
public:
    constexpr Element() = default;

    static constexpr Element zero() { return Element(Kind::Zero, 0, 0, 0); }
    static constexpr Element one() { return Element(Kind::One, 0, 0, 0); }
    static Element a(std::int64_t n);
    static Element b(std::int64_t n);
    static Element c(std::int64_t i, std::int64_t k, std::int64_t m);
    static Element d(std::int64_t i, std::int64_t k, std::int64_t m);

    Kind kind() const noexcept { return kind_; }
    bool is(Kind k) const noexcept { return kind_ == k; }

    /// Subscript of a_n / b_n.
    std::int64_t n() const noexcept { return i_; }
    /// Subscripts of c_{i,k,m} / d_{i,k,m}.
    std::int64_t i() const noexcept { return i_; }
    std::int64_t k() const noexcept { return k_; }
    std::int64_t m() const noexcept { return m_; }

    // Kind first, then subscripts lexicographically; this is also the
    // enumeration order of windows.
    friend auto operator<=>(const Element&, const Element&) = default;
    friend bool operator==(const Element&, const Element&) = default;

private:
    constexpr Element(Kind kind, std::int64_t i, std::int64_t k, std::int64_t m)
        : kind_(kind), i_(i), k_(k), m_(m)
    {
    }

    Kind kind_ = Kind::Zero;
    std::int64_t i_ = 0;
    std::int64_t k_ = 0;
    std::int64_t m_ = 0;
};

using Partial = PartialResult<Element>;

// Branches of the ⊕ table, for coverage accounting. Undefined is the
// "no other ⊕ operation is defined" fall-through.
enum class OplusBranch : std::uint8_t {
    ZeroUnit,   // 0 ⊕ x = x
    AA,         // a_n ⊕ a_m = a_{n+m}
    AC,         // a_n ⊕ c_{i,k,m} = c_{i,k,n+m}
    AD,         // a_n ⊕ d_{i,k,m} = d_{i,k,m-n}
    CC,         // c ⊕ c, indices add
    ABLess,     // n < m: a_n ⊕ b_m = b_{m-n}
    ABEqual,    // a_n ⊕ b_n = 1
    CDStrict,   // i<=r, k<=s, (r-i,s-k) != 0: d_{r-i,s-k,t-m}
    CDLess,     // same (i,k), m < t: b_{t-m}
    CDEqual,    // c_{i,k,m} ⊕ d_{i,k,m} = 1
    Undefined,
    Count_
};

enum class SprodBranch : std::uint8_t {
    Zero,     // 0 ∘ x = 0
    One,      // 1 ∘ x = x
    AA,       // 0
    AB,       // a_n
    BB,       // b_{n+m}
    AC,       // 0
    BC,       // c
    AD,       // a_n
    BD,       // d_{i,k,m+n}
    DD,       // d_{i+r,k+s,m+t-is-kr}
    CD,       // c_{i,k,m-is-kr}
    CCNonzero, // a_{is+kr}
    CCZero,   // is+kr = 0
    Count_
};

inline constexpr std::size_t kOplusBranchCount = static_cast<std::size_t>(OplusBranch::Count_);
inline constexpr std::size_t kSprodBranchCount = static_cast<std::size_t>(SprodBranch::Count_);

std::string_view branch_name(OplusBranch b);
std::string_view branch_name(SprodBranch b);

struct OplusOutcome {
    Partial value;
    OplusBranch branch;
};

struct SprodOutcome {
    Element value;
    SprodBranch branch;
};

OplusOutcome oplus_traced(const Element& x, const Element& y);
SprodOutcome sprod_traced(const Element& x, const Element& y);

inline Partial oplus(const Element& x, const Element& y) { return oplus_traced(x, y).value; }
inline Element sprod(const Element& x, const Element& y) { return sprod_traced(x, y).value; }

/// Closed-form orthosupplement: 0<->1, a_n<->b_n, c_{i,k,m}<->d_{i,k,m}.
Element complement(const Element& x);

/// Closed-form order: whether some c satisfies x ⊕ c = y.
bool leq(const Element& x, const Element& y);

std::string render(const Element& x);

/// Parses exactly `0`, `1`, `a<uint>`, `b<uint>`, `c[<uint>,<uint>,<int>]`,
/// `d[<uint>,<uint>,<int>]`.
Element parse_element(std::string_view text);

/// Largest bound accepted for any window axis. With every window subscript at
/// most this size, all ⊕/∘ evaluations performed by the checkers stay far
/// inside 64-bit range; arithmetic is overflow-checked regardless.
inline constexpr std::int64_t kMaxWindowBound = 1'000'000;

/// Finite slice of E0: a_n, b_n with n <= n_max; c/d with i,k <= ik_max and
/// |m| <= m_abs.
struct Window {
    std::int64_t n_max = 1;
    std::int64_t ik_max = 1;
    std::int64_t m_abs = 0;

    /// Throws std::invalid_argument when a bound is out of range.
    void validate() const;
    /// 2 + 2*n_max + 2*((ik_max+1)^2 - 1)*(2*m_abs+1).
    std::uint64_t size() const;

    friend bool operator==(const Window&, const Window&) = default;
};

/// Zero, One, A ascending, B ascending, then C and D each in lexicographic
/// (i,k,m) order.
std::vector<Element> enumerate_window(const Window& w);

/// Window containing every c with x ⊕ c = y. Witnesses can have larger
/// subscripts than either operand (a_n <= b_m via b_{n+m}), so each bound is
/// a sum over both operands. Not range-validated.
Window witness_window(const Element& x, const Element& y);

/// Default window for `check e0`: the componentwise-smallest window whose
/// pairs exercise every ⊕ and ∘ table branch.
inline constexpr Window kDefaultWindow{2, 1, 1};

struct BranchCoverage {
    std::array<std::uint64_t, kOplusBranchCount> oplus{};
    std::array<std::uint64_t, kSprodBranchCount> sprod{};

    bool complete() const;
    std::size_t oplus_hit() const;
    std::size_t sprod_hit() const;
};

/// Counts table branches taken by all ordered pairs of `sample`.
BranchCoverage branch_coverage(const std::vector<Element>& sample);

/// E0 restricted to a window for quantification; operations remain exact on
/// the whole carrier.
class Carrier {
public:
    using Element = e0::Element;

    explicit Carrier(Window w);

    Element zero() const { return Element::zero(); }
    Element one() const { return Element::one(); }
    Partial oplus(const Element& x, const Element& y) const { return e0::oplus(x, y); }
    Element sprod(const Element& x, const Element& y) const { return e0::sprod(x, y); }
    Element complement(const Element& x) const { return e0::complement(x); }
    bool leq(const Element& x, const Element& y) const { return e0::leq(x, y); }
    std::vector<Element> witness_sample(const Element& x, const Element& y) const;
    const std::vector<Element>& sample() const { return sample_; }
    std::string render(const Element& x) const { return e0::render(x); }

    const Window& window() const { return window_; }

private:
    Window window_;
    std::vector<Element> sample_;
};

static_assert(SequentialCarrier<Carrier>);

} // namespace sea::e0
