#include "sea/e0.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <utility>

namespace sea::e0 {

namespace {

std::int64_t add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("E0 subscript overflow");
    return r;
}

std::int64_t sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("E0 subscript overflow");
    return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("E0 subscript overflow");
    return r;
}

// i*s + k*r, the cross term that appears throughout the ∘ table.
std::int64_t cross(const Element& x, const Element& y)
{
    return add(mul(x.i(), y.k()), mul(x.k(), y.i()));
}

void require_ik(std::int64_t i, std::int64_t k)
{
    if (i < 0 || k < 0 || (i == 0 && k == 0))
        throw std::invalid_argument("E0 c/d subscripts need i,k >= 0 and i^2+k^2 != 0");
}

} // namespace

Element Element::a(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("E0 a_n needs n >= 1");
    return Element(Kind::A, n, 0, 0);
}

Element Element::b(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("E0 b_n needs n >= 1");
    return Element(Kind::B, n, 0, 0);
}

Element Element::c(std::int64_t i, std::int64_t k, std::int64_t m)
{
    require_ik(i, k);
    return Element(Kind::C, i, k, m);
}

Element Element::d(std::int64_t i, std::int64_t k, std::int64_t m)
{
    require_ik(i, k);
    return Element(Kind::D, i, k, m);
}

std::string_view branch_name(OplusBranch b)
{
    switch (b) {
    case OplusBranch::ZeroUnit: return "0+x";
    case OplusBranch::AA: return "a+a";
    case OplusBranch::AC: return "a+c";
    case OplusBranch::AD: return "a+d";
    case OplusBranch::CC: return "c+c";
    case OplusBranch::ABLess: return "a+b(n<m)";
    case OplusBranch::ABEqual: return "a+b(n=m)";
    case OplusBranch::CDStrict: return "c+d(proper)";
    case OplusBranch::CDLess: return "c+d(m<t)";
    case OplusBranch::CDEqual: return "c+d(m=t)";
    case OplusBranch::Undefined: return "undefined";
    case OplusBranch::Count_: break;
    }
    return "?";
}

std::string_view branch_name(SprodBranch b)
{
    switch (b) {
    case SprodBranch::Zero: return "0*x";
    case SprodBranch::One: return "1*x";
    case SprodBranch::AA: return "a*a";
    case SprodBranch::AB: return "a*b";
    case SprodBranch::BB: return "b*b";
    case SprodBranch::AC: return "a*c";
    case SprodBranch::BC: return "b*c";
    case SprodBranch::AD: return "a*d";
    case SprodBranch::BD: return "b*d";
    case SprodBranch::DD: return "d*d";
    case SprodBranch::CD: return "c*d";
    case SprodBranch::CCNonzero: return "c*c(is+kr!=0)";
    case SprodBranch::CCZero: return "c*c(is+kr=0)";
    case SprodBranch::Count_: break;
    }
    return "?";
}

// Each table case is written once with kind(x) <= kind(y); the wrappers swap
// arguments to reach that orientation.
OplusOutcome oplus_traced(const Element& lhs, const Element& rhs)
{
    const bool swap = rhs.kind() < lhs.kind();
    const Element& x = swap ? rhs : lhs;
    const Element& y = swap ? lhs : rhs;
    constexpr OplusOutcome undefined{std::nullopt, OplusBranch::Undefined};

    switch (x.kind()) {
    case Kind::Zero:
        return {y, OplusBranch::ZeroUnit};
    case Kind::One:
    case Kind::B:
    case Kind::D:
        return undefined;
    case Kind::A:
        switch (y.kind()) {
        case Kind::A:
            return {Element::a(add(x.n(), y.n())), OplusBranch::AA};
        case Kind::B:
            if (x.n() < y.n())
                return {Element::b(y.n() - x.n()), OplusBranch::ABLess};
            if (x.n() == y.n())
                return {Element::one(), OplusBranch::ABEqual};
            return undefined;
        case Kind::C:
            return {Element::c(y.i(), y.k(), add(x.n(), y.m())), OplusBranch::AC};
        case Kind::D:
            return {Element::d(y.i(), y.k(), sub(y.m(), x.n())), OplusBranch::AD};
        default:
            return undefined;
        }
    case Kind::C:
        if (y.is(Kind::C))
            return {Element::c(add(x.i(), y.i()), add(x.k(), y.k()), add(x.m(), y.m())), OplusBranch::CC};
        if (y.is(Kind::D) && x.i() <= y.i() && x.k() <= y.k()) {
            if (x.i() != y.i() || x.k() != y.k())
                return {Element::d(y.i() - x.i(), y.k() - x.k(), sub(y.m(), x.m())), OplusBranch::CDStrict};
            if (x.m() < y.m())
                return {Element::b(sub(y.m(), x.m())), OplusBranch::CDLess};
            if (x.m() == y.m())
                return {Element::one(), OplusBranch::CDEqual};
        }
        return undefined;
    }
    return undefined;
}

SprodOutcome sprod_traced(const Element& lhs, const Element& rhs)
{
    const bool swap = rhs.kind() < lhs.kind();
    const Element& x = swap ? rhs : lhs;
    const Element& y = swap ? lhs : rhs;

    switch (x.kind()) {
    case Kind::Zero:
        return {Element::zero(), SprodBranch::Zero};
    case Kind::One:
        return {y, SprodBranch::One};
    case Kind::A:
        switch (y.kind()) {
        case Kind::A: return {Element::zero(), SprodBranch::AA};
        case Kind::B: return {x, SprodBranch::AB};
        case Kind::C: return {Element::zero(), SprodBranch::AC};
        case Kind::D: return {x, SprodBranch::AD};
        default: break;
        }
        break;
    case Kind::B:
        switch (y.kind()) {
        case Kind::B: return {Element::b(add(x.n(), y.n())), SprodBranch::BB};
        case Kind::C: return {y, SprodBranch::BC};
        case Kind::D: return {Element::d(y.i(), y.k(), add(y.m(), x.n())), SprodBranch::BD};
        default: break;
        }
        break;
    case Kind::C:
        if (y.is(Kind::C)) {
            const auto s = cross(x, y);
            if (s != 0)
                return {Element::a(s), SprodBranch::CCNonzero};
            return {Element::zero(), SprodBranch::CCZero};
        }
        return {Element::c(x.i(), x.k(), sub(x.m(), cross(x, y))), SprodBranch::CD};
    case Kind::D:
        return {Element::d(add(x.i(), y.i()), add(x.k(), y.k()), sub(add(x.m(), y.m()), cross(x, y))),
                SprodBranch::DD};
    }
    throw std::logic_error("unreachable E0 product case");
}

Element complement(const Element& x)
{
    switch (x.kind()) {
    case Kind::Zero: return Element::one();
    case Kind::One: return Element::zero();
    case Kind::A: return Element::b(x.n());
    case Kind::B: return Element::a(x.n());
    case Kind::C: return Element::d(x.i(), x.k(), x.m());
    case Kind::D: return Element::c(x.i(), x.k(), x.m());
    }
    throw std::logic_error("unreachable E0 complement case");
}

// Inverts each ⊕ case: for a fixed x, the witness is determined by y, and the
// question is only whether it is a valid element.
bool leq(const Element& x, const Element& y)
{
    if (x == y || x.is(Kind::Zero) || y.is(Kind::One))
        return true;
    if (x.is(Kind::One) || y.is(Kind::Zero))
        return false;

    switch (x.kind()) {
    case Kind::A:
        // a_n ⊕ a_{m-n}, b_{n+m}, c_{i,k,m-n}, d_{i,k,m+n}
        if (y.is(Kind::A))
            return y.n() > x.n();
        return true;
    case Kind::B:
        // only a_{n-m} ⊕ b_n = b_m
        return y.is(Kind::B) && y.n() < x.n();
    case Kind::C:
        // c ⊕ d_{..} reaches any d and any b; c ⊕ c / c ⊕ a reach larger c
        if (y.is(Kind::D) || y.is(Kind::B))
            return true;
        if (y.is(Kind::C) && x.i() <= y.i() && x.k() <= y.k())
            return x.i() != y.i() || x.k() != y.k() || x.m() < y.m();
        return false;
    case Kind::D:
        // d ⊕ c_{i,k,m-n} = b_n; d ⊕ c = d with smaller (i,k); d ⊕ a lowers m
        if (y.is(Kind::B))
            return true;
        if (y.is(Kind::D) && y.i() <= x.i() && y.k() <= x.k())
            return x.i() != y.i() || x.k() != y.k() || y.m() < x.m();
        return false;
    default:
        return false;
    }
}

std::string render(const Element& x)
{
    switch (x.kind()) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::A: return "a" + std::to_string(x.n());
    case Kind::B: return "b" + std::to_string(x.n());
    case Kind::C:
    case Kind::D:
        return std::string(x.is(Kind::C) ? "c[" : "d[") + std::to_string(x.i()) + "," + std::to_string(x.k()) +
               "," + std::to_string(x.m()) + "]";
    }
    return "?";
}

namespace {

class ElementScanner {
public:
    explicit ElementScanner(std::string_view text) : text_(text) {}

    std::int64_t integer(bool allow_sign)
    {
        const std::size_t start = pos_;
        if (allow_sign && pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        if (pos_ == digits)
            throw ParseError("expected digits", digits);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc() || ptr != text_.data() + pos_)
            throw ParseError("integer out of range", start);
        return v;
    }

    void expect(char ch)
    {
        if (pos_ >= text_.size() || text_[pos_] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos_);
        ++pos_;
    }

    char next()
    {
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of element", pos_);
        return text_[pos_++];
    }

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(std::string_view text)
{
    ElementScanner in(text);
    const char head = in.next();
    Element result;
    try {
        switch (head) {
        case '0': result = Element::zero(); break;
        case '1': result = Element::one(); break;
        case 'a': result = Element::a(in.integer(false)); break;
        case 'b': result = Element::b(in.integer(false)); break;
        case 'c':
        case 'd': {
            in.expect('[');
            const auto i = in.integer(false);
            in.expect(',');
            const auto k = in.integer(false);
            in.expect(',');
            const auto m = in.integer(true);
            in.expect(']');
            result = head == 'c' ? Element::c(i, k, m) : Element::d(i, k, m);
            break;
        }
        default:
            throw ParseError("unknown element kind", 0);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
    if (!in.done())
        throw ParseError("trailing characters after element", in.pos());
    return result;
}

void Window::validate() const
{
    if (n_max < 1 || ik_max < 1 || m_abs < 0)
        throw std::invalid_argument("window needs n >= 1, ik >= 1, m >= 0");
    if (n_max > kMaxWindowBound || ik_max > kMaxWindowBound || m_abs > kMaxWindowBound)
        throw std::invalid_argument("window bound exceeds 10^6");
}

std::uint64_t Window::size() const
{
    const auto side = static_cast<std::uint64_t>(ik_max + 1);
    return 2 + 2 * static_cast<std::uint64_t>(n_max) +
           2 * (side * side - 1) * (2 * static_cast<std::uint64_t>(m_abs) + 1);
}

std::vector<Element> enumerate_window(const Window& w)
{
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    out.push_back(Element::zero());
    out.push_back(Element::one());
    for (std::int64_t n = 1; n <= w.n_max; ++n)
        out.push_back(Element::a(n));
    for (std::int64_t n = 1; n <= w.n_max; ++n)
        out.push_back(Element::b(n));
    for (auto make : {&Element::c, &Element::d})
        for (std::int64_t i = 0; i <= w.ik_max; ++i)
            for (std::int64_t k = 0; k <= w.ik_max; ++k) {
                if (i == 0 && k == 0)
                    continue;
                for (std::int64_t m = -w.m_abs; m <= w.m_abs; ++m)
                    out.push_back(make(i, k, m));
            }
    return out;
}

namespace {

std::int64_t n_extent(const Element& x)
{
    return (x.is(Kind::A) || x.is(Kind::B)) ? x.n() : 0;
}

std::int64_t ik_extent(const Element& x)
{
    return (x.is(Kind::C) || x.is(Kind::D)) ? std::max(x.i(), x.k()) : 0;
}

std::int64_t m_extent(const Element& x)
{
    return (x.is(Kind::C) || x.is(Kind::D)) ? (x.m() < 0 ? -x.m() : x.m()) : 0;
}

} // namespace

Window witness_window(const Element& x, const Element& y)
{
    // a_n can bridge c/d elements whose third indices differ, so n also
    // ranges over the m extents.
    const auto n = n_extent(x) + n_extent(y);
    const auto m = m_extent(x) + m_extent(y);
    return Window{std::max<std::int64_t>(1, n + m), std::max<std::int64_t>(1, ik_extent(x) + ik_extent(y)), m + n};
}

bool BranchCoverage::complete() const
{
    return oplus_hit() == oplus.size() && sprod_hit() == sprod.size();
}

std::size_t BranchCoverage::oplus_hit() const
{
    return static_cast<std::size_t>(std::count_if(oplus.begin(), oplus.end(), [](auto n) { return n > 0; }));
}

std::size_t BranchCoverage::sprod_hit() const
{
    return static_cast<std::size_t>(std::count_if(sprod.begin(), sprod.end(), [](auto n) { return n > 0; }));
}

BranchCoverage branch_coverage(const std::vector<Element>& sample)
{
    BranchCoverage cov;
    for (const auto& x : sample)
        for (const auto& y : sample) {
            ++cov.oplus[static_cast<std::size_t>(oplus_traced(x, y).branch)];
            ++cov.sprod[static_cast<std::size_t>(sprod_traced(x, y).branch)];
        }
    return cov;
}

Carrier::Carrier(Window w) : window_(w)
{
    window_.validate();
    sample_ = enumerate_window(window_);
}

std::vector<Element> Carrier::witness_sample(const Element& x, const Element& y) const
{
    return enumerate_window(witness_window(x, y));
}

} // namespace sea::e0
