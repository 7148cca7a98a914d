#include "sea/finite_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sea::finite {

namespace {

bool is_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s.front()))
        return false;
    return std::ranges::all_of(s, [&](char c) { return alpha(c) || digit(c); });
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> generated_names(int order)
{
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(order));
    names.emplace_back("0");
    for (int i = 1; i < order - 1; ++i)
        names.push_back("e" + std::to_string(i));
    names.emplace_back("1");
    return names;
}

} // namespace

FiniteModel::FiniteModel(std::vector<std::string> names, std::vector<Index> oplus,
                         std::optional<std::vector<Index>> sprod)
    : names_(std::move(names)), oplus_(std::move(oplus)), sprod_(std::move(sprod))
{
    const int n = order();
    if (n < 2 || n > kMaxOrder)
        throw ModelError("order must be between 2 and " + std::to_string(kMaxOrder));
    if (names_.front() != "0" || names_.back() != "1")
        throw ModelError("index 0 must be named 0 and the last index 1");
    std::set<std::string_view> seen;
    for (int i = 1; i < n - 1; ++i) {
        const auto& nm = names_[static_cast<std::size_t>(i)];
        if (!is_identifier(nm))
            throw ModelError("invalid element name '" + nm + "'");
        if (!seen.insert(nm).second)
            throw ModelError("duplicate element name '" + nm + "'");
    }
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (oplus_.size() != cells)
        throw ModelError("oplus table has wrong size");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Index v = oplus_[static_cast<std::size_t>(a * n + b)];
            if (v != kUndefined && v >= n)
                throw ModelError("oplus value out of range at " + names_[a] + "+" + names_[b]);
            if (v != oplus_[static_cast<std::size_t>(b * n + a)])
                throw ModelError("oplus not symmetric at " + names_[a] + "+" + names_[b]);
        }
    for (int x = 0; x < n; ++x)
        if (oplus_[static_cast<std::size_t>(x)] != x)
            throw ModelError("0+" + names_[x] + " must be " + names_[x]);
    if (sprod_) {
        if (sprod_->size() != cells)
            throw ModelError("sprod table has wrong size");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if ((*sprod_)[static_cast<std::size_t>(a * n + b)] >= n)
                    throw ModelError("sprod missing or out of range at " + names_[a] + "*" + names_[b]);
    }
}

FiniteModel FiniteModel::from_tables(int order, std::vector<Index> oplus, std::optional<std::vector<Index>> sprod)
{
    if (order < 2 || order > kMaxOrder)
        throw ModelError("order must be between 2 and " + std::to_string(kMaxOrder));
    return FiniteModel(generated_names(order), std::move(oplus), std::move(sprod));
}

std::optional<Index> FiniteModel::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<Index>(i);
    return std::nullopt;
}

FiniteModel FiniteModel::effect_part() const
{
    return FiniteModel(names_, oplus_, std::nullopt);
}

namespace {

struct Entry {
    Index lhs, rhs, value;
};

class Loader {
public:
    FiniteModel run(std::string_view text)
    {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            ++line_;
            auto raw = text.substr(pos, eol - pos);
            if (auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            if (auto l = trim(raw); !l.empty())
                directive(l);
            pos = eol + 1;
        }
        if (order_ == 0)
            throw ModelError("missing 'order' header");
        return build();
    }

private:
    enum class Section { Header, Oplus, Sprod };

    void directive(std::string_view l)
    {
        if (l.starts_with("order") && (l.size() == 5 || l[5] == ' ' || l[5] == '\t')) {
            if (order_ != 0)
                fail("duplicate 'order'");
            const auto v = trim(l.substr(5));
            int n = 0;
            auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
            if (ec != std::errc() || p != v.data() + v.size() || n < 2 || n > kMaxOrder)
                fail("bad order '" + std::string(v) + "'");
            order_ = n;
            names_ = generated_names(n);
            const auto cells = static_cast<std::size_t>(n * n);
            oplus_.assign(cells, kUndefined);
            oplus_set_.assign(cells, 0);
            sprod_.assign(cells, kUndefined);
            sprod_line_.assign(cells, 0);
            return;
        }
        if (order_ == 0)
            fail("expected 'order N' first");
        if (l.starts_with("elements") && (l.size() == 8 || l[8] == ' ' || l[8] == '\t')) {
            if (section_ != Section::Header || named_)
                fail("'elements' must appear once, before the sections");
            std::vector<std::string> middle;
            std::istringstream in{std::string(l.substr(8))};
            for (std::string tok; in >> tok;)
                middle.push_back(tok);
            if (static_cast<int>(middle.size()) != order_ - 2)
                fail("expected " + std::to_string(order_ - 2) + " element names");
            std::set<std::string> seen;
            for (std::size_t i = 0; i < middle.size(); ++i) {
                if (!is_identifier(middle[i]))
                    fail("invalid element name '" + middle[i] + "'");
                if (!seen.insert(middle[i]).second)
                    fail("duplicate element name '" + middle[i] + "'");
                names_[i + 1] = middle[i];
            }
            named_ = true;
            return;
        }
        if (l == "oplus:") {
            if (seen_oplus_)
                fail("duplicate 'oplus:' section");
            seen_oplus_ = true;
            section_ = Section::Oplus;
            return;
        }
        if (l == "sprod:") {
            if (has_sprod_)
                fail("duplicate 'sprod:' section");
            has_sprod_ = true;
            section_ = Section::Sprod;
            return;
        }
        if (l == "symmetric") {
            if (section_ != Section::Sprod)
                fail("'symmetric' is only valid in the sprod section");
            symmetric_ = true;
            return;
        }
        switch (section_) {
        case Section::Header: fail("unexpected line '" + std::string(l) + "'");
        case Section::Oplus: oplus_entry(parse_entry(l, '+')); return;
        case Section::Sprod: sprod_entry(parse_entry(l, '*')); return;
        }
    }

    Entry parse_entry(std::string_view l, char op)
    {
        const auto o = l.find(op);
        const auto eq = l.find('=');
        if (o == std::string_view::npos || eq == std::string_view::npos || eq < o)
            fail(std::string("expected 'x") + op + "y=z'");
        return {element(trim(l.substr(0, o))), element(trim(l.substr(o + 1, eq - o - 1))),
                element(trim(l.substr(eq + 1)))};
    }

    Index element(std::string_view tok)
    {
        for (int i = 0; i < order_; ++i)
            if (names_[static_cast<std::size_t>(i)] == tok)
                return static_cast<Index>(i);
        fail("unknown element '" + std::string(tok) + "'");
    }

    std::size_t cell(Index a, Index b) const { return static_cast<std::size_t>(a) * order_ + b; }

    void oplus_entry(const Entry& e)
    {
        const auto here = cell(e.lhs, e.rhs);
        const auto mirror = cell(e.rhs, e.lhs);
        if (oplus_set_[here] > 0)
            fail("duplicate entry " + names_[e.lhs] + "+" + names_[e.rhs] + " (first on line " +
                 std::to_string(oplus_set_[here]) + ")");
        if (oplus_set_[mirror] && oplus_[mirror] != e.value)
            fail("asymmetric entry: " + names_[e.rhs] + "+" + names_[e.lhs] + "=" + names_[oplus_[mirror]] +
                 " but " + names_[e.lhs] + "+" + names_[e.rhs] + "=" + names_[e.value]);
        if ((e.lhs == 0 && e.value != e.rhs) || (e.rhs == 0 && e.value != e.lhs))
            fail("0+" + names_[e.lhs == 0 ? e.rhs : e.lhs] + " must be " + names_[e.lhs == 0 ? e.rhs : e.lhs]);
        oplus_[here] = oplus_[mirror] = e.value;
        oplus_set_[here] = line_;
        if (!oplus_set_[mirror])
            oplus_set_[mirror] = -line_; // implied, not listed
    }

    void sprod_entry(const Entry& e)
    {
        const auto here = cell(e.lhs, e.rhs);
        if (sprod_line_[here] > 0)
            fail("duplicate entry " + names_[e.lhs] + "*" + names_[e.rhs] + " (first on line " +
                 std::to_string(sprod_line_[here]) + ")");
        sprod_[here] = e.value;
        sprod_line_[here] = line_;
        pending_.push_back(e);
    }

    FiniteModel build()
    {
        // Implied unit row: 0+x=x unless listed (a listed value is validated below).
        for (int x = 0; x < order_; ++x) {
            const auto c = cell(0, static_cast<Index>(x));
            if (oplus_set_[c] == 0)
                oplus_[c] = oplus_[cell(static_cast<Index>(x), 0)] = static_cast<Index>(x);
        }
        std::optional<std::vector<Index>> sprod;
        if (has_sprod_) {
            if (symmetric_)
                for (const auto& e : pending_) {
                    const auto mirror = cell(e.rhs, e.lhs);
                    if (sprod_line_[mirror] > 0 && sprod_[mirror] != e.value)
                        throw ModelError("conflicting entries " + names_[e.lhs] + "*" + names_[e.rhs] + " and " +
                                             names_[e.rhs] + "*" + names_[e.lhs] + " under 'symmetric'",
                                         sprod_line_[mirror]);
                    sprod_[mirror] = e.value;
                }
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    if (sprod_[cell(static_cast<Index>(a), static_cast<Index>(b))] == kUndefined)
                        throw ModelError("sprod table missing entry " + names_[a] + "*" + names_[b]);
            sprod = sprod_;
        }
        return FiniteModel(names_, oplus_, std::move(sprod));
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ModelError(msg, line_); }

    int line_ = 0;
    int order_ = 0;
    bool named_ = false;
    bool seen_oplus_ = false;
    bool has_sprod_ = false;
    bool symmetric_ = false;
    Section section_ = Section::Header;
    std::vector<std::string> names_;
    std::vector<Index> oplus_;
    std::vector<int> oplus_set_; // >0 listed on that line, <0 implied by a mirror entry
    std::vector<Index> sprod_;
    std::vector<int> sprod_line_;
    std::vector<Entry> pending_;
};

} // namespace

FiniteModel load_model(std::string_view text)
{
    return Loader().run(text);
}

std::string save_model(const FiniteModel& m)
{
    const int n = m.order();
    std::string out = "order " + std::to_string(n) + "\n";
    if (n > 2) {
        out += "elements";
        for (int i = 1; i < n - 1; ++i)
            out += " " + m.name(static_cast<Index>(i));
        out += "\n";
    }
    out += "oplus:\n";
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            if (auto v = m.oplus(static_cast<Index>(a), static_cast<Index>(b)))
                out += m.name(static_cast<Index>(a)) + "+" + m.name(static_cast<Index>(b)) + "=" + m.name(*v) + "\n";
    if (m.has_sprod()) {
        out += "sprod:\n";
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out += m.name(static_cast<Index>(a)) + "*" + m.name(static_cast<Index>(b)) + "=" +
                       m.name(m.sprod(static_cast<Index>(a), static_cast<Index>(b))) + "\n";
    }
    return out;
}

FiniteModel load_model_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ModelError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model(buf.str());
}

void save_model_file(const FiniteModel& m, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ModelError("cannot write " + path);
    out << save_model(m);
    if (!out)
        throw ModelError("write failed: " + path);
}

Carrier::Carrier(const FiniteModel& m) : model_(&m)
{
    sample_.resize(static_cast<std::size_t>(m.order()));
    for (std::size_t i = 0; i < sample_.size(); ++i)
        sample_[i] = static_cast<Index>(i);
}

} // namespace sea::finite
