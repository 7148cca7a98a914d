#include "sea/expr.hpp"

#include <cctype>

namespace sea::e0 {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Partial parse()
    {
        auto v = sum();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, pos_);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Partial sum()
    {
        auto v = product();
        while (eat('+')) {
            auto w = product();
            v = v && w ? oplus(*v, *w) : std::nullopt;
        }
        return v;
    }

    Partial product()
    {
        auto v = postfix();
        while (eat('*')) {
            auto w = postfix();
            v = v && w ? Partial(sprod(*v, *w)) : std::nullopt;
        }
        return v;
    }

    Partial postfix()
    {
        auto v = primary();
        while (eat('\''))
            if (v)
                v = complement(*v);
        return v;
    }

    Partial primary()
    {
        if (eat('(')) {
            auto v = sum();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '[') {
            while (pos_ < s_.size() && s_[pos_] != ']')
                ++pos_;
            if (pos_ == s_.size())
                fail("expected ']'");
            ++pos_;
        }
        if (start == pos_)
            fail(pos_ == s_.size() ? "unexpected end of input" : "expected an element");
        try {
            return parse_element(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Partial evaluate(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace sea::e0
