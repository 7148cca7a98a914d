#pragma once

// Expressions over E0: `+` is ⊕, `*` is ∘ (binds tighter), postfix `'` is
// the orthosupplement, parentheses group. Whitespace is ignored.

#include <string_view>

#include "sea/e0.hpp"

namespace sea::e0 {

/// Undefined sums propagate to the result. Throws ParseError with the
/// 0-based offset of the offending character.
Partial evaluate(std::string_view text);

} // namespace sea::e0
