#pragma once

// Table-backed finite (sequential) effect algebras and their text format.
//
//   # comment
//   order 4
//   elements p q          # names for indices 1..order-2; 0 and 1 are reserved
//   oplus:
//   p+q=1                 # unlisted pairs are undefined; entries are symmetrized
//   sprod:
//   symmetric             # optional: x*y=z also sets y*x=z
//   p*q=0
//
// The ∘ section, when present, must cover every ordered pair.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sea/core_algebra.hpp"

namespace sea::finite {

using Index = std::uint8_t;
inline constexpr Index kUndefined = 0xFF;
inline constexpr int kMaxOrder = 254;

/// Load or validation failure. `line` is 1-based, 0 when not tied to a line.
class ModelError : public std::runtime_error {
public:
    ModelError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

class FiniteModel {
public:
    /// Validates every invariant; throws ModelError with a witness otherwise.
    /// `oplus` is order*order row-major with kUndefined for undefined pairs;
    /// `sprod`, if present, is order*order row-major and total.
    FiniteModel(std::vector<std::string> names, std::vector<Index> oplus, std::optional<std::vector<Index>> sprod);

    /// Same, with generated names e1..e{order-2} for the middle elements.
    static FiniteModel from_tables(int order, std::vector<Index> oplus, std::optional<std::vector<Index>> sprod);

    int order() const { return static_cast<int>(names_.size()); }
    Index zero() const { return 0; }
    Index one() const { return static_cast<Index>(order() - 1); }

    PartialResult<Index> oplus(Index a, Index b) const
    {
        const Index v = oplus_[a * names_.size() + b];
        return v == kUndefined ? std::nullopt : PartialResult<Index>(v);
    }
    bool has_sprod() const { return sprod_.has_value(); }
    Index sprod(Index a, Index b) const { return (*sprod_)[a * names_.size() + b]; }

    const std::string& name(Index a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Index> find(std::string_view name) const;

    const std::vector<Index>& oplus_table() const { return oplus_; }
    const std::optional<std::vector<Index>>& sprod_table() const { return sprod_; }

    /// Drops the ∘ table.
    FiniteModel effect_part() const;

    friend bool operator==(const FiniteModel&, const FiniteModel&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Index> oplus_;
    std::optional<std::vector<Index>> sprod_;
};

FiniteModel load_model(std::string_view text);
std::string save_model(const FiniteModel& m);

FiniteModel load_model_file(const std::string& path);
void save_model_file(const FiniteModel& m, const std::string& path);

/// Whole-carrier view of a model for the generic algebra functions.
class Carrier {
public:
    using Element = Index;

    explicit Carrier(const FiniteModel& m);

    Index zero() const { return model_->zero(); }
    Index one() const { return model_->one(); }
    PartialResult<Index> oplus(Index a, Index b) const { return model_->oplus(a, b); }
    /// Requires model().has_sprod().
    Index sprod(Index a, Index b) const { return model_->sprod(a, b); }
    const std::vector<Index>& sample() const { return sample_; }
    std::string render(Index a) const { return model_->name(a); }

    const FiniteModel& model() const { return *model_; }

private:
    const FiniteModel* model_;
    std::vector<Index> sample_;
};

static_assert(SequentialCarrier<Carrier>);

/// The model must outlive the carrier.
inline Carrier as_carrier(const FiniteModel& m) { return Carrier(m); }
Carrier as_carrier(FiniteModel&&) = delete;

} // namespace sea::finite
