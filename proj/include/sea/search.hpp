#pragma once

// Exhaustive enumeration of small finite effect algebras and of the sequential
// products they carry, with a census of average-value inequality failures.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sea/finite_model.hpp"

namespace sea::search {

inline constexpr int kDefaultMaxOrder = 6;
/// Absolute limit for enumeration (tables are tracked with 32-bit row masks).
inline constexpr int kHardMaxOrder = 31;

struct SearchConfig {
    int max_order = 4;
    /// Accept max_order above kDefaultMaxOrder.
    bool allow_large = false;
    bool require_sequential = true;
    bool mod_isomorphism = false;
    std::optional<std::string> emit_dir;
    unsigned threads = 0;
};

struct CensusWitness {
    std::string model_id;
    std::string verdict; // render_verdict line

    friend bool operator==(const CensusWitness&, const CensusWitness&) = default;
};

struct OrderCensus {
    std::uint64_t ea_count = 0;
    std::uint64_t sea_count = 0;
    std::uint64_t inequality_violations = 0;
    std::vector<CensusWitness> violation_witnesses;
    /// Every SEA found (every EA when require_sequential is off), in
    /// enumeration order.
    std::vector<finite::FiniteModel> models;

    friend bool operator==(const OrderCensus&, const OrderCensus&) = default;
};

struct Census {
    std::map<int, OrderCensus> per_order;

    friend bool operator==(const Census&, const Census&) = default;
};

using ModelVisitor = std::function<void(const finite::FiniteModel&)>;

/// Orders 2..kHardMaxOrder. Backtracking over the ⊕ table: free cells (i,j), 1 <= i <= j <= order-2,
/// row-major, candidates 0..order-1 then undefined. With `mod_isomorphism`
/// only tables that are lexicographically minimal under permutations fixing
/// 0 and 1 are visited.
void for_each_effect_algebra(int order, bool mod_isomorphism, const ModelVisitor& visit);
std::vector<finite::FiniteModel> enumerate_effect_algebras(int order, bool mod_isomorphism = false);

/// Backtracking over the ∘ table of `ea` (rows and columns of 0 and 1 are
/// forced). With `mod_automorphism` only tables minimal under the
/// automorphisms of `ea` are visited.
void for_each_sequential_product(const finite::FiniteModel& ea, bool mod_automorphism, const ModelVisitor& visit);
std::vector<finite::FiniteModel> extend_with_sequential_product(const finite::FiniteModel& ea,
                                                                bool mod_automorphism = false);

/// Throws std::invalid_argument on max_order outside 2..kDefaultMaxOrder
/// (2..kHardMaxOrder with allow_large) and std::runtime_error when emit_dir
/// cannot be written.
Census inequality_census(const SearchConfig& cfg);

/// Stable 16-hex-digit FNV-1a hash of the canonical serialization.
std::string model_id(const finite::FiniteModel& m);

/// File name used when emitting `m`: sea<order>-<model_id>.sea (ea... for
/// models without ∘).
std::string emit_name(const finite::FiniteModel& m);

/// Fixed-width text table plus one `witness` line per failure.
std::string render_census(const Census& c);

} // namespace sea::search
