#include "sea/search.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sea/axiom_checker.hpp"
#include "sea/inequality.hpp"
#include "sea/parallel.hpp"

namespace sea::search {

using finite::FiniteModel;
using finite::Index;
using finite::kUndefined;

namespace {

constexpr Index kUnknown = 0xFE;

struct Cell {
    int row, col;
};

// Permutations of 0..n-1 that fix 0 and n-1.
std::vector<std::vector<Index>> carrier_permutations(int n)
{
    std::vector<Index> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), Index{0});
    std::vector<std::vector<Index>> out;
    if (n <= 2) {
        out.push_back(p);
        return out;
    }
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end() - 1));
    return out;
}

Index map_value(const std::vector<Index>& perm, Index v)
{
    return v == kUndefined || v == kUnknown ? v : perm[v];
}

/// Returns false when some permutation's image of the known prefix of
/// `table` (in `cells` order, first `filled` cells known) is already smaller.
bool prefix_minimal(const std::vector<Index>& table, int n, const std::vector<Cell>& cells, std::size_t filled,
                    const std::vector<std::vector<Index>>& perms, const std::vector<std::vector<Index>>& inverses)
{
    for (std::size_t p = 1; p < perms.size(); ++p) {
        const auto& perm = perms[p];
        const auto& inv = inverses[p];
        for (std::size_t q = 0; q < filled; ++q) {
            const auto [i, j] = cells[q];
            const Index src = table[static_cast<std::size_t>(inv[i] * n + inv[j])];
            if (src == kUnknown)
                break;
            const Index img = map_value(perm, src);
            const Index cur = table[static_cast<std::size_t>(i * n + j)];
            if (img < cur)
                return false;
            if (img > cur)
                break;
        }
    }
    return true;
}

std::vector<std::vector<Index>> inverses_of(const std::vector<std::vector<Index>>& perms)
{
    std::vector<std::vector<Index>> inv;
    inv.reserve(perms.size());
    for (const auto& p : perms) {
        std::vector<Index> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            q[p[i]] = static_cast<Index>(i);
        inv.push_back(std::move(q));
    }
    return inv;
}

class EffectSearch {
public:
    EffectSearch(int n, bool mod_iso, const ModelVisitor& visit) : n_(n), mod_iso_(mod_iso), visit_(visit)
    {
        t_.assign(static_cast<std::size_t>(n * n), kUnknown);
        const Index one = static_cast<Index>(n - 1);
        for (int x = 0; x < n; ++x) {
            set(0, x, static_cast<Index>(x));
            if (x != 0)
                set(x, one, kUndefined);
        }
        for (int i = 1; i < n - 1; ++i)
            for (int j = i; j < n - 1; ++j)
                cells_.push_back({i, j});
        if (mod_iso_) {
            perms_ = carrier_permutations(n);
            inverses_ = inverses_of(perms_);
        }
    }

    void run() { fill(0); }

private:
    Index at(int a, int b) const { return t_[static_cast<std::size_t>(a * n_ + b)]; }
    void set(int a, int b, Index v) { t_[static_cast<std::size_t>(a * n_ + b)] = t_[static_cast<std::size_t>(b * n_ + a)] = v; }

    void fill(std::size_t q)
    {
        if (q == cells_.size()) {
            emit();
            return;
        }
        const auto [i, j] = cells_[q];
        for (int v = 0; v <= n_; ++v) {
            set(i, j, v == n_ ? kUndefined : static_cast<Index>(v));
            if (consistent() && (!mod_iso_ || prefix_minimal(t_, n_, cells_, q + 1, perms_, inverses_)))
                fill(q + 1);
        }
        set(i, j, kUnknown);
    }

    // EA2 (both directions), EA3 and cancellation on the known part.
    bool consistent() const
    {
        const Index one = static_cast<Index>(n_ - 1);
        for (int x = 0; x < n_; ++x) {
            int ones = 0;
            bool complete = true;
            std::uint32_t seen = 0;
            for (int y = 0; y < n_; ++y) {
                const Index v = at(x, y);
                if (v == kUnknown) {
                    complete = false;
                    continue;
                }
                if (v == kUndefined)
                    continue;
                if (seen & (1u << v))
                    return false; // x+y = x+y' with y != y'
                seen |= 1u << v;
                ones += v == one;
            }
            if (ones > 1 || (complete && ones != 1))
                return false;
        }
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                const Index ab = at(a, b);
                if (ab == kUnknown)
                    continue;
                for (int c = 0; c < n_; ++c) {
                    const Index bc = at(b, c);
                    if (bc == kUnknown)
                        continue;
                    const Index left = bc == kUndefined ? kUndefined : at(a, bc);
                    const Index right = ab == kUndefined ? kUndefined : at(ab, c);
                    if (left == kUnknown || right == kUnknown)
                        continue;
                    if (left != right)
                        return false;
                }
            }
        return true;
    }

    void emit()
    {
        if (mod_iso_ && !prefix_minimal(t_, n_, cells_, cells_.size(), perms_, inverses_))
            return;
        auto model = FiniteModel::from_tables(n_, t_, std::nullopt);
        // The pruning rules are consequences of the axioms; the full check is the gate.
        if (!check_effect_axioms(finite::as_carrier(model), {.threads = 1, .max_reports = 1}).ok())
            return;
        visit_(model);
    }

    int n_;
    bool mod_iso_;
    const ModelVisitor& visit_;
    std::vector<Index> t_;
    std::vector<Cell> cells_;
    std::vector<std::vector<Index>> perms_;
    std::vector<std::vector<Index>> inverses_;
};

class SequentialSearch {
public:
    SequentialSearch(const FiniteModel& ea, bool mod_aut, const ModelVisitor& visit)
        : ea_(ea), n_(ea.order()), mod_aut_(mod_aut), visit_(visit)
    {
        const int n = n_;
        const Index one = static_cast<Index>(n - 1);
        s_.assign(static_cast<std::size_t>(n * n), kUnknown);
        for (int x = 0; x < n; ++x) {
            put(0, x, 0);
            put(x, 0, 0);
            put(one, x, static_cast<Index>(x));
            put(x, one, static_cast<Index>(x));
        }
        for (int a = 1; a < n - 1; ++a)
            for (int b = 1; b < n - 1; ++b)
                cells_.push_back({a, b});
        complement_.resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (ea.oplus(static_cast<Index>(x), static_cast<Index>(y)) == one)
                    complement_[static_cast<std::size_t>(x)] = static_cast<Index>(y);
        if (mod_aut_) {
            for (auto& p : carrier_permutations(n))
                if (is_automorphism(p))
                    perms_.push_back(std::move(p));
            inverses_ = inverses_of(perms_);
        }
    }

    void run() { fill(0); }

private:
    bool is_automorphism(const std::vector<Index>& p) const
    {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                const auto v = ea_.oplus(static_cast<Index>(a), static_cast<Index>(b));
                const auto w = ea_.oplus(p[a], p[b]);
                if ((v ? p[*v] : kUndefined) != (w ? *w : kUndefined))
                    return false;
            }
        return true;
    }

    Index sp(int a, int b) const { return s_[static_cast<std::size_t>(a * n_ + b)]; }
    void put(int a, int b, Index v) { s_[static_cast<std::size_t>(a * n_ + b)] = v; }
    Index op(int a, int b) const
    {
        const auto v = ea_.oplus(static_cast<Index>(a), static_cast<Index>(b));
        return v ? *v : kUndefined;
    }

    void fill(std::size_t q)
    {
        if (q == cells_.size()) {
            emit();
            return;
        }
        const auto [a, b] = cells_[q];
        for (int v = 0; v < n_; ++v) {
            put(a, b, static_cast<Index>(v));
            if (consistent() && (!mod_aut_ || prefix_minimal(s_, n_, cells_, q + 1, perms_, inverses_)))
                fill(q + 1);
        }
        put(a, b, kUnknown);
    }

    bool consistent() const
    {
        const int n = n_;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Index ab = sp(a, b);
                const Index ba = sp(b, a);
                // SEA1
                if (ab != kUnknown)
                    for (int c = 0; c < n; ++c) {
                        const Index bc = op(b, c);
                        if (bc == kUndefined)
                            continue;
                        const Index ac = sp(a, c);
                        const Index lhs = sp(a, bc);
                        if (ac == kUnknown || lhs == kUnknown)
                            continue;
                        if (op(ab, ac) != lhs)
                            return false;
                    }
                if (ab == kUnknown || ba == kUnknown)
                    continue;
                // SEA3
                if ((ab == 0) != (ba == 0))
                    return false;
                if (ab != ba)
                    continue;
                // SEA4
                const Index bc = complement_[static_cast<std::size_t>(b)];
                const Index x = sp(a, bc), y = sp(bc, a);
                if (x != kUnknown && y != kUnknown && x != y)
                    return false;
                for (int c = 0; c < n; ++c) {
                    const Index inner = sp(b, c);
                    if (inner == kUnknown)
                        continue;
                    const Index lhs = sp(a, inner);
                    const Index rhs = sp(ab, c);
                    if (lhs != kUnknown && rhs != kUnknown && lhs != rhs)
                        return false;
                }
            }
        // SEA5
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a) {
                const Index ca = sp(c, a);
                if (ca == kUnknown || ca != sp(a, c))
                    continue;
                for (int b = 0; b < n; ++b) {
                    const Index cb = sp(c, b);
                    if (cb == kUnknown || cb != sp(b, c))
                        continue;
                    const Index p = sp(a, b);
                    if (p != kUnknown) {
                        const Index l = sp(c, p), r = sp(p, c);
                        if (l != kUnknown && r != kUnknown && l != r)
                            return false;
                    }
                    const Index s = op(a, b);
                    if (s != kUndefined) {
                        const Index l = sp(c, s), r = sp(s, c);
                        if (l != kUnknown && r != kUnknown && l != r)
                            return false;
                    }
                }
            }
        return true;
    }

    void emit()
    {
        if (mod_aut_ && !prefix_minimal(s_, n_, cells_, cells_.size(), perms_, inverses_))
            return;
        FiniteModel model(ea_.names(), ea_.oplus_table(), s_);
        const auto carrier = finite::as_carrier(model);
        const CheckOptions opt{.threads = 1, .max_reports = 1};
        if (!check_effect_axioms(carrier, opt).ok() || !check_sequential_axioms(carrier, opt).ok())
            return;
        visit_(model);
    }

    const FiniteModel& ea_;
    int n_;
    bool mod_aut_;
    const ModelVisitor& visit_;
    std::vector<Index> s_;
    std::vector<Cell> cells_;
    std::vector<Index> complement_;
    std::vector<std::vector<Index>> perms_;
    std::vector<std::vector<Index>> inverses_;
};

void require_order(int order, int limit = kHardMaxOrder)
{
    if (order < 2 || order > limit)
        throw std::invalid_argument("order must be between 2 and " + std::to_string(limit));
}

} // namespace

void for_each_effect_algebra(int order, bool mod_isomorphism, const ModelVisitor& visit)
{
    require_order(order);
    EffectSearch(order, mod_isomorphism, visit).run();
}

std::vector<FiniteModel> enumerate_effect_algebras(int order, bool mod_isomorphism)
{
    std::vector<FiniteModel> out;
    for_each_effect_algebra(order, mod_isomorphism, [&](const FiniteModel& m) { out.push_back(m); });
    return out;
}

void for_each_sequential_product(const FiniteModel& ea, bool mod_automorphism, const ModelVisitor& visit)
{
    SequentialSearch(ea.effect_part(), mod_automorphism, visit).run();
}

std::vector<FiniteModel> extend_with_sequential_product(const FiniteModel& ea, bool mod_automorphism)
{
    std::vector<FiniteModel> out;
    for_each_sequential_product(ea, mod_automorphism, [&](const FiniteModel& m) { out.push_back(m); });
    return out;
}

std::string model_id(const FiniteModel& m)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : save_model(m)) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    return out;
}

std::string emit_name(const FiniteModel& m)
{
    return std::string(m.has_sprod() ? "sea" : "ea") + std::to_string(m.order()) + "-" + model_id(m) + ".sea";
}

Census inequality_census(const SearchConfig& cfg)
{
    require_order(cfg.max_order, cfg.allow_large ? kHardMaxOrder : kDefaultMaxOrder);
    if (cfg.emit_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*cfg.emit_dir, ec);
        if (ec)
            throw std::runtime_error("cannot create " + *cfg.emit_dir + ": " + ec.message());
    }

    Census census;
    for (int order = 2; order <= cfg.max_order; ++order) {
        auto& oc = census.per_order[order];
        const auto eas = enumerate_effect_algebras(order, cfg.mod_isomorphism);
        oc.ea_count = eas.size();
        if (!cfg.require_sequential) {
            oc.models = eas;
        } else {
            auto parts = map_shards<std::vector<OrderCensus>>(eas.size(), cfg.threads, [&](std::size_t lo, std::size_t hi) {
                std::vector<OrderCensus> local(hi - lo);
                for (std::size_t i = lo; i < hi; ++i) {
                    auto& out = local[i - lo];
                    for_each_sequential_product(eas[i], cfg.mod_isomorphism, [&](const FiniteModel& m) {
                        ++out.sea_count;
                        const auto carrier = finite::as_carrier(m);
                        const auto fails = scan_window(carrier, carrier.sample(), 1);
                        out.inequality_violations += fails.size();
                        for (const auto& v : fails)
                            out.violation_witnesses.push_back({model_id(m), render_verdict(carrier, v)});
                        out.models.push_back(m);
                    });
                }
                return local;
            });
            for (auto& part : parts)
                for (auto& one : part) {
                    oc.sea_count += one.sea_count;
                    oc.inequality_violations += one.inequality_violations;
                    oc.violation_witnesses.insert(oc.violation_witnesses.end(), one.violation_witnesses.begin(),
                                                  one.violation_witnesses.end());
                    oc.models.insert(oc.models.end(), one.models.begin(), one.models.end());
                }
        }
        if (cfg.emit_dir)
            for (const auto& m : oc.models)
                finite::save_model_file(m, (std::filesystem::path(*cfg.emit_dir) / emit_name(m)).string());
    }
    return census;
}

std::string render_census(const Census& c)
{
    std::ostringstream out;
    out << "order  ea_count  sea_count  violations\n";
    for (const auto& [order, oc] : c.per_order) {
        out << std::left;
        out.width(7);
        out << order;
        out.width(10);
        out << oc.ea_count;
        out.width(11);
        out << oc.sea_count;
        out << oc.inequality_violations << "\n";
    }
    for (const auto& [order, oc] : c.per_order) {
        std::vector<std::string> lines;
        for (const auto& w : oc.violation_witnesses)
            lines.push_back("witness order=" + std::to_string(order) + " model=" + w.model_id + " " + w.verdict);
        std::ranges::sort(lines);
        for (const auto& l : lines)
            out << l << "\n";
    }
    return out.str();
}

} // namespace sea::search
