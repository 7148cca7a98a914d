#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sea/axiom_checker.hpp"
#include "sea/search.hpp"

using namespace sea;
using finite::FiniteModel;

namespace {

std::string fixture(const char* name) { return std::string(SEA_FIXTURE_DIR) + "/" + name; }

std::set<std::vector<finite::Index>> oplus_tables(const std::vector<FiniteModel>& ms)
{
    std::set<std::vector<finite::Index>> out;
    for (const auto& m : ms)
        out.insert(m.oplus_table());
    return out;
}

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir)
{
    std::map<std::string, std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        std::ifstream f(e.path(), std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        out[e.path().filename().string()] = s.str();
    }
    return out;
}

} // namespace

TEST_CASE("small orders")
{
    CHECK(search::enumerate_effect_algebras(2).size() == 1);
    const auto three = search::enumerate_effect_algebras(3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].oplus(1, 1) == finite::Index{2});

    const auto four = search::enumerate_effect_algebras(4, true);
    std::set<std::pair<std::vector<finite::Index>, std::vector<finite::Index>>> forms;
    for (const auto& m : four)
        forms.insert(oracle::canonical_form(m));
    CHECK(forms.count(oracle::canonical_form(finite::load_model_file(fixture("boolean2.sea")).effect_part())) == 1);
    CHECK(forms.count(oracle::canonical_form(finite::load_model_file(fixture("chain4.sea")))) == 1);
}

TEST_CASE("pruned enumeration equals the naive one")
{
    for (int order = 2; order <= 4; ++order) {
        const auto naive = oracle::all_effect_algebras(order);
        const auto pruned = search::enumerate_effect_algebras(order);
        CHECK(pruned.size() == naive.size());
        CHECK(oplus_tables(pruned) == oplus_tables(naive));
        CHECK(search::enumerate_effect_algebras(order, true).size() == oracle::isomorphism_classes(naive));
    }
}

TEST_CASE("isomorphism classes")
{
    for (int order = 2; order <= 5; ++order) {
        const auto all = search::enumerate_effect_algebras(order);
        const auto reps = search::enumerate_effect_algebras(order, true);
        // Pairwise non-isomorphic, and every model is represented.
        CHECK(oracle::isomorphism_classes(reps) == reps.size());
        CHECK(oracle::isomorphism_classes(all) == reps.size());
        // Orbit-stabilizer.
        const std::size_t perms = oracle::unit_fixing_permutations(order).size();
        std::size_t orbit_total = 0;
        for (const auto& m : reps)
            orbit_total += perms / oracle::automorphism_count(m);
        CHECK(orbit_total == all.size());
    }
}

TEST_CASE("every model found passes the checker")
{
    for (int order = 2; order <= 6; ++order)
        for (const auto& m : search::enumerate_effect_algebras(order, order > 5)) {
            CHECK(check_effect_axioms(finite::as_carrier(m), {.threads = 1}).ok());
            const auto bad = oracle::effect_failures(m);
            CHECK(std::none_of(bad.begin(), bad.end(), [](bool b) { return b; }));
        }
}

TEST_CASE("sequential products")
{
    const auto two = search::enumerate_effect_algebras(2);
    CHECK(search::extend_with_sequential_product(two[0]).size() == 1);
    CHECK(search::extend_with_sequential_product(search::enumerate_effect_algebras(3)[0]).empty());

    const auto boolean = finite::load_model_file(fixture("boolean2.sea"));
    const auto products = search::extend_with_sequential_product(boolean);
    CHECK(std::find(products.begin(), products.end(), boolean) != products.end());
}

TEST_CASE("sequential products equal the naive search")
{
    for (int order = 2; order <= 4; ++order)
        for (const auto& ea : search::enumerate_effect_algebras(order)) {
            const auto pruned = search::extend_with_sequential_product(ea);
            const auto naive = oracle::all_sequential_products(ea, true);
            CHECK(pruned.size() == naive.size());
            std::set<std::vector<finite::Index>> a, b;
            for (const auto& m : pruned)
                a.insert(*m.sprod_table());
            for (const auto& m : naive)
                b.insert(*m.sprod_table());
            CHECK(a == b);
            for (const auto& m : pruned)
                CHECK(check_sequential_axioms(finite::as_carrier(m), {.threads = 1}).ok());
        }
}

TEST_CASE("unit rows of the product are forced")
{
    for (int order = 2; order <= 3; ++order)
        for (const auto& ea : search::enumerate_effect_algebras(order))
            CHECK(oracle::all_sequential_products(ea, false).size() == oracle::all_sequential_products(ea, true).size());
}

TEST_CASE("census")
{
    const auto c = search::inequality_census({.max_order = 4, .threads = 1});
    REQUIRE(c.per_order.size() == 3);
    CHECK(c.per_order.at(2).ea_count == 1);
    CHECK(c.per_order.at(2).sea_count == 1);
    CHECK(c.per_order.at(2).inequality_violations == 0);
    CHECK(c.per_order.at(3).ea_count == 1);
    CHECK(c.per_order.at(3).sea_count == 0);
    for (unsigned t : {2u, 4u})
        CHECK(search::inequality_census({.max_order = 4, .threads = t}) == c);

    const auto iso = search::inequality_census({.max_order = 5, .mod_isomorphism = true, .threads = 1});
    const auto full = search::inequality_census({.max_order = 5, .threads = 1});
    for (int order = 2; order <= 5; ++order) {
        CHECK(oracle::isomorphism_classes(full.per_order.at(order).models) == iso.per_order.at(order).sea_count);
        std::size_t orbit_total = 0;
        const std::size_t perms = oracle::unit_fixing_permutations(order).size();
        for (const auto& m : iso.per_order.at(order).models)
            orbit_total += perms / oracle::automorphism_count(m);
        CHECK(orbit_total == full.per_order.at(order).sea_count);
    }

    const auto text = search::render_census(c);
    CHECK(text.rfind("order  ea_count  sea_count  violations\n", 0) == 0);
    CHECK(text.find("\n3      1         0          0\n") != std::string::npos);
}

TEST_CASE("census limits")
{
    CHECK_THROWS_AS(search::inequality_census({.max_order = 7}), std::invalid_argument);
    CHECK_THROWS_AS(search::inequality_census({.max_order = 1}), std::invalid_argument);
    CHECK_THROWS_AS(search::inequality_census({.max_order = 40, .allow_large = true}), std::invalid_argument);
}

TEST_CASE("emitted files are deterministic and round-trip")
{
    const auto base = std::filesystem::temp_directory_path() / "sea-search-test";
    std::filesystem::remove_all(base);
    for (const char* run : {"one", "two"})
        search::inequality_census({.max_order = 4, .emit_dir = (base / run).string(), .threads = run[0] == 'o' ? 1u : 3u});
    const auto one = read_dir(base / "one");
    CHECK(one == read_dir(base / "two"));
    CHECK(one.size() == 2);
    for (const auto& [name, text] : one) {
        const auto m = finite::load_model(text);
        CHECK(finite::save_model(m) == text);
        CHECK(search::emit_name(m) == name);
    }

    search::inequality_census({.max_order = 4, .require_sequential = false, .emit_dir = (base / "ea").string()});
    CHECK(read_dir(base / "ea").size() == 1 + 1 + 4);
    std::filesystem::remove_all(base);
}

TEST_CASE("model ids")
{
    const auto m = finite::load_model_file(fixture("boolean2.sea"));
    const auto id = search::model_id(m);
    CHECK(id.size() == 16);
    CHECK(id == search::model_id(finite::load_model_file(fixture("messy.sea"))));
    CHECK(id != search::model_id(m.effect_part()));
    CHECK(search::emit_name(m) == "sea4-" + id + ".sea");
    CHECK(search::emit_name(m.effect_part()).rfind("ea4-", 0) == 0);
}
