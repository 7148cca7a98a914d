// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sea/axiom_checker.hpp"
#include "sea/cli.hpp"
#include "sea/inequality.hpp"
#include "sea/search.hpp"

using namespace sea;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    int problems = 0;

    void require(bool ok, const std::string& what)
    {
        if (ok)
            return;
        pass = false;
        if (++problems <= 3)
            detail += (detail.empty() ? "" : "; ") + what;
        else if (problems == 4)
            detail += "; ...";
    }
};

struct Cli {
    int code;
    std::string out;
};

Cli cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fixture(const std::string& name) { return std::string(SEA_FIXTURE_DIR) + "/" + name; }

std::map<std::string, std::string> read_dir(const fs::path& dir)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ifstream f(e.path(), std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        out[e.path().filename().string()] = s.str();
    }
    return out;
}

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

const e0::Window kDesk{4, 3, 3};

Outcome ac1()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    const auto r = cli({"counterexample"});
    const double s = seconds_since(t);
    const auto lines = lines_of(r.out);
    o.require(r.code == 0, "exit " + std::to_string(r.code));
    o.require(verify_theorem1(), "verify false");
    o.require(lines.size() == 8, "expected 7 step lines");
    for (const char* want : {"sum=c[1,1,0]", "product=a1", "double=a2", "squares=0,0"})
        o.require(r.out.find(want) != std::string::npos, std::string("missing ") + want);
    o.require(!lines.empty() && lines.back() == "7. a2 ≤ 0 : false → inequality FAILS", "last line");
    o.require(s < 0.1, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "7 steps reproduced in " + std::to_string(s * 1000).substr(0, 5) + " ms";
    return o;
}

Outcome ac2()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    const auto r = cli({"check", "e0", "--n", "4", "--ik", "3", "--m", "3"});
    const double s = seconds_since(t);
    o.require(r.code == 0, "exit " + std::to_string(r.code));
    o.require(r.out.size() >= 3 && r.out.substr(r.out.size() - 3) == "OK\n", "no OK line");
    o.require(r.out.find("coverage oplus 11/11 sprod 13/13") != std::string::npos, "branch coverage incomplete");
    for (const char* part : {"effect", "sequential", "identities"})
        o.require(r.out.find(std::string("\n") + part + " instances=") != std::string::npos, std::string("no ") + part);
    o.require(r.out.find("violations=0") != std::string::npos && r.out.find("VIOLATION") == std::string::npos,
              "violations reported");
    const auto cov = e0::branch_coverage(e0::enumerate_window(kDesk));
    for (auto n : cov.oplus)
        o.require(n >= 1, "oplus branch unhit");
    for (auto n : cov.sprod)
        o.require(n >= 1, "sprod branch unhit");
    o.require(s < 60, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "0 violations, 11/11 oplus and 13/13 sprod branches, " + std::to_string(s).substr(0, 4) + " s";
    return o;
}

bool prop1_hypotheses(const e0::Carrier& c, const e0::Element& a, const e0::Element& b)
{
    return c.oplus(square(c, a), square(c, b)) && (c.leq(a, b) || c.leq(b, a)) && seq_independent(c, a, b);
}

Outcome ac3()
{
    Outcome o;
    const e0::Carrier c(kDesk);
    std::size_t met = 0;
    for (const auto& a : c.sample())
        for (const auto& b : c.sample()) {
            const auto p = check_prop1(c, a, b);
            if (p.status == VerdictStatus::HypothesesNotMet)
                continue;
            ++met;
            o.require(p.status == VerdictStatus::Holds, "fails at " + e0::render(a) + "," + e0::render(b));
            o.require(avg_inequality(c, a, b).status != VerdictStatus::Fails, "verdict at " + e0::render(a));
        }
    const auto fails = scan_window(c, c.sample());
    for (const auto& v : fails)
        o.require(!prop1_hypotheses(c, v.a, v.b), "scan failure meets hypotheses");
    o.require(met > 0, "no pair met the hypotheses");
    if (o.pass)
        o.detail = std::to_string(met) + " pairs meet the hypotheses, all hold; " + std::to_string(fails.size()) +
                   " scan failures, none meet them";
    return o;
}

template <class C>
void sharp_pairs(Outcome& o, const C& c, std::size_t& met)
{
    for (const auto& a : c.sample())
        for (const auto& b : c.sample()) {
            if (!orthogonal(c, a, b) || !is_sharp(c, a))
                continue;
            ++met;
            o.require(c.sprod(a, b) == c.zero(), "nonzero product at " + c.render(a) + "," + c.render(b));
            o.require(avg_inequality(c, a, b).status == VerdictStatus::Holds, "not Holds at " + c.render(a));
            o.require(check_prop2(c, a, b).status == VerdictStatus::Holds, "check_prop2 at " + c.render(a));
        }
}

Outcome ac4()
{
    Outcome o;
    std::size_t on_e0 = 0, on_bool = 0;
    sharp_pairs(o, e0::Carrier(kDesk), on_e0);
    const auto m = finite::load_model_file(fixture("boolean2.sea"));
    sharp_pairs(o, finite::as_carrier(m), on_bool);
    o.require(on_e0 > 0 && on_bool > 0, "no qualifying pairs");
    if (o.pass)
        o.detail = std::to_string(on_e0) + " pairs on E0, " + std::to_string(on_bool) + " on the 2^2 fixture";
    return o;
}

Outcome ac5()
{
    Outcome o;
    const auto r = cli({"scan", "e0", "--n", "1", "--ik", "1", "--m", "0"});
    o.require(r.code == 1, "exit " + std::to_string(r.code));
    std::set<std::string> got;
    for (const auto& l : lines_of(r.out))
        if (l.rfind("FAIL ", 0) == 0)
            got.insert(l.substr(0, l.find(" prod=")));

    std::set<std::string> want;
    for (const auto& a : oracle::e0_box(1, 1, 0))
        for (const auto& b : oracle::e0_box(1, 1, 0)) {
            if (!e0::oplus(a, b))
                continue;
            const auto twice = e0::oplus(e0::sprod(a, b), e0::sprod(a, b));
            if (!twice)
                continue;
            const auto sum = e0::oplus(e0::sprod(a, a), e0::sprod(b, b));
            if (sum ? !oracle::e0_leq_search(*twice, *sum) : *twice != e0::Element::zero())
                want.insert("FAIL a=" + e0::render(a) + " b=" + e0::render(b));
        }
    o.require(got == want, "scan and naive oracle disagree");
    o.require(got.count("FAIL a=c[1,0,0] b=c[0,1,0]") && got.count("FAIL a=c[0,1,0] b=c[1,0,0]"),
              "counterexample pair missing");
    if (o.pass)
        o.detail = std::to_string(got.size()) + " failing ordered pairs, identical to the naive pair loop";
    return o;
}

Outcome ac6()
{
    Outcome o;
    const auto w = e0::enumerate_window(kDesk);
    std::size_t pairs = 0, agree = 0;
    for (const auto& x : w)
        for (const auto& y : w) {
            ++pairs;
            agree += e0::leq(x, y) == oracle::e0_leq_search(x, y);
        }
    o.require(agree == pairs, std::to_string(pairs - agree) + " disagreements");
    if (o.pass)
        o.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree";
    return o;
}

Outcome ac7()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    const auto census = search::inequality_census({.max_order = 4});
    const auto iso = search::inequality_census({.max_order = 4, .mod_isomorphism = true});
    std::string counts;
    for (int order = 2; order <= 4; ++order) {
        const auto eas = oracle::all_effect_algebras(order);
        std::vector<finite::FiniteModel> seas;
        for (const auto& ea : eas)
            for (auto& m : oracle::all_sequential_products(ea, true))
                seas.push_back(std::move(m));
        std::uint64_t violations = 0;
        for (const auto& m : seas) {
            const auto c = finite::as_carrier(m);
            violations += scan_window(c, c.sample(), 1).size();
        }
        const auto& got = census.per_order.at(order);
        o.require(got.ea_count == eas.size(), "ea count at order " + std::to_string(order));
        o.require(got.sea_count == seas.size(), "sea count at order " + std::to_string(order));
        o.require(got.inequality_violations == violations, "violations at order " + std::to_string(order));
        std::set<std::string> a, b;
        for (const auto& m : got.models)
            a.insert(finite::save_model(m));
        for (const auto& m : seas)
            b.insert(finite::save_model(m));
        o.require(a == b, "model sets differ at order " + std::to_string(order));
        o.require(iso.per_order.at(order).ea_count == oracle::isomorphism_classes(eas), "iso ea classes");
        o.require(iso.per_order.at(order).sea_count == oracle::isomorphism_classes(seas), "iso sea classes");
        counts += (counts.empty() ? "" : ", ") + std::string("order ") + std::to_string(order) + ": " +
                  std::to_string(eas.size()) + " EA/" + std::to_string(seas.size()) + " SEA";
    }
    o.require(census.per_order.at(2).ea_count == 1 && census.per_order.at(2).sea_count == 1, "order 2");
    o.require(census.per_order.at(3).ea_count == 1 && census.per_order.at(3).sea_count == 0, "order 3");
    const double s = seconds_since(t);
    o.require(s < 120, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = counts + " (labelled), matches the naive enumerator";
    return o;
}

Outcome ac8(const fs::path& scratch)
{
    Outcome o;
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(SEA_FIXTURE_DIR)) {
        const auto m = finite::load_model_file(e.path().string());
        const auto text = finite::save_model(m);
        o.require(finite::load_model(text) == m, "load(save) at " + e.path().filename().string());
        o.require(finite::save_model(finite::load_model(text)) == text, "bytes at " + e.path().filename().string());
        ++files;
    }
    const auto dir = scratch / "emit";
    search::inequality_census({.max_order = 5, .emit_dir = (dir / "sea").string()});
    search::inequality_census({.max_order = 5, .require_sequential = false, .emit_dir = (dir / "ea").string()});
    std::size_t emitted = 0;
    for (const char* sub : {"sea", "ea"})
        for (const auto& [name, bytes] : read_dir(dir / sub)) {
            ++emitted;
            o.require(finite::save_model(finite::load_model(bytes)) == bytes, "bytes at " + name);
        }
    o.require(emitted > 0, "nothing emitted");
    if (o.pass)
        o.detail = std::to_string(files) + " fixtures and " + std::to_string(emitted) + " emitted models round-trip";
    return o;
}

Outcome ac9(const fs::path& scratch)
{
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"counterexample"},
        {"check", "e0", "--n", "4", "--ik", "3", "--m", "3"},
        {"scan", "e0", "--n", "1", "--ik", "1", "--m", "0"},
        {"scan", "e0", "--n", "4", "--ik", "3", "--m", "3", "--json"},
        {"search", "--max-order", "5"},
        {"search", "--max-order", "5", "--mod-iso", "--json"},
        {"check", fixture("broken3.sea"), "--json"},
        {"fmt", fixture("messy.sea")},
    };
    auto with_threads = [](std::vector<std::string> c, const char* t) {
        if (c[0] != "counterexample" && c[0] != "fmt") {
            c.push_back("--threads");
            c.push_back(t);
        }
        return c;
    };
    for (const auto& c : commands) {
        const auto a = cli(with_threads(c, "1"));
        const auto b = cli(with_threads(c, "1"));
        const auto d = cli(with_threads(c, "4"));
        o.require(a.out == b.out && a.code == b.code, "run-to-run difference in " + c[0]);
        o.require(a.out == d.out && a.code == d.code, "thread-count difference in " + c[0]);
    }
    for (const char* t : {"1", "4"})
        cli({"search", "--max-order", "5", "--emit", (scratch / "det" / t).string(), "--threads", t});
    o.require(read_dir(scratch / "det" / "1") == read_dir(scratch / "det" / "4"), "emitted files differ");
    o.require(replay_counterexample().steps == replay_counterexample().steps, "replay differs");
    if (o.pass)
        o.detail = std::to_string(commands.size()) + " commands and emitted files identical across runs and 1/4 threads";
    return o;
}

} // namespace

int main()
{
    const auto scratch = fs::temp_directory_path() / ("sea-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(scratch);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 counterexample replay", ac1},
        {"AC2 E0 axioms at window (4,3,3)", ac2},
        {"AC3 ordered commuting pairs satisfy the inequality", ac3},
        {"AC4 sharp factor gives zero product", ac4},
        {"AC5 scan completeness at window (1,1,0)", ac5},
        {"AC6 order decision vs witness search", ac6},
        {"AC7 finite census vs naive enumerator", ac7},
        {"AC8 file format round trip", [&] { return ac8(scratch); }},
        {"AC9 determinism", [&] { return ac9(scratch); }},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), 1};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " : " << o.detail << std::endl;
    }
    fs::remove_all(scratch);
    return failed == 0 ? 0 : 1;
}
