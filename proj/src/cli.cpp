#include "sea/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include "sea/axiom_checker.hpp"
#include "sea/e0.hpp"
#include "sea/expr.hpp"
#include "sea/finite_model.hpp"
#include "sea/inequality.hpp"
#include "sea/search.hpp"

namespace sea::cli {

namespace {

using nlohmann::json;

struct Common {
    bool json = false;
    bool timing = false;
    unsigned threads = 0;
};

struct WindowFlags {
    std::int64_t n = e0::kDefaultWindow.n_max;
    std::int64_t ik = e0::kDefaultWindow.ik_max;
    std::int64_t m = e0::kDefaultWindow.m_abs;

    e0::Window window() const
    {
        e0::Window w{n, ik, m};
        w.validate();
        return w;
    }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_window(CLI::App* sub, WindowFlags& w)
{
    sub->add_option("--n", w.n, "largest a/b subscript")->capture_default_str();
    sub->add_option("--ik", w.ik, "largest c/d first and second index")->capture_default_str();
    sub->add_option("--m", w.m, "largest |m| for c/d")->capture_default_str();
}

void report_time(const Common& c, std::ostream& err, std::chrono::steady_clock::time_point start)
{
    if (!c.timing)
        return;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << ms << " ms\n";
}

json summary_json(const CheckSummary& s)
{
    json inst = json::object();
    for (std::size_t i = 0; i < kAxiomCount; ++i)
        if (s.instances[i] > 0)
            inst[std::string(axiom_name(static_cast<Axiom>(i)))] = s.instances[i];
    json v = json::array();
    for (const auto& r : s.violations)
        v.push_back({{"axiom", axiom_name(r.axiom)},
                     {"witnesses", r.witnesses},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"detail", r.detail}});
    return {{"instances_checked", s.triples_checked},
            {"instances", inst},
            {"violation_count", s.violation_count},
            {"violations", v},
            {"notes", s.notes}};
}

void summary_text(std::ostream& out, std::string_view label, const CheckSummary& s)
{
    out << label << " instances=" << s.triples_checked << " violations=" << s.violation_count << "\n";
    for (std::size_t i = 0; i < kAxiomCount; ++i)
        if (s.instances[i] > 0)
            out << "  " << axiom_name(static_cast<Axiom>(i)) << " " << s.instances[i] << "\n";
}

struct NamedSummary {
    std::string label;
    CheckSummary summary;
};

int finish_check(std::ostream& out, const Common& c, json head, const std::vector<NamedSummary>& parts,
                 const e0::BranchCoverage* coverage)
{
    bool ok = true;
    std::vector<std::string> lines, notes;
    for (const auto& p : parts) {
        ok = ok && p.summary.ok();
        const auto l = render_lines(p.summary);
        lines.insert(lines.end(), l.begin(), l.end());
        notes.insert(notes.end(), p.summary.notes.begin(), p.summary.notes.end());
    }
    std::ranges::sort(lines);
    std::ranges::sort(notes);

    if (c.json) {
        for (const auto& p : parts)
            head[p.label] = summary_json(p.summary);
        if (coverage) {
            json o = json::object(), s = json::object();
            for (std::size_t i = 0; i < e0::kOplusBranchCount; ++i)
                o[std::string(e0::branch_name(static_cast<e0::OplusBranch>(i)))] = coverage->oplus[i];
            for (std::size_t i = 0; i < e0::kSprodBranchCount; ++i)
                s[std::string(e0::branch_name(static_cast<e0::SprodBranch>(i)))] = coverage->sprod[i];
            head["coverage"] = {{"oplus", o}, {"sprod", s}, {"complete", coverage->complete()}};
        }
        head["ok"] = ok;
        out << head.dump(2) << "\n";
        return ok ? kExitOk : kExitFound;
    }

    for (const auto& p : parts)
        summary_text(out, p.label, p.summary);
    if (coverage) {
        out << "coverage oplus " << coverage->oplus_hit() << "/" << e0::kOplusBranchCount << " sprod "
            << coverage->sprod_hit() << "/" << e0::kSprodBranchCount << "\n";
        for (std::size_t i = 0; i < e0::kOplusBranchCount; ++i)
            out << "  oplus " << e0::branch_name(static_cast<e0::OplusBranch>(i)) << " " << coverage->oplus[i] << "\n";
        for (std::size_t i = 0; i < e0::kSprodBranchCount; ++i)
            out << "  sprod " << e0::branch_name(static_cast<e0::SprodBranch>(i)) << " " << coverage->sprod[i] << "\n";
    }
    for (const auto& n : notes)
        out << "note " << n << "\n";
    for (const auto& l : lines)
        out << l << "\n";
    std::uint64_t total = 0;
    for (const auto& p : parts)
        total += p.summary.violation_count;
    if (ok)
        out << "OK\n";
    else
        out << "VIOLATIONS " << total << "\n";
    return ok ? kExitOk : kExitFound;
}

int cmd_check(const std::string& target, const WindowFlags& wf, const Common& c, std::ostream& out)
{
    const CheckOptions opt{.threads = c.threads};
    if (target == "e0") {
        const auto w = wf.window();
        const e0::Carrier carrier(w);
        const auto coverage = e0::branch_coverage(carrier.sample());
        json head = {{"target", "e0"},
                     {"window", {{"n", w.n_max}, {"ik", w.ik_max}, {"m", w.m_abs}}},
                     {"elements", carrier.sample().size()}};
        if (!c.json)
            out << "target e0 window n=" << w.n_max << " ik=" << w.ik_max << " m=" << w.m_abs
                << " elements=" << carrier.sample().size() << "\n";
        std::vector<NamedSummary> parts{{"effect", check_effect_axioms(carrier, opt)},
                                        {"sequential", check_sequential_axioms(carrier, opt)},
                                        {"identities", verify_prop3_identities(w, opt)}};
        int code = finish_check(out, c, std::move(head), parts, &coverage);
        if (code == kExitOk && !coverage.complete())
            code = kExitFound;
        return code;
    }
    const auto model = finite::load_model_file(target);
    const auto carrier = finite::as_carrier(model);
    json head = {{"target", target}, {"order", model.order()}, {"sequential", model.has_sprod()}};
    if (!c.json)
        out << "target " << target << " order=" << model.order() << "\n";
    std::vector<NamedSummary> parts{{"effect", check_effect_axioms(carrier, opt)}};
    if (model.has_sprod())
        parts.push_back({"sequential", check_sequential_axioms(carrier, opt)});
    else if (!c.json)
        out << "no sprod section; sequential axioms not checked\n";
    return finish_check(out, c, std::move(head), parts, nullptr);
}

int cmd_counterexample(const Common& c, std::ostream& out)
{
    const auto replay = replay_counterexample();
    static constexpr std::string_view labels[] = {"orthogonal", "sum", "product", "orthogonal", "double", "squares"};
    if (c.json) {
        json steps = json::array();
        for (const auto& s : replay.steps)
            steps.push_back({{"claim", s.claim}, {"expected", s.expected}, {"actual", s.actual}, {"ok", s.ok}});
        out << json{{"steps", steps}, {"reproduced", replay.reproduced}}.dump(2) << "\n";
        return replay.reproduced ? kExitOk : kExitFound;
    }
    out << "pair c[1,0,0], c[0,1,0] in E0\n";
    for (std::size_t i = 0; i < replay.steps.size(); ++i) {
        const auto& s = replay.steps[i];
        out << i + 1 << ". " << s.claim << " : ";
        if (i < std::size(labels))
            out << labels[i] << "=" << s.actual;
        else
            out << s.actual << (s.actual == "false" ? " → inequality FAILS" : " → inequality holds");
        if (!s.ok)
            out << " (expected " << s.expected << ")";
        out << "\n";
    }
    if (!replay.reproduced)
        out << "replay MISMATCH\n";
    return replay.reproduced ? kExitOk : kExitFound;
}

template <class C>
int scan_report(const C& carrier, const Common& c, json head, std::ostream& out)
{
    const auto& sample = carrier.sample();
    const auto fails = scan_window(carrier, sample, c.threads);
    std::vector<std::string> lines;
    for (const auto& v : fails)
        lines.push_back(render_verdict(carrier, v));
    std::ranges::sort(lines);
    const auto pairs = static_cast<std::uint64_t>(sample.size()) * sample.size();
    if (c.json) {
        json f = json::array();
        for (const auto& v : fails)
            f.push_back({{"a", carrier.render(v.a)},
                         {"b", carrier.render(v.b)},
                         {"prod", carrier.render(v.product)},
                         {"2prod", sea::render(carrier, v.doubled)},
                         {"squares", {carrier.render(v.square_a), carrier.render(v.square_b)}},
                         {"sum", sea::render(carrier, v.squares_sum)},
                         {"sum_undefined", v.sum_undefined}});
        std::sort(f.begin(), f.end(), [](const json& x, const json& y) { return x.dump() < y.dump(); });
        head["pairs"] = pairs;
        head["failures"] = f;
        out << head.dump(2) << "\n";
    } else {
        for (const auto& l : lines)
            out << l << "\n";
        out << "failures " << fails.size() << " of " << pairs << " pairs\n";
    }
    return fails.empty() ? kExitOk : kExitFound;
}

int cmd_scan(const std::string& target, const WindowFlags& wf, const Common& c, std::ostream& out)
{
    if (target == "e0") {
        const auto w = wf.window();
        return scan_report(e0::Carrier(w), c,
                           {{"target", "e0"}, {"window", {{"n", w.n_max}, {"ik", w.ik_max}, {"m", w.m_abs}}}}, out);
    }
    const auto model = finite::load_model_file(target);
    if (!model.has_sprod())
        throw UsageError(target + ": no sprod section to scan");
    return scan_report(finite::as_carrier(model), c, {{"target", target}}, out);
}

int cmd_search(search::SearchConfig cfg, const Common& c, std::ostream& out)
{
    if (cfg.max_order > search::kDefaultMaxOrder && !cfg.allow_large)
        throw UsageError("--max-order above " + std::to_string(search::kDefaultMaxOrder) +
                         " needs --allow-large");
    cfg.threads = c.threads;
    const auto census = search::inequality_census(cfg);
    if (c.json) {
        json orders = json::array();
        for (const auto& [order, oc] : census.per_order) {
            json w = json::array();
            for (const auto& x : oc.violation_witnesses)
                w.push_back({{"model", x.model_id}, {"verdict", x.verdict}});
            std::sort(w.begin(), w.end(), [](const json& x, const json& y) { return x.dump() < y.dump(); });
            orders.push_back({{"order", order},
                              {"ea_count", oc.ea_count},
                              {"sea_count", oc.sea_count},
                              {"violations", oc.inequality_violations},
                              {"witnesses", w}});
        }
        out << json{{"mod_isomorphism", cfg.mod_isomorphism}, {"orders", orders}}.dump(2) << "\n";
    } else {
        out << render_census(census);
    }
    return kExitOk;
}

int cmd_fmt(const std::string& path, bool in_place, const Common& c, std::ostream& out)
{
    const auto text = finite::save_model(finite::load_model_file(path));
    if (in_place) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!(f << text))
            throw finite::ModelError("cannot write " + path);
        return kExitOk;
    }
    if (c.json)
        out << json{{"path", path}, {"canonical", text}}.dump(2) << "\n";
    else
        out << text;
    return kExitOk;
}

int cmd_eval(const std::string& expr, const Common& c, std::ostream& out)
{
    const auto v = e0::evaluate(expr);
    const std::string r = v ? e0::render(*v) : "undefined";
    if (c.json)
        out << json{{"expr", expr}, {"result", v ? json(r) : json(nullptr)}}.dump(2) << "\n";
    else
        out << r << "\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sequential effect algebra workbench: E0 checks, the average-value counterexample, finite search"};
    app.name("sea");
    app.require_subcommand(1);

    Common common;
    WindowFlags wf;
    std::string target, expr, path;
    bool in_place = false;
    search::SearchConfig scfg;

    auto add_common = [&](CLI::App* sub, bool threads) {
        sub->add_flag("--json", common.json, "machine-readable output");
        sub->add_flag("--timing", common.timing, "print elapsed time to stderr");
        if (threads)
            sub->add_option("--threads", common.threads, "worker threads (0 = all cores)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate an expression over E0 (+ is oplus, * is sprod, ' is complement)");
    eval->add_option("expr", expr, "expression")->required();
    add_common(eval, false);

    auto* check = app.add_subcommand("check", "check the axioms on e0 (windowed) or a model file");
    check->add_option("target", target, "e0 or a .sea file")->required();
    add_window(check, wf);
    add_common(check, true);

    auto* cex = app.add_subcommand("counterexample", "replay the E0 counterexample to the average-value inequality");
    add_common(cex, false);

    auto* scan = app.add_subcommand("scan", "list pairs failing the average-value inequality");
    scan->add_option("target", target, "e0 or a .sea file")->required();
    add_window(scan, wf);
    add_common(scan, true);

    auto* srch = app.add_subcommand("search", "enumerate finite (sequential) effect algebras");
    srch->add_option("--max-order", scfg.max_order, "largest order searched")->capture_default_str();
    srch->add_flag("--allow-large", scfg.allow_large, "permit --max-order above the default cap");
    srch->add_flag("--mod-iso", scfg.mod_isomorphism, "one model per isomorphism class");
    srch->add_option("--emit", scfg.emit_dir, "write every model found into this directory");
    add_common(srch, true);

    auto* fmt = app.add_subcommand("fmt", "print a model file in canonical form");
    fmt->add_option("file", path, "model file")->required();
    fmt->add_flag("--in-place", in_place, "rewrite the file instead of printing");
    add_common(fmt, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        int code = kExitOk;
        if (*eval)
            code = cmd_eval(expr, common, out);
        else if (*check)
            code = cmd_check(target, wf, common, out);
        else if (*cex)
            code = cmd_counterexample(common, out);
        else if (*scan)
            code = cmd_scan(target, wf, common, out);
        else if (*srch)
            code = cmd_search(scfg, common, out);
        else if (*fmt)
            code = cmd_fmt(path, in_place, common, out);
        report_time(common, err, start);
        return code;
    } catch (const e0::ParseError& e) {
        err << "error: " << e.what() << " (position " << e.position() << ")\n";
    } catch (const finite::ModelError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

} // namespace sea::cli
