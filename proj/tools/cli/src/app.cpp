#include "qaf/cli/app.hpp"

#include "qaf/cli/qaf_format.hpp"
#include "qaf/cli/report.hpp"
#include "qaf/combinatorics.hpp"
#include "qaf/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace qaf::cli {
namespace {

struct Options {
    std::string file;
    std::optional<std::size_t> d, m, t, p, q, n, smax;
    std::uint64_t budget = SearchParams{}.budget;
    std::size_t symmetry_depth = SearchParams{}.symmetry_depth;
    std::string mode = "exact";
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool merge = false;
    bool timing = false;
};

template <class T>
T need(const std::optional<T>& v, const char* flag)
{
    if (!v) throw InvalidArgument(std::string("missing required flag ") + flag);
    return *v;
}

struct Input {
    SetFamily family;
    std::vector<std::size_t> merged_lines;
};

Input load(const Options& o)
{
    if (o.file.empty()) throw InvalidArgument("missing family file (use - for standard input)");
    Input in;
    in.family = read_family(o.file, o.merge ? DuplicatePolicy::Merge : DuplicatePolicy::Reject, &in.merged_lines);
    return in;
}

Json input_json(const Input& in)
{
    Json j{{"universe", in.family.universe()}, {"size", in.family.size()}};
    if (!in.merged_lines.empty()) j["merged_duplicate_lines"] = in.merged_lines;
    return j;
}

Json params_json(const Options& o)
{
    Json j = Json::object();
    auto put = [&](const char* k, const std::optional<std::size_t>& v) {
        if (v) j[k] = *v;
    };
    put("d", o.d);
    put("m", o.m);
    put("t", o.t);
    put("p", o.p);
    put("q", o.q);
    put("n", o.n);
    put("smax", o.smax);
    if (o.seed) j["seed"] = *o.seed;
    return j;
}

Json cmd_props(const Options& o)
{
    auto in = load(o);
    const auto& f = in.family;
    Json r{{"input", input_json(in)}};
    bool any = false;
    if (o.d || o.m) {
        auto d = need(o.d, "--d");
        auto m = need(o.m, "--m");
        r["bracket"] = property_json(f, check_bracket(f, d, m));
        r["brace"] = property_json(f, check_brace(f, d, m));
        any = true;
    }
    if (o.p || o.q) {
        r["pq"] = property_json(f, check_pq(f, need(o.p, "--p"), need(o.q, "--q")));
        any = true;
    }
    if (o.t) {
        auto t = *o.t;
        auto reps = find_representations(f, t, o.threads);
        Json rep = property_json(f, reps.report);
        rep["map"] = reps.map ? representations_json(*reps.map) : Json(nullptr);
        r["t_property"] = std::move(rep);
        auto x = has_t_transversal(f, t);
        r["t_transversal"] = x ? to_json(x->points) : Json(nullptr);
        r["t_critical"] = property_json(f, is_t_critical(f, t));
        any = true;
    }
    if (!any) throw InvalidArgument("props needs --d/--m, --p/--q or --t");
    return r;
}

Json cmd_tau(const Options& o)
{
    auto in = load(o);
    const auto& f = in.family;
    Json r{{"input", input_json(in)}, {"mode", o.mode}};
    if (o.mode == "exact") {
        auto res = tau_exact(f);
        if (!hits_all(f, res.witness.points)) throw InconsistencyError("tau witness does not hit every member");
        r["tau"] = res.tau;
        r["transversal"] = to_json(res.witness.points);
        r["nodes"] = res.nodes_explored;
    } else if (o.mode == "greedy") {
        auto x = tau_greedy(f);
        r["size"] = x.size();
        r["transversal"] = to_json(x.points);
    } else if (o.mode == "decision") {
        auto t = need(o.t, "--t");
        auto x = has_t_transversal(f, t);
        if (x && !hits_all(f, x->points)) throw InconsistencyError("decision witness does not hit every member");
        r["t"] = t;
        r["exists"] = x.has_value();
        r["transversal"] = x ? to_json(x->points) : Json(nullptr);
    } else {
        throw InvalidArgument("unknown tau mode '" + o.mode + "' (exact, greedy, decision)");
    }
    return r;
}

Json cmd_pierce(const Options& o)
{
    auto in = load(o);
    auto trace = pierce_pq(in.family, need(o.p, "--p"), need(o.q, "--q"));
    return Json{{"input", input_json(in)}, {"trace", trace_json(in.family, trace)}};
}

Json construct_verification(const SetFamily& f, std::size_t d, std::size_t m, std::size_t t, unsigned threads)
{
    auto expected = binomial(d + m + t, t);
    auto reps = find_representations(f, t, threads);
    auto x = has_t_transversal(f, t);
    return Json{{"size", f.size()},
                {"expected_size", expected},
                {"bracket", check_bracket(f, d, m).holds()},
                {"t_property", reps.map.has_value()},
                {"t_transversal", x ? to_json(x->points) : Json(nullptr)},
                {"verified", f.size() == expected && reps.map && !x}};
}

Json cmd_construct(const Options& o)
{
    auto d = need(o.d, "--d");
    auto m = need(o.m, "--m");
    auto t = need(o.t, "--t");
    auto f = construct_prop2(d, m, t);
    auto v = construct_verification(f, d, m, t, o.threads);
    if (!v["verified"].get<bool>()) throw InconsistencyError("construction failed its own verification");
    return Json{{"family", family_json(f)}, {"verification", std::move(v)}};
}

Json cmd_search(const Options& o)
{
    SearchParams sp;
    sp.d = need(o.d, "--d");
    sp.m = need(o.m, "--m");
    sp.t = need(o.t, "--t");
    sp.n = need(o.n, "--n");
    sp.s_max = need(o.smax, "--smax");
    sp.budget = o.budget;
    sp.symmetry_depth = o.symmetry_depth;
    auto cert = search_max_b(sp);
    Json r{{"certificate", certificate_json(cert)}};
    auto known = known_b(sp.d, sp.m, sp.t);
    r["known_b"] = known ? Json{{"value", known->value}, {"basis", std::string(known->basis)}} : Json(nullptr);
    r["formula_upper"] = b_upper_formula(sp.d, sp.m, sp.t);
    return r;
}

Json cmd_audit(const Options& o)
{
    auto in = load(o);
    const auto& f = in.family;
    auto d = need(o.d, "--d");
    auto m = need(o.m, "--m");
    auto t = need(o.t, "--t");
    auto reps = find_representations(f, t, o.threads);
    if (!reps.map) throw InvalidArgument("family lacks the t-property: " + reps.report.detail);
    auto report = audit_lemmas(f, d, m, t, *reps.map);
    auto triples = count_triples(f, *reps.map);
    Json prices = Json::array();
    Rational total = 0;
    for (std::size_t a = 0; a < f.size(); ++a) {
        auto pa = price(f, *reps.map, a);
        total += pa;
        prices.push_back(rational_json(pa));
    }
    return Json{{"input", input_json(in)},
                {"representations", representations_json(*reps.map)},
                {"triples", {{"total", triples.total}, {"covered", triples.covered}}},
                {"prices", std::move(prices)},
                {"total_price", rational_json(total)},
                {"audit", audit_json(report)}};
}

Json bounds_pair(const Bounds& b)
{
    return Json{{"lower", b.lower}, {"upper", b.upper}};
}

Json cmd_bounds(const Options& o)
{
    auto d = need(o.d, "--d");
    auto m = need(o.m, "--m");
    auto t = need(o.t, "--t");
    Json r{{"helly_gallai", bounds_pair(hg_bounds_thm1(d, m, t))}};
    r["t2_hypersurfaces"] = (m == 1 && t == 2 && d >= 1) ? bounds_pair(bounds_thm2(d)) : Json(nullptr);
    r["lines"] = (d == 1 && m == 1) ? bounds_pair(bounds_thm3(t)) : Json(nullptr);
    auto known = known_b(d, m, t);
    r["known_b"] = known ? Json{{"value", known->value}, {"basis", std::string(known->basis)}} : Json(nullptr);
    r["formula_upper"] = b_upper_formula(d, m, t);
    r["construction_size"] = d + m >= 1 ? Json(binomial(d + m + t, t)) : Json(nullptr);
    if (o.p || o.q) r["pq_threshold"] = thm4_threshold(need(o.p, "--p"), need(o.q, "--q"));
    return r;
}

void add_common(CLI::App* sub, Options& o, bool takes_file)
{
    if (takes_file) sub->add_option("file", o.file, "QAF family file, or - for standard input");
    sub->add_option("--d", o.d, "intersection size bound d");
    sub->add_option("--m", o.m, "intersection depth m");
    sub->add_option("--t", o.t, "representation size t");
    sub->add_option("--p", o.p, "(p,q)-property: group size p");
    sub->add_option("--q", o.q, "(p,q)-property: overlap count q");
    sub->add_option("--n", o.n, "search universe size");
    sub->add_option("--smax", o.smax, "largest set size in search");
    sub->add_option("--budget", o.budget, "search node limit");
    sub->add_option("--symmetry-depth", o.symmetry_depth, "depth of orbit-leader pruning in search");
    sub->add_option("--mode", o.mode, "tau mode: exact, greedy or decision");
    sub->add_flag("--merge-duplicates", o.merge, "drop repeated sets instead of rejecting the input");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "seed for randomized generators (results never depend on it)");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
}

void emit(const Json& report, const Options& o, const std::string& command, std::ostream& out)
{
    if (o.format == "json") {
        out << report.dump(2) << "\n";
        return;
    }
    if (command == "construct" && report.contains("result")) {
        const auto& res = report["result"];
        std::string block = render_text(Json{{"verification", res["verification"]}});
        out << "# qaf construct d=" << *o.d << " m=" << *o.m << " t=" << *o.t << "\n";
        std::size_t pos = 0;
        while (pos < block.size()) {
            auto end = block.find('\n', pos);
            out << "# " << block.substr(pos, end - pos) << "\n";
            pos = end + 1;
        }
        out << "universe " << res["family"]["universe"].get<std::size_t>() << "\n";
        for (const auto& s : res["family"]["sets"]) {
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i].get<Point>();
            out << "\n";
        }
        return;
    }
    out << render_text(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Transversals and extremal bounds for quasialgebraic set families", "qaf"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;
    struct Command {
        const char* name;
        const char* help;
        bool file;
        Json (*fn)(const Options&);
    };
    const Command commands[] = {
        {"props", "check the [d,m], {d,m}, (p,q) and t-properties", true, cmd_props},
        {"tau", "transversal number: exact, greedy or decision", true, cmd_tau},
        {"pierce", "pierce a linear (p,q) family with p-q+1 points", true, cmd_pierce},
        {"construct", "all (d+m)-subsets of a (d+m+t)-set, verified", false, cmd_construct},
        {"search-b", "bounded exhaustive search for large [d,m] t-property families", false, cmd_search},
        {"audit", "structural inequalities and counting identities", true, cmd_audit},
        {"bounds", "closed-form bounds and known exact values", false, cmd_bounds},
    };
    for (const auto& c : commands) add_common(app.add_subcommand(c.name, c.help), o, c.file);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    const Command* chosen = nullptr;
    for (const auto& c : commands)
        if (app.got_subcommand(c.name)) chosen = &c;

    Json report = make_report(chosen->name);
    report["params"] = params_json(o);
    auto fail = [&](int code, const char* kind, const std::string& msg) {
        err << "qaf " << chosen->name << ": " << msg << "\n";
        if (o.format == "json") {
            report["error"] = Json{{"kind", kind}, {"message", msg}, {"exit_code", code}};
            out << report.dump(2) << "\n";
        }
        return code;
    };
    auto start = std::chrono::steady_clock::now();
    try {
        report["result"] = chosen->fn(o);
    } catch (const InconsistencyError& e) {
        return fail(kInconsistency, "inconsistency", e.what());
    } catch (const InvalidArgument& e) {
        return fail(kUsageError, "invalid-argument", e.what());
    } catch (const std::overflow_error& e) {
        return fail(kUsageError, "overflow", e.what());
    }
    if (o.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, o, chosen->name, out);
    return kOk;
}

}  // namespace qaf::cli
