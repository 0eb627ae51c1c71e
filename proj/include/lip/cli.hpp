#pragma once

// The `lip` command-line tool, callable in-process: run() takes the
// arguments after the program name and returns what would be printed plus
// the exit code.
//
//   0  the computation ran (negative verdicts included)
//   1  usage or parse error
//   2  domain, precondition or limit error

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lip/json_io.hpp"

namespace lip::cli {

struct Result {
    std::string out;
    std::string err;
    int code = 0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

struct Settings {
    bool json = false;
    bool stable = false;
    std::size_t cap_terms = 10000;
    std::string primes_bound = "100000";
    std::int64_t max_modulus = 0;  // 0: environment or default
    bool fail_fast = false;
};

struct Outcome {
    Json inputs = Json::object();
    Json result = Json::object();
    std::string text;
};

inline Window parse_window(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw ParseError("window must look like lo..hi, got '" + s + "'");
    return make_window(parse_integer(s.substr(0, dots)), parse_integer(s.substr(dots + 2)));
}

inline Json window_json(const Window& w) { return Json::array({json::integer(w.lo), json::integer(w.hi)}); }

inline Progression parse_single_progression(const std::string& s) {
    auto e = parse_set(s);
    if (auto* p = std::get_if<Progression>(&e->node)) return *p;
    throw ParseError("expected a single progression ap(a,d) or apz(a,d), got '" + s + "'");
}

// Inline JSON, or a path to a JSON file.
inline Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot read JSON file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline EvalOptions eval_options(const Settings& s) { return EvalOptions{s.cap_terms}; }

inline NormalizeOptions normalize_options(const Settings& s) {
    NormalizeOptions opt = normalize_options_from_env();
    if (s.max_modulus > 0) opt.max_modulus = s.max_modulus;
    return opt;
}

inline GlueOptions glue_options(const Settings& s) {
    GlueOptions opt;
    opt.normalize = normalize_options(s);
    opt.eval = eval_options(s);
    opt.primes_bound = parse_integer(s.primes_bound);
    if (opt.primes_bound < 1) throw UsageError("--primes-bound must be >= 1");
    opt.fail_fast = s.fail_fast;
    return opt;
}

// Sample input shared by interp, check, circuit and series: either explicit
// points, or a function spec evaluated on window (cap set).
struct SampleArgs {
    std::string points;
    std::string fn;
    std::string set;
    std::string window;

    void attach(CLI::App* cmd) {
        cmd->add_option("--points", points, "sample as \"(x,y),(x,y),...\"");
        cmd->add_option("--fn", fn, "function spec JSON");
        cmd->add_option("--set", set, "restrict the window to this set expression");
        cmd->add_option("--window", window, "window lo..hi");
    }

    Sample load(const Settings& s, Json& inputs) const {
        if (!points.empty()) {
            if (!fn.empty()) throw UsageError("give either --points or --fn, not both");
            Sample out = parse_points(points);
            inputs["points"] = json::sample(out);
            return out;
        }
        if (fn.empty()) throw UsageError("one of --points or --fn is required");
        FunctionSpec spec = json::parse_function_spec(fn);
        inputs["fn"] = json::function_spec(spec);
        std::optional<NormalSet> restrict;
        if (!set.empty()) {
            auto e = parse_set(set);
            inputs["set"] = to_string(*e);
            restrict = normalize(*e, normalize_options(s));
        }
        std::vector<Integer> xs;
        if (!window.empty()) {
            Window w = parse_window(window);
            inputs["window"] = window_json(w);
            for (Integer x = w.lo; x <= w.hi; ++x) {
                if (!restrict || restrict->contains(x)) xs.push_back(x);
            }
        } else if (auto* smp = std::get_if<Sample>(&spec)) {
            for (const auto& p : *smp) {
                if (!restrict || restrict->contains(p.x)) xs.push_back(p.x);
            }
        } else {
            throw UsageError("--window is required with a non-sample --fn");
        }
        if (xs.empty()) throw DomainError("no sample points: the window misses the set");
        return sample_of(spec, xs, eval_options(s));
    }
};

inline Outcome cmd_interp(const SampleArgs& a, const Settings& s) {
    Outcome o;
    Sample smp = a.load(s, o.inputs);
    auto poly = interpolate(smp);
    bool integral = is_integer(poly);
    o.result = Json{{"interpolant", json::polynomial(poly)}, {"integer", integral}};
    o.text = to_string(poly) + (integral ? ", integer" : ", NOT integer");
    return o;
}

inline Outcome cmd_check(const SampleArgs& a, const Settings& s) {
    Outcome o;
    Sample smp = a.load(s, o.inputs);
    auto v = lip_check(smp);
    o.result = json::verdict(v);
    auto pair = pairwise_divisibility_check(smp);
    o.result["pairwise_divisibility"] =
        pair ? Json::array({json::integer(pair->first), json::integer(pair->second)}) : Json("OK");
    o.text = to_string(v);
    if (pair) o.text += "\npairwise divisibility fails at x = " + pair->first.str() + ", " + pair->second.str();
    return o;
}

inline Outcome cmd_circuit(const SampleArgs& a, const Settings& s) {
    Outcome o;
    Sample smp = a.load(s, o.inputs);
    auto v = lip_check(smp);
    if (auto* bad = std::get_if<Inconsistent>(&v)) {
        o.result = Json{{"status", "Circuit"}, {"circuit", json::circuit(bad->circuit)}};
        o.text = "circuit " + to_string(bad->circuit);
    } else {
        o.result = Json{{"status", "None"}};
        o.text = "no circuit: the sample has an integer interpolant";
    }
    return o;
}

inline Outcome cmd_series(const SampleArgs& a, const std::string& sigma, const Settings& s) {
    Outcome o;
    Sample smp = a.load(s, o.inputs);
    NewtonDecomposition d;
    if (sigma.empty()) {
        d = newton_decompose(smp);
    } else {
        std::vector<Integer> order;
        std::stringstream ss(sigma);
        for (std::string tok; std::getline(ss, tok, ',');) order.push_back(parse_integer(tok));
        Enumeration e(order);
        if (e.size() != smp.size()) throw DomainError("--sigma must list every sample point exactly once");
        std::vector<Integer> values;
        for (const auto& x : order) values.push_back(smp.at(x));
        d = newton_decompose(e, values);
        o.inputs["sigma"] = json::integers(order);
    }
    o.result = json::newton_decomposition(d);
    if (auto* ns = std::get_if<NewtonSeries>(&d)) {
        std::string sig, co;
        for (std::size_t i = 0; i < ns->size(); ++i) {
            sig += (i ? "," : "") + ns->enumeration()[i].str();
            co += (i ? "," : "") + ns->coeffs()[i].str();
        }
        o.text = "integer Newton coefficients along (" + sig + "): " + co;
    } else {
        const auto& f = std::get<NewtonFailure>(d);
        o.text = "non-integer Newton coefficient at index " + std::to_string(f.index) + ": " + to_string(f.value);
    }
    return o;
}

struct ExtendArgs {
    std::string points, a, b, fa, fb, x;
};

inline Outcome cmd_extend(const ExtendArgs& e, const Settings&) {
    Outcome o;
    BranchSetup setup{parse_points(e.points), parse_integer(e.a), parse_integer(e.b), parse_integer(e.fa),
                      parse_integer(e.fb)};
    Integer x = parse_integer(e.x);
    o.inputs = Json{{"points", json::sample(setup.base)}, {"a", json::integer(setup.a)}, {"b", json::integer(setup.b)},
                    {"fa", json::integer(setup.fa)}, {"fb", json::integer(setup.fb)}, {"x", json::integer(x)}};
    auto bc = branch_coefficients(setup);
    Json coeffs{{"alpha", json::integer(bc.alpha)}, {"beta", json::integer(bc.beta)}};
    try {
        auto cls = admissible_extension(setup, x);
        o.result = Json{{"status", "Admissible"},
                        {"branch_coefficients", coeffs},
                        {"class", json::extension_class(cls)},
                        {"min_abs", json::integer(cls.min_abs_representative())}};
        o.text = "admissible values at x = " + x.str() + ": " + to_string(cls) + " (least |y|: " +
                 cls.min_abs_representative().str() + ")";
    } catch (const ObstructedPoint& ob) {
        o.result = json::obstructed(ob);
        o.result["branch_coefficients"] = coeffs;
        o.text = std::string("obstructed: ") + ob.what();
    }
    return o;
}

inline Outcome cmd_example3(const std::string& n_text, const Settings&) {
    Outcome o;
    Integer n = parse_integer(n_text);
    o.inputs["n"] = json::integer(n);
    Sample full = build_example3(n);
    auto v = lip_check(full);
    auto vm = lip_check(full.without(-1)), vp = lip_check(full.without(1));
    o.result = Json{{"sample", json::sample(full)},
                    {"full", json::verdict(v)},
                    {"without_minus_one", json::verdict(vm)},
                    {"without_one", json::verdict(vp)}};
    o.text = "f = " + to_string(full) + "\nfull: " + to_string(v) + "\nwithout -1: " + to_string(vm) +
             "\nwithout 1: " + to_string(vp);
    return o;
}

inline Outcome cmd_sets_intersect(const std::string& a, const std::string& b, const Settings& s) {
    Outcome o;
    auto ea = parse_set(a), eb = parse_set(b);
    o.inputs = Json{{"a", to_string(*ea)}, {"b", to_string(*eb)}};
    auto* pa = std::get_if<Progression>(&ea->node);
    auto* pb = std::get_if<Progression>(&eb->node);
    if (pa && pb) {
        auto r = ap_intersect(*pa, *pb);
        o.result = r ? Json{{"status", "Progression"}, {"progression", json::progression(*r)}} : Json{{"status", "Empty"}};
        o.text = r ? to_string(*r) : "Empty";
        return o;
    }
    NormalSet n = normalize(*set_expr::intersect(ea, eb), normalize_options(s));
    o.result = Json{{"status", "NormalSet"}, {"normal_form", json::normal_set(n)}};
    o.text = to_string(n);
    return o;
}

inline Outcome cmd_sets_normalize(const std::string& set, const Settings& s) {
    Outcome o;
    auto e = parse_set(set);
    o.inputs["set"] = to_string(*e);
    NormalSet n = normalize(*e, normalize_options(s));
    o.result = json::normal_set(n);
    o.text = to_string(n);
    return o;
}

inline Outcome cmd_sets_meets(const std::string& set, const std::string& target, const Settings& s) {
    Outcome o;
    auto e = parse_set(set);
    Progression t = parse_single_progression(target);
    Integer bound = parse_integer(s.primes_bound);
    o.inputs = Json{{"set", to_string(*e)}, {"target", json::progression(t)}};
    auto v = meets_infinitely(normalize(*e, normalize_options(s)), t, bound);
    o.result = json::meet_verdict(v);
    o.text = to_string(v);
    return o;
}

inline Outcome cmd_sets_density(const std::string& set, const Settings& s) {
    Outcome o;
    auto e = parse_set(set);
    o.inputs["set"] = to_string(*e);
    NormalSet n = normalize(*e, normalize_options(s));
    Rational d = density(n);
    o.result = Json{{"density", json::rational(d)}, {"density_one", d == 1}, {"cofinite", is_cofinite(n)}};
    o.text = "density " + to_string(d) + (d == 1 ? " (density one" : "") +
             (is_cofinite(n) ? ", cofinite)" : d == 1 ? ")" : "");
    return o;
}

inline Outcome cmd_sets_kirch(const std::string& a, const std::string& d, const Settings&) {
    Outcome o;
    Integer ai = parse_integer(a), di = parse_integer(d);
    o.inputs = Json{{"a", json::integer(ai)}, {"d", json::integer(di)}};
    bool ok = kirch_basic_check(ai, di);
    o.result = Json{{"basic", ok}, {"gcd", json::integer(gcd(ai, di))}, {"squarefree", is_squarefree(di)}};
    o.text = "ap(" + ai.str() + "," + di.str() + ") is " + (ok ? "" : "not ") + "a basic Kirch open";
    return o;
}

inline Outcome cmd_sets_member(const std::string& set, const std::string& x, const Settings& s) {
    Outcome o;
    auto e = parse_set(set);
    Integer xi = parse_integer(x);
    o.inputs = Json{{"set", to_string(*e)}, {"x", json::integer(xi)}};
    bool in = member(normalize(*e, normalize_options(s)), xi);
    o.result = Json{{"member", in}};
    o.text = xi.str() + (in ? " is in " : " is not in ") + to_string(*e);
    return o;
}

inline Outcome cmd_glue(const std::string& family, const Settings& s) {
    Outcome o;
    GluingFamily fam = json::gluing_family_from(read_json_arg(family));
    o.inputs = json::gluing_family(fam);
    GluingReport r = glue_check(fam, glue_options(s));
    o.result = json::gluing_report(r);
    o.result["implication_violated"] = r.implication_violated();
    std::ostringstream t;
    t << "precondition: " << (r.precondition ? to_string(*r.precondition) : "-") << "\n";
    t << "agreement: " << (r.agreement ? to_string(*r.agreement) : "-") << "\n";
    for (std::size_t i = 0; i < r.piece_verdicts.size(); ++i) {
        t << "piece " << i << ": " << to_string(r.piece_verdicts[i]) << "\n";
    }
    t << "union: " << (r.verdict ? to_string(*r.verdict) : "-");
    o.text = t.str();
    return o;
}

inline Outcome cmd_probe(const std::string& set, const std::string& fn, const std::string& point,
                         const std::string& window, const std::string& bound, const Settings& s) {
    Outcome o;
    auto e = parse_set(set);
    FunctionSpec spec = json::parse_function_spec(fn);
    Integer p = parse_integer(point), b = parse_integer(bound);
    Window w = parse_window(window);
    o.inputs = Json{{"set", to_string(*e)}, {"fn", json::function_spec(spec)}, {"point", json::integer(p)},
                    {"window", window_json(w)}, {"search_bound", json::integer(b)}};
    auto r = locally_lip_probe(*e, spec, p, w, b, glue_options(s));
    if (auto* nb = std::get_if<Neighborhood>(&r)) {
        o.result = Json{{"status", "Found"}, {"a", json::integer(nb->a)}, {"d", json::integer(nb->d)}};
        o.text = "found ap(" + nb->a.str() + "," + nb->d.str() + ")";
    } else {
        o.result = Json{{"status", "Exhausted"}};
        o.text = "exhausted: no basic neighborhood with step <= " + b.str();
    }
    return o;
}

inline Outcome cmd_catalog(const std::string& fn, const std::string& window, const Settings& s) {
    Outcome o;
    if (fn.empty()) {
        Json names = Json::array({"example1", "chain", "tau", "triangular", "halfsquare"});
        o.result = Json{{"catalog", names}};
        o.text = "example1 chain tau triangular halfsquare";
        return o;
    }
    FunctionSpec spec = json::parse_function_spec(fn);
    Window w = parse_window(window.empty() ? "-5..5" : window);
    o.inputs = Json{{"fn", json::function_spec(spec)}, {"window", window_json(w)}};
    Json values = Json::array();
    std::ostringstream t;
    t << catalog_name(spec);
    for (Integer x = w.lo; x <= w.hi; ++x) {
        Json row{{"x", json::integer(x)}};
        try {
            Integer y = evaluate(spec, x, eval_options(s));
            row["y"] = json::integer(y);
            t << "\n" << x << "\t" << y;
        } catch (const DomainError& err) {
            row["y"] = nullptr;
            row["error"] = err.what();
            t << "\n" << x << "\tn/a";
        }
        values.push_back(row);
    }
    o.result = Json{{"name", catalog_name(spec)}, {"values", values}};
    o.text = t.str();
    return o;
}

inline Outcome cmd_report_growth(const std::string& fn, const std::string& window, const Settings& s) {
    Outcome o;
    FunctionSpec spec = json::parse_function_spec(fn);
    Window w = parse_window(window);
    o.inputs = Json{{"fn", json::function_spec(spec)}, {"window", window_json(w)}};
    Json rows = Json::array();
    std::size_t exceed = 0, beyond_bound = 0;
    std::ostringstream t;
    t << "x\tf(x)\tthreshold\tbound\tabove\twithin";
    for (Integer x = w.lo; x <= w.hi; ++x) {
        Integer y = evaluate(spec, x, eval_options(s));
        Json row{{"x", json::integer(x)}, {"value", json::integer(y)}};
        t << "\n" << x << "\t" << y;
        if (x == 0) {
            row["threshold"] = "n/a";
            row["bound"] = "n/a";
            t << "\tn/a\tn/a\t-\t-";
        } else {
            Rational th = factorial_threshold(x);
            Integer bd = alternating_series_bound(x);
            bool above = Rational(abs(y)) > th;
            bool within = abs(y) <= bd;
            exceed += above;
            beyond_bound += !within;
            row["threshold"] = json::rational(th);
            row["bound"] = json::integer(bd);
            row["above_threshold"] = above;
            row["within_bound"] = within;
            t << "\t" << to_string(th) << "\t" << bd << "\t" << (above ? "yes" : "no") << "\t"
              << (within ? "yes" : "no");
        }
        rows.push_back(row);
    }
    bool polynomial = std::holds_alternative<IntPolynomial>(spec);
    o.result = Json{{"rows", rows},
                    {"threshold_exceedances", std::to_string(exceed)},
                    {"bound_violations", std::to_string(beyond_bound)},
                    {"polynomial", polynomial}};
    t << "\nthreshold exceedances: " << exceed << ", bound violations: " << beyond_bound;
    if (polynomial) t << " (polynomial: exceedances can only occur at small |x|)";
    o.text = t.str();
    return o;
}

}  // namespace detail

inline Result run(const std::vector<std::string>& args) {
    using namespace detail;
    CLI::App app{"Exact computations with locally integer polynomial functions", "lip"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_flag("--json", s.json, "print a JSON report");
    app.add_flag("--stable", s.stable, "omit diagnostics from JSON output");
    app.add_option("--cap-terms", s.cap_terms, "series/product term cap")->check(CLI::PositiveNumber);
    app.add_option("--primes-bound", s.primes_bound, "candidates searched for two primes");
    app.add_option("--max-modulus", s.max_modulus, "normal-form modulus cap")->check(CLI::PositiveNumber);
    app.add_flag("--fail-fast", s.fail_fast, "stop gluing at the first failure");

    SampleArgs interp_a, check_a, circuit_a, series_a;
    std::string sigma;
    auto* interp = app.add_subcommand("interp", "interpolate a sample exactly");
    interp_a.attach(interp);
    auto* check = app.add_subcommand("check", "decide LIP-consistency of a sample");
    check_a.attach(check);
    auto* circuit = app.add_subcommand("circuit", "find a minimal non-integer subset");
    circuit_a.attach(circuit);
    auto* series = app.add_subcommand("series", "Newton coefficients along an enumeration");
    series_a.attach(series);
    series->add_option("--sigma", sigma, "enumeration of the sample points, comma separated");

    ExtendArgs ext;
    auto* extend = app.add_subcommand("extend", "admissible values when continuing around two branches");
    extend->add_option("--points", ext.points, "f on X")->required();
    extend->add_option("-a,--a", ext.a, "first branch point")->required();
    extend->add_option("--fa", ext.fa, "value at a")->required();
    extend->add_option("-b,--b", ext.b, "second branch point")->required();
    extend->add_option("--fb", ext.fb, "value at b")->required();
    extend->add_option("-x,--x", ext.x, "new point")->required();

    std::string n3;
    auto* example3 = app.add_subcommand("example3", "the continuation example on odd -1, 1 and the evens");
    example3->add_option("-n,--n", n3, "window radius (>= 2)")->required();

    auto* sets = app.add_subcommand("sets", "set expressions and progressions");
    sets->require_subcommand(1);
    std::string sa, sb, sset, starget, sx, sd;
    auto* s_inter = sets->add_subcommand("intersect", "intersect two sets");
    s_inter->add_option("--a", sa, "set expression")->required();
    s_inter->add_option("--b", sb, "set expression")->required();
    auto* s_norm = sets->add_subcommand("normalize", "residue normal form");
    s_norm->add_option("--set", sset, "set expression")->required();
    auto* s_meets = sets->add_subcommand("meets", "does the set meet a progression infinitely often");
    s_meets->add_option("--set", sset, "set expression")->required();
    s_meets->add_option("--target", starget, "progression ap(a,d) or apz(a,d)")->required();
    auto* s_dens = sets->add_subcommand("density", "natural density");
    s_dens->add_option("--set", sset, "set expression")->required();
    auto* s_kirch = sets->add_subcommand("kirch", "is a + dZ_{>=0} a basic Kirch open");
    s_kirch->add_option("--a", sa, "first term")->required();
    s_kirch->add_option("--d", sd, "step")->required();
    auto* s_member = sets->add_subcommand("member", "membership test");
    s_member->add_option("--set", sset, "set expression")->required();
    s_member->add_option("--x", sx, "integer")->required();

    std::string family;
    auto* glue = app.add_subcommand("glue", "check a gluing family");
    glue->add_option("--family", family, "family JSON, inline or a file path")->required();

    std::string pset, pfn, ppoint, pwindow, pbound = "30";
    auto* probe = app.add_subcommand("probe", "search a basic Kirch neighborhood on which fn is LIP");
    probe->add_option("--set", pset, "carrier set expression")->required();
    probe->add_option("--fn", pfn, "function spec JSON")->required();
    probe->add_option("--point", ppoint, "natural number in the carrier")->required();
    probe->add_option("--window", pwindow, "search window lo..hi")->required();
    probe->add_option("--bound", pbound, "largest step tried");

    std::string cfn, cwindow;
    auto* catalog = app.add_subcommand("catalog", "list or evaluate catalog functions");
    catalog->add_option("--fn", cfn, "function spec JSON (omit to list names)");
    catalog->add_option("--window", cwindow, "window lo..hi, default -5..5");
    std::string gfn, gwindow;
    auto* growth = app.add_subcommand("report-growth", "growth against the factorial bounds");
    growth->add_option("--fn", gfn, "function spec JSON")->required();
    growth->add_option("--window", gwindow, "window lo..hi")->required();

    Result res;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--cap-terms" || a == "--primes-bound" || a == "--max-modulus") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        if (!app.get_subcommand_no_throw(a)) {
            res.err = "error: unknown command '" + a + "'\n\n" + app.help();
            res.code = 1;
            return res;
        }
        break;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string("error: ") + e.what() + "\n\n" + app.help();
        res.code = 1;
        return res;
    }

    std::string command;
    auto started = std::chrono::steady_clock::now();
    try {
        Outcome o;
        if (interp->parsed()) {
            command = "interp", o = cmd_interp(interp_a, s);
        } else if (check->parsed()) {
            command = "check", o = cmd_check(check_a, s);
        } else if (circuit->parsed()) {
            command = "circuit", o = cmd_circuit(circuit_a, s);
        } else if (series->parsed()) {
            command = "series", o = cmd_series(series_a, sigma, s);
        } else if (extend->parsed()) {
            command = "extend", o = cmd_extend(ext, s);
        } else if (example3->parsed()) {
            command = "example3", o = cmd_example3(n3, s);
        } else if (s_inter->parsed()) {
            command = "sets intersect", o = cmd_sets_intersect(sa, sb, s);
        } else if (s_norm->parsed()) {
            command = "sets normalize", o = cmd_sets_normalize(sset, s);
        } else if (s_meets->parsed()) {
            command = "sets meets", o = cmd_sets_meets(sset, starget, s);
        } else if (s_dens->parsed()) {
            command = "sets density", o = cmd_sets_density(sset, s);
        } else if (s_kirch->parsed()) {
            command = "sets kirch", o = cmd_sets_kirch(sa, sd, s);
        } else if (s_member->parsed()) {
            command = "sets member", o = cmd_sets_member(sset, sx, s);
        } else if (glue->parsed()) {
            command = "glue", o = cmd_glue(family, s);
        } else if (probe->parsed()) {
            command = "probe", o = cmd_probe(pset, pfn, ppoint, pwindow, pbound, s);
        } else if (catalog->parsed()) {
            command = "catalog", o = cmd_catalog(cfn, cwindow, s);
        } else {
            command = "report-growth", o = cmd_report_growth(gfn, gwindow, s);
        }
        if (s.json) {
            Json report{{"command", command}, {"inputs", o.inputs}, {"result", o.result}};
            if (!s.stable) {
                auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                                started);
                report["diagnostics"] = Json{{"elapsed_us", std::to_string(us.count())},
                                             {"cap_terms", std::to_string(s.cap_terms)},
                                             {"primes_bound", s.primes_bound},
                                             {"max_modulus", std::to_string(normalize_options(s).max_modulus)}};
            }
            res.out = report.dump(2) + "\n";
        } else {
            res.out = o.text + "\n";
        }
    } catch (const ParseError& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.code = 1;
    } catch (const UsageError& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.code = 1;
    } catch (const Error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.code = 2;
    }
    return res;
}

}  // namespace lip::cli
