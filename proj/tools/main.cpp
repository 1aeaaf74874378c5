#include "posetkit/bounding.hpp"
#include "posetkit/fixpoint.hpp"
#include "posetkit/gen.hpp"
#include "posetkit/io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace posetkit;
using nlohmann::json;

namespace {

// 0 success; 1 a proved property failed or an input's claim was falsified;
// 2 the user handed us something unusable.
int exit_code_for(Errc code) {
    switch (code) {
    case Errc::internal_lemma_violation:
    case Errc::not_inflationary:
    case Errc::cap_exceeded:
    case Errc::invalid_selector:
    case Errc::order_inconsistent: return 1;
    default: return 2;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::usage_error, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> sorted_labels(const Poset& p, const SubsetBits& s) {
    std::vector<std::string> out;
    for (int i : s.elements()) out.push_back(p.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string chain_str(const Poset& p, const SubsetBits& s) {
    std::string out = "{";
    bool first = true;
    for (const std::string& label : sorted_labels(p, s)) {
        if (!first) out += ", ";
        out += label;
        first = false;
    }
    return out + "}";
}

json chain_json(const Poset& p, const SubsetBits& s) { return json(sorted_labels(p, s)); }

json trace_json(const Poset& p, const std::vector<SubsetBits>& trace) {
    json out = json::array();
    for (const SubsetBits& step : trace) out.push_back(chain_json(p, step));
    return out;
}

void print_trace(const Poset& p, const std::vector<SubsetBits>& trace) {
    std::cout << "trace:\n";
    for (const SubsetBits& step : trace) std::cout << "  " << chain_str(p, step) << "\n";
}

const char* strategy_name(SelectStrategy s) {
    switch (s) {
    case SelectStrategy::min_strict_ub: return "min-strict-ub";
    case SelectStrategy::max_strict_ub: return "max-strict-ub";
    case SelectStrategy::seeded_random: return "seeded-random";
    case SelectStrategy::none: return "none";
    }
    return "?";
}

int run_check(const std::string& poset_file, int limit, bool json_out) {
    Poset p = parse_poset(read_file(poset_file));
    std::vector<Selector> selectors = {
        Selector(SelectStrategy::min_strict_ub),
        Selector(SelectStrategy::max_strict_ub),
        Selector(SelectStrategy::seeded_random, 1),
    };
    bool ok = true;
    json checks = json::array();
    std::ostringstream text;
    for (const Selector& f : selectors) {
        Expander g = Expander::from_selector(f);
        auto violation = comparability_check(p, g, limit);
        // union goodness is asserted inside the brute-force construction
        GoodChainReport brute = greatest_good_chain_bruteforce(p, g, limit);
        GoodChainReport iter = greatest_good_chain_iter(p, f);
        bool agree = brute.chain == iter.chain;
        ok = ok && !violation && agree;

        json row;
        row["strategy"] = strategy_name(f.strategy());
        if (f.strategy() == SelectStrategy::seeded_random) row["seed"] = f.seed();
        row["comparable"] = !violation;
        row["union_good"] = true;
        row["iter_equals_brute"] = agree;
        row["ggc"] = chain_json(p, brute.chain);
        checks.push_back(std::move(row));

        text << "strategy " << strategy_name(f.strategy());
        if (f.strategy() == SelectStrategy::seeded_random) text << "(seed=" << f.seed() << ")";
        text << ": ";
        if (violation)
            text << "INCOMPARABLE good chains " << chain_str(p, violation->first) << " and "
                 << chain_str(p, violation->second);
        else if (!agree)
            text << "iterative ggc " << chain_str(p, iter.chain) << " != brute-force "
                 << chain_str(p, brute.chain);
        else
            text << "comparability ok, union good, iter = brute, ggc "
                 << chain_str(p, brute.chain);
        text << "\n";
    }
    if (json_out) {
        json out;
        out["elements"] = p.size();
        out["ok"] = ok;
        out["checks"] = std::move(checks);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "poset: " << p.size() << " elements, valid\n"
                  << text.str() << (ok ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    return ok ? 0 : 1;
}

int run_ggc(const std::string& poset_file, const std::string& selector_file,
            const std::string& method, bool json_out) {
    Poset p = parse_poset(read_file(poset_file));
    Selector f = parse_selector(p, read_file(selector_file));
    GoodChainReport report = method == "brute"
                                 ? greatest_good_chain_bruteforce(p, Expander::from_selector(f))
                                 : greatest_good_chain_iter(p, f);
    if (json_out) {
        json out;
        out["chain"] = chain_json(p, report.chain);
        out["method"] = method;
        out["trace"] = trace_json(p, report.trace);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "method: " << method << "\n"
                  << "ggc: " << chain_str(p, report.chain) << "\n";
        if (!report.trace.empty()) print_trace(p, report.trace);
    }
    return 0;
}

int run_cbc(const std::string& poset_file, const std::string& selector_file, bool json_out) {
    Poset p = parse_poset(read_file(poset_file));
    Selector f = parse_selector(p, read_file(selector_file));
    BoundingWitness w = falsify_bound_assignment(p, f);
    const char* verdict = w.verdict == BoundingVerdict::selector_undefined
                              ? "selector-undefined"
                              : "value-not-strict-bound";
    if (json_out) {
        json out;
        out["chain"] = chain_json(p, w.chain);
        out["verdict"] = verdict;
        if (w.offending) out["offending"] = p.label(*w.offending);
        out["trace"] = trace_json(p, w.trace);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chain: " << chain_str(p, w.chain) << "\n"
                  << "verdict: " << verdict << "\n";
        if (w.offending) std::cout << "offending: " << p.label(*w.offending) << "\n";
        print_trace(p, w.trace);
    }
    return 0;
}

int run_zorn(const std::string& poset_file, const std::string& selector_file, bool json_out) {
    Poset p = parse_poset(read_file(poset_file));
    Selector f = selector_file.empty() ? Selector(SelectStrategy::min_strict_ub)
                                       : parse_selector(p, read_file(selector_file));
    ZornResult res = zorn_maximal(p, f);
    if (json_out) {
        json out;
        out["maximal"] = p.label(res.maximal);
        out["chain"] = chain_json(p, res.chain);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "maximal: " << p.label(res.maximal) << "\n"
                  << "chain: " << chain_str(p, res.chain) << "\n";
    }
    return 0;
}

int run_bw_poset(const std::string& poset_file, const std::string& h_file, long cap,
                 bool json_out) {
    Poset p = parse_poset(read_file(poset_file));
    std::vector<int> h = parse_h_table(p, read_file(h_file));
    FixpointReport<int> rep = bw_fixpoint_finite(p, h, cap);
    bool agree = bw_chain_equals_ggc(p, h);
    if (json_out) {
        json out;
        out["fixpoint"] = p.label(rep.fixpoint);
        out["ggc_equality"] = agree;
        out["iterations"] = rep.iterations;
        json trace = json::array();
        for (int x : rep.trace) trace.push_back(p.label(x));
        out["trace"] = std::move(trace);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "fixpoint: " << p.label(rep.fixpoint) << "\n"
                  << "iterations: " << rep.iterations << "\n"
                  << "trace:\n";
        for (int x : rep.trace) std::cout << "  " << p.label(x) << "\n";
        std::cout << "ggc-equality: " << (agree ? "true" : "false") << "\n";
    }
    return agree ? 0 : 1;
}

int run_bw_dataflow(const std::string& dataflow_file, long cap, bool json_out) {
    DataflowInstance inst = parse_dataflow(read_file(dataflow_file));
    DataflowResult res = reaching_definitions(inst, cap);
    auto def_labels = [&](const SubsetBits& s) {
        std::vector<std::string> out;
        for (int i : s.elements()) out.push_back(inst.defs[static_cast<size_t>(i)]);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto def_str = [&](const SubsetBits& s) {
        std::string out = "{";
        bool first = true;
        for (const std::string& label : def_labels(s)) {
            if (!first) out += ", ";
            out += label;
            first = false;
        }
        return out + "}";
    };
    if (json_out) {
        json nodes = json::array();
        for (size_t i = 0; i < inst.nodes.size(); ++i)
            nodes.push_back(json{{"name", inst.nodes[i].name},
                                 {"in", def_labels(res.in[i])},
                                 {"out", def_labels(res.out[i])}});
        json out;
        out["nodes"] = std::move(nodes);
        std::cout << out.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < inst.nodes.size(); ++i)
            std::cout << "node " << inst.nodes[i].name << ": in " << def_str(res.in[i])
                      << " out " << def_str(res.out[i]) << "\n";
    }
    return 0;
}

int run_gen(int n, double edge_prob, std::uint64_t seed, bool dot) {
    Poset p = random_poset(GenConfig{n, edge_prob, seed});
    std::cout << (dot ? to_dot(p) : write_poset(p) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-poset and fixed-point toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    std::string poset_file, selector_file, h_file, method = "iter", builtin;
    int limit = kExhaustiveLimit;
    long cap = kDefaultFixpointCap;
    int gen_n = 0;
    double gen_prob = 0.0;
    std::uint64_t gen_seed = 0;
    bool gen_dot = false;

    CLI::App* check = app.add_subcommand("check", "validate a poset and run the chain lemmas");
    check->fallthrough();
    check->add_option("poset", poset_file, "poset JSON file")->required();
    check->add_option("--exhaustive-n-limit", limit, "cap for exhaustive enumeration");

    CLI::App* ggc = app.add_subcommand("ggc", "greatest good chain for a selector");
    ggc->fallthrough();
    ggc->add_option("poset", poset_file, "poset JSON file")->required();
    ggc->add_option("selector", selector_file, "selector JSON file")->required();
    ggc->add_option("--method", method, "iter or brute")
        ->check(CLI::IsMember({"iter", "brute"}));

    CLI::App* cbc = app.add_subcommand("cbc", "falsify a strict-upper-bound assignment");
    cbc->fallthrough();
    cbc->add_option("poset", poset_file, "poset JSON file")->required();
    cbc->add_option("selector", selector_file, "selector JSON file")->required();

    CLI::App* zorn = app.add_subcommand("zorn", "maximal element with an explicit witness chain");
    zorn->fallthrough();
    zorn->add_option("poset", poset_file, "poset JSON file")->required();
    zorn->add_option("selector", selector_file, "selector JSON file (default min-strict-ub)");

    CLI::App* bw = app.add_subcommand("bw", "fixpoint iteration from bottom");
    bw->fallthrough();
    bw->add_option("input", poset_file, "poset JSON file (or dataflow file with --builtin rd)")
        ->required();
    bw->add_option("h_table", h_file, "h table JSON file");
    bw->add_option("--builtin", builtin, "built-in lattice: rd (reaching definitions)")
        ->check(CLI::IsMember({"rd"}));
    bw->add_option("--cap", cap, "iteration cap")->check(CLI::PositiveNumber);

    CLI::App* gen = app.add_subcommand("gen", "seeded random poset");
    gen->fallthrough();
    gen->add_option("--n", gen_n, "element count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--edge-prob", gen_prob, "forward-edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_flag("--dot", gen_dot, "emit the Hasse diagram as DOT instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return run_check(poset_file, limit, json_out);
        if (*ggc) return run_ggc(poset_file, selector_file, method, json_out);
        if (*cbc) return run_cbc(poset_file, selector_file, json_out);
        if (*zorn) return run_zorn(poset_file, selector_file, json_out);
        if (*bw) {
            if (!builtin.empty() && !h_file.empty())
                throw Error(Errc::usage_error, "give an h table or --builtin, not both");
            if (builtin.empty() && h_file.empty())
                throw Error(Errc::usage_error, "bw needs an h table file or --builtin rd");
            return builtin.empty() ? run_bw_poset(poset_file, h_file, cap, json_out)
                                   : run_bw_dataflow(poset_file, cap, json_out);
        }
        if (*gen) return run_gen(gen_n, gen_prob, gen_seed, gen_dot);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
