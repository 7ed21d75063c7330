#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumrange/bounds.hpp"
#include "sumrange/explorer.hpp"
#include "sumrange/repro.hpp"
#include "sumrange/textio.hpp"
#include "sumrange/witness.hpp"

namespace {

using namespace sumrange;
using nlohmann::json;

enum class Format { table, json_out, csv };

struct GlobalOpts {
    std::string format = "table";
    bool json_flag = false;
    Int budget = 100'000'000;
    bool force = false;
    int workers = 1;
    std::string cache_dir;
    std::uint64_t seed = 0;

    Format fmt() const {
        if (json_flag || format == "json") return Format::json_out;
        if (format == "csv") return Format::csv;
        return Format::table;
    }
    ExplorerConfig explorer() const { return ExplorerConfig{budget, force, workers}; }
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_json(const std::string& command, const json& inputs, const json& result,
                bool complete) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["complete"] = complete;
    doc["version"] = std::string(kVersion);
    std::cout << doc.dump(2) << "\n";
}

std::string big_str(const BigInt& v) { return v.str(); }

// --- sumset -----------------------------------------------------------------

void cmd_sumset(const GlobalOpts& g, const std::string& set_text, Int h, bool restricted,
                const std::string& group_text) {
    json inputs{{"set", set_text}, {"h", h}, {"restricted", restricted}};
    std::string rendered;
    Int size = 0;
    if (!group_text.empty()) {
        const GroupSpec spec = parse_group_spec(group_text);
        inputs["group"] = to_string(spec);
        const GroupSet a = parse_group_set(set_text, spec);
        const GroupSet r = restricted ? restricted_sumset(a, h) : sumset(a, h);
        rendered = to_string(r);
        size = r.size();
    } else {
        const IntSet a = parse_int_set(set_text);
        const IntSet r = restricted ? restricted_sumset(a, h) : sumset(a, h);
        rendered = to_string(r);
        size = r.size();
    }
    switch (g.fmt()) {
        case Format::table:
            std::cout << rendered << "\n" << "size: " << size << "\n";
            break;
        case Format::json_out:
            print_json("sumset", inputs, json{{"set", rendered}, {"size", size}}, true);
            break;
        case Format::csv:
            std::cout << "set,size\n" << csv_quote(rendered) << "," << size << "\n";
            break;
    }
}

// --- bounds -----------------------------------------------------------------

void cmd_bounds(const GlobalOpts& g, Int h, Int k) {
    const BoundsReport r = bounds_report(h, k);
    const std::string none = "-";
    auto opt_str = [&](const std::optional<BigInt>& v) { return v ? big_str(*v) : none; };
    switch (g.fmt()) {
        case Format::table:
            std::cout << "h = " << h << ", k = " << k << "\n"
                      << "  min plain size, ordered groups   " << big_str(r.min_sumset_ordered)
                      << "\n"
                      << "  max plain size                   " << big_str(r.max_sumset) << "\n"
                      << "  min plain size, general groups   " << big_str(r.min_sumset_general)
                      << "\n"
                      << "  max restricted size              " << big_str(r.max_restricted) << "\n"
                      << "  min restricted size, ordered     " << opt_str(r.min_restricted_ordered)
                      << (r.min_restricted_ordered ? "" : "  (restricted sums need h <= k)")
                      << "\n"
                      << "  min restricted size, general     " << opt_str(r.min_restricted_general)
                      << (r.min_restricted_general ? "" : "  (defined for h <= k-1)") << "\n";
            break;
        case Format::json_out: {
            json res{{"min_sumset_ordered", big_str(r.min_sumset_ordered)},
                     {"max_sumset", big_str(r.max_sumset)},
                     {"min_sumset_general", big_str(r.min_sumset_general)},
                     {"max_restricted", big_str(r.max_restricted)}};
            res["min_restricted_ordered"] =
                r.min_restricted_ordered ? json(big_str(*r.min_restricted_ordered)) : json();
            res["min_restricted_general"] =
                r.min_restricted_general ? json(big_str(*r.min_restricted_general)) : json();
            print_json("bounds", json{{"h", h}, {"k", k}}, res, true);
            break;
        }
        case Format::csv:
            std::cout << "field,value\n"
                      << "min_sumset_ordered," << big_str(r.min_sumset_ordered) << "\n"
                      << "max_sumset," << big_str(r.max_sumset) << "\n"
                      << "min_sumset_general," << big_str(r.min_sumset_general) << "\n"
                      << "max_restricted," << big_str(r.max_restricted) << "\n"
                      << "min_restricted_ordered," << opt_str(r.min_restricted_ordered) << "\n"
                      << "min_restricted_general," << opt_str(r.min_restricted_general) << "\n";
            break;
    }
}

// --- range ------------------------------------------------------------------

Int group_default_bound(const GroupSpec& spec, Int k, const ExplorerConfig& cfg) {
    if (spec.free_rank() == 0) return 0;  // whole torsion part is the universe
    const Int m = spec.torsion_rank() == 1 ? spec.torsion_moduli()[0] : 1;
    Int lo = std::max<Int>(0, (k + m - 1) / m - 1);
    Int hi = std::max(lo, k >= 63 ? std::numeric_limits<Int>::max() / 2 : (Int{1} << k) - 1);
    while (lo < hi) {
        const Int mid = lo + (hi - lo + 1) / 2;
        const Int universe = checked_mul(m, checked_add(mid, 1));
        if (canonical_candidate_count(k, universe - 1) <= cfg.budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

void print_size_range_table(const SizeRange& r) {
    std::cout << (r.restricted ? "restricted " : "") << "range of " << r.h << "-fold sizes, k = "
              << r.k << ", over " << (r.group ? to_string(*r.group) : std::string("z"));
    if (!r.group || r.group->free_rank() == 1)
        std::cout << ", sets within [0," << r.search_bound << "]";
    std::cout << (r.complete ? " (exhaustive)" : " (TRUNCATED scan; partial data)") << "\n";
    std::cout << "sizes: " << render_size_runs(r.sizes) << "\n";
    for (const auto& [size, wit] : r.witnesses) {
        std::cout << "  " << size << "  "
                  << (std::holds_alternative<IntSet>(wit) ? to_string(std::get<IntSet>(wit))
                                                          : to_string(std::get<GroupSet>(wit)))
                  << "\n";
    }
}

void cmd_range(const GlobalOpts& g, Int h, Int k, bool restricted, const std::string& group_text,
               Int max_element, bool has_max_element, bool joint) {
    const ExplorerConfig cfg = g.explorer();
    std::optional<GroupSpec> group;
    if (!group_text.empty()) {
        GroupSpec spec = parse_group_spec(group_text);
        if (!(spec.torsion_rank() == 0 && spec.free_rank() == 1)) group = std::move(spec);
    }
    const Int n = has_max_element
                      ? max_element
                      : (group ? group_default_bound(*group, k, cfg) : default_search_bound(k, cfg));

    if (joint) {
        if (group) throw std::domain_error("--joint is only available over the integers");
        const SizePairSet pairs = enumerate_size_pairs(h, k, n, cfg);
        switch (g.fmt()) {
            case Format::table:
                std::cout << "joint (plain, restricted) " << h << "-fold sizes, k = " << k
                          << ", sets within [0," << n << "]"
                          << (pairs.complete ? " (exhaustive)" : " (TRUNCATED scan)") << "\n";
                for (const auto& [a, b] : pairs.pairs)
                    std::cout << "  (" << a << ", " << b << ")\n";
                break;
            case Format::json_out: {
                json res = json::array();
                for (const auto& [a, b] : pairs.pairs) res.push_back(json::array({a, b}));
                print_json("range",
                           json{{"h", h}, {"k", k}, {"joint", true}, {"search_bound", n}},
                           json{{"pairs", res}}, pairs.complete);
                break;
            }
            case Format::csv:
                std::cout << "plain,restricted\n";
                for (const auto& [a, b] : pairs.pairs) std::cout << a << "," << b << "\n";
                break;
        }
        return;
    }

    SizeRange r;
    bool from_cache = false;
    if (!g.cache_dir.empty()) {
        if (auto hit = cache_load(g.cache_dir, h, k, restricted, group, n)) {
            r = std::move(*hit);
            from_cache = true;
        }
    }
    if (!from_cache) {
        r = enumerate_range(h, k, n, restricted, group, cfg);
        if (!g.cache_dir.empty()) cache_store(g.cache_dir, r);
    }

    switch (g.fmt()) {
        case Format::table:
            print_size_range_table(r);
            if (from_cache) std::cout << "(from cache, one witness per size revalidated)\n";
            break;
        case Format::json_out: {
            json wits = json::object();
            for (const auto& [size, wit] : r.witnesses)
                wits[std::to_string(size)] = std::holds_alternative<IntSet>(wit)
                                                 ? to_string(std::get<IntSet>(wit))
                                                 : to_string(std::get<GroupSet>(wit));
            json inputs{{"h", h},
                        {"k", k},
                        {"restricted", restricted},
                        {"group", r.group ? to_string(*r.group) : "z"},
                        {"search_bound", n}};
            print_json("range", inputs, json{{"sizes", r.sizes}, {"witnesses", wits}}, r.complete);
            break;
        }
        case Format::csv:
            std::cout << "size,witness\n";
            for (const auto& [size, wit] : r.witnesses)
                std::cout << size << ","
                          << csv_quote(std::holds_alternative<IntSet>(wit)
                                           ? to_string(std::get<IntSet>(wit))
                                           : to_string(std::get<GroupSet>(wit)))
                          << "\n";
            break;
    }
}

// --- witness ------------------------------------------------------------------

void print_witness(const GlobalOpts& g, const std::string& command, const json& inputs,
                   const Witness& w) {
    const std::string rendered =
        w.holds_int_set() ? to_string(w.int_set()) : to_string(w.group_set());
    switch (g.fmt()) {
        case Format::table:
            std::cout << "witness (" << to_string(w.kind) << "): " << rendered << "\n";
            if (!w.holds_int_set()) std::cout << "group: " << to_string(w.group_set().spec()) << "\n";
            std::cout << "h = " << w.h << (w.restricted ? " (restricted)" : "")
                      << ", size = " << w.claimed_size << ", verified\n";
            break;
        case Format::json_out: {
            json res{{"kind", std::string(to_string(w.kind))},
                     {"set", rendered},
                     {"h", w.h},
                     {"restricted", w.restricted},
                     {"claimed_size", w.claimed_size},
                     {"verified", w.verify()}};
            if (!w.holds_int_set()) res["group"] = to_string(w.group_set().spec());
            print_json(command, inputs, res, true);
            break;
        }
        case Format::csv:
            std::cout << "kind,set,h,restricted,claimed_size\n"
                      << to_string(w.kind) << "," << csv_quote(rendered) << "," << w.h << ","
                      << (w.restricted ? "true" : "false") << "," << w.claimed_size << "\n";
            break;
    }
}

// --- trajectory ----------------------------------------------------------------

std::string tuple_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void cmd_trajectory(const GlobalOpts& g, const std::string& set_text, Int len) {
    const IntSet a = parse_int_set(set_text);
    const Trajectory t = trajectory(a, len);
    switch (g.fmt()) {
        case Format::table:
            std::cout << tuple_str(t.values) << "\n";
            if (t.eventual_difference)
                std::cout << "trailing common difference: " << *t.eventual_difference << "\n";
            break;
        case Format::json_out: {
            json res{{"values", t.values}};
            res["eventual_difference"] =
                t.eventual_difference ? json(*t.eventual_difference) : json();
            print_json("trajectory", json{{"set", set_text}, {"len", len}}, res, true);
            break;
        }
        case Format::csv: {
            std::cout << "h,size\n";
            for (std::size_t i = 0; i < t.values.size(); ++i)
                std::cout << (i + 1) << "," << t.values[i] << "\n";
            break;
        }
    }
}

void print_trajectory_set(const GlobalOpts& g, const std::string& command, const json& inputs,
                          const TrajectorySet& ts) {
    switch (g.fmt()) {
        case Format::table:
            std::cout << ts.trajectories.size() << " trajectories, sets within [0,"
                      << ts.search_bound << "]"
                      << (ts.complete ? " (exhaustive)" : " (TRUNCATED scan)") << "\n";
            for (const auto& v : ts.trajectories) std::cout << "  " << tuple_str(v) << "\n";
            break;
        case Format::json_out: {
            json arr = json::array();
            for (const auto& v : ts.trajectories) arr.push_back(v);
            print_json(command, inputs, json{{"trajectories", arr}}, ts.complete);
            break;
        }
        case Format::csv:
            std::cout << "trajectory\n";
            for (const auto& v : ts.trajectories) std::cout << csv_quote(tuple_str(v)) << "\n";
            break;
    }
}

// --- verify ----------------------------------------------------------------------

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
    std::cout << "suite " << suite << "\n";
    const bool ok = repro::run_suite(suite, std::cout, g.seed);
    std::cout << (ok ? "PASS" : "FAIL") << " " << suite << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for h-fold sumset and restricted-sumset size ranges"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_flag("--json", g.json_flag, "shortcut for --format json");
    app.add_option("--budget", g.budget, "candidate budget per enumeration scan")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", g.force,
                 "run over-budget scans truncated at the budget instead of refusing");
    app.add_option("--workers", g.workers, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir,
                   "result cache directory (default: $SUMRANGE_CACHE_DIR)");
    app.add_option("--seed", g.seed, "seed for randomized verification suites");

    int exit_code = 0;

    // sumset
    std::string su_set, su_group;
    Int su_h = 0;
    bool su_restricted = false;
    auto* su = app.add_subcommand("sumset", "compute an h-fold (restricted) sumset");
    su->add_option("set", su_set, "set literal, e.g. {0,1,4} or {(0,0),(1,1)}")->required();
    su->add_option("h", su_h, "fold count")->required();
    su->add_flag("--restricted", su_restricted, "sums of h pairwise distinct elements");
    su->add_option("--group", su_group, "group spec: z, z/M, z/M + z");
    su->callback([&] { cmd_sumset(g, su_set, su_h, su_restricted, su_group); });

    // bounds
    Int bo_h = 0, bo_k = 0;
    auto* bo = app.add_subcommand("bounds", "closed-form extremal sizes for (h, k)");
    bo->add_option("h", bo_h)->required();
    bo->add_option("k", bo_k)->required();
    bo->callback([&] { cmd_bounds(g, bo_h, bo_k); });

    // range
    Int ra_h = 0, ra_k = 0, ra_n = 0;
    bool ra_restricted = false, ra_joint = false;
    std::string ra_group;
    auto* ra = app.add_subcommand("range", "enumerate the achieved-size set exhaustively");
    ra->add_option("h", ra_h)->required();
    ra->add_option("k", ra_k)->required();
    ra->add_flag("--restricted", ra_restricted);
    ra->add_option("--group", ra_group, "group spec: z, z/M, z/M + z");
    auto* ra_n_opt = ra->add_option("--max-element", ra_n,
                                    "search bound N (free-coordinate bound for groups); "
                                    "default: 2^k-1 capped by the budget");
    ra->add_flag("--joint", ra_joint, "experimental: distinct (plain, restricted) size pairs");
    ra->callback(
        [&] { cmd_range(g, ra_h, ra_k, ra_restricted, ra_group, ra_n, ra_n_opt->count() > 0,
                        ra_joint); });

    // witness
    auto* wi = app.add_subcommand("witness", "construct a verified witness set");
    wi->require_subcommand(1);
    Int w_k = 0, w_t = 0, w_h = 0, w_b = 0;
    bool w_restricted = false;
    std::string w_which, w_family;

    auto* w2 = wi->add_subcommand("sum2", "k-element set with 2-fold size t");
    w2->add_option("k", w_k)->required();
    w2->add_option("t", w_t)->required();
    w2->callback([&] {
        print_witness(g, "witness.sum2", json{{"k", w_k}, {"t", w_t}}, witness_sumset_2(w_k, w_t));
    });

    auto* w2r = wi->add_subcommand("restricted2", "k-element set with restricted 2-fold size t");
    w2r->add_option("k", w_k)->required();
    w2r->add_option("t", w_t)->required();
    w2r->callback([&] {
        print_witness(g, "witness.restricted2", json{{"k", w_k}, {"t", w_t}},
                      witness_restricted_2(w_k, w_t));
    });

    auto* wh3 = wi->add_subcommand("h3", "3-element set with h-fold size t");
    wh3->add_option("h", w_h)->required();
    wh3->add_option("t", w_t)->required();
    wh3->callback([&] {
        print_witness(g, "witness.h3", json{{"h", w_h}, {"t", w_t}}, witness_h3(w_h, w_t));
    });

    auto* wex = wi->add_subcommand("extremes", "minimum (AP) or maximum (powers) witness");
    wex->add_option("h", w_h)->required();
    wex->add_option("k", w_k)->required();
    wex->add_option("which", w_which)->required()->check(CLI::IsMember({"min", "max"}));
    wex->add_flag("--restricted", w_restricted);
    wex->callback([&] {
        const Extreme which = w_which == "min" ? Extreme::minimum : Extreme::maximum;
        print_witness(g, "witness.extremes",
                      json{{"h", w_h}, {"k", w_k}, {"which", w_which}, {"restricted", w_restricted}},
                      witness_extremes(w_h, w_k, which, w_restricted));
    });

    auto* wfa = wi->add_subcommand("family", "literal three-fold family member");
    wfa->add_option("name", w_family, "P1, P2, Q1, Q2, Q3, Q4 or Q5")->required();
    wfa->add_option("b", w_b)->required();
    wfa->callback([&] {
        const auto fam = family_from_string(w_family);
        if (!fam) throw std::domain_error("unknown family '" + w_family + "'");
        const IntSet a = family_member(*fam, w_b);
        const Int size = sumset_size(a, 3);
        switch (g.fmt()) {
            case Format::table:
                std::cout << to_string(a) << "\n" << "3-fold size: " << size << "\n";
                break;
            case Format::json_out:
                print_json("witness.family", json{{"name", w_family}, {"b", w_b}},
                           json{{"set", to_string(a)}, {"threefold_size", size}}, true);
                break;
            case Format::csv:
                std::cout << "set,threefold_size\n"
                          << csv_quote(to_string(a)) << "," << size << "\n";
                break;
        }
    });

    auto* wgc = wi->add_subcommand("counterexample",
                                   "group set beating the integer minimum (size hk-h or hk-h^2)");
    wgc->add_option("h", w_h)->required();
    wgc->add_option("k", w_k)->required();
    wgc->add_flag("--restricted", w_restricted);
    wgc->callback([&] {
        print_witness(g, "witness.counterexample",
                      json{{"h", w_h}, {"k", w_k}, {"restricted", w_restricted}},
                      group_counterexample(w_h, w_k, w_restricted));
    });

    // trajectory
    std::string tr_set;
    Int tr_len = 0;
    auto* tr = app.add_subcommand("trajectory", "sequence |1A|, |2A|, ..., |len A|");
    tr->add_option("set", tr_set)->required();
    tr->add_option("len", tr_len)->required();
    tr->callback([&] { cmd_trajectory(g, tr_set, tr_len); });

    // trajectories
    Int ts_len = 0, ts_k = 0, ts_n = 0;
    auto* ts = app.add_subcommand("trajectories", "distinct size trajectories of k-sets");
    ts->add_option("len", ts_len)->required();
    ts->add_option("k", ts_k)->required();
    auto* ts_n_opt = ts->add_option("--max-element", ts_n);
    ts->callback([&] {
        const ExplorerConfig cfg = g.explorer();
        const Int n = ts_n_opt->count() ? ts_n : default_search_bound(ts_k, cfg);
        print_trajectory_set(g, "trajectories",
                             json{{"len", ts_len}, {"k", ts_k}, {"search_bound", n}},
                             enumerate_trajectories(ts_len, ts_k, n, cfg));
    });

    // filter-trajectories
    std::vector<std::string> fl_constraints;
    Int fl_len = 0, fl_n = 0;
    auto* fl = app.add_subcommand("filter-trajectories",
                                  "trajectories matching |h_i A| = v_i constraints");
    fl->add_option("constraints", fl_constraints, "pairs h:v, e.g. 1:3 3:9")->required();
    fl->add_option("--length", fl_len, "trajectory length")->required();
    auto* fl_n_opt = fl->add_option("--max-element", fl_n);
    fl->callback([&] {
        std::vector<TrajectoryConstraint> cons;
        for (const auto& s : fl_constraints) {
            const auto colon = s.find(':');
            if (colon == std::string::npos)
                throw std::domain_error("constraint '" + s + "' is not of the form h:v");
            TrajectoryConstraint tc;
            tc.h = std::stoll(s.substr(0, colon));
            tc.value = std::stoll(s.substr(colon + 1));
            cons.push_back(tc);
        }
        const ExplorerConfig cfg = g.explorer();
        Int n = fl_n;
        if (!fl_n_opt->count()) {
            const Int kmax = cons.empty() ? 1
                             : cons[0].h == 1 ? cons[0].value
                                              : (cons[0].value - 1) / cons[0].h + 1;
            n = default_search_bound(std::max<Int>(1, kmax), cfg);
        }
        json inputs{{"constraints", fl_constraints}, {"length", fl_len}, {"search_bound", n}};
        print_trajectory_set(g, "filter-trajectories", inputs,
                             filter_trajectories(cons, fl_len, n, cfg));
    });

    // empirical-n
    Int en_h = 0, en_k = 0, en_nmax = 0;
    bool en_restricted = false;
    auto* en = app.add_subcommand(
        "empirical-n", "least N <= n-max realizing the same sizes as n-max (not certified)");
    en->add_option("h", en_h)->required();
    en->add_option("k", en_k)->required();
    en->add_option("n-max", en_nmax)->required();
    en->add_flag("--restricted", en_restricted);
    en->callback([&] {
        const auto r = empirical_search_bound(en_h, en_k, en_nmax, en_restricted, g.explorer());
        switch (g.fmt()) {
            case Format::table:
                if (r)
                    std::cout << *r << "\n";
                else
                    std::cout << "indeterminate (baseline scan truncated)\n";
                break;
            case Format::json_out:
                print_json("empirical-n",
                           json{{"h", en_h},
                                {"k", en_k},
                                {"n_max", en_nmax},
                                {"restricted", en_restricted}},
                           json{{"least_bound", r ? json(*r) : json()}}, r.has_value());
                break;
            case Format::csv:
                std::cout << "least_bound\n" << (r ? std::to_string(*r) : "-") << "\n";
                break;
        }
    });

    // verify
    std::string ve_suite;
    auto* ve = app.add_subcommand("verify", "run a named reproduction suite");
    ve->add_option("suite", ve_suite, "thm41, thm42, families, h3-table, missing, rsharp33, "
                                      "counterexamples, coset-lemma, properties")
        ->required();
    ve->callback([&] { exit_code = cmd_verify(g, ve_suite); });

    if (g.cache_dir.empty()) {
        if (const char* env = std::getenv("SUMRANGE_CACHE_DIR")) g.cache_dir = env;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what()
                  << "; raise --budget or pass --force to accept a truncated scan\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
