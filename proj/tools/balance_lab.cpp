// balance_lab: one binary for every library operation.
// Exit codes: 0 success, 3 legitimate "none / claim failed", 2 usage error,
// 1 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "balance/balanced_search.hpp"
#include "balance/coloring.hpp"
#include "balance/constructions.hpp"
#include "balance/extremal.hpp"
#include "balance/formulas.hpp"
#include "balance/graph.hpp"
#include "balance/oracles.hpp"
#include "balance/proof_engines.hpp"

namespace {

using balance::SmallGraph;
using nlohmann::json;

constexpr int kExitNone = 3;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SmallGraph target_from_token(const std::string& token) {
    if (auto named = balance::parse_named_token(token)) return balance::make_named(*named);
    try {
        return balance::from_graph6(token);
    } catch (const std::invalid_argument&) {
        throw UsageError("target is neither a named token nor graph6: " + token);
    }
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

balance::ListColoring load_coloring(const std::string& path) {
    try {
        return balance::coloring_from_json(read_text(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad coloring JSON: ") + e.what());
    }
}

balance::BalancedWitness witness_from_json(const std::string& text) {
    const json doc = json::parse(text);
    balance::BalancedWitness w;
    w.mapping = doc.at("mapping").get<std::vector<int>>();
    for (const auto& e : doc.at("edges"))
        w.edges.emplace_back(e.at("u").get<int>(), e.at("v").get<int>(),
                             e.at("color").get<std::string>().at(0));
    return w;
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& given, json& header) {
    if (given) {
        header["seed"] = *given;
        return *given;
    }
    std::random_device rd;
    std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    header["seed"] = s;
    header["seed_auto_generated"] = true;
    return s;
}

json oracle_to_json(const balance::OracleResult& r) {
    json doc;
    doc["value"] = r.value;
    doc["colorings_examined"] = r.colorings_examined;
    if (r.witness_coloring)
        doc["witness_coloring"] = json::parse(balance::coloring_to_json(*r.witness_coloring));
    else
        doc["witness_coloring"] = nullptr;
    return doc;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"balanced-copy laboratory for 2-list edge colorings of K_n"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = balance::workers_from_env();
    app.add_option("--workers", workers, "worker threads (default: BALANCE_LAB_WORKERS or 1)");

    std::string target, coloring_path, family, claim, witness_path, rb_spec, orders_spec;
    int n = 0, k = 1, a = 1, t = 1, alpha = 1, trials = 1;
    long exval = 0;
    double eps = 0.5;
    std::optional<std::uint64_t> seed;
    bool deterministic = false;

    auto* named_cmd = app.add_subcommand("named", "emit a named graph as graph6");
    named_cmd->add_option("--target", target)->required();

    auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length of a graph");
    girth_cmd->add_option("--target", target)->required();

    auto* half_cmd = app.add_subcommand("half-family", "graphs on half the target's edges");
    half_cmd->add_option("--target", target)->required();

    auto* ex_cmd = app.add_subcommand("ex", "exact Turan number for a forbidden family");
    ex_cmd->add_option("--n", n)->required();
    ex_cmd->add_option("--family", family, "c3c4c5 | half:<target> | lf:<total>")->required();

    auto* find_cmd = app.add_subcommand("find-balanced", "search a coloring for a balanced copy");
    find_cmd->add_option("--coloring", coloring_path)->required();
    find_cmd->add_option("--target", target)->required();
    find_cmd->add_flag("--deterministic", deterministic, "force a single worker");

    auto* bal_cmd = app.add_subcommand("bal-exact", "exact balancing number, strict colorings");
    bal_cmd->add_option("--n", n)->required();
    bal_cmd->add_option("--target", target)->required();

    auto* lbal_cmd = app.add_subcommand("lbal-exact", "exact balancing number, list colorings");
    lbal_cmd->add_option("--n", n)->required();
    lbal_cmd->add_option("--target", target)->required();

    auto* construct = app.add_subcommand("construct", "emit an extremal coloring as JSON");
    auto* c_split = construct->add_subcommand("split", "split coloring with no balanced C_{4k}");
    c_split->add_option("--n", n)->required();
    c_split->add_option("--k", k)->required();
    auto* c_clique = construct->add_subcommand("clique-split", "red clique on the first a vertices");
    c_clique->add_option("--n", n)->required();
    c_clique->add_option("--a", a)->required();
    auto* c_typeb = construct->add_subcommand("typeb", "two red cliques joined in blue");
    c_typeb->add_option("--n", n)->required();
    c_typeb->add_option("--t", t)->required();
    c_typeb->add_option("--rb", rb_spec, "bicolored pairs u,v;u,v;...");
    auto* c_k5 = construct->add_subcommand("k5", "K5 lower-bound coloring");
    c_k5->add_option("--n", n)->required();
    c_k5->add_option("--eps", eps)->required();
    c_k5->add_option("--seed", seed);
    auto* c_single = construct->add_subcommand("single-edge", "one red edge, rest blue");
    c_single->add_option("--n", n)->required();
    construct->require_subcommand(1);

    auto* engine = app.add_subcommand("engine", "constructive balanced-cycle finders");
    auto* e_odd = engine->add_subcommand("odd", "balanced C_{4k+alpha} by closing a path");
    e_odd->add_option("--coloring", coloring_path)->required();
    e_odd->add_option("--k", k)->required();
    e_odd->add_option("--alpha", alpha)->check(CLI::IsMember({1, -1}))->required();
    auto* e_c4k = engine->add_subcommand("c4k", "balanced C_{4k} by cycle extension");
    e_c4k->add_option("--coloring", coloring_path)->required();
    e_c4k->add_option("--k", k)->required();
    auto* e_c4k2 = engine->add_subcommand("c4k2", "balanced C_{4k+2} by pattern cases");
    e_c4k2->add_option("--coloring", coloring_path)->required();
    e_c4k2->add_option("--k", k)->required();
    engine->require_subcommand(1);

    auto* formula = app.add_subcommand("formula", "closed-form bounds, exact rationals");
    auto* f_balodd = formula->add_subcommand("bal-odd", "balancing number of an odd cycle");
    f_balodd->add_option("--n", n)->required();
    f_balodd->add_option("--k", k)->required();
    f_balodd->add_option("--alpha", alpha)->check(CLI::IsMember({1, -1}))->required();
    auto* f_c4k = formula->add_subcommand("c4k", "window for the even cycle C_{4k}");
    f_c4k->add_option("--n", n)->required();
    f_c4k->add_option("--k", k)->required();
    auto* f_lf = formula->add_subcommand("lf-ex", "extremal number of a linear forest");
    f_lf->add_option("--n", n)->required();
    f_lf->add_option("--orders", orders_spec, "component orders, e.g. 3+1+1")->required();
    auto* f_k5 = formula->add_subcommand("k5", "window for lbal(n, K5)");
    f_k5->add_option("--n", n)->required();
    f_k5->add_option("--eps", eps)->required();
    auto* f_struct = formula->add_subcommand("structural", "list upper bound from a Turan number");
    f_struct->add_option("--n", n)->required();
    f_struct->add_option("--ex", exval)->required();
    formula->require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "seeded property check of a claim");
    verify_cmd->add_option("--claim", claim)->required();
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);

    auto* dot_cmd = app.add_subcommand("export-dot", "render a coloring (and witness) as DOT");
    dot_cmd->add_option("--coloring", coloring_path)->required();
    dot_cmd->add_option("--witness", witness_path);

    CLI11_PARSE(app, argc, argv);
    const balance::SearchOptions opts{std::max(1, workers)};

    if (*named_cmd) {
        std::cout << balance::to_graph6(target_from_token(target)) << "\n";
        return 0;
    }
    if (*girth_cmd) {
        const auto g = balance::girth(target_from_token(target));
        if (!g) {
            std::cout << "none\n";
            return kExitNone;
        }
        std::cout << *g << "\n";
        return 0;
    }
    if (*half_cmd) {
        const auto fam = balance::half_family(target_from_token(target));
        for (const auto& g : fam.members) std::cout << balance::to_graph6(g) << "\n";
        return 0;
    }
    if (*ex_cmd) {
        balance::FamilySpec fam;
        if (family == "c3c4c5") {
            fam = balance::c3c4c5();
        } else if (family.rfind("half:", 0) == 0) {
            fam = balance::half_family(target_from_token(family.substr(5)));
        } else if (family.rfind("lf:", 0) == 0) {
            fam = balance::linear_forest_family(std::stoi(family.substr(3)));
        } else {
            throw UsageError("unknown family: " + family);
        }
        std::cout << balance::ex_exact(n, fam) << "\n";
        return 0;
    }
    if (*find_cmd) {
        const auto c = load_coloring(coloring_path);
        const auto g = target_from_token(target);
        const auto w = balance::find_balanced_copy(c, g, deterministic ? balance::SearchOptions{1} : opts);
        if (!w) return kExitNone;
        std::cout << balance::witness_to_json(*w) << "\n";
        return 0;
    }
    if (*bal_cmd || *lbal_cmd) {
        const auto g = target_from_token(target);
        const auto r = *bal_cmd ? balance::bal_exact(n, g, opts) : balance::lbal_exact(n, g, opts);
        std::cout << oracle_to_json(r).dump() << "\n";
        return 0;
    }
    if (*construct) {
        if (*c_split) {
            std::cout << balance::coloring_to_json(balance::split_coloring_c4k(n, k)) << "\n";
        } else if (*c_clique) {
            std::cout << balance::coloring_to_json(balance::clique_split_coloring(n, a)) << "\n";
        } else if (*c_typeb) {
            std::vector<std::pair<int, int>> rb;
            std::stringstream ss(rb_spec);
            std::string part;
            while (std::getline(ss, part, ';')) {
                const auto comma = part.find(',');
                if (comma == std::string::npos) throw UsageError("bad --rb pair: " + part);
                rb.emplace_back(std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1)));
            }
            std::cout << balance::coloring_to_json(balance::type_b_coloring(n, t, rb)) << "\n";
        } else if (*c_k5) {
            json header;
            const auto s = pick_seed(seed, header);
            const auto kc = balance::k5_coloring(n, eps, s);
            header["achieved_m"] = kc.achieved_m;
            header["target_m"] = kc.params.m;
            header["k"] = kc.params.k;
            header["k_prime"] = kc.params.k_prime;
            std::cerr << header.dump() << "\n";
            std::cout << balance::coloring_to_json(kc.coloring) << "\n";
        } else {
            std::cout << balance::coloring_to_json(balance::single_edge_coloring(n)) << "\n";
        }
        return 0;
    }
    if (*engine) {
        const auto c = load_coloring(coloring_path);
        json out;
        std::optional<balance::BalancedWitness> w;
        if (*e_odd) {
            const int len = 4 * k + alpha;
            const auto path = balance::make_named({balance::NamedGraph::Kind::Path, len, {}});
            auto p = balance::find_balanced_copy(c, path, opts);
            if (p && p->red_count() == p->blue_count()) {
                w = balance::odd_cycle_from_path(c, *p);
                out["case"] = "path-closure";
            } else {
                const auto cyc = balance::make_named({balance::NamedGraph::Kind::Cycle, len, {}});
                w = balance::find_balanced_copy(c, cyc, opts);
                out["case"] = w ? "fallback" : "none";
            }
        } else {
            const auto res = *e_c4k ? balance::find_balanced_c4k(c, k, opts)
                                    : balance::find_balanced_c4k2(c, k, opts);
            w = res.witness;
            out["case"] = res.case_label;
        }
        out["witness"] = w ? json::parse(balance::witness_to_json(*w)) : json(nullptr);
        std::cout << out.dump() << "\n";
        return w ? 0 : kExitNone;
    }
    if (*formula) {
        if (*f_balodd) {
            std::cout << balance::bal_odd_cycle(n, k, alpha).str() << "\n";
            std::cerr << "threshold_ok=" << (balance::odd_cycle_threshold_ok(n, k) ? "yes" : "no")
                      << "\n";
        } else if (*f_c4k) {
            const auto [lo, hi] = balance::c4k_bounds(n, k);
            std::cout << lo << " " << hi << "\n";
        } else if (*f_lf) {
            std::vector<long long> orders;
            std::stringstream ss(orders_spec);
            std::string part;
            while (std::getline(ss, part, '+')) orders.push_back(std::stoll(part));
            std::cout << balance::linear_forest_ex(n, orders) << "\n";
        } else if (*f_k5) {
            const auto [lo, hi] = balance::k5_bounds(n, eps);
            std::cout << lo << " " << hi << "\n";
        } else {
            std::cout << balance::structural_upper_bound(n, exval).str() << "\n";
        }
        return 0;
    }
    if (*verify_cmd) {
        json header;
        const auto s = pick_seed(seed, header);
        auto report = balance::randomized_verify(claim, n, trials, s, opts);
        if (header.contains("seed_auto_generated")) report["seed_auto_generated"] = true;
        std::cout << report.dump(2) << "\n";
        return report["fail_count"].get<int>() == 0 ? 0 : kExitNone;
    }
    if (*dot_cmd) {
        const auto c = load_coloring(coloring_path);
        if (witness_path.empty()) {
            std::cout << balance::export_dot(c);
        } else {
            const auto w = witness_from_json(read_text(witness_path));
            std::cout << balance::export_dot(c, &w);
        }
        return 0;
    }
    return kExitUsage;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
