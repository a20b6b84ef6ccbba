#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockfrac/certificates.hpp"
#include "blockfrac/chif.hpp"
#include "blockfrac/errors.hpp"
#include "blockfrac/experiment.hpp"
#include "blockfrac/graph_io.hpp"
#include "blockfrac/hall.hpp"

using namespace blockfrac;
using nlohmann::json;

namespace {

struct LoadedBlockGraph {
    BlockGraph bg;
    json meta;
};

LoadedBlockGraph load_block_graph(const std::string& path) {
    GraphData data = load_graph_file(path);
    if (data.blocks.empty())
        throw input_error("'" + path + "' carries no block structure; generate it with 'gen'");
    return {BlockGraph(std::move(data.graph), std::move(data.blocks)), std::move(data.meta)};
}

double profile_n_of(const json& meta) {
    if (meta.is_object() && meta.contains("profile") && meta["profile"].contains("n"))
        return meta["profile"]["n"].get<double>();
    return 0;
}

Subgraph load_subgraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("subgraph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("subgraph json: need object with 'vertices' and 'edges'");
    Subgraph h;
    h.vertices = normalized_vertex_set(vertex_set_from_json(j["vertices"]));
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw parse_error("subgraph json: edge must be [u,v]");
        int u = e[0].get<int>(), v = e[1].get<int>();
        h.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

int run_gen(const std::string& kind, double n, double q, double eps, int k, std::uint64_t seed,
            const std::string& out) {
    BlockProfile prof;
    if (kind == "exp") prof = exp_profile(std::uint64_t(n));
    else if (kind == "tower") prof = tower_profile(n);
    else if (kind == "param") prof = param_profile(n, q, eps, k);
    else throw input_error("unknown profile kind '" + kind + "'");
    BlockGraph bg = sample(prof, seed);
    json meta;
    meta["profile"] = prof.to_json();
    meta["seed"] = seed;
    save_graph_json_file(out, bg.graph, bg.blocks, meta);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-structured random graphs, exact fractional chromatic number, Hall "
                 "ratios, and sparsity certificates"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample a block construction to a JSON graph file");
    std::string gen_profile = "exp", gen_out;
    double gen_n = 0, gen_q = 4.0, gen_eps = 0.1;
    int gen_k = 1;
    std::uint64_t gen_seed = 0;
    gen->add_option("--profile", gen_profile, "exp | tower | param")->required();
    gen->add_option("--n", gen_n, "scale parameter")->required();
    gen->add_option("--q", gen_q, "param profile ratio (default 4)");
    gen->add_option("--eps", gen_eps, "param profile exponent step");
    gen->add_option("--k", gen_k, "param profile block count");
    gen->add_option("--seed", gen_seed, "base seed (default 0)");
    gen->add_option("--out", gen_out, "output file")->required();

    // chif
    auto* chif = app.add_subcommand("chif", "exact fractional chromatic number of a graph file");
    std::string chif_file, chif_method = "colgen";
    chif->add_option("file", chif_file)->required();
    chif->add_option("--method", chif_method, "colgen | enumerate");

    // hall
    auto* hall = app.add_subcommand("hall", "Hall ratio of a graph file");
    std::string hall_file, hall_method = "dp";
    int hall_budget = 200;
    hall->add_option("file", hall_file)->required();
    hall->add_option("--method", hall_method, "dp | heuristic");
    hall->add_option("--budget", hall_budget, "heuristic budget in MWIS calls");

    // verify
    auto* verify = app.add_subcommand("verify", "run sparsity certificates on a block graph");
    std::string verify_file, verify_claims = "propertyA,claim42", verify_delta = "1/2";
    std::string verify_recheck;
    verify->add_option("file", verify_file)->required();
    verify->add_option("--claims", verify_claims, "comma list: propertyA,claim42,thm13");
    verify->add_option("--delta", verify_delta, "slack parameter as a rational (default 1/2)");
    verify->add_option("--recheck", verify_recheck, "re-verify a serialized report's witnesses");

    // extract
    auto* extract = app.add_subcommand("extract", "constructive independent-set extraction");
    std::string ex_file, ex_sub, ex_delta = "1/2";
    int ex_lemma = 31;
    extract->add_option("file", ex_file)->required();
    extract->add_option("--subgraph", ex_sub, "subgraph JSON ({vertices, edges})")->required();
    extract->add_option("--lemma", ex_lemma, "31 | 41")->required();
    extract->add_option("--delta", ex_delta, "slack parameter for lemma 41");

    // experiment
    auto* exp = app.add_subcommand("experiment", "seed-grid Monte Carlo harness");
    std::string exp_config, exp_out;
    exp->add_option("--config", exp_config, "config JSON file")->required();
    exp->add_option("--out", exp_out, "CSV output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_profile, gen_n, gen_q, gen_eps, gen_k, gen_seed, gen_out);

        if (chif->parsed()) {
            GraphData data = load_graph_file(chif_file);
            ChiFResult r;
            if (chif_method == "colgen") r = chi_f_colgen(data.graph);
            else if (chif_method == "enumerate") r = chi_f_enumerate(data.graph);
            else throw input_error("unknown method '" + chif_method + "'");
            std::cout << chif_to_json(r).dump() << "\n";
            return 0;
        }

        if (hall->parsed()) {
            GraphData data = load_graph_file(hall_file);
            HallRatioResult r;
            if (hall_method == "dp") r = hall_ratio_exact(data.graph);
            else if (hall_method == "heuristic")
                r = hall_ratio_lower_bound(data.graph, hall_budget);
            else throw input_error("unknown method '" + hall_method + "'");
            std::cout << hall_to_json(r).dump() << "\n";
            return 0;
        }

        if (verify->parsed()) {
            BlockGraph bg = load_block_graph(verify_file).bg;
            if (!verify_recheck.empty()) {
                std::ifstream in(verify_recheck);
                if (!in) throw parse_error("cannot open '" + verify_recheck + "'");
                json report = json::parse(in);
                json out;
                std::vector<std::string> failures;
                if (report.contains("entries")) {
                    failures = recheck_report(bg, report);
                } else {
                    for (const char* key : {"propertyA", "claim42"})
                        if (report.contains(key)) {
                            auto f = recheck_report(bg, report[key]);
                            failures.insert(failures.end(), f.begin(), f.end());
                        }
                }
                out["recheck_failures"] = failures;
                out["ok"] = failures.empty();
                std::cout << out.dump() << "\n";
                return 0;
            }
            Rat delta = parse_rat(verify_delta);
            json out;
            std::stringstream claims(verify_claims);
            std::string claim;
            while (std::getline(claims, claim, ',')) {
                if (claim == "propertyA") out["propertyA"] = check_property_A(bg).to_json();
                else if (claim == "claim42") out["claim42"] = check_claim42(bg).to_json();
                else if (claim == "thm13")
                    out["thm13"] = thm13_to_json(
                        verify_theorem13_weights(bg, Subgraph::whole(bg.graph), delta));
                else if (!claim.empty()) throw input_error("unknown claim '" + claim + "'");
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (extract->parsed()) {
            LoadedBlockGraph loaded = load_block_graph(ex_file);
            Subgraph h = load_subgraph(ex_sub);
            json out;
            if (ex_lemma == 31) {
                auto [I, rep] = extract_lemma31(loaded.bg, h, profile_n_of(loaded.meta));
                out = lemma31_to_json(I, rep);
            } else if (ex_lemma == 41) {
                out = lemma41_to_json(extract_lemma41(loaded.bg, h, parse_rat(ex_delta)));
            } else {
                throw input_error("--lemma must be 31 or 41");
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (exp->parsed()) {
            std::ifstream in(exp_config);
            if (!in) throw parse_error("cannot open '" + exp_config + "'");
            ExperimentConfig cfg = ExperimentConfig::from_json(json::parse(in));
            ExperimentResult result = run_experiment(cfg);
            std::ofstream out(exp_out, std::ios::binary);
            if (!out) throw parse_error("cannot open '" + exp_out + "' for writing");
            write_experiment_csv(out, cfg, result);
            return 0;
        }
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const certificate_error& e) {
        std::cerr << "certificate dependency: " << e.what() << "\n";
        return 4;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
