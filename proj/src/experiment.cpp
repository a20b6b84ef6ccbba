#include "blockfrac/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "blockfrac/certificates.hpp"
#include "blockfrac/chif.hpp"
#include "blockfrac/errors.hpp"
#include "blockfrac/hall.hpp"
#include "blockfrac/rng.hpp"

namespace blockfrac {

using nlohmann::json;

json ExperimentCaps::to_json() const {
    return {{"mwis_nodes", mwis_nodes},
            {"dp_cap", dp_cap},
            {"chif_iteration_cap", chif_iteration_cap},
            {"hall_budget", hall_budget},
            {"bruteforce_cap", bruteforce_cap},
            {"sample_max_vertices", sample_max_vertices}};
}

ExperimentCaps ExperimentCaps::from_json(const json& j) {
    ExperimentCaps caps;
    caps.mwis_nodes = j.value("mwis_nodes", caps.mwis_nodes);
    caps.dp_cap = j.value("dp_cap", caps.dp_cap);
    caps.chif_iteration_cap = j.value("chif_iteration_cap", caps.chif_iteration_cap);
    caps.hall_budget = j.value("hall_budget", caps.hall_budget);
    caps.bruteforce_cap = j.value("bruteforce_cap", caps.bruteforce_cap);
    caps.sample_max_vertices = j.value("sample_max_vertices", caps.sample_max_vertices);
    if (caps.mwis_nodes == 0 || caps.dp_cap <= 0 || caps.hall_budget <= 0 ||
        caps.sample_max_vertices == 0)
        throw input_error("experiment caps must be positive");
    return caps;
}

json ExperimentConfig::to_json() const {
    json j;
    j["profile"] = profile.to_json();
    j["trials"] = trials;
    j["base_seed"] = base_seed;
    j["delta"] = rat_str(delta);
    j["checks"] = checks;
    j["caps"] = caps.to_json();
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    ExperimentConfig cfg;
    if (!j.is_object() || !j.contains("profile"))
        throw parse_error("experiment config: missing 'profile'");
    cfg.profile = BlockProfile::from_json(j["profile"]);
    cfg.trials = j.value("trials", 1);
    if (cfg.trials < 1) throw input_error("experiment config: trials must be >= 1");
    cfg.base_seed = j.value("base_seed", std::uint64_t(0));
    if (j.contains("delta")) cfg.delta = parse_rat(j["delta"].get<std::string>());
    if (cfg.delta <= 0) throw input_error("experiment config: delta must be positive");
    if (j.contains("checks"))
        for (const auto& c : j["checks"]) {
            std::string name = c.get<std::string>();
            if (name != "chif" && name != "hall" && name != "propertyA" && name != "claim42" &&
                name != "thm13")
                throw input_error("experiment config: unknown check '" + name + "'");
            cfg.checks.insert(name);
        }
    if (j.contains("caps")) cfg.caps = ExperimentCaps::from_json(j["caps"]);
    return cfg;
}

void parallel_for(int count, std::function<void(int)> fn, int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("BLOCKFRAC_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = int(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

std::string error_code(const std::exception& e) {
    if (dynamic_cast<const resource_error*>(&e)) return "error:resource";
    if (dynamic_cast<const certificate_error*>(&e)) return "error:certificate";
    if (dynamic_cast<const input_error*>(&e)) return "error:input";
    return "error:internal";
}

// 20 deterministic subgraphs of bg per trial: random vertex keep rate, then
// random edge thinning, seeded off the trial seed.
Subgraph random_subgraph(const BlockGraph& bg, std::uint64_t seed, int index) {
    SplitMix64 rng(rng::derive(seed, 1000 + index));
    std::uint64_t keep_num = 3 + rng.next_below(6);  // vertex keep rate in [3/10, 8/10]
    VertexSet vs;
    for (int v = 0; v < bg.graph.vertex_count(); ++v)
        if (rng.next_bernoulli_num(keep_num, 10)) vs.push_back(v);
    Subgraph h = Subgraph::induced(bg.graph, vs);
    std::vector<Edge> kept;
    for (auto e : h.edges)
        if (rng.next_bernoulli_num(4, 5)) kept.push_back(e);
    h.edges = std::move(kept);
    return h;
}

struct Thm13Outcome {
    bool applicable = false;  // claim42 certified and some h had its slack hold
    bool violated = false;
};

Thm13Outcome thm13_trial(const BlockGraph& bg, std::uint64_t seed, const Rat& delta,
                         bool claim42_certified, const MwisOptions& mwis_opts) {
    Thm13Outcome out;
    std::vector<Subgraph> hs;
    hs.push_back(Subgraph::whole(bg.graph));
    for (int t = 0; t < 20; ++t) hs.push_back(random_subgraph(bg, seed, t));
    for (const Subgraph& h : hs) {
        Thm13Report rep = verify_theorem13_weights(bg, h, delta, mwis_opts);
        if (rep.j_cross_check_ran && !rep.j_cross_check_ok) out.violated = true;
        if (!claim42_certified) continue;
        if (!rep.j_cross_check_ran && !h.edges.empty()) continue;  // extractor blocked
        if (!h.edges.empty() && !rep.slack_holds) continue;        // hypothesis not met
        out.applicable = true;
        if (!rep.passes) out.violated = true;
    }
    return out;
}

std::string frac(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result;
    result.rows.assign(cfg.trials, TrialRecord{});
    auto has = [&](const char* c) { return cfg.checks.count(c) > 0; };

    MwisOptions mwis_opts{cfg.caps.mwis_nodes};
    ChiFOptions chif_opts;
    chif_opts.iteration_cap = cfg.caps.chif_iteration_cap;
    chif_opts.mwis = mwis_opts;
    HallOptions hall_opts;
    hall_opts.dp_cap = cfg.caps.dp_cap;
    hall_opts.mwis = mwis_opts;
    CertificateOptions cert_opts{cfg.caps.bruteforce_cap};
    SampleOptions sample_opts{cfg.caps.sample_max_vertices};

    parallel_for(cfg.trials, [&](int t) {
        TrialRecord& row = result.rows[t];
        auto started = std::chrono::steady_clock::now();
        row.seed = rng::derive(cfg.base_seed, std::uint64_t(t));
        try {
            BlockGraph bg = sample(cfg.profile, row.seed, sample_opts);
            row.n = bg.graph.vertex_count();
            row.m = bg.graph.edge_count();
            row.k = bg.block_count();

            if (has("chif")) {
                try {
                    row.chif_lb = rat_str(block_weight_lower_bound(bg, mwis_opts));
                } catch (const std::exception& e) {
                    row.chif_lb = error_code(e);
                }
                try {
                    row.chif_exact = rat_str(chi_f_colgen(bg.graph, chif_opts).value);
                } catch (const std::exception& e) {
                    row.chif_exact = error_code(e);
                }
            }
            if (has("hall")) {
                if (row.n <= cfg.caps.dp_cap) {
                    try {
                        row.hall_exact = rat_str(hall_ratio_exact(bg.graph, hall_opts).value);
                    } catch (const std::exception& e) {
                        row.hall_exact = error_code(e);
                    }
                }
                try {
                    row.hall_lb = rat_str(
                        hall_ratio_lower_bound(bg.graph, cfg.caps.hall_budget, hall_opts).value);
                } catch (const std::exception& e) {
                    row.hall_lb = error_code(e);
                }
            }
            if (has("propertyA")) {
                try {
                    row.propA_status = status_name(check_property_A(bg, cert_opts).status);
                } catch (const std::exception& e) {
                    row.propA_status = error_code(e);
                }
            }
            bool claim42_certified = false;
            if (has("claim42") || has("thm13")) {
                try {
                    CertificateReport rep = check_claim42(bg, cert_opts);
                    CertStatus s1 = CertStatus::Certified, s2 = CertStatus::Certified;
                    for (const CertEntry& e : rep.entries) {
                        if (e.what == "claim42.1") s1 = worst_status(s1, e.status);
                        else s2 = worst_status(s2, e.status);
                    }
                    claim42_certified = rep.fully_certified();
                    if (has("claim42")) {
                        row.c42_1_status = status_name(s1);
                        row.c42_2_status = status_name(s2);
                    }
                } catch (const std::exception& e) {
                    row.c42_1_status = row.c42_2_status = error_code(e);
                }
            }
            if (has("thm13")) {
                try {
                    Thm13Outcome out =
                        thm13_trial(bg, row.seed, cfg.delta, claim42_certified, mwis_opts);
                    row.thm13_pass = out.violated ? "0" : (out.applicable ? "1" : "");
                } catch (const std::exception& e) {
                    row.thm13_pass = error_code(e);
                }
            }
        } catch (const std::exception& e) {
            row.propA_status = row.chif_lb = error_code(e);
        }
        row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    });

    // summary: empirical frequencies next to the analytic yardsticks
    const int k = cfg.profile.block_count();
    result.summary.push_back("# summary: trials=" + std::to_string(cfg.trials));
    if (has("chif")) {
        int done = 0, above = 0;
        double threshold = k >= 2 ? k / (10.0 * std::log(double(k))) : 0;
        for (const auto& row : result.rows) {
            if (row.chif_lb.empty() || row.chif_lb.rfind("error", 0) == 0) continue;
            ++done;
            if (parse_rat(row.chif_lb).get_d() > threshold) ++above;
        }
        double bound = k >= 2 ? std::pow(1.0 + std::pow(double(k), -std::log(double(k))),
                                         double(k)) -
                                    1.0
                              : 1.0;
        result.summary.push_back("# summary: chif_lb_above_k_over_10logk_frac=" +
                                 (done ? frac(double(above) / done) : "n/a") +
                                 " threshold=" + frac(threshold) +
                                 " lemma_failure_bound=" + frac(bound));
    }
    if (has("propertyA")) {
        int certified = 0;
        for (const auto& row : result.rows) certified += row.propA_status == "Certified";
        result.summary.push_back("# summary: propA_certified_frac=" +
                                 frac(double(certified) / cfg.trials) +
                                 " paper_lower_bound=0.333333");
    }
    if (has("claim42")) {
        int violated = 0;
        for (const auto& row : result.rows) violated += row.c42_2_status == "Violated";
        result.summary.push_back("# summary: c42_2_violation_frac=" +
                                 frac(double(violated) / cfg.trials) + " markov_union_bound=" +
                                 frac(k > 0 ? 1.0 / k : 1.0));
    }
    if (has("thm13")) {
        int ran = 0, passed = 0;
        for (const auto& row : result.rows) {
            if (row.thm13_pass != "0" && row.thm13_pass != "1") continue;
            ++ran;
            passed += row.thm13_pass == "1";
        }
        result.summary.push_back("# summary: thm13_pass_frac=" +
                                 (ran ? frac(double(passed) / ran) : std::string("n/a")) +
                                 " applicable=" + std::to_string(ran));
    }
    return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg,
                          const ExperimentResult& result) {
    out << "# blockfrac experiment\n";
    out << "# config: " << cfg.to_json().dump() << "\n";
    out << "seed,n,m,k,chif_lb,chif_exact,hall_exact,hall_lb,propA_status,c42_1_status,"
           "c42_2_status,thm13_pass,runtime_ms\n";
    for (const TrialRecord& r : result.rows) {
        out << r.seed << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.chif_lb << ','
            << r.chif_exact << ',' << r.hall_exact << ',' << r.hall_lb << ',' << r.propA_status
            << ',' << r.c42_1_status << ',' << r.c42_2_status << ',' << r.thm13_pass << ','
            << r.runtime_ms << "\n";
    }
    for (const std::string& line : result.summary) out << line << "\n";
}

std::string strip_runtime_column(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            auto pos = line.find_last_of(',');
            if (pos != std::string::npos) line.erase(pos);
        }
        out << line << "\n";
    }
    return out.str();
}

}  // namespace blockfrac
