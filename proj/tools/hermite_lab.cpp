// Command-line front end: simulation, estimation, verification experiments,
// and the Rosenblatt quantile probe, with reproducible seeding and CSV/JSON
// output. Exit codes: 0 success, 1 numerical/domain error, 2 usage error,
// 3 verification failure.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hermite/chaos.hpp"
#include "hermite/experiments.hpp"
#include "hermite/info.hpp"
#include "hermite/paths.hpp"
#include "hermite/serialize.hpp"
#include "hermite/stats.hpp"

using namespace hermite;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HERMITE_LAB_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 42;
}

void write_sidecar(const std::string& out, const json& params, double wall_seconds) {
    json meta;
    meta["version"] = kVersion;
    meta["params"] = params;
    meta["wall_seconds"] = wall_seconds;
    write_text_file(out + ".meta.json", meta.dump(2) + "\n");
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermite-lab: simulation and inference for Hermite processes and fields"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    int threads = 0;
    app.add_option("--seed", seed, "master seed (env HERMITE_LAB_SEED overrides the default)");
    app.add_option("--threads", threads, "worker count (default: machine parallelism)");

    auto check_h = CLI::Range(0.5 + 1e-9, 1.0 - 1e-9).description("H must lie in (0.5, 1)");

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "generate a path or sheet");
    std::string process = "hermite";
    int q = 2;
    double hurst = 0.7, h2 = 0.7, t_end = 1.0, a_par = 1.0, b_par = 0.0;
    std::size_t n = 1024, lattice = 2048, inner_m = 256, n2 = 0;
    std::string out = "out.csv", format = "csv";
    sim->add_option("--process", process, "hermite | fbm | rosenblatt-grid | sheet | vasicek | ou")
        ->check(CLI::IsMember({"hermite", "fbm", "rosenblatt-grid", "sheet", "vasicek", "ou"}));
    sim->add_option("--q", q, "chaos order");
    sim->add_option("--H", hurst, "Hurst parameter")->check(check_h);
    sim->add_option("--H2", h2, "second-axis Hurst (sheet)")->check(check_h);
    sim->add_option("--t-end", t_end, "time horizon");
    sim->add_option("--n", n, "grid steps");
    sim->add_option("--n2", n2, "second-axis grid steps (sheet; default n)");
    sim->add_option("--lattice-n", lattice, "inner lattice size");
    sim->add_option("--inner-m", inner_m, "inner cells (rosenblatt-grid)");
    sim->add_option("--a", a_par, "mean-reversion rate (vasicek/ou)");
    sim->add_option("--b", b_par, "long-run mean (vasicek)");
    sim->add_option("--out", out, "output file");
    sim->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // ---- estimate ----
    auto* est = app.add_subcommand("estimate", "estimators on a stored path");
    std::string what = "vasicek", in_file;
    double est_h = 0.7;
    int est_q = 2;
    est->add_option("--what", what, "vasicek | hurst")->check(CLI::IsMember({"vasicek", "hurst"}));
    est->add_option("--H", est_h, "Hurst parameter")->check(check_h);
    est->add_option("--q", est_q, "chaos order (hurst estimator)");
    est->add_option("--in", in_file, "input path CSV")->required();
    est->add_option("--out", out, "output file (default stdout)");

    // ---- qv ----
    auto* qv = app.add_subcommand("qv", "quadratic-variation statistic of simulated paths");
    std::size_t qv_n = 2048, qv_reps = 200;
    qv->add_option("--q", q, "chaos order");
    qv->add_option("--H", hurst, "Hurst parameter")->check(check_h);
    qv->add_option("--N", qv_n, "lattice for the statistic");
    qv->add_option("--lattice-n", lattice, "inner lattice size");
    qv->add_option("--reps", qv_reps, "replicates");
    qv->add_option("--out", out, "output file");

    // ---- gt ----
    auto* gt = app.add_subcommand("gt", "normalized quadratic functional of a moving average");
    double gt_t = 1.0;
    std::size_t gt_reps = 200;
    gt->add_option("--q", q, "chaos order");
    gt->add_option("--H", hurst, "Hurst parameter")->check(check_h);
    gt->add_option("--t-end", t_end, "horizon T");
    gt->add_option("--n", n, "grid steps");
    gt->add_option("--t", gt_t, "evaluation fraction in (0,1]");
    gt->add_option("--reps", gt_reps, "replicates");
    gt->add_option("--out", out, "output file");

    // ---- cumulants ----
    auto* cum = app.add_subcommand("cumulants", "trace cumulants of second-chaos kernels");
    std::string kname = "rosenblatt-pair";
    double cs = 0.5, ct = 1.0, alpha = 1.0, beta = 0.5;
    int cm = 128, pmax = 4;
    cum->add_option("--kernel", kname)->check(CLI::IsMember({"rosenblatt-pair"}));
    cum->add_option("--H", hurst, "Hurst parameter")->check(check_h);
    cum->add_option("--s", cs, "first time");
    cum->add_option("--t", ct, "second time");
    cum->add_option("--alpha", alpha, "weight of R_t");
    cum->add_option("--beta", beta, "weight of R_s");
    cum->add_option("--m", cm, "cells");
    cum->add_option("--p-max", pmax, "highest cumulant order");
    cum->add_option("--out", out, "output file (default stdout)");

    // ---- info ----
    auto* info = app.add_subcommand("info", "information metrics of a named fixture");
    std::string fixture = "mixture";
    info->add_option("--fixture", fixture, "mixture | student-t | gaussian")
        ->check(CLI::IsMember({"mixture", "student-t", "gaussian"}));
    info->add_option("--out", out, "output file (default stdout)");

    // ---- conjecture ----
    auto* conj = app.add_subcommand("conjecture", "Rosenblatt quantile probe");
    std::size_t samples = 50000;
    conj->add_option("--H", hurst, "Hurst parameter")->check(check_h);
    conj->add_option("--samples", samples, "Monte Carlo samples");
    conj->add_option("--lattice-n", lattice, "inner lattice size");
    conj->add_option("--out", out, "output file (default stdout)");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run a named verification experiment");
    std::string exp_name;
    std::size_t reps = 0;
    ver->add_option("--experiment", exp_name, "experiment name, or 'all'");
    ver->add_option("--reps", reps, "override replicate count");
    ver->add_option("--out", out, "report file");
    bool list = false;
    ver->add_flag("--list", list, "list experiment names");

    CLI11_PARSE(app, argc, argv);

    if (threads > 0) omp_set_num_threads(threads);
    Timer timer;

    try {
        if (sim->parsed()) {
            auto stream = derive_stream(seed, 0);
            json params{{"command", "simulate"}, {"process", process}, {"seed", seed},
                        {"q", q},                {"H", hurst},         {"t_end", t_end},
                        {"n", n},                {"lattice_n", lattice}};
            if (process == "sheet") {
                if (n2 == 0) n2 = n;
                HermiteSpec spec(q, std::vector<double>{hurst, h2});
                auto f = sample_hermite_sheet(stream, spec, {t_end, t_end}, {n, n2},
                                              {.lattice_n = lattice});
                write_field_csv(f, out);
            } else {
                SamplePath p;
                if (process == "fbm") {
                    p = sample_fbm(stream, hurst, t_end, n);
                } else if (process == "rosenblatt-grid") {
                    p = sample_rosenblatt_grid(stream, hurst, t_end, n, inner_m);
                } else {
                    p = sample_hermite_path(stream, HermiteSpec(q, hurst), t_end, n,
                                            {.lattice_n = lattice});
                    if (process == "vasicek") p = sample_vasicek(a_par, b_par, p);
                    if (process == "ou")
                        p = sample_moving_average(
                            [a_par](double u) { return std::exp(-a_par * u); }, p);
                }
                if (format == "json") {
                    write_text_file(out, path_to_json(p).dump(2) + "\n");
                } else {
                    write_path_csv(p, out);
                }
            }
            write_sidecar(out, params, timer.seconds());
            return 0;
        }

        if (est->parsed()) {
            auto path = read_path_csv(in_file);
            json j{{"command", "estimate"}, {"what", what}, {"in", in_file}};
            if (what == "vasicek") {
                auto e = vasicek_estimators(path, est_h);
                j["a_hat"] = e.a_hat;
                j["b_hat"] = e.b_hat;
            } else {
                auto e = estimate_hurst_qv(path, est_q);
                j["H_hat"] = e.h;
                j["boundary"] = e.boundary;
            }
            std::string text = j.dump(2) + "\n";
            if (est->count("--out")) {
                write_text_file(out, text);
                write_sidecar(out, j, timer.seconds());
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (qv->parsed()) {
            HermiteSpec spec(q, hurst);
            auto rep = run_replications(
                seed, qv_reps,
                [&](RngStream& s) {
                    auto p = sample_hermite_path(s, spec, 1.0, qv_n,
                                                 {.lattice_n = std::max(lattice, 8 * qv_n)});
                    double stat = qv_limit_statistic(p, spec, qv_n);
                    return stat * stat;
                },
                threads);
            auto j = mcreport_to_json(rep);
            j["command"] = "qv";
            j["statistic"] = "squared normalized quadratic variation";
            write_text_file(out, j.dump(2) + "\n");
            write_sidecar(out, json{{"command", "qv"}, {"seed", seed}, {"N", qv_n}},
                          timer.seconds());
            return 0;
        }

        if (gt->parsed()) {
            HermiteSpec spec(q, hurst);
            auto kern = [](double u) { return std::exp(-u); };
            auto centering = gt_centering_profile(kern, hurst, t_end, n);
            auto rep = run_replications(
                seed, gt_reps,
                [&](RngStream& s) {
                    auto z = sample_hermite_path(s, spec, t_end, n, {.lattice_n = 4 * n});
                    auto x = sample_moving_average(kern, z);
                    return quadratic_functional_GT(x, spec, gt_t, centering);
                },
                threads);
            auto j = mcreport_to_json(rep);
            j["command"] = "gt";
            write_text_file(out, j.dump(2) + "\n");
            write_sidecar(out, json{{"command", "gt"}, {"seed", seed}}, timer.seconds());
            return 0;
        }

        if (cum->parsed()) {
            auto pair = rosenblatt_kernel_pair(hurst, cs, ct, alpha, beta, cm);
            json j{{"command", "cumulants"}, {"kernel", kname}, {"H", hurst},
                   {"s", cs},                {"t", ct},         {"m", cm}};
            json kf = json::array(), kg = json::array();
            for (int p = 2; p <= pmax; ++p) {
                kf.push_back(cumulant_trace(pair.f, p));
                kg.push_back(cumulant_trace(pair.g, p));
            }
            j["kappa_volterra"] = kf;
            j["kappa_power"] = kg;
            std::string text = j.dump(2) + "\n";
            if (cum->count("--out")) {
                write_text_file(out, text);
                write_sidecar(out, j, timer.seconds());
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (info->parsed()) {
            DensityModel model =
                fixture == "mixture"
                    ? standardize_model(
                          gaussian_mixture_model({0.5, 0.5}, {-1.0, 1.0}, {0.5, 0.5}))
                    : (fixture == "student-t" ? student_t_model(10.0) : gaussian_model(0.0, 1.0));
            auto r = inequality_suite(model);
            auto gap = de_bruijn_gap(model);
            json j{{"command", "info"},
                   {"fixture", fixture},
                   {"d_tv", r.d_tv},
                   {"rel_entropy", r.rel_entropy},
                   {"fisher", r.fisher},
                   {"fisher_st", r.fisher_st},
                   {"de_bruijn", {{"lhs", gap.lhs}, {"rhs", gap.rhs}}},
                   {"inequalities",
                    {{"ckp",
                      {{"lhs", 2.0 * r.d_tv * r.d_tv},
                       {"rhs", r.rel_entropy},
                       {"satisfied", r.ckp_ok}}},
                     {"entropy_fisher",
                      {{"lhs", r.rel_entropy},
                       {"rhs", 0.5 * (r.fisher - 1.0)},
                       {"satisfied", r.entropy_fisher_ok}}}}},
                   {"shimizu",
                    {{"sup_density_diff", r.sup_density_diff},
                     {"bound_sqrt_J", r.sup_bound_j},
                     {"bound_sqrt_Jst", r.sup_bound_jst},
                     {"tv_bound_sqrt_J", r.tv_bound_j},
                     {"tv_bound_sqrt_Jst", r.tv_bound_jst}}}};
            std::string text = j.dump(2) + "\n";
            if (info->count("--out")) {
                write_text_file(out, text);
                write_sidecar(out, j, timer.seconds());
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (conj->parsed()) {
            auto probe = rosenblatt_cdf_probe(seed, hurst, {-0.6256, 1.3552}, samples,
                                              {.lattice_n = lattice}, threads);
            json j{{"command", "conjecture"}, {"H", hurst}, {"samples", samples}, {"seed", seed}};
            json pts = json::array();
            for (std::size_t k = 0; k < probe.points.size(); ++k) {
                pts.push_back({{"point", probe.points[k]},
                               {"probability", probe.probability[k]},
                               {"std_error", probe.std_error[k]},
                               {"ci95",
                                {probe.probability[k] - 1.96 * probe.std_error[k],
                                 probe.probability[k] + 1.96 * probe.std_error[k]}}});
            }
            j["probes"] = pts;
            std::string text = j.dump(2) + "\n";
            if (conj->count("--out")) {
                write_text_file(out, text);
                write_sidecar(out, j, timer.seconds());
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (ver->parsed()) {
            if (list) {
                for (const auto& name : experiment_names()) std::cout << name << "\n";
                return 0;
            }
            if (exp_name.empty()) {
                std::cerr << "error: --experiment is required (or --list)\n";
                return 2;
            }
            ExperimentContext ctx;
            ctx.seed = seed;
            ctx.reps = reps;
            ctx.threads = threads;
            bool all_pass = true;
            json reports = json::array();
            std::vector<std::string> names =
                exp_name == "all" ? experiment_names() : std::vector<std::string>{exp_name};
            for (const auto& name : names) {
                if (!has_experiment(name)) {
                    std::cerr << "unknown experiment: " << name << "\n";
                    return 2;
                }
                auto res = run_experiment(name, ctx);
                all_pass = all_pass && res.pass;
                reports.push_back(res.report);
                std::cerr << (res.pass ? "[PASS] " : "[FAIL] ") << name << "\n";
            }
            json j = (reports.size() == 1) ? reports[0] : json{{"reports", reports}};
            std::string text = j.dump(2) + "\n";
            if (ver->count("--out")) {
                write_text_file(out, text);
                write_sidecar(out, json{{"command", "verify"}, {"seed", seed}}, timer.seconds());
            } else {
                std::cout << text;
            }
            return all_pass ? 0 : 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
