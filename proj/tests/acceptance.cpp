// Acceptance suite: runs every verification experiment at its canonical
// parameters and prints one pass/fail line per criterion. Exits with the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hermite/experiments.hpp"

using namespace hermite;

namespace {

struct Outcome {
    std::string label;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Outcome run(const std::string& label, const std::string& experiment, double time_budget = 0.0,
            std::size_t reps = 0) {
    ExperimentContext ctx;
    ctx.seed = 42;
    ctx.reps = reps;
    double t0 = now_seconds();
    auto res = run_experiment(experiment, ctx);
    Outcome out;
    out.label = label;
    out.seconds = now_seconds() - t0;
    out.pass = res.pass;
    if (time_budget > 0.0 && out.seconds > time_budget) {
        out.pass = false;
        out.detail = "runtime budget exceeded";
    }
    if (!res.pass) {
        for (const auto& c : res.report["checks"]) {
            if (!c["pass"].get<bool>()) {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s: value %.4f target %.4f (tol %.4f)",
                              c["name"].get<std::string>().c_str(), c["value"].get<double>(),
                              c["target"].get<double>(), c["tol"].get<double>());
                if (!out.detail.empty()) out.detail += "; ";
                out.detail += buf;
            }
        }
    }
    return out;
}

Outcome run_determinism() {
    // every experiment, reduced size, twice with different worker counts;
    // reports must be byte-identical
    double t0 = now_seconds();
    Outcome out;
    out.label = "determinism across thread counts";
    out.pass = true;
    for (const auto& name : experiment_names()) {
        ExperimentContext ctx;
        ctx.seed = 7;
        ctx.reps = (name == "cumulant-trace-mc") ? 5000 : 24;
        if (name == "rosenblatt-conjecture") ctx.reps = 2000;
        if (name == "qv-normalization" || name == "gt-limit-variance") ctx.reps = 8;
        ctx.params["lattice"] = 256;
        ctx.params["m"] = 64;
        ctx.params["n"] = 512;
        ctx.params["n1"] = 256;
        ctx.params["n2"] = 32;
        ctx.threads = 1;
        auto a = run_experiment(name, ctx);
        ctx.threads = 2;
        auto b = run_experiment(name, ctx);
        if (a.report.dump() != b.report.dump()) {
            out.pass = false;
            out.detail += name + " differs; ";
        }
    }
    out.seconds = now_seconds() - t0;
    return out;
}

}  // namespace

int main() {
    std::vector<Outcome> outcomes;
    outcomes.push_back(
        run("criterion 1: covariance reproduction", "covariance-reproduction", 3 * 120.0));
    outcomes.push_back(run("criterion 2: exact normalization", "exact-normalization"));
    outcomes.push_back(
        run("criterion 3: rosenblatt conjecture probe", "rosenblatt-conjecture", 300.0));
    outcomes.push_back(run("criterion 4: cumulant trace vs MC", "cumulant-trace-mc"));
    outcomes.push_back(run("criterion 5: vasicek consistency", "vasicek-consistency", 600.0));
    outcomes.push_back(run("criterion 6: OU stationary variance", "ou-stationary-variance"));
    outcomes.push_back(run("criterion 7: QV normalization", "qv-normalization"));
    outcomes.push_back(run("criterion 8: G_T limit variance", "gt-limit-variance"));
    outcomes.push_back(run("criterion 9: information metrics", "info-metrics", 60.0));
    outcomes.push_back(run_determinism());

    int failures = 0;
    for (const auto& o : outcomes) {
        std::printf("[%s] %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", o.label.c_str(),
                    o.seconds, o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(outcomes.size()) - failures,
                outcomes.size());
    return failures;
}
