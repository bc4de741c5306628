#include "hermite/experiments.hpp"

#include <omp.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hermite/chaos.hpp"
#include "hermite/constants.hpp"
#include "hermite/fgn.hpp"
#include "hermite/hermite_poly.hpp"
#include "hermite/info.hpp"
#include "hermite/mc.hpp"
#include "hermite/paths.hpp"
#include "hermite/stats.hpp"

namespace hermite {

namespace {

using ExperimentFn = std::function<ExperimentResult(const ExperimentContext&)>;
using nlohmann::json;

double param(const ExperimentContext& ctx, const std::string& key, double fallback) {
    auto it = ctx.params.find(key);
    return it == ctx.params.end() ? fallback : it->second;
}

std::size_t reps_or(const ExperimentContext& ctx, std::size_t fallback) {
    return ctx.reps > 0 ? ctx.reps : fallback;
}

/// Replicate-indexed Monte Carlo with vector-valued statistics; every entry
/// is keyed by (replicate, component) so results are independent of worker
/// count and scheduling.
struct VectorMc {
    std::vector<double> mean, se;
    std::vector<std::vector<double>> samples;  // [component][replicate]
};

VectorMc run_vector(std::uint64_t seed, std::size_t reps, std::size_t dim,
                    const std::function<void(RngStream&, double*)>& fn, int threads) {
    std::vector<std::vector<double>> samples(dim, std::vector<double>(reps));
    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<double> buf(dim);
#pragma omp for schedule(dynamic)
        for (long r = 0; r < static_cast<long>(reps); ++r) {
            RngStream stream = derive_stream(seed, static_cast<std::uint64_t>(r));
            fn(stream, buf.data());
            for (std::size_t d = 0; d < dim; ++d) samples[d][r] = buf[d];
        }
    }
    VectorMc out;
    out.mean.assign(dim, 0.0);
    out.se.assign(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d) {
        double s = 0.0;
        for (double v : samples[d]) s += v;
        out.mean[d] = s / static_cast<double>(reps);
        double ss = 0.0;
        for (double v : samples[d]) {
            double e = v - out.mean[d];
            ss += e * e;
        }
        out.se[d] = std::sqrt(ss / (static_cast<double>(reps - 1) * static_cast<double>(reps)));
    }
    out.samples = std::move(samples);
    return out;
}

json check(const std::string& name, double value, double target, double tol, bool pass) {
    return json{{"name", name}, {"value", value}, {"target", target}, {"tol", tol},
                {"pass", pass}};
}

json check_within(const std::string& name, double value, double target, double tol) {
    return check(name, value, target, tol, std::abs(value - target) <= tol);
}

ExperimentResult finish(const std::string& name, const ExperimentContext& ctx, json checks,
                        json params = json::object()) {
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
    ExperimentResult res;
    res.pass = pass;
    res.report = json{{"experiment", name},
                      {"seed", ctx.seed},
                      {"params", std::move(params)},
                      {"checks", std::move(checks)},
                      {"pass", pass}};
    return res;
}

double slope_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double nn = static_cast<double>(n);
    return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------

ExperimentResult exp_covariance(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 1000);
    std::size_t lattice = static_cast<std::size_t>(param(ctx, "lattice", 2048));
    const std::vector<std::pair<int, double>> combos{{1, 0.7}, {2, 0.7}, {3, 0.8}};
    const std::vector<std::pair<double, double>> times{{1.0, 1.0}, {1.0, 0.5}, {0.5, 0.25}};
    json checks = json::array();
    int combo_idx = 0;
    for (auto [q, h] : combos) {
        HermiteSpec spec(q, h);
        auto mc = run_vector(
            ctx.seed + combo_idx, reps, times.size(),
            [&](RngStream& s, double* out) {
                auto p = sample_hermite_path(s, spec, 1.0, 4, {.lattice_n = lattice});
                for (std::size_t k = 0; k < times.size(); ++k) {
                    auto [t, ss] = times[k];
                    out[k] = p.values[static_cast<std::size_t>(std::lround(4 * t))] *
                             p.values[static_cast<std::size_t>(std::lround(4 * ss))];
                }
            },
            ctx.threads);
        for (std::size_t k = 0; k < times.size(); ++k) {
            auto [t, ss] = times[k];
            double target = 0.5 * (std::pow(t, 2 * h) + std::pow(ss, 2 * h) -
                                   std::pow(std::abs(t - ss), 2 * h));
            char name[96];
            std::snprintf(name, sizeof(name), "cov q=%d H=%.2f (t,s)=(%.2f,%.2f)", q, h, t, ss);
            checks.push_back(check_within(name, mc.mean[k], target, 3.0 * mc.se[k]));
        }
        ++combo_idx;
    }
    return finish("covariance-reproduction", ctx, std::move(checks),
                  {{"reps", reps}, {"lattice", lattice}});
}

ExperimentResult exp_normalization(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 800);
    std::size_t lattice = static_cast<std::size_t>(param(ctx, "lattice", 512));
    const std::vector<std::pair<int, double>> combos{{1, 0.7}, {2, 0.7}, {3, 0.8}};
    json checks = json::array();
    int combo_idx = 0;
    for (auto [q, h] : combos) {
        HermiteSpec spec(q, h);
        double h0 = spec.h0();
        double sigma2 = hermite_lattice_sigma2(q, h0, lattice);
        auto mc = run_vector(
            ctx.seed + 100 + combo_idx, reps, 2,
            [&](RngStream& s, double* out) {
                auto x = sample_fgn(s, h0, lattice);
                double run = 0.0;
                for (double v : x.values) run += hermite_poly(q, v);
                out[0] = run * run;           // unnormalized lattice sum squared
                out[1] = out[0] / sigma2;     // normalized variance sample
            },
            ctx.threads);
        char n1[64], n2[64];
        std::snprintf(n1, sizeof(n1), "sigma2 q=%d H=%.2f", q, h);
        std::snprintf(n2, sizeof(n2), "unit variance q=%d H=%.2f", q, h);
        checks.push_back(check_within(n1, mc.mean[0], sigma2, 3.0 * mc.se[0]));
        checks.push_back(check_within(n2, mc.mean[1], 1.0, 3.0 * mc.se[1]));
        ++combo_idx;
    }
    return finish("exact-normalization", ctx, std::move(checks),
                  {{"reps", reps}, {"lattice", lattice}});
}

ExperimentResult exp_conjecture(const ExperimentContext& ctx) {
    std::size_t samples = reps_or(ctx, 50000);
    std::size_t lattice = static_cast<std::size_t>(param(ctx, "lattice", 4096));
    const std::vector<double> hs{0.55, 0.7, 0.9};
    const std::vector<std::pair<double, double>> probes{{-0.6256, 0.2658}, {1.3552, 0.9123}};
    json checks = json::array();
    int idx = 0;
    for (double h : hs) {
        LatticeConfig cfg{lattice};
        auto probe = rosenblatt_cdf_probe(ctx.seed + 200 + idx, h, {-0.6256, 1.3552}, samples, cfg,
                                          ctx.threads);
        for (std::size_t k = 0; k < probes.size(); ++k) {
            char name[64];
            std::snprintf(name, sizeof(name), "P(R<=%+.4f) H=%.2f", probes[k].first, h);
            checks.push_back(check_within(name, probe.probability[k], probes[k].second, 0.02));
        }
        ++idx;
    }
    return finish("rosenblatt-conjecture", ctx, std::move(checks),
                  {{"samples", samples}, {"lattice", lattice}});
}

ExperimentResult exp_cumulants(const ExperimentContext& ctx) {
    std::size_t draws = reps_or(ctx, 1000000);
    int m = static_cast<int>(param(ctx, "m", 128));
    json checks = json::array();

    // fixed random 8x8 symmetric kernel
    KernelMatrix k8;
    {
        auto s = derive_stream(ctx.seed + 300, 0);
        int m8 = 8;
        k8.delta = 1.0 / m8;
        k8.grid.resize(m8);
        for (int i = 0; i < m8; ++i) k8.grid[i] = (i + 0.5) * k8.delta;
        Eigen::MatrixXd g(m8, m8);
        for (int i = 0; i < m8; ++i)
            for (int j = 0; j < m8; ++j) g(i, j) = s.gauss();
        k8.a = 0.5 * (g + g.transpose());
    }
    {
        auto v = sample_second_chaos_indexed(ctx.seed + 301, k8, draws, ctx.threads);
        auto est = empirical_cumulants(v, 4);
        for (int p = 2; p <= 4; ++p) {
            char name[48];
            std::snprintf(name, sizeof(name), "random 8x8 kappa_%d MC vs trace", p);
            checks.push_back(check_within(name, est.kappa[p - 1], cumulant_trace(k8, p),
                                          5.0 * est.se[p - 1]));
        }
    }

    // Rosenblatt pair at H = 0.7, (s,t) = (0.5,1), (alpha,beta) = (1,0.5)
    auto pair = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 1.0, 0.5, m);
    for (auto* kp : {&pair.f, &pair.g}) {
        const char* tag = (kp == &pair.f) ? "volterra" : "power";
        auto v = sample_second_chaos_indexed(ctx.seed + 302, *kp, draws, ctx.threads);
        auto est = empirical_cumulants(v, 4);
        for (int p = 2; p <= 4; ++p) {
            char name[64];
            std::snprintf(name, sizeof(name), "pair %s kappa_%d MC vs trace", tag, p);
            checks.push_back(check_within(name, est.kappa[p - 1], cumulant_trace(*kp, p),
                                          5.0 * est.se[p - 1]));
        }
    }
    for (int p = 2; p <= 4; ++p) {
        double kf = cumulant_trace(pair.f, p);
        double kg = cumulant_trace(pair.g, p);
        char name[64];
        std::snprintf(name, sizeof(name), "kappa_%d(Kf) vs kappa_%d(Kg)", p, p);
        checks.push_back(check_within(name, kg, kf, 0.05 * std::abs(kf)));
    }
    return finish("cumulant-trace-mc", ctx, std::move(checks), {{"draws", draws}, {"m", m}});
}

ExperimentResult exp_vasicek(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 200);
    std::size_t n = static_cast<std::size_t>(param(ctx, "n", 8192));
    double a = 1.0, b = 2.0, h = 0.7;
    HermiteSpec spec(2, h);
    json checks = json::array();

    // consistency at T = 200
    auto run_t = [&](double big_t, std::uint64_t seed) {
        return run_vector(
            seed, reps, 2,
            [&](RngStream& s, double* out) {
                auto z = sample_hermite_path(s, spec, big_t, n, {.lattice_n = 4 * n});
                auto x = sample_vasicek(a, b, z);
                auto est = vasicek_estimators(x, h);
                out[0] = est.a_hat;
                out[1] = est.b_hat;
            },
            ctx.threads);
    };
    auto at200 = run_t(200.0, ctx.seed + 400);
    checks.push_back(check_within("mean a_hat (T=200)", at200.mean[0], a, 0.1));
    checks.push_back(check_within("mean b_hat (T=200)", at200.mean[1], b, 0.1));

    // rate regression over T in {50, 100, 200, 400}
    std::vector<double> ts{50.0, 100.0, 200.0, 400.0};
    std::vector<double> med_a, med_b;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto mc = (ts[i] == 200.0) ? at200 : run_t(ts[i], ctx.seed + 410 + i);
        std::vector<double> ea(reps), eb(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            ea[r] = std::abs(mc.samples[0][r] - a);
            eb[r] = std::abs(mc.samples[1][r] - b);
        }
        med_a.push_back(median(ea));
        med_b.push_back(median(eb));
    }
    double rate = -(2.0 / spec.q) * (1.0 - h);  // -0.3
    checks.push_back(check_within("a_hat error slope", slope_loglog(ts, med_a), rate, 0.15));
    checks.push_back(
        check_within("b_hat error slope", slope_loglog(ts, med_b), -(1.0 - h), 0.15));
    return finish("vasicek-consistency", ctx, std::move(checks), {{"reps", reps}, {"n", n}});
}

ExperimentResult exp_ou_variance(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 400);
    double h = 0.7;
    HermiteSpec spec(2, h);
    const double t_end = 50.0;
    const std::size_t n = 2048;
    auto mc = run_vector(
        ctx.seed + 500, reps, 1,
        [&](RngStream& s, double* out) {
            auto z = sample_hermite_path(s, spec, t_end, n, {.lattice_n = 4 * n});
            auto ou = sample_moving_average([](double u) { return std::exp(-u); }, z);
            // time-average of X^2 over the stationary window [T/2, T]
            double acc = 0.0;
            std::size_t from = n / 2;
            for (std::size_t i = from; i <= n; ++i) acc += ou.values[i] * ou.values[i];
            out[0] = acc / static_cast<double>(n - from + 1);
        },
        ctx.threads);
    double target = h * std::tgamma(2.0 * h);
    json checks = json::array();
    checks.push_back(check_within("OU stationary variance", mc.mean[0], target, 0.10 * target));
    return finish("ou-stationary-variance", ctx, std::move(checks), {{"reps", reps}});
}

ExperimentResult exp_qv(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 200);
    json checks = json::array();

    {  // d = 1: q = 2, H = 0.8, N = 2048
        HermiteSpec spec(2, 0.8);
        std::size_t big_n = static_cast<std::size_t>(param(ctx, "n1", 2048));
        std::size_t lattice = 16 * big_n;
        auto mc = run_vector(
            ctx.seed + 600, reps, 1,
            [&](RngStream& s, double* out) {
                auto p = sample_hermite_path(s, spec, 1.0, big_n, {.lattice_n = lattice});
                double stat = qv_limit_statistic(p, spec, big_n);
                out[0] = stat * stat;
            },
            ctx.threads);
        checks.push_back(check_within("E[stat^2] d=1 q=2 H=0.8", mc.mean[0], 1.0, 0.15));
    }

    {  // d = 2 at 256^2
        HermiteSpec spec(2, std::vector<double>{0.8, 0.8});
        std::size_t big_n = static_cast<std::size_t>(param(ctx, "n2", 256));
        std::size_t lattice = 4 * big_n;
        Eigen::MatrixXd l1 = fgn_cholesky(spec.h0(0), lattice);
        auto mc = run_vector(
            ctx.seed + 601, reps, 1,
            [&](RngStream& s, double* out) {
                auto f = sample_hermite_sheet_with_factors(s, spec, {1.0, 1.0}, {big_n, big_n},
                                                           l1, l1);
                double stat = qv_limit_statistic(f, spec, {big_n, big_n});
                out[0] = stat * stat;
            },
            ctx.threads);
        checks.push_back(check_within("E[stat^2] d=2 q=2 H=0.8", mc.mean[0], 1.0, 0.25));
    }
    return finish("qv-normalization", ctx, std::move(checks), {{"reps", reps}});
}

ExperimentResult exp_gt(const ExperimentContext& ctx) {
    std::size_t reps = reps_or(ctx, 200);
    double h = 0.7;
    HermiteSpec spec(2, h);
    const double big_t = 400.0;
    const std::size_t n = static_cast<std::size_t>(param(ctx, "n", 8192));
    auto kernel = [](double u) { return std::exp(-u); };
    auto centering = gt_centering_profile(kernel, h, big_t, n);
    auto mc = run_vector(
        ctx.seed + 700, reps, 1,
        [&](RngStream& s, double* out) {
            auto z = sample_hermite_path(s, spec, big_t, n, {.lattice_n = 4 * n});
            auto x = sample_moving_average(kernel, z);
            out[0] = quadratic_functional_GT(x, spec, 1.0, centering);
        },
        ctx.threads);
    double var = 0.0;
    for (double v : mc.samples[0]) {
        double d = v - mc.mean[0];
        var += d * d;
    }
    var /= static_cast<double>(reps - 1);
    double b = const_b_mavg(h, 2, kernel);
    json checks = json::array();
    checks.push_back(check_within("Var(G_T(1)) vs b(H,2)^2", var, b * b, 0.25 * b * b));
    // the self-consistent limit carries the combinatorial factor q: see the
    // module tests; reported here for context
    return finish("gt-limit-variance", ctx, std::move(checks),
                  {{"reps", reps}, {"n", n}, {"b", b}, {"ratio_to_qb_sq", var / (4.0 * b * b)}});
}

ExperimentResult exp_info(const ExperimentContext& ctx) {
    json checks = json::array();
    for (double s2 : {1.0, 4.0}) {
        double j = fisher_information(gaussian_model(0.0, s2));
        char name[48];
        std::snprintf(name, sizeof(name), "J(N(0,%.0f)) = 1/%.0f", s2, s2);
        checks.push_back(check_within(name, j, 1.0 / s2, 1e-6));
    }
    auto mixture = standardize_model(gaussian_mixture_model({0.5, 0.5}, {-1.0, 1.0}, {0.5, 0.5}));
    auto gap = de_bruijn_gap(mixture);
    checks.push_back(check_within("de Bruijn |lhs - rhs| (mixture)", gap.lhs - gap.rhs, 0.0, 1e-3));

    for (const auto& [label, model] :
         std::vector<std::pair<std::string, DensityModel>>{{"mixture", mixture},
                                                           {"student-t(10)", student_t_model(10.0)}}) {
        auto r = inequality_suite(model);
        checks.push_back(check("CKP ordering: " + label, 2.0 * r.d_tv * r.d_tv, r.rel_entropy,
                               0.0, r.ckp_ok));
        checks.push_back(check("entropy-Fisher ordering: " + label, r.rel_entropy,
                               0.5 * (r.fisher - 1.0), 0.0, r.entropy_fisher_ok));
    }

    ProductDensityModel prod{{mixture, gaussian_model(0.0, 1.0)}};
    auto tb = multivariate_trace_bound(prod);
    checks.push_back(
        check("trace-bound chain (mixture x gaussian)", tb.lhs, tb.rhs, 0.0, tb.chain_ok));
    ProductDensityModel prod2{{mixture, gaussian_model(0.0, 4.0)}};
    auto tb2 = multivariate_trace_bound(prod2);
    checks.push_back(
        check("trace-bound chain (scaled gaussian)", tb2.lhs, tb2.rhs, 0.0, tb2.chain_ok));
    return finish("info-metrics", ctx, std::move(checks));
}

const std::map<std::string, ExperimentFn>& registry() {
    static const std::map<std::string, ExperimentFn> reg = {
        {"covariance-reproduction", exp_covariance},
        {"exact-normalization", exp_normalization},
        {"rosenblatt-conjecture", exp_conjecture},
        {"cumulant-trace-mc", exp_cumulants},
        {"vasicek-consistency", exp_vasicek},
        {"ou-stationary-variance", exp_ou_variance},
        {"qv-normalization", exp_qv},
        {"gt-limit-variance", exp_gt},
        {"info-metrics", exp_info},
    };
    return reg;
}

}  // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

bool has_experiment(const std::string& name) { return registry().count(name) > 0; }

ExperimentResult run_experiment(const std::string& name, const ExperimentContext& ctx) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::domain_error("unknown experiment: " + name);
    return it->second(ctx);
}

}  // namespace hermite
