#include "hermite/stats.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermite/constants.hpp"
#include "hermite/errors.hpp"
#include "hermite/quadrature.hpp"

namespace hermite {

namespace {

std::size_t grid_index(double coord, double extent, std::size_t dim) {
    double r = coord / extent * static_cast<double>(dim);
    long idx = std::lround(r);
    if (idx < 0 || static_cast<std::size_t>(idx) > dim || std::abs(r - idx) > 1e-9)
        throw std::domain_error("generalized_increment: corner off the field grid");
    return static_cast<std::size_t>(idx);
}

double trapezoid(const std::vector<double>& v, double dt, std::size_t upto) {
    double s = 0.0;
    for (std::size_t i = 0; i < upto; ++i) s += 0.5 * (v[i] + v[i + 1]);
    return s * dt;
}

}  // namespace

double generalized_increment(const FieldSample& field, const IncrementCell& cell) {
    if (cell.s.size() != 2 || cell.t.size() != 2)
        throw std::domain_error("generalized_increment: d = 2 cells expected");
    for (int j = 0; j < 2; ++j)
        if (!(cell.s[j] < cell.t[j]))
            throw std::domain_error("generalized_increment: need s < t componentwise");
    std::size_t i0 = grid_index(cell.s[0], field.extents[0], field.dims[0]);
    std::size_t i1 = grid_index(cell.t[0], field.extents[0], field.dims[0]);
    std::size_t j0 = grid_index(cell.s[1], field.extents[1], field.dims[1]);
    std::size_t j1 = grid_index(cell.t[1], field.extents[1], field.dims[1]);
    return field.values(i1, j1) - field.values(i1, j0) - field.values(i0, j1) +
           field.values(i0, j0);
}

double quadratic_variation(const FieldSample& field, const HermiteSpec& spec,
                           const std::vector<std::size_t>& n_lattice) {
    if (n_lattice.size() != 2 || spec.dim() != 2)
        throw std::domain_error("quadratic_variation: d = 2 expected");
    for (double e : field.extents)
        if (std::abs(e - 1.0) > 1e-12)
            throw std::domain_error("quadratic_variation: unit extents expected");
    std::size_t n1 = n_lattice[0], n2 = n_lattice[1];
    if (field.dims[0] % n1 != 0 || field.dims[1] % n2 != 0)
        throw std::domain_error("quadratic_variation: grid does not refine the lattice");
    std::size_t s1 = field.dims[0] / n1, s2 = field.dims[1] / n2;

    double npow = std::pow(static_cast<double>(n1), 2.0 * spec.H[0]) *
                  std::pow(static_cast<double>(n2), 2.0 * spec.H[1]);
    double acc = 0.0;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            double d = field.values((i + 1) * s1, (j + 1) * s2) -
                       field.values((i + 1) * s1, j * s2) - field.values(i * s1, (j + 1) * s2) +
                       field.values(i * s1, j * s2);
            acc += npow * d * d - 1.0;
        }
    return acc / (static_cast<double>(n1) * static_cast<double>(n2));
}

double quadratic_variation(const SamplePath& path, const HermiteSpec& spec,
                           std::size_t n_lattice) {
    if (std::abs(path.t_end - 1.0) > 1e-12)
        throw std::domain_error("quadratic_variation: unit extent expected");
    if (path.n % n_lattice != 0)
        throw std::domain_error("quadratic_variation: grid does not refine the lattice");
    std::size_t s = path.n / n_lattice;
    double npow = std::pow(static_cast<double>(n_lattice), 2.0 * spec.scalar_H());
    double acc = 0.0;
    for (std::size_t i = 0; i < n_lattice; ++i) {
        double d = path.values[(i + 1) * s] - path.values[i * s];
        acc += npow * d * d - 1.0;
    }
    return acc / static_cast<double>(n_lattice);
}

namespace {

double qv_scaling(const HermiteSpec& spec, const std::vector<std::size_t>& n_lattice) {
    double c1 = const_c1_sheet(spec);
    double fact = std::tgamma(spec.q + 1.0) * spec.q;
    double npow = 1.0;
    for (std::size_t j = 0; j < n_lattice.size(); ++j)
        npow *= std::pow(static_cast<double>(n_lattice[j]),
                         (2.0 - 2.0 * spec.H[j]) / static_cast<double>(spec.q));
    return npow / (std::sqrt(c1) * fact);
}

}  // namespace

double qv_limit_statistic(const FieldSample& field, const HermiteSpec& spec,
                          const std::vector<std::size_t>& n_lattice) {
    if (spec.q < 2) throw std::domain_error("qv_limit_statistic: q >= 2 expected");
    return qv_scaling(spec, n_lattice) * quadratic_variation(field, spec, n_lattice);
}

double qv_limit_statistic(const SamplePath& path, const HermiteSpec& spec, std::size_t n_lattice) {
    if (spec.q < 2) throw std::domain_error("qv_limit_statistic: q >= 2 expected");
    return qv_scaling(spec, {n_lattice}) * quadratic_variation(path, spec, n_lattice);
}

HurstEstimate estimate_hurst_qv(const SamplePath& path, int q) {
    if (q < 1) throw std::domain_error("estimate_hurst_qv: q must be >= 1");
    if (path.n % 4 != 0 || path.n < 8)
        throw std::domain_error("estimate_hurst_qv: n must be a multiple of 4 and >= 8");
    auto qv_at = [&](std::size_t step) {
        double s = 0.0;
        for (std::size_t i = 0; i + step <= path.n; i += step) {
            double d = path.values[i + step] - path.values[i];
            s += d * d;
        }
        return s;
    };
    double s_fine = qv_at(1);
    double s_coarse = qv_at(2);
    if (!(s_fine > 0.0) || !(s_coarse > 0.0))
        throw EstimationError("estimate_hurst_qv: nonpositive quadratic variation");
    HurstEstimate out;
    out.h = 0.5 * (1.0 - std::log2(s_fine / s_coarse));
    out.boundary = out.h >= 1.0 - 1e-9;
    return out;
}

std::vector<double> gt_centering_profile(const std::function<double(double)>& kernel, double hurst,
                                         double t_end, std::size_t n) {
    double dt = t_end / static_cast<double>(n);
    double gamma = 2.0 * hurst - 2.0;
    std::vector<double> f(n), w(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = kernel((i + 0.5) * dt);
    for (std::size_t d = 0; d < n; ++d)
        w[d] = cell_integral_abs_pow(0.0, dt, d * dt, (d + 1) * dt, gamma);

    std::vector<double> out(n + 1, 0.0);
    double c = hurst * (2.0 * hurst - 1.0);
    double m = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t i = k - 1;  // newly added cell
        double cross = 0.0;
        for (std::size_t j = 0; j < i; ++j) cross += f[j] * w[i - j];
        m += 2.0 * f[i] * cross + f[i] * f[i] * w[0];
        out[k] = c * m;
    }
    return out;
}

double quadratic_functional_GT(const SamplePath& x, const HermiteSpec& spec, double t,
                               const std::vector<double>& centering) {
    if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("quadratic_functional_GT: t in (0,1]");
    if (centering.size() != x.n + 1)
        throw std::domain_error("quadratic_functional_GT: centering profile length mismatch");
    double big_t = x.t_end;
    std::size_t upto = static_cast<std::size_t>(std::lround(t * static_cast<double>(x.n)));
    upto = std::min(upto, x.n);
    std::vector<double> integrand(x.n + 1);
    for (std::size_t i = 0; i <= x.n; ++i)
        integrand[i] = x.values[i] * x.values[i] - centering[i];
    double h0 = spec.h0();
    return std::pow(big_t, -(2.0 * h0 - 1.0)) * trapezoid(integrand, x.dt(), upto);
}

double quadratic_functional_GT(const SamplePath& x, const HermiteSpec& spec, double t) {
    if (!x.ma_kernel)
        throw std::domain_error("quadratic_functional_GT: path carries no moving-average kernel");
    auto centering = gt_centering_profile(x.ma_kernel, spec.scalar_H(), x.t_end, x.n);
    return quadratic_functional_GT(x, spec, t, centering);
}

VasicekEstimate vasicek_estimators(const SamplePath& x, double hurst) {
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("vasicek_estimators: H must lie in (0.5, 1)");
    double big_t = x.t_end;
    std::vector<double> sq(x.n + 1);
    for (std::size_t i = 0; i <= x.n; ++i) sq[i] = x.values[i] * x.values[i];
    VasicekEstimate est;
    est.b_hat = trapezoid(x.values, x.dt(), x.n) / big_t;
    double alpha = trapezoid(sq, x.dt(), x.n) / big_t - est.b_hat * est.b_hat;
    if (alpha <= 0.0)
        throw EstimationError("vasicek_estimators: nonpositive variance functional alpha_T");
    double scale = hurst * std::tgamma(2.0 * hurst);
    est.a_hat = std::pow(alpha / scale, -0.5 / hurst);
    return est;
}

namespace {

void cumulants_from_sums(const double* x, std::size_t n, int p_max, double* out) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x[i];
    mean /= static_cast<double>(n);
    double m[7] = {0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - mean;
        double p = d;
        for (int r = 2; r <= p_max; ++r) {
            p *= d;
            m[r] += p;
        }
    }
    double nn = static_cast<double>(n);
    for (int r = 2; r <= p_max; ++r) m[r] /= nn;

    out[0] = mean;
    if (p_max >= 2) out[1] = nn / (nn - 1.0) * m[2];
    if (p_max >= 3) out[2] = nn * nn / ((nn - 1.0) * (nn - 2.0)) * m[3];
    if (p_max >= 4)
        out[3] = nn * nn * ((nn + 1.0) * m[4] - 3.0 * (nn - 1.0) * m[2] * m[2]) /
                 ((nn - 1.0) * (nn - 2.0) * (nn - 3.0));
    if (p_max >= 5) out[4] = m[5] - 10.0 * m[3] * m[2];
    if (p_max >= 6)
        out[5] = m[6] - 15.0 * m[4] * m[2] - 10.0 * m[3] * m[3] + 30.0 * m[2] * m[2] * m[2];
}

}  // namespace

CdfProbe rosenblatt_cdf_probe(std::uint64_t master_seed, double hurst,
                              const std::vector<double>& points, std::size_t n_samples,
                              const LatticeConfig& cfg, int threads) {
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("rosenblatt_cdf_probe: H must lie in (0.5, 1)");
    HermiteSpec spec(2, hurst);
    std::vector<double> draws(n_samples);
    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
    for (long r = 0; r < static_cast<long>(n_samples); ++r) {
        RngStream s = derive_stream(master_seed, static_cast<std::uint64_t>(r));
        draws[r] = sample_hermite_path(s, spec, 1.0, 1, cfg).values[1];
    }
    CdfProbe probe;
    probe.points = points;
    for (double x : points) {
        std::size_t count = 0;
        for (double v : draws) count += (v <= x);
        double p = static_cast<double>(count) / static_cast<double>(n_samples);
        probe.probability.push_back(p);
        probe.std_error.push_back(std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples)));
    }
    return probe;
}

CumulantEstimates empirical_cumulants(const std::vector<double>& samples, int p_max) {
    if (p_max < 1 || p_max > 6)
        throw std::domain_error("empirical_cumulants: p_max must lie in [1, 6]");
    std::size_t n = samples.size();
    if (n < static_cast<std::size_t>(10 * p_max))
        throw std::domain_error("empirical_cumulants: need at least 10 * p_max samples");

    CumulantEstimates est;
    est.kappa.assign(p_max, 0.0);
    est.se.assign(p_max, 0.0);
    cumulants_from_sums(samples.data(), n, p_max, est.kappa.data());

    // delete-block jackknife
    std::size_t blocks = std::min<std::size_t>(100, n / static_cast<std::size_t>(10 * p_max));
    if (blocks < 2) return est;
    std::size_t bsz = n / blocks;
    std::vector<std::vector<double>> theta(blocks, std::vector<double>(p_max));
    std::vector<double> rest;
    rest.reserve(n);
    for (std::size_t b = 0; b < blocks; ++b) {
        rest.clear();
        std::size_t lo = b * bsz, hi = (b == blocks - 1) ? n : (b + 1) * bsz;
        for (std::size_t i = 0; i < n; ++i)
            if (i < lo || i >= hi) rest.push_back(samples[i]);
        cumulants_from_sums(rest.data(), rest.size(), p_max, theta[b].data());
    }
    for (int r = 0; r < p_max; ++r) {
        double mb = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) mb += theta[b][r];
        mb /= static_cast<double>(blocks);
        double v = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) {
            double d = theta[b][r] - mb;
            v += d * d;
        }
        double bb = static_cast<double>(blocks);
        est.se[r] = std::sqrt((bb - 1.0) / bb * v);
    }
    return est;
}

}  // namespace hermite
