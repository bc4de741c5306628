#include "hermite/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "hermite/errors.hpp"
#include "hermite/fft.hpp"

namespace hermite {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double integrate_model(const std::function<double(double)>& fn, double lo, double hi,
                       int panels = 96, int nodes = 12) {
    return integrate_gl_panels(fn, lo, hi, nodes, panels);
}

double gauss_pdf(double x, double mu, double sigma) {
    double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
}

}  // namespace

void DensityModel::validate() const {
    if (!pdf) throw std::domain_error("DensityModel: missing pdf");
    if (!(hi > lo)) throw std::domain_error("DensityModel: empty support");
    if (!(variance > 0.0)) throw std::domain_error("DensityModel: variance must be positive");
    double mass = integrate_model(pdf, lo, hi);
    if (std::abs(mass - 1.0) > 1e-6)
        throw std::domain_error("DensityModel: pdf does not integrate to 1 (got " +
                                std::to_string(mass) + ")");
    if (smooth) {
        if (!score) throw std::domain_error("DensityModel: smooth model must carry a score");
        // Stein identity on g = 1, x, x^2
        double s0 = integrate_model([&](double x) { return score(x) * pdf(x); }, lo, hi);
        double s1 = integrate_model([&](double x) { return score(x) * x * pdf(x); }, lo, hi);
        double s2 = integrate_model([&](double x) { return score(x) * x * x * pdf(x); }, lo, hi);
        if (std::abs(s0) > 1e-4 || std::abs(s1 + 1.0) > 1e-4 ||
            std::abs(s2 + 2.0 * mean) > 1e-4)
            throw std::domain_error("DensityModel: score violates the Stein identity");
    }
}

DensityModel gaussian_model(double mu, double sigma2) {
    double sigma = std::sqrt(sigma2);
    DensityModel m;
    m.pdf = [mu, sigma](double x) { return gauss_pdf(x, mu, sigma); };
    m.score = [mu, sigma2](double x) { return -(x - mu) / sigma2; };
    m.lo = mu - 12.0 * sigma;
    m.hi = mu + 12.0 * sigma;
    m.mean = mu;
    m.variance = sigma2;
    m.name = "gaussian";
    m.validate();
    return m;
}

DensityModel uniform_model(double a, double b) {
    if (!(b > a)) throw std::domain_error("uniform_model: need a < b");
    double inv = 1.0 / (b - a);
    DensityModel m;
    m.pdf = [a, b, inv](double x) { return (x >= a && x <= b) ? inv : 0.0; };
    m.score = [](double) { return 0.0; };
    m.lo = a;
    m.hi = b;
    m.mean = 0.5 * (a + b);
    m.variance = (b - a) * (b - a) / 12.0;
    m.smooth = false;
    m.name = "uniform";
    m.validate();
    return m;
}

DensityModel gaussian_mixture_model(const std::vector<double>& weights,
                                    const std::vector<double>& means,
                                    const std::vector<double>& sds) {
    std::size_t k = weights.size();
    if (k == 0 || means.size() != k || sds.size() != k)
        throw std::domain_error("gaussian_mixture_model: component size mismatch");
    double wsum = 0.0;
    for (double w : weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::domain_error("gaussian_mixture_model: weights must sum to 1");

    auto pdf = [weights, means, sds, k](double x) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += weights[i] * gauss_pdf(x, means[i], sds[i]);
        return s;
    };
    auto dpdf = [weights, means, sds, k](double x) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double z = (x - means[i]) / sds[i];
            s += -weights[i] * gauss_pdf(x, means[i], sds[i]) * z / sds[i];
        }
        return s;
    };

    DensityModel m;
    m.pdf = pdf;
    m.score = [pdf, dpdf](double x) { return dpdf(x) / std::max(pdf(x), 1e-300); };
    double lo = means[0], hi = means[0], mu = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        lo = std::min(lo, means[i] - 12.0 * sds[i]);
        hi = std::max(hi, means[i] + 12.0 * sds[i]);
        mu += weights[i] * means[i];
        m2 += weights[i] * (sds[i] * sds[i] + means[i] * means[i]);
    }
    m.lo = lo;
    m.hi = hi;
    m.mean = mu;
    m.variance = m2 - mu * mu;
    m.name = "gaussian-mixture";
    m.validate();
    return m;
}

DensityModel student_t_model(double nu) {
    if (nu <= 2.0) throw std::domain_error("student_t_model: nu must exceed 2");
    double c = std::exp(std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu)) /
               std::sqrt(nu * M_PI);
    double s = std::sqrt(nu / (nu - 2.0));  // standardizing scale
    DensityModel m;
    m.pdf = [c, s, nu](double y) {
        double x = y * s;
        return s * c * std::pow(1.0 + x * x / nu, -0.5 * (nu + 1.0));
    };
    m.score = [s, nu](double y) {
        double x = y * s;
        return s * (-(nu + 1.0) * x / (nu + x * x));
    };
    m.lo = -80.0;
    m.hi = 80.0;
    m.mean = 0.0;
    m.variance = 1.0;
    m.name = "student-t";
    m.validate();
    return m;
}

DensityModel standardize_model(const DensityModel& f) {
    double s = std::sqrt(f.variance);
    double mu = f.mean;
    auto pdf = f.pdf;
    auto score = f.score;
    DensityModel m;
    m.pdf = [pdf, mu, s](double y) { return s * pdf(mu + s * y); };
    m.score = [score, mu, s](double y) { return s * score(mu + s * y); };
    m.lo = (f.lo - mu) / s;
    m.hi = (f.hi - mu) / s;
    m.mean = 0.0;
    m.variance = 1.0;
    m.smooth = f.smooth;
    m.name = f.name + "-standardized";
    m.validate();
    return m;
}

DensityModel kde_model(const std::vector<double>& samples, double bandwidth) {
    std::size_t n = samples.size();
    if (n < 100) throw std::domain_error("kde_model: need at least 100 samples");
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : samples) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n - 1);
    if (!(var > 0.0)) throw std::domain_error("kde_model: degenerate samples");
    double h = bandwidth > 0.0 ? bandwidth
                               : 1.06 * std::sqrt(var) * std::pow(static_cast<double>(n), -0.2);

    auto data = std::make_shared<std::vector<double>>(samples);
    auto pdf = [data, h, n](double x) {
        double s = 0.0;
        for (double xi : *data) {
            double z = (x - xi) / h;
            s += std::exp(-0.5 * z * z);
        }
        return s / (static_cast<double>(n) * h * std::sqrt(2.0 * M_PI));
    };
    auto dpdf = [data, h, n](double x) {
        double s = 0.0;
        for (double xi : *data) {
            double z = (x - xi) / h;
            s += -z * std::exp(-0.5 * z * z);
        }
        return s / (static_cast<double>(n) * h * h * std::sqrt(2.0 * M_PI));
    };

    auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    DensityModel m;
    m.pdf = pdf;
    m.score = [pdf, dpdf](double x) { return dpdf(x) / std::max(pdf(x), 1e-300); };
    m.lo = *mn - 10.0 * h;
    m.hi = *mx + 10.0 * h;
    m.mean = mean;
    m.variance = var + h * h;  // variance of the smoothed density
    m.name = "kde";
    m.validate();
    return m;
}

void ProductDensityModel::validate() const {
    if (components.empty()) throw std::domain_error("ProductDensityModel: no components");
    for (const auto& c : components) {
        c.validate();
        if (std::abs(c.mean) > 1e-8)
            throw std::domain_error("ProductDensityModel: components must be centered");
    }
}

double entropy(const DensityModel& f, const QuadratureSpec&) {
    return integrate_model(
        [&](double x) {
            double p = f.pdf(x);
            return p > 0.0 ? -p * std::log(p) : 0.0;
        },
        f.lo, f.hi);
}

double relative_entropy(const DensityModel& f, const DensityModel& g, const QuadratureSpec&) {
    // mass of f outside supp(g)
    double outside = 0.0;
    if (f.lo < g.lo) outside += integrate_model(f.pdf, f.lo, std::min(f.hi, g.lo));
    if (f.hi > g.hi) outside += integrate_model(f.pdf, std::max(f.lo, g.hi), f.hi);
    outside += integrate_model(
        [&](double x) { return (g.pdf(x) <= 0.0 && f.pdf(x) > 0.0) ? f.pdf(x) : 0.0; },
        std::max(f.lo, g.lo), std::min(f.hi, g.hi));
    if (outside > 1e-10) return kInf;
    return integrate_model(
        [&](double x) {
            double p = f.pdf(x);
            if (p <= 0.0) return 0.0;
            double q = std::max(g.pdf(x), 1e-300);
            return p * std::log(p / q);
        },
        f.lo, f.hi);
}

double fisher_information(const DensityModel& f, const QuadratureSpec&) {
    if (!f.smooth) throw std::domain_error("fisher_information: density not differentiable");
    return integrate_model(
        [&](double x) {
            double r = f.score(x);
            return r * r * f.pdf(x);
        },
        f.lo, f.hi);
}

double total_variation(const DensityModel& f, const DensityModel& g, const QuadratureSpec&) {
    double lo = std::min(f.lo, g.lo), hi = std::max(f.hi, g.hi);
    return 0.5 * integrate_model(
                     [&](double x) {
                         double pf = (x >= f.lo && x <= f.hi) ? f.pdf(x) : 0.0;
                         double pg = (x >= g.lo && x <= g.hi) ? g.pdf(x) : 0.0;
                         return std::abs(pf - pg);
                     },
                     lo, hi, 192, 12);
}

namespace {

/// Fisher information of sqrt(t) F + sqrt(1-t) Z on a shared uniform grid,
/// by linear DFT convolution of the scaled density with the Gaussian kernel
/// (density derivative taken through the Gaussian factor).
double fisher_of_interpolation(const DensityModel& f, double t, double lo, double hi, int npts) {
    double st = std::sqrt(t), sz = std::sqrt(1.0 - t);
    double dx = (hi - lo) / npts;
    int center = npts / 2;
    std::vector<double> a(npts), b(npts + 1), db(npts + 1);
    for (int i = 0; i < npts; ++i) {
        double y = (lo + i * dx) / st;
        a[i] = (y >= f.lo && y <= f.hi) ? f.pdf(y) / st : 0.0;
    }
    // Gaussian factor sampled symmetrically: b[k] = phi((k - center) dx)
    for (int k = 0; k <= npts; ++k) {
        double z = (k - center) * dx / sz;
        double phi = std::exp(-0.5 * z * z) / (sz * std::sqrt(2.0 * M_PI));
        b[k] = phi;
        db[k] = -z / sz * phi;
    }
    auto conv = fft_convolve(a, b);
    auto dconv = fft_convolve(a, db);
    // f_t(x_i) = dx * sum_j a_j phi(x_i - y_j) = dx * conv[i + center]
    double j = 0.0;
    for (int k = 0; k < npts; ++k) {
        double ft = conv[k + center] * dx;
        double dft = dconv[k + center] * dx;
        if (ft > 1e-100) j += dft * dft / ft * dx;
    }
    return j;
}

}  // namespace

DeBruijnGap de_bruijn_gap(const DensityModel& f, const QuadratureSpec&, int t_nodes) {
    if (std::abs(f.mean) > 1e-8 || std::abs(f.variance - 1.0) > 1e-6)
        throw std::domain_error("de_bruijn_gap: model must be standardized");
    DensityModel z = gaussian_model(0.0, 1.0);
    DeBruijnGap out;
    out.lhs = relative_entropy(f, z);

    const int npts = 1 << 13;
    const double half = 10.0;  // standardized input: grid [-10, 10]
    double lo = -half, hi = half;

    // integral over t in log scale; integrand -> 0 at t -> 0 for
    // standardized f, truncation below t_min contributes O(t_min)
    const double t_min = 1e-3;
    std::vector<double> ys, ws;
    gauss_legendre_ab(t_nodes, std::log(t_min), 0.0, ys, ws);
    double rhs = 0.0;
    for (int i = 0; i < t_nodes; ++i) {
        double t = std::exp(ys[i]);
        double jt = fisher_of_interpolation(f, t, lo, hi, npts);
        rhs += ws[i] * 0.5 * (jt - 1.0);  // dt = t dy cancels the 1/(2t)
    }
    out.rhs = rhs;
    return out;
}

InequalityReport inequality_suite(const DensityModel& f, const QuadratureSpec& quad) {
    if (std::abs(f.mean) > 1e-8 || std::abs(f.variance - 1.0) > 1e-6)
        throw std::domain_error("inequality_suite: model must be standardized");
    DensityModel z = gaussian_model(0.0, 1.0);
    InequalityReport r;
    r.d_tv = total_variation(f, z, quad);
    r.rel_entropy = relative_entropy(f, z, quad);
    r.fisher = fisher_information(f, quad);
    r.fisher_st = f.variance * r.fisher - 1.0;
    r.ckp_ok = 2.0 * r.d_tv * r.d_tv <= r.rel_entropy + 1e-9;
    r.entropy_fisher_ok = r.rel_entropy <= 0.5 * (r.fisher - 1.0) + 1e-9;

    double lo = std::min(f.lo, z.lo), hi = std::max(f.hi, z.hi);
    double sup = 0.0;
    int pts = 4096;
    for (int i = 0; i <= pts; ++i) {
        double x = lo + (hi - lo) * i / pts;
        double pf = (x >= f.lo && x <= f.hi) ? f.pdf(x) : 0.0;
        sup = std::max(sup, std::abs(pf - z.pdf(x)));
    }
    r.sup_density_diff = sup;
    r.sup_bound_j = std::sqrt(r.fisher);
    r.sup_bound_jst = std::sqrt(std::max(r.fisher_st, 0.0));
    r.tv_bound_j = r.sup_bound_j / std::sqrt(2.0);
    r.tv_bound_jst = r.sup_bound_jst / std::sqrt(2.0);
    return r;
}

TraceBoundReport multivariate_trace_bound(const ProductDensityModel& f,
                                          const QuadratureSpec& quad) {
    f.validate();
    TraceBoundReport r;
    double d_total = 0.0, tr = 0.0, cop = 0.0;
    std::vector<DensityModel> gaussians;
    for (const auto& c : f.components) {
        DensityModel g = gaussian_model(0.0, c.variance);
        d_total += relative_entropy(c, g, quad);
        tr += fisher_information(c, quad) - 1.0 / c.variance;
        cop = std::max(cop, c.variance);
        gaussians.push_back(std::move(g));
    }
    r.rel_entropy = d_total;
    r.trace_cinv_jst = tr;
    r.c_op = cop;

    // d_TV of the product against the Gaussian product: 1-d reduction when
    // all but one component coincide with their Gaussian; exact tensor-grid
    // quadrature for d = 2
    std::size_t d = f.components.size();
    std::vector<std::size_t> nontrivial;
    for (std::size_t i = 0; i < d; ++i) {
        double tv_i = total_variation(f.components[i], gaussians[i], quad);
        if (tv_i > 1e-12) nontrivial.push_back(i);
    }
    if (nontrivial.size() <= 1) {
        r.d_tv = nontrivial.empty()
                     ? 0.0
                     : total_variation(f.components[nontrivial[0]], gaussians[nontrivial[0]], quad);
    } else if (d == 2) {
        const auto& c0 = f.components[0];
        const auto& c1 = f.components[1];
        const auto& g0 = gaussians[0];
        const auto& g1 = gaussians[1];
        int pts = 384;
        double s = 0.0;
        double lo0 = std::min(c0.lo, g0.lo), hi0 = std::max(c0.hi, g0.hi);
        double lo1 = std::min(c1.lo, g1.lo), hi1 = std::max(c1.hi, g1.hi);
        double dx0 = (hi0 - lo0) / pts, dx1 = (hi1 - lo1) / pts;
        for (int i = 0; i < pts; ++i) {
            double x0 = lo0 + (i + 0.5) * dx0;
            double pf0 = (x0 >= c0.lo && x0 <= c0.hi) ? c0.pdf(x0) : 0.0;
            double pg0 = g0.pdf(x0);
            for (int j = 0; j < pts; ++j) {
                double x1 = lo1 + (j + 0.5) * dx1;
                double pf1 = (x1 >= c1.lo && x1 <= c1.hi) ? c1.pdf(x1) : 0.0;
                s += std::abs(pf0 * pf1 - pg0 * g1.pdf(x1));
            }
        }
        r.d_tv = 0.5 * s * dx0 * dx1;
    } else {
        throw std::domain_error(
            "multivariate_trace_bound: d > 2 with several non-Gaussian components not supported");
    }

    r.lhs = 4.0 * r.d_tv * r.d_tv;
    r.mid = 2.0 * r.rel_entropy;
    r.rhs = r.c_op * r.trace_cinv_jst;
    r.chain_ok = r.lhs <= r.mid + 1e-9 && r.mid <= r.rhs + 1e-9;
    return r;
}

}  // namespace hermite
