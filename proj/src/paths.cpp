#include "hermite/paths.hpp"

#include <cmath>
#include <stdexcept>

#include "hermite/constants.hpp"
#include "hermite/fft.hpp"
#include "hermite/fgn.hpp"
#include "hermite/hermite_poly.hpp"

namespace hermite {

std::size_t LatticeConfig::effective(std::size_t n) const {
    std::size_t base = std::max<std::size_t>(lattice_n, 8);
    std::size_t mult = (base + n - 1) / n;
    return mult * n;
}

SamplePath sample_fbm(RngStream& stream, double hurst, double t_end, std::size_t n) {
    if (n < 1) throw std::domain_error("sample_fbm: n must be >= 1");
    if (t_end <= 0.0) throw std::domain_error("sample_fbm: t_end must be positive");
    FgnSample incr = sample_fgn(stream, hurst, n);
    SamplePath p;
    p.t_end = t_end;
    p.n = n;
    p.q = 1;
    p.hurst = hurst;
    p.values.assign(n + 1, 0.0);
    double scale = std::pow(t_end / static_cast<double>(n), hurst);
    for (std::size_t i = 0; i < n; ++i) p.values[i + 1] = p.values[i] + scale * incr.values[i];
    return p;
}

double hermite_lattice_sigma2(int q, double h0, std::size_t lattice_n) {
    double s = static_cast<double>(lattice_n);  // k = 0 diagonal, rho = 1
    for (std::size_t k = 1; k < lattice_n; ++k) {
        double r = rho_fgn(h0, static_cast<long>(k));
        s += 2.0 * static_cast<double>(lattice_n - k) * std::pow(r, q);
    }
    return std::tgamma(q + 1.0) * s;
}

SamplePath sample_hermite_path(RngStream& stream, const HermiteSpec& spec, double t_end,
                               std::size_t n, const LatticeConfig& cfg) {
    spec.validate();
    if (spec.dim() != 1) throw std::domain_error("sample_hermite_path: scalar H expected");
    if (n < 1) throw std::domain_error("sample_hermite_path: n must be >= 1");
    double hurst = spec.scalar_H();
    double h0 = spec.h0();
    std::size_t lat = cfg.effective(n);
    std::size_t step = lat / n;

    FgnSample x = sample_fgn(stream, h0, lat);
    double inv_sigma = 1.0 / std::sqrt(hermite_lattice_sigma2(spec.q, h0, lat));
    double scale = std::pow(t_end, hurst) * inv_sigma;

    SamplePath p;
    p.t_end = t_end;
    p.n = n;
    p.q = spec.q;
    p.hurst = hurst;
    p.values.assign(n + 1, 0.0);
    double run = 0.0;
    std::size_t next_out = 1;
    for (std::size_t i = 0; i < lat; ++i) {
        run += hermite_poly(spec.q, x.values[i]);
        if ((i + 1) % step == 0) p.values[next_out++] = run * scale;
    }
    return p;
}

RosenblattGridSampler::RosenblattGridSampler(double hurst, double t_end, std::size_t n,
                                             std::size_t inner_m)
    : hurst_(hurst), t_end_(t_end), n_(n) {
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("RosenblattGridSampler: H must lie in (0.5, 1)");
    if (inner_m < 32) throw std::domain_error("RosenblattGridSampler: inner_m must be >= 32");
    std::size_t mult = (inner_m + n - 1) / n;
    m_ = mult * n;
    delta_ = t_end / static_cast<double>(m_);
    b_h_ = const_b_rosenblatt(hurst);
    double h0 = 0.5 * (hurst + 1.0);

    std::vector<double> taus(n);
    for (std::size_t k = 1; k <= n; ++k) taus[k - 1] = t_end * static_cast<double>(k) / n;
    // boundary warp must stop before the first output time
    double y_break = t_end / static_cast<double>(std::max<std::size_t>(8, n));
    KernelSweep sweep = volterra_kernel_sweep(h0, static_cast<int>(m_), t_end, y_break);
    mats_ = sweep.run(taus);
}

SamplePath RosenblattGridSampler::sample(RngStream& stream) const {
    Eigen::VectorXd xi(m_);
    for (std::size_t i = 0; i < m_; ++i) xi[i] = stream.gauss();
    SamplePath p;
    p.t_end = t_end_;
    p.n = n_;
    p.q = 2;
    p.hurst = hurst_;
    p.values.assign(n_ + 1, 0.0);
    for (std::size_t k = 0; k < n_; ++k) {
        const Eigen::MatrixXd& a = mats_[k];
        double quad = xi.dot(a * xi) - a.trace();
        p.values[k + 1] = b_h_ * delta_ * quad;
    }
    return p;
}

SamplePath sample_rosenblatt_grid(RngStream& stream, double hurst, double t_end, std::size_t n,
                                  std::size_t inner_m) {
    RosenblattGridSampler sampler(hurst, t_end, n, inner_m);
    return sampler.sample(stream);
}

FieldSample sample_hermite_sheet_with_factors(RngStream& stream, const HermiteSpec& spec,
                                              const std::vector<double>& extents,
                                              const std::vector<std::size_t>& dims,
                                              const Eigen::MatrixXd& l1,
                                              const Eigen::MatrixXd& l2) {
    spec.validate();
    if (spec.dim() != 2 || extents.size() != 2 || dims.size() != 2)
        throw std::domain_error("sample_hermite_sheet: d = 2 expected");
    std::size_t n1 = dims[0], n2 = dims[1];
    std::size_t lat1 = static_cast<std::size_t>(l1.rows());
    std::size_t lat2 = static_cast<std::size_t>(l2.rows());
    if (lat1 % n1 != 0 || lat2 % n2 != 0)
        throw std::domain_error("sample_hermite_sheet: factor size must be a multiple of dims");
    std::size_t s1 = lat1 / n1, s2 = lat2 / n2;

    Eigen::MatrixXd x = sample_fgn_sheet_with_factors(stream, l1, l2);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = hermite_poly(spec.q, x(i, j));

    double sig1 = hermite_lattice_sigma2(spec.q, spec.h0(0), lat1);
    double sig2 = hermite_lattice_sigma2(spec.q, spec.h0(1), lat2);
    double qfact = std::tgamma(spec.q + 1.0);
    // separable normalization: sigma^2 = q! * S1 * S2 with S_j = sigma2_j / q!
    double sigma2 = qfact * (sig1 / qfact) * (sig2 / qfact);
    double scale = std::pow(extents[0], spec.H[0]) * std::pow(extents[1], spec.H[1]) /
                   std::sqrt(sigma2);

    FieldSample f;
    f.extents = extents;
    f.dims = dims;
    f.spec = spec;
    f.values = Eigen::MatrixXd::Zero(n1 + 1, n2 + 1);
    // cumulative block sums at output resolution
    Eigen::MatrixXd cum = Eigen::MatrixXd::Zero(x.rows() + 1, x.cols() + 1);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            cum(i + 1, j + 1) = x(i, j) + cum(i, j + 1) + cum(i + 1, j) - cum(i, j);
    for (std::size_t a = 1; a <= n1; ++a)
        for (std::size_t b = 1; b <= n2; ++b) f.values(a, b) = scale * cum(a * s1, b * s2);
    return f;
}

FieldSample sample_hermite_sheet(RngStream& stream, const HermiteSpec& spec,
                                 const std::vector<double>& extents,
                                 const std::vector<std::size_t>& dims, const LatticeConfig& cfg) {
    if (dims.size() != 2) throw std::domain_error("sample_hermite_sheet: d = 2 expected");
    std::size_t lat1 = cfg.effective(dims[0]);
    std::size_t lat2 = cfg.effective(dims[1]);
    Eigen::MatrixXd l1 = fgn_cholesky(spec.h0(0), lat1);
    Eigen::MatrixXd l2 = fgn_cholesky(spec.h0(1), lat2);
    return sample_hermite_sheet_with_factors(stream, spec, extents, dims, l1, l2);
}

double wiener_integral(const std::function<double(double)>& f, const SamplePath& path) {
    double s = 0.0;
    for (std::size_t i = 0; i < path.n; ++i)
        s += f(path.time(i)) * (path.values[i + 1] - path.values[i]);
    return s;
}

SamplePath sample_moving_average(const std::function<double(double)>& kernel,
                                 const SamplePath& path) {
    std::size_t n = path.n;
    double dt = path.dt();
    SamplePath out = path;
    out.ma_kernel = kernel;
    std::fill(out.values.begin(), out.values.end(), 0.0);

    std::vector<double> dz(n);
    for (std::size_t i = 0; i < n; ++i) dz[i] = path.values[i + 1] - path.values[i];

    if (n > 4096) {
        std::vector<double> k(n + 1, 0.0);
        for (std::size_t j = 1; j <= n; ++j) k[j] = kernel(static_cast<double>(j) * dt);
        auto conv = fft_convolve(dz, k);
        for (std::size_t i = 1; i <= n; ++i) out.values[i] = conv[i];
    } else {
        for (std::size_t kk = 1; kk <= n; ++kk) {
            double s = 0.0;
            for (std::size_t i = 0; i < kk; ++i)
                s += kernel(static_cast<double>(kk - i) * dt) * dz[i];
            out.values[kk] = s;
        }
    }
    return out;
}

SamplePath sample_vasicek(double a, double b, const SamplePath& path) {
    if (a <= 0.0) throw std::domain_error("sample_vasicek: a must be positive");
    SamplePath out = sample_moving_average([a](double u) { return std::exp(-a * u); }, path);
    for (std::size_t i = 0; i <= path.n; ++i)
        out.values[i] += b * (1.0 - std::exp(-a * path.time(i)));
    out.ma_kernel = nullptr;
    return out;
}

}  // namespace hermite
