#include "hermite/chaos.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "hermite/constants.hpp"
#include "hermite/errors.hpp"
#include "hermite/spec.hpp"
#include "hermite/volterra.hpp"

namespace hermite {

void KernelMatrix::validate() const {
    if (delta <= 0.0) throw std::domain_error("KernelMatrix: delta must be positive");
    if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != grid.size())
        throw std::domain_error("KernelMatrix: shape mismatch");
    double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()))
        throw std::domain_error("KernelMatrix: matrix not symmetric");
}

KernelMatrix kernel_from_function(const std::function<double(double, double)>& f, double lo,
                                  double hi, int m) {
    if (m < 1 || !(hi > lo)) throw std::domain_error("kernel_from_function: bad grid");
    KernelMatrix k;
    k.delta = (hi - lo) / m;
    k.grid.resize(m);
    for (int i = 0; i < m; ++i) k.grid[i] = lo + (i + 0.5) * k.delta;
    k.a.resize(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = 0.5 * (f(k.grid[i], k.grid[j]) + f(k.grid[j], k.grid[i]));
            if (!std::isfinite(v))
                throw QuadratureError("kernel_from_function: non-finite kernel value");
            k.a(i, j) = v;
            k.a(j, i) = v;
        }
    return k;
}

double cumulant_trace(const KernelMatrix& k, int p) {
    if (p < 2 || p > 8) throw std::domain_error("cumulant_trace: p must lie in [2, 8]");
    Eigen::MatrixXd b = k.a * k.delta;
    Eigen::MatrixXd pow = b;
    for (int i = 2; i <= p; ++i) pow = pow * b;
    double fact = 1.0;
    for (int i = 2; i < p; ++i) fact *= i;
    return std::pow(2.0, p - 1.0) * fact * pow.trace();
}

std::vector<double> sample_second_chaos(RngStream& stream, const KernelMatrix& k, std::size_t n) {
    Eigen::Index m = k.a.rows();
    double tr = k.a.trace();
    std::vector<double> out(n);
    Eigen::VectorXd xi(m);
    for (std::size_t r = 0; r < n; ++r) {
        for (Eigen::Index i = 0; i < m; ++i) xi[i] = stream.gauss();
        out[r] = k.delta * (xi.dot(k.a * xi) - tr);
    }
    return out;
}

std::vector<double> sample_second_chaos_indexed(std::uint64_t master_seed, const KernelMatrix& k,
                                                std::size_t n, int threads) {
    Eigen::Index m = k.a.rows();
    double tr = k.a.trace();
    std::vector<double> out(n);
    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        Eigen::VectorXd xi(m);
#pragma omp for schedule(dynamic, 64)
        for (long r = 0; r < static_cast<long>(n); ++r) {
            RngStream stream = derive_stream(master_seed, static_cast<std::uint64_t>(r));
            for (Eigen::Index i = 0; i < m; ++i) xi[i] = stream.gauss();
            out[r] = k.delta * (xi.dot(k.a.selfadjointView<Eigen::Lower>() * xi) - tr);
        }
    }
    return out;
}

RosenblattKernelPair rosenblatt_kernel_pair(double hurst, double s, double t, double alpha,
                                            double beta, int m) {
    if (!(0.0 < s && s <= t)) throw std::domain_error("rosenblatt_kernel_pair: need 0 < s <= t");
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("rosenblatt_kernel_pair: H must lie in (0.5, 1)");
    double delta = t / m;
    double ratio = s / delta;
    if (std::abs(ratio - std::lround(ratio)) > 1e-9)
        throw std::domain_error("rosenblatt_kernel_pair: s must fall on the m-grid of [0, t]");

    double h0 = 0.5 * (hurst + 1.0);
    std::vector<double> taus{t, s};

    KernelSweep sweep_f = volterra_kernel_sweep(h0, m, t);
    auto mats_f = sweep_f.run(taus);

    // the power representation is supported on y down to -infinity; extra
    // warped cells of equal internal measure capture the negative axis
    int m_neg = m / 2;
    std::vector<double> g_mid;
    KernelSweep sweep_g = power_kernel_sweep(hurst, m, m_neg, t, &g_mid);
    auto mats_g = sweep_g.run(taus);

    double b_h = const_b_rosenblatt(hurst);
    double c_h2 = const_c_hermite(HermiteSpec(2, hurst));

    RosenblattKernelPair out;
    out.f.delta = delta;
    out.g.delta = delta;
    out.f.grid.resize(m);
    for (int i = 0; i < m; ++i) out.f.grid[i] = (i + 0.5) * delta;
    out.g.grid = g_mid;
    out.f.a = b_h * (alpha * mats_f[0] + beta * mats_f[1]);
    out.g.a = c_h2 * (alpha * mats_g[0] + beta * mats_g[1]);
    return out;
}

}  // namespace hermite
