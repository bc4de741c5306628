#include "hermite/fgn.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hermite/errors.hpp"
#include "hermite/fft.hpp"

namespace hermite {

double rho_fgn(double hurst, long k) {
    if (hurst <= 0.0 || hurst >= 1.0) throw std::domain_error("rho_fgn: H must lie in (0,1)");
    if (k < 0) k = -k;
    if (k == 0) return 1.0;
    double kk = static_cast<double>(k);
    double e = 2.0 * hurst;
    return 0.5 * (std::pow(kk + 1.0, e) - 2.0 * std::pow(kk, e) + std::pow(kk - 1.0, e));
}

FgnSample sample_fgn(RngStream& stream, double hurst, std::size_t n, double eps_eig) {
    if (n < 2) throw std::domain_error("sample_fgn: n must be >= 2");
    if (hurst <= 0.0 || hurst >= 1.0) throw std::domain_error("sample_fgn: H must lie in (0,1)");

    // embed into a circulant of power-of-two size, extending the covariance
    // row as needed (fGn embeddings are nonnegative for every n)
    std::size_t m = next_pow2(2 * (n - 1));
    if (m < 4) m = 4;
    std::size_t half = m / 2;

    std::vector<std::complex<double>> row(m);
    for (std::size_t k = 0; k <= half; ++k) row[k] = rho_fgn(hurst, static_cast<long>(k));
    for (std::size_t k = half + 1; k < m; ++k) row[k] = row[m - k];

    fft_forward(row);

    double lam_max = 0.0;
    for (auto& c : row) lam_max = std::max(lam_max, c.real());
    for (auto& c : row) {
        if (c.real() < -eps_eig * lam_max)
            throw EmbeddingError("sample_fgn: circulant embedding has a negative eigenvalue");
    }

    // spectral synthesis: V_k = sqrt(lam_k/2)(xi + i eta) with the real-vector
    // endpoint conventions, then one inverse transform
    std::vector<std::complex<double>> v(m);
    double lam0 = std::max(row[0].real(), 0.0);
    double lamh = std::max(row[half].real(), 0.0);
    v[0] = std::sqrt(lam0) * stream.gauss();
    v[half] = std::sqrt(lamh) * stream.gauss();
    for (std::size_t k = 1; k < half; ++k) {
        double lam = std::max(row[k].real(), 0.0);
        double s = std::sqrt(0.5 * lam);
        double xr = stream.gauss();
        double xi = stream.gauss();
        v[k] = std::complex<double>(s * xr, s * xi);
        v[m - k] = std::conj(v[k]);
    }
    fft_forward(v);

    FgnSample out;
    out.hurst = hurst;
    out.n = n;
    out.values.resize(n);
    double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < n; ++i) out.values[i] = v[i].real() * scale;
    return out;
}

Eigen::MatrixXd fgn_cholesky(double hurst, std::size_t n) {
    Eigen::MatrixXd c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double v = rho_fgn(hurst, static_cast<long>(i) - static_cast<long>(j));
            c(i, j) = v;
            c(j, i) = v;
        }
    Eigen::LLT<Eigen::MatrixXd> llt(c);
    if (llt.info() != Eigen::Success) {
        c.diagonal().array() += 1e-12;
        llt.compute(c);
        if (llt.info() != Eigen::Success)
            throw EmbeddingError("fgn_cholesky: covariance not positive definite after jitter");
    }
    return llt.matrixL();
}

Eigen::MatrixXd sample_fgn_sheet_with_factors(RngStream& stream, const Eigen::MatrixXd& l1,
                                              const Eigen::MatrixXd& l2) {
    Eigen::Index n = l1.rows(), m = l2.rows();
    Eigen::MatrixXd g(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j) g(i, j) = stream.gauss();
    return l1 * g * l2.transpose();
}

Eigen::MatrixXd sample_fgn_sheet(RngStream& stream, double hurst1, double hurst2, std::size_t n,
                                 std::size_t m) {
    if (n < 1 || m < 1) throw std::domain_error("sample_fgn_sheet: empty grid");
    Eigen::MatrixXd l1 = fgn_cholesky(hurst1, n);
    Eigen::MatrixXd l2 = fgn_cholesky(hurst2, m);
    return sample_fgn_sheet_with_factors(stream, l1, l2);
}

}  // namespace hermite
