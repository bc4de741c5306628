#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "hermite/rng.hpp"

namespace hermite {

/// Lag-k autocovariance of unit-spaced, unit-variance fractional Gaussian
/// noise: rho(k) = 0.5 (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}).
double rho_fgn(double hurst, long k);

struct FgnSample {
    double hurst = 0.5;
    std::size_t n = 0;
    std::vector<double> values;
};

/// Exact stationary Gaussian sequence with fGn covariance via circulant
/// embedding: the autocovariances are wrapped into a nonnegative-definite
/// circulant, synthesized in the Fourier domain from complex normals.
/// Throws EmbeddingError if an eigenvalue is below -eps_eig * max eigenvalue
/// (cannot happen for exact fGn covariances).
FgnSample sample_fgn(RngStream& stream, double hurst, std::size_t n, double eps_eig = 1e-10);

/// Gaussian n x m matrix with separable covariance
/// Cov(X_{ij}, X_{kl}) = rho_fgn(H1,|i-k|) * rho_fgn(H2,|j-l|),
/// built by two-sided dense factorization of the 1-d covariance matrices.
Eigen::MatrixXd sample_fgn_sheet(RngStream& stream, double hurst1, double hurst2, std::size_t n,
                                 std::size_t m);

/// Cholesky-type factor L (lower) of the n x n fGn covariance matrix,
/// with a tiny jitter retry; throws on failure. Exposed so sheet sampling
/// can reuse factors across replicates.
Eigen::MatrixXd fgn_cholesky(double hurst, std::size_t n);

Eigen::MatrixXd sample_fgn_sheet_with_factors(RngStream& stream, const Eigen::MatrixXd& l1,
                                              const Eigen::MatrixXd& l2);

}  // namespace hermite
