#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hermite/rng.hpp"

namespace hermite {

/// Symmetric discretization of a second-chaos kernel f(s1,s2) on m midpoint
/// cells of width delta: a(i,j) ~ f(grid[i], grid[j]).
struct KernelMatrix {
    std::vector<double> grid;
    double delta = 0.0;
    Eigen::MatrixXd a;

    void validate() const;
};

/// Midpoint discretization over [lo, hi], symmetrized.
KernelMatrix kernel_from_function(const std::function<double(double, double)>& f, double lo,
                                  double hi, int m);

/// p-th cumulant of the double Wiener integral of the discretized kernel:
/// kappa_p = 2^{p-1} (p-1)! tr((a delta)^p), 2 <= p <= 8.
double cumulant_trace(const KernelMatrix& k, int p);

/// n draws of sum_{i != j} a_ij xi_i xi_j delta + sum_i a_ii (xi_i^2 - 1) delta
/// = delta (xi' a xi - tr a), xi iid standard normal per draw.
std::vector<double> sample_second_chaos(RngStream& stream, const KernelMatrix& k, std::size_t n);

/// Same law, replicate-indexed: draw r consumes derive_stream(master_seed, r),
/// so the output is identical for any thread count or chunking.
std::vector<double> sample_second_chaos_indexed(std::uint64_t master_seed, const KernelMatrix& k,
                                                std::size_t n, int threads = 0);

/// The two discretized kernels whose double Wiener integrals realize
/// alpha R_t + beta R_s for the Rosenblatt process: the finite-interval
/// Volterra form (with constant b_H) and the positive-part power form
/// (with constant c(H,2)). Entries are pairwise cell averages so the
/// diagonal divergence of both kernels integrates exactly.
struct RosenblattKernelPair {
    KernelMatrix f;  // Volterra representation
    KernelMatrix g;  // power representation
};

RosenblattKernelPair rosenblatt_kernel_pair(double hurst, double s, double t, double alpha,
                                            double beta, int m);

}  // namespace hermite
