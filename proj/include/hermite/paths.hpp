#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hermite/rng.hpp"
#include "hermite/spec.hpp"
#include "hermite/volterra.hpp"

namespace hermite {

/// Values of a scalar process on the uniform grid t_i = i * t_end / n,
/// i = 0..n, with values[0] = 0.
struct SamplePath {
    double t_end = 1.0;
    std::size_t n = 0;
    std::vector<double> values;  // length n + 1
    int q = 1;                   // chaos order of the driver (1 = Gaussian)
    double hurst = 0.5;
    /// set by sample_moving_average so downstream functionals know the kernel
    std::function<double(double)> ma_kernel;

    double dt() const { return t_end / static_cast<double>(n); }
    double time(std::size_t i) const { return t_end * static_cast<double>(i) / n; }
};

/// Values of a two-parameter field on the grid (i*e1/n1, j*e2/n2); the
/// slices through zero vanish.
struct FieldSample {
    std::vector<double> extents;      // per-axis end times
    std::vector<std::size_t> dims;    // grid counts per axis
    Eigen::MatrixXd values;           // (dims[0]+1) x (dims[1]+1)
    HermiteSpec spec;
};

/// Lattice resolution of the long-memory partial-sum construction. The
/// effective lattice is lattice_n rounded up to a multiple of the output
/// grid so every output time falls on a lattice point.
struct LatticeConfig {
    std::size_t lattice_n = 2048;

    std::size_t effective(std::size_t n) const;
};

/// Fractional Brownian motion: cumulative fGn scaled by (t_end/n)^H.
SamplePath sample_fbm(RngStream& stream, double hurst, double t_end, std::size_t n);

/// sigma_N^2 = q! sum_{i,j=1..N} rho_fgn(h0,|i-j|)^q, the exact variance of
/// the unnormalized lattice sum at full span.
double hermite_lattice_sigma2(int q, double h0, std::size_t lattice_n);

/// Order-q Hermite process on [0, t_end]: normalized partial sums of
/// H_q applied to fGn with parameter h0 = 1 + (H-1)/q, exactly normalized
/// at finite lattice size so Var(Z_{t_end}) = t_end^{2H}.
SamplePath sample_hermite_path(RngStream& stream, const HermiteSpec& spec, double t_end,
                               std::size_t n, const LatticeConfig& cfg = {});

/// Rosenblatt process through the discretized finite-interval double
/// Wiener integral; an independent generator used to cross-check the
/// partial-sum construction at q = 2. Precomputes the cell-averaged kernel
/// matrices once, then draws paths cheaply.
class RosenblattGridSampler {
  public:
    RosenblattGridSampler(double hurst, double t_end, std::size_t n, std::size_t inner_m);

    SamplePath sample(RngStream& stream) const;

    std::size_t inner_m() const { return m_; }

  private:
    double hurst_;
    double t_end_;
    std::size_t n_;
    std::size_t m_;
    double delta_;
    double b_h_;
    std::vector<Eigen::MatrixXd> mats_;  // cell-averaged kernels per grid time
};

SamplePath sample_rosenblatt_grid(RngStream& stream, double hurst, double t_end, std::size_t n,
                                  std::size_t inner_m);

/// Separable-normalization Hermite sheet (d = 2).
FieldSample sample_hermite_sheet(RngStream& stream, const HermiteSpec& spec,
                                 const std::vector<double>& extents,
                                 const std::vector<std::size_t>& dims,
                                 const LatticeConfig& cfg = {});

/// Same, reusing precomputed per-axis Cholesky factors of the lattice fGn
/// covariance (factor size = lattice size per axis).
FieldSample sample_hermite_sheet_with_factors(RngStream& stream, const HermiteSpec& spec,
                                              const std::vector<double>& extents,
                                              const std::vector<std::size_t>& dims,
                                              const Eigen::MatrixXd& l1, const Eigen::MatrixXd& l2);

/// Left-point Riemann-Stieltjes integral sum f(t_i)(Z_{i+1} - Z_i).
double wiener_integral(const std::function<double(double)>& f, const SamplePath& path);

/// Stochastic convolution X_k = sum_{i<k} x(t_k - t_i)(Z_{i+1} - Z_i);
/// FFT-accelerated for n > 4096.
SamplePath sample_moving_average(const std::function<double(double)>& kernel,
                                 const SamplePath& path);

/// Explicit solution X_k = b(1 - e^{-a t_k}) + sum_{i<k} e^{-a(t_k-t_i)} dZ_i.
SamplePath sample_vasicek(double a, double b, const SamplePath& path);

}  // namespace hermite
