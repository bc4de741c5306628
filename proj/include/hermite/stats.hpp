#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hermite/paths.hpp"
#include "hermite/spec.hpp"

namespace hermite {

/// Rectangle [s, t] with corners on the field grid.
struct IncrementCell {
    std::vector<double> s;
    std::vector<double> t;
};

/// Alternating-sign corner sum of the field over the cell; for d = 1 this is
/// Z_t - Z_s, for d = 2 the four-corner difference.
double generalized_increment(const FieldSample& field, const IncrementCell& cell);

/// Renormalized quadratic variation on [0,1]^d:
/// V_N = (1/prod N) sum_i [prod N^{2H} (Delta Z_{[i/N,(i+1)/N]})^2 - 1].
/// The field grid must refine the N-lattice and have unit extents.
double quadratic_variation(const FieldSample& field, const HermiteSpec& spec,
                           const std::vector<std::size_t>& n_lattice);
double quadratic_variation(const SamplePath& path, const HermiteSpec& spec, std::size_t n_lattice);

/// c1^{-1/2} * prod_j N_j^{(2-2H_j)/q} * (q! q)^{-1} * V_N; its second moment
/// tends to 1.
double qv_limit_statistic(const FieldSample& field, const HermiteSpec& spec,
                          const std::vector<std::size_t>& n_lattice);
double qv_limit_statistic(const SamplePath& path, const HermiteSpec& spec, std::size_t n_lattice);

struct HurstEstimate {
    double h = 0.0;
    bool boundary = false;  // smooth-path regime (ratio at its deterministic cap)
};

/// Dyadic log-ratio estimator from quadratic variations at the two finest
/// scales: with S_N = sum of squared increments at scale 1/N,
///   H_hat = (1 - log2(S_n / S_{n/2})) / 2.
/// E[S_N] is proportional to N^{1-2H} for every chaos order, so the same
/// scale map applies for all q; the order only affects fluctuation rates.
HurstEstimate estimate_hurst_qv(const SamplePath& path, int q);

/// E[X_s^2] for the moving average with the given kernel, at every grid time
/// of a path with n steps on [0, t_end]; singular-kernel cell quadrature.
std::vector<double> gt_centering_profile(const std::function<double(double)>& kernel, double hurst,
                                         double t_end, std::size_t n);

/// Normalized quadratic functional
/// G_T(t) = T^{-(2 h0 - 1)} int_0^{T t} (X_s^2 - E[X_s^2]) ds, trapezoid rule.
double quadratic_functional_GT(const SamplePath& x, const HermiteSpec& spec, double t,
                               const std::vector<double>& centering);
double quadratic_functional_GT(const SamplePath& x, const HermiteSpec& spec, double t);

struct VasicekEstimate {
    double a_hat = 0.0;
    double b_hat = 0.0;
};

/// Drift estimators from a continuously observed path:
/// b_hat = (1/T) int X dt,  a_hat = (alpha_T / (H Gamma(2H)))^{-1/(2H)} with
/// alpha_T = (1/T) int X^2 dt - b_hat^2. Throws EstimationError when
/// alpha_T <= 0.
VasicekEstimate vasicek_estimators(const SamplePath& x, double hurst);

struct CumulantEstimates {
    std::vector<double> kappa;  // kappa_1..kappa_pmax
    std::vector<double> se;     // block-jackknife standard errors
};

/// k-statistics (unbiased through order 4; standard moment formulas for
/// orders 5 and 6) with delete-block jackknife standard errors.
CumulantEstimates empirical_cumulants(const std::vector<double>& samples, int p_max);

struct CdfProbe {
    std::vector<double> points;
    std::vector<double> probability;
    std::vector<double> std_error;  // binomial
};

/// Empirical CDF of the order-2 Hermite marginal at t = 1 at the given
/// points; sample r draws from derive_stream(master_seed, r).
CdfProbe rosenblatt_cdf_probe(std::uint64_t master_seed, double hurst,
                              const std::vector<double>& points, std::size_t n_samples,
                              const LatticeConfig& cfg = {}, int threads = 0);

}  // namespace hermite
