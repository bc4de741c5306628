#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hermite/quadrature.hpp"

namespace hermite {

/// Analytic density with evaluable score, finite quadrature support, and
/// known first two moments. Construction verifies normalization (1e-6) and,
/// for smooth densities, the Stein identity E[rho(F)g(F)] = -E[g'(F)] on
/// g in {1, x, x^2} (1e-4).
struct DensityModel {
    std::function<double(double)> pdf;
    std::function<double(double)> score;  // f'(x)/f(x)
    double lo = 0.0;                      // quadrature support
    double hi = 0.0;
    double mean = 0.0;
    double variance = 1.0;
    bool smooth = true;
    std::string name;

    void validate() const;
};

DensityModel gaussian_model(double mu, double sigma2);
DensityModel uniform_model(double a, double b);
/// Two-or-more-component Gaussian mixture.
DensityModel gaussian_mixture_model(const std::vector<double>& weights,
                                    const std::vector<double>& means,
                                    const std::vector<double>& sds);
/// Standardized (unit-variance) Student-t with nu > 2 degrees of freedom.
DensityModel student_t_model(double nu);
/// Affine rescale of f to mean 0, variance 1.
DensityModel standardize_model(const DensityModel& f);

/// Gaussian-kernel density estimate with analytic score. bandwidth <= 0
/// selects the Silverman rule 1.06 * sd * n^{-1/5}.
DensityModel kde_model(const std::vector<double>& samples, double bandwidth = -1.0);

struct ProductDensityModel {
    std::vector<DensityModel> components;  // centered, variance = covariance diagonal
    void validate() const;
};

/// Differential entropy -int f log f (0 log 0 = 0).
double entropy(const DensityModel& f, const QuadratureSpec& quad = {});

/// int f log(f/g); +infinity when f carries mass (>1e-10) outside supp(g).
double relative_entropy(const DensityModel& f, const DensityModel& g,
                        const QuadratureSpec& quad = {});

/// J(F) = E[score(F)^2].
double fisher_information(const DensityModel& f, const QuadratureSpec& quad = {});

/// (1/2) int |f - g|.
double total_variation(const DensityModel& f, const DensityModel& g,
                       const QuadratureSpec& quad = {});

struct DeBruijnGap {
    double lhs = 0.0;  // D(F || Z)
    double rhs = 0.0;  // int_0^1 (J(sqrt(t) F + sqrt(1-t) Z) - 1)/(2t) dt
};

/// Both sides of the entropy/Fisher identity for a standardized model; the
/// interpolated densities are built by DFT convolution on a shared grid.
DeBruijnGap de_bruijn_gap(const DensityModel& f, const QuadratureSpec& quad = {},
                          int t_nodes = 64);

struct InequalityReport {
    double d_tv = 0.0;
    double rel_entropy = 0.0;
    double fisher = 0.0;
    double fisher_st = 0.0;
    bool ckp_ok = false;             // 2 d_tv^2 <= D
    bool entropy_fisher_ok = false;  // D <= (J - 1)/2
    double sup_density_diff = 0.0;   // sup |f - phi|
    // recorded under both readings, asserted under neither
    double sup_bound_j = 0.0;   // sqrt(J)
    double sup_bound_jst = 0.0; // sqrt(J_st)
    double tv_bound_j = 0.0;    // sqrt(J)/sqrt(2)
    double tv_bound_jst = 0.0;  // sqrt(J_st)/sqrt(2)
};

/// Distance/information quantities of a standardized model against N(0,1),
/// with the two provable orderings evaluated.
InequalityReport inequality_suite(const DensityModel& f, const QuadratureSpec& quad = {});

struct TraceBoundReport {
    double d_tv = 0.0;
    double rel_entropy = 0.0;
    double trace_cinv_jst = 0.0;  // tr(J(F)) - tr(J(Z))
    double c_op = 0.0;            // max component variance
    double lhs = 0.0;             // 4 d_tv^2
    double mid = 0.0;             // 2 D
    double rhs = 0.0;             // c_op * trace
    bool chain_ok = false;
};

/// Relative-entropy/Fisher chain for a product density against the Gaussian
/// vector with the same diagonal covariance.
TraceBoundReport multivariate_trace_bound(const ProductDensityModel& f,
                                          const QuadratureSpec& quad = {});

}  // namespace hermite
