#pragma once

#include <functional>
#include <vector>

namespace hermite {

struct QuadratureSpec {
    int points_per_axis = 64;
    double diagonal_offset = 1e-12;
    int max_refinements = 8;
    double rel_tol = 1e-4;
};

/// Nodes/weights of an n-point Gauss-Legendre rule on [-1,1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Same rule mapped to [a,b].
void gauss_legendre_ab(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

/// Nodes/weights of the n-point Gauss-Hermite rule for weight e^{-x^2}.
void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w);

/// Integral of f over [a,b] with n-point Gauss-Legendre.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

/// Integral of f over [a,b] split into `panels` equal GL panels.
double integrate_gl_panels(const std::function<double(double)>& f, double a, double b, int n,
                           int panels);

/// Integral over [a,b] of g(x) * (x-a)^p for p > -1, via the substitution
/// x = a + w^{1/(p+1)} which removes the endpoint power exactly.
double integrate_power_left(const std::function<double(double)>& g, double a, double b, double p,
                            int n);

/// Same with the singular factor (b-x)^p at the right endpoint.
double integrate_power_right(const std::function<double(double)>& g, double a, double b, double p,
                             int n);

/// Exact value of the double integral of |u-v|^gamma over [a,b] x [c,d],
/// gamma > -1. Used to integrate singular covariance kernels cell by cell.
double cell_integral_abs_pow(double a, double b, double c, double d, double gamma);

}  // namespace hermite
