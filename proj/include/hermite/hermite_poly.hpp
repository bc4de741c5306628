#pragma once

#include <functional>
#include <vector>

namespace hermite {

/// Probabilists' Hermite polynomial H_k(x), H_0 = 1, H_1 = x,
/// H_{k+1}(x) = x H_k(x) - k H_{k-1}(x).
double hermite_poly(int k, double x);

/// Coefficients c_1..c_kmax of the expansion g = sum c_k H_k against the
/// standard normal weight, c_k = E[g(N) H_k(N)] / k!, by Gauss-Hermite
/// quadrature with `nodes` points (must be >= 2*kmax).
std::vector<double> hermite_coefficients(const std::function<double(double)>& g, int kmax,
                                         int nodes = 64);

/// Index of the first coefficient with |c_k| > tol; throws RankError if none.
int hermite_rank(const std::function<double(double)>& g, int kmax, double tol = 1e-8,
                 int nodes = 64);

}  // namespace hermite
