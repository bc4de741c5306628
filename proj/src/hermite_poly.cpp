#include "hermite/hermite_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "hermite/errors.hpp"
#include "hermite/quadrature.hpp"

namespace hermite {

double hermite_poly(int k, double x) {
    if (k < 0) throw std::domain_error("hermite_poly: negative degree");
    if (k == 0) return 1.0;
    double hm1 = 1.0, h = x;
    for (int j = 1; j < k; ++j) {
        double hp1 = x * h - j * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

std::vector<double> hermite_coefficients(const std::function<double(double)>& g, int kmax,
                                         int nodes) {
    if (kmax < 1) throw std::domain_error("hermite_coefficients: kmax must be >= 1");
    if (nodes < 2 * kmax) nodes = 2 * kmax;
    std::vector<double> x, w;
    gauss_hermite(nodes, x, w);
    // E[g(N) H_k(N)] = (1/sqrt(pi)) sum_i w_i g(sqrt2 x_i) H_k(sqrt2 x_i)
    const double s = std::sqrt(2.0);
    std::vector<double> c(kmax, 0.0);
    double lfact = 0.0;  // log k!
    for (int i = 0; i < nodes; ++i) {
        double y = s * x[i];
        double gy = g(y);
        if (!std::isfinite(gy))
            throw QuadratureError("hermite_coefficients: non-finite value of g at a node");
        double hm1 = 1.0, h = y;
        for (int k = 1; k <= kmax; ++k) {
            c[k - 1] += w[i] * gy * h;
            double hp1 = y * h - k * hm1;
            hm1 = h;
            h = hp1;
        }
    }
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    for (int k = 1; k <= kmax; ++k) {
        lfact += std::log(static_cast<double>(k));
        c[k - 1] *= inv_sqrt_pi * std::exp(-lfact);
    }
    return c;
}

int hermite_rank(const std::function<double(double)>& g, int kmax, double tol, int nodes) {
    auto c = hermite_coefficients(g, kmax, nodes);
    for (int k = 1; k <= kmax; ++k) {
        if (std::abs(c[k - 1]) > tol) return k;
    }
    throw RankError("hermite_rank: all coefficients below tolerance");
}

}  // namespace hermite
