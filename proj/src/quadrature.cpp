#include "hermite/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hermite {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double eps = 1e-15;
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev estimate, then Newton on P_n
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

void gauss_legendre_ab(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    gauss_legendre(n, x, w);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
    }
}

void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n > 160)
        throw std::domain_error("gauss_hermite: Newton iteration unreliable beyond 160 nodes");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double eps = 1e-14;
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * x[1];
        } else {
            z = 2.0 * z - x[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    std::vector<double> x, w;
    gauss_legendre_ab(n, a, b, x, w);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * f(x[i]);
    return s;
}

double integrate_gl_panels(const std::function<double(double)>& f, double a, double b, int n,
                           int panels) {
    double s = 0.0;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) s += integrate_gl(f, a + p * h, a + (p + 1) * h, n);
    return s;
}

double integrate_power_left(const std::function<double(double)>& g, double a, double b, double p,
                            int n) {
    if (p <= -1.0) throw std::domain_error("integrate_power_left: exponent must be > -1");
    // x = a + w^{1/(p+1)},  (x-a)^p dx = dw/(p+1) * ... collapses to dw
    double e = 1.0 / (p + 1.0);
    double wmax = std::pow(b - a, p + 1.0);
    std::vector<double> xs, ws;
    gauss_legendre_ab(n, 0.0, wmax, xs, ws);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = a + std::pow(xs[i], e);
        s += ws[i] * g(x);
    }
    return s / (p + 1.0);
}

double integrate_power_right(const std::function<double(double)>& g, double a, double b, double p,
                             int n) {
    return integrate_power_left([&](double x) { return g(a + b - x); }, a, b, p, n);
}

double cell_integral_abs_pow(double a, double b, double c, double d, double gamma) {
    if (gamma <= -1.0) throw std::domain_error("cell_integral_abs_pow: exponent must be > -1");
    // antiderivative: d2/(du dv) of -|u-v|^{gamma+2}/((gamma+1)(gamma+2)) = |u-v|^gamma
    auto prim = [gamma](double w) { return std::pow(std::abs(w), gamma + 2.0); };
    double g2 = (gamma + 1.0) * (gamma + 2.0);
    return -(prim(b - d) - prim(b - c) - prim(a - d) + prim(a - c)) / g2;
}

}  // namespace hermite
