#include "hermite/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hermite/errors.hpp"

namespace hermite {

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double const_c_hermite(const HermiteSpec& spec) {
    double h = spec.scalar_H();
    int q = spec.q;
    double h0 = spec.h0();
    double log_num = std::log(h * (2.0 * h - 1.0));
    double log_den = std::lgamma(q + 1.0) + q * log_beta(h0 - 0.5, 2.0 - 2.0 * h0);
    return std::exp(0.5 * (log_num - log_den));
}

double const_b_rosenblatt(double hurst) {
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("const_b_rosenblatt: H must lie in (0.5, 1)");
    return std::sqrt(2.0 * (2.0 * hurst - 1.0) / hurst) / (hurst + 1.0);
}

double const_B_Hq(double hurst, int q) {
    if (q < 1) throw std::domain_error("const_B_Hq: q must be >= 1");
    if (hurst <= 0.5 || hurst >= 1.0) throw std::domain_error("const_B_Hq: H must lie in (0.5, 1)");
    double h0 = 1.0 - (1.0 - hurst) / q;
    double disc = 4.0 * h0 - 3.0;
    if (disc <= 0.0) throw std::domain_error("const_B_Hq: 4 h0 - 3 must be positive");
    double expo = 2.0 * hurst + (2.0 / q) * (1.0 - hurst);
    return hurst * (2.0 * hurst - 1.0) / std::sqrt((h0 - 0.5) * disc) * std::tgamma(expo) /
           (expo - 1.0);
}

namespace {

// inner(x) of the sigma_H integrand after the exact change of variables
// u+v = const, u-v = y:  int_{R+^2} e^{-(u+v)} |u-v-x|^{2H-2} du dv
//                      = (1/2) int_R e^{-|y|} |y-x|^{2H-2} dy.
double sigma_inner(double x, double hurst, double cutoff, int n) {
    double g = 2.0 * hurst - 2.0;
    x = std::abs(x);  // even in x
    double total = 0.0;
    // y in [-U, 0]: substitute t = -y, then w = (x+t)^{g+1} to absorb the
    // power factor exactly (boundary layer at t ~ 0 for small x)
    {
        double e = g + 1.0;
        double wlo = std::pow(x, e), whi = std::pow(x + cutoff, e);
        total += integrate_gl_panels(
                     [&](double w) { return std::exp(x - std::pow(w, 1.0 / e)); }, wlo, whi, n, 4) /
                 e;
    }
    // y in (0, x): singular at y = x
    if (x > 0.0)
        total += integrate_power_right([&](double y) { return std::exp(-y); }, 0.0, x, g, n);
    // y in (x, U): singular at y = x
    if (x < cutoff)
        total += integrate_power_left([&](double y) { return std::exp(-y); }, x, cutoff, g, n);
    return 0.5 * total;
}

}  // namespace

QuadResult const_sigma_H(double hurst, const QuadratureSpec& quad) {
    if (hurst <= 0.5 || hurst >= 0.75)
        throw std::domain_error("const_sigma_H: H must lie in (0.5, 0.75)");
    const double cutoff = 20.0;  // e^{-20} < 1e-8
    int n = std::max(quad.points_per_axis, 8);

    auto outer = [&](int pts) {
        // integrand even in x; integrate [0, X] and double
        double bound = 60.0;
        auto f = [&](double x) {
            double v = sigma_inner(x, hurst, cutoff, pts);
            return v * v;
        };
        double core = 2.0 * integrate_gl_panels(f, 0.0, bound, pts, 24);
        // inner(x) ~ |x|^{2H-2} for large |x|; power-tail correction
        double tail = 2.0 * std::pow(bound, 4.0 * hurst - 3.0) / (3.0 - 4.0 * hurst);
        return core + tail;
    };

    double prev = outer(n);
    double cur = prev;
    double rel = 1.0;
    for (int r = 0; r < quad.max_refinements; ++r) {
        n *= 2;
        cur = outer(n);
        rel = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        if (rel < quad.rel_tol) break;
        prev = cur;
    }
    if (rel >= quad.rel_tol) throw QuadratureError("const_sigma_H: refinement did not converge");

    double g2h = std::tgamma(2.0 * hurst);
    QuadResult out;
    out.value = (2.0 * hurst - 1.0) / (hurst * g2h * g2h) * std::sqrt(cur);
    out.error = out.value * 0.5 * rel;
    return out;
}

double singular_double_integral(const std::function<double(double)>& f, double gamma, double lo,
                                double hi, const QuadratureSpec& quad) {
    if (gamma <= -1.0 || gamma > 0.0)
        throw std::domain_error("singular_double_integral: exponent must lie in (-1, 0]");
    if (!(hi > lo)) throw std::domain_error("singular_double_integral: empty domain");

    auto eval = [&](int cells) {
        double h = (hi - lo) / cells;
        std::vector<double> fm(cells);
        for (int i = 0; i < cells; ++i) fm[i] = f(lo + (i + 0.5) * h);
        // cell weights depend only on |i-j|; exact kernel integral per cell
        std::vector<double> w(cells);
        for (int d = 0; d < cells; ++d)
            w[d] = cell_integral_abs_pow(0.0, h, d * h, (d + 1) * h, gamma);
        double s = 0.0;
        for (int i = 0; i < cells; ++i) {
            s += fm[i] * fm[i] * w[0];
            for (int j = i + 1; j < cells; ++j) s += 2.0 * fm[i] * fm[j] * w[j - i];
        }
        return s;
    };

    int cells = std::max(quad.points_per_axis, 8);
    double prev = eval(cells);
    for (int r = 0; r < quad.max_refinements; ++r) {
        cells *= 2;
        double cur = eval(cells);
        double rel = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        if (rel < quad.rel_tol) return cur;
        prev = cur;
    }
    throw QuadratureError("singular_double_integral: refinement did not converge");
}

double weighted_norm_H_sq(const std::function<double(double)>& f, double hurst, double lo,
                          double hi, const QuadratureSpec& quad) {
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("weighted_norm_H_sq: H must lie in (0.5, 1)");
    double g = 2.0 * hurst - 2.0;
    return hurst * (2.0 * hurst - 1.0) * singular_double_integral(f, g, lo, hi, quad);
}

double const_b_mavg(double hurst, int q, const std::function<double(double)>& kernel,
                    const QuadratureSpec& quad) {
    if (q < 2) throw std::domain_error("const_b_mavg: q must be >= 2");
    if (hurst <= 0.5 || hurst >= 1.0)
        throw std::domain_error("const_b_mavg: H must lie in (0.5, 1)");
    double h0 = 1.0 + (hurst - 1.0) / q;
    double disc = 4.0 * h0 - 3.0;
    if (disc <= 0.0) throw std::domain_error("const_b_mavg: 4 h0 - 3 must be positive");
    double gamma = (q - 1.0) * (2.0 * h0 - 2.0);

    // grow the truncation until the tail no longer matters
    double cut = 20.0;
    double prev = singular_double_integral(kernel, gamma, 0.0, cut, quad);
    for (int r = 0; r < 4; ++r) {
        cut *= 1.5;
        double cur = singular_double_integral(kernel, gamma, 0.0, cut, quad);
        double rel = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        prev = cur;
        if (rel < quad.rel_tol) break;
    }
    return hurst * (2.0 * hurst - 1.0) / std::sqrt((h0 - 0.5) * disc) * prev;
}

double const_b_sheet(const HermiteSpec& spec) {
    int q = spec.q;
    double logb = 0.5 * (spec.dim() - 1.0) * std::lgamma(q + 1.0);
    for (std::size_t j = 0; j < spec.dim(); ++j) {
        double h = spec.H[j];
        double h0 = spec.h0(j);
        logb += 0.5 * std::log(h * (2.0 * h - 1.0));
        logb -= 0.5 * (std::lgamma(q + 1.0) + q * std::log(h0 * (2.0 * h0 - 1.0)));
    }
    return std::exp(logb);
}

double const_c1_sheet(const HermiteSpec& spec) {
    int q = spec.q;
    double b = const_b_sheet(spec);
    double c = 2.0 * std::pow(2.0, static_cast<double>(spec.dim())) * std::pow(b, 4.0);
    for (std::size_t j = 0; j < spec.dim(); ++j) {
        double h0 = spec.h0(j);
        double f1 = 4.0 * h0 - 3.0;
        if (f1 <= 0.0)
            throw std::domain_error("const_c1_sheet: 4 h0 - 3 must be positive on every axis");
        double f2 = 4.0 * h0 - 2.0;
        double f3 = (2.0 * h0 - 2.0) * (q - 1.0) + 1.0;
        double f4 = (h0 - 1.0) * (q - 1.0) + 1.0;
        c *= std::pow(h0 * (2.0 * h0 - 1.0), 2.0 * q);
        c /= f1 * f2 * f3 * f3 * f4 * f4;
    }
    return c;
}

}  // namespace hermite
