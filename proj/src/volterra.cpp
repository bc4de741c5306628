#include "hermite/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermite/constants.hpp"
#include "hermite/errors.hpp"
#include "hermite/quadrature.hpp"

namespace hermite {

double volterra_cH(double hurst) {
    if (hurst <= 0.5 || hurst >= 1.0) throw std::domain_error("volterra_cH: H must lie in (0.5,1)");
    double lb = log_beta(2.0 - 2.0 * hurst, hurst - 0.5);
    return std::exp(0.5 * (std::log(hurst * (2.0 * hurst - 1.0)) - lb));
}

double partial1_KH(double hurst, double t, double s) {
    if (!(0.0 < s && s < t)) throw std::domain_error("partial1_KH: need 0 < s < t");
    return volterra_cH(hurst) * std::pow(s, 0.5 - hurst) * std::pow(t - s, hurst - 1.5) *
           std::pow(t, hurst - 0.5);
}

double volterra_KH(double hurst, double t, double s, int n) {
    if (!(0.0 < s && s < t)) throw std::domain_error("volterra_KH: need 0 < s < t");
    double integral = integrate_power_left(
        [&](double u) { return std::pow(u, hurst - 0.5); }, s, t, hurst - 1.5, n);
    return volterra_cH(hurst) * std::pow(s, 0.5 - hurst) * integral;
}

double volterra_inner_product(double hurst, double u, double v, int n) {
    if (u <= 0.0 || v <= 0.0) throw std::domain_error("volterra_inner_product: need u, v > 0");
    if (u == v) throw std::domain_error("volterra_inner_product: diverges at u == v");
    double lo = std::min(u, v), hi = std::max(u, v);
    double c2 = volterra_cH(hurst);
    c2 *= c2 * std::pow(u * v, hurst - 0.5);
    // integrand: a^{1-2H} (u-a)^{H-3/2} (v-a)^{H-3/2} on (0, lo);
    // split so each endpoint singularity is absorbed by an exact substitution
    double mid = 0.5 * lo;
    double left = integrate_power_left(
        [&](double a) { return std::pow(u - a, hurst - 1.5) * std::pow(v - a, hurst - 1.5); }, 0.0,
        mid, 1.0 - 2.0 * hurst, n);
    double right = integrate_power_right(
        [&](double a) { return std::pow(a, 1.0 - 2.0 * hurst) * std::pow(hi - a, hurst - 1.5); },
        mid, lo, hurst - 1.5, n);
    return c2 * (left + right);
}

KernelSweep::KernelSweep(int cells, double delta, std::function<double(double, int)> phi_cell,
                         std::vector<double> time_edges, int nodes_per_panel)
    : m_(cells), delta_(delta), phi_cell_(std::move(phi_cell)), edges_(std::move(time_edges)),
      nodes_(nodes_per_panel) {
    if (m_ < 2) throw std::domain_error("KernelSweep: need at least 2 cells");
    if (delta_ <= 0.0) throw std::domain_error("KernelSweep: delta must be positive");
    if (edges_.size() < 2 || edges_.front() != 0.0)
        throw std::domain_error("KernelSweep: time edges must start at 0");
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (!(edges_[i] > edges_[i - 1]))
            throw std::domain_error("KernelSweep: time edges must increase");
}

std::vector<Eigen::MatrixXd> KernelSweep::run(const std::vector<double>& taus) const {
    std::vector<std::size_t> tau_edge(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), taus[k] - 1e-12);
        if (it == edges_.end() || std::abs(*it - taus[k]) > 1e-9)
            throw std::domain_error("KernelSweep: tau must be one of the time edges");
        tau_edge[k] = static_cast<std::size_t>(it - edges_.begin());
    }

    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m_, m_);
    std::vector<Eigen::MatrixXd> out(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k)
        if (tau_edge[k] == 0) out[k] = acc;

    std::vector<double> xs, ws;
    Eigen::VectorXd phi(m_);
    for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
        gauss_legendre_ab(nodes_, edges_[p], edges_[p + 1], xs, ws);
        for (int g = 0; g < nodes_; ++g) {
            double s = xs[g];
            for (int i = 0; i < m_; ++i) phi[i] = phi_cell_(s, i);
            acc.selfadjointView<Eigen::Lower>().rankUpdate(phi, ws[g]);
        }
        for (std::size_t k = 0; k < taus.size(); ++k) {
            if (tau_edge[k] == p + 1) {
                Eigen::MatrixXd full = acc.selfadjointView<Eigen::Lower>();
                out[k] = full / (delta_ * delta_);
            }
        }
    }
    return out;
}

namespace {

// int_a^{min(b,s)} y^{e} (s-y)^{h0-3/2} dy with e > -1: the power at y -> s
// is absorbed by w = (s-y)^{h0-1/2}; the power at y -> 0 by its own
// substitution when the cell touches 0
double power_pair_integral(double e_y, double hurst0, double s, double a, double b, int n) {
    if (s <= a) return 0.0;
    double hi = std::min(b, s);
    if (hi <= a) return 0.0;
    if (hi - a < 1e-12 * s) {
        // cell negligible next to s: the (s-y) factor is constant to double
        // precision and the roundtrip through the substitution would cancel
        double sy = std::pow(s - 0.5 * (a + hi), hurst0 - 1.5);
        return sy * (std::pow(hi, e_y + 1.0) - std::pow(a, e_y + 1.0)) / (e_y + 1.0);
    }
    double ew = hurst0 - 0.5;
    auto y_part = [&](double y) { return std::pow(y, e_y); };
    if (a <= 0.0) {
        double split = 0.5 * hi;
        double left = integrate_power_left(
            [&](double y) { return std::pow(s - y, hurst0 - 1.5); }, 0.0, split, e_y, n);
        double wlo = std::pow(s - hi, ew), whi = std::pow(s - split, ew);
        double right = 0.0;
        if (whi > wlo) {
            right = integrate_gl(
                        [&](double w) { return y_part(s - std::pow(w, 1.0 / ew)); }, wlo, whi, n) /
                    ew;
        }
        return left + right;
    }
    double wlo = std::pow(s - hi, ew), whi = std::pow(s - a, ew);
    return integrate_gl([&](double w) { return y_part(s - std::pow(w, 1.0 / ew)); }, wlo, whi, n) /
           ew;
}

}  // namespace

double phi_cell_volterra(double hurst0, double s, double a, double b, int n) {
    if (s <= a) return 0.0;
    double c = volterra_cH(hurst0) * std::pow(s, hurst0 - 0.5);
    return c * power_pair_integral(0.5 - hurst0, hurst0, s, a, b, n);
}

double phi_cell_power(double hurst, double u, double a, double b) {
    if (u <= a) return 0.0;
    double hi = std::min(b, u);
    double e = 0.5 * hurst;
    // closed form of int (u-y)^{H/2-1} dy
    return (std::pow(u - a, e) - std::pow(u - hi, e)) / e;
}

KernelSweep volterra_kernel_sweep(double hurst0, int m, double span, double y_break,
                                  int nodes_per_panel) {
    double delta = span / m;
    if (y_break < 0.0) y_break = span / 8.0;
    int m_w = static_cast<int>(std::lround(y_break / delta));
    if (m_w < 4) m_w = 0;  // too few cells to warp; fall back to uniform
    double yb = m_w * delta;

    // the kernel's eigenfunctions behave like y^{1/2 - h0} at the origin;
    // equal-measure cells under y = yb (v/yb)^kappa resolve that layer
    double hurst = 2.0 * hurst0 - 1.0;
    double kappa = 1.25 / (1.0 - hurst);
    double e_warp = (0.5 - hurst0) - (kappa - 1.0) / (2.0 * kappa);

    std::vector<double> y_edge(m + 1);
    for (int i = 0; i <= m; ++i) {
        double v = i * delta;
        y_edge[i] = (i < m_w) ? yb * std::pow(v / yb, kappa) : v;
    }
    double cst = volterra_cH(hurst0);
    double warp_pref =
        m_w > 0 ? std::pow(kappa, -0.5) * std::pow(yb, (kappa - 1.0) / (2.0 * kappa)) : 1.0;

    auto phi = [=](double s, int i) {
        if (s <= y_edge[i]) return 0.0;
        double pref = cst * std::pow(s, hurst0 - 0.5);
        if (i < m_w)
            return pref * warp_pref *
                   power_pair_integral(e_warp, hurst0, s, y_edge[i], y_edge[i + 1], 16);
        return pref * power_pair_integral(0.5 - hurst0, hurst0, s, y_edge[i], y_edge[i + 1], 16);
    };

    // time panels split at every cell image boundary (kinks of Phi)
    std::vector<double> edges = y_edge;
    return KernelSweep(m, delta, phi, std::move(edges), nodes_per_panel);
}

KernelSweep power_kernel_sweep(double hurst, int m_pos, int m_neg, double span,
                               std::vector<double>* mid, int nodes_per_panel) {
    double delta = span / m_pos;
    double r_full = m_neg * delta;
    double p = 1.25 / (1.0 - hurst);
    // warp r in [0, R) onto y in (-inf, 0]: equal internal measure per cell,
    // kernel bounded in the warped coordinate
    auto y_of_r = [=](double r) { return -span * std::pow(r / (r_full - r), p); };
    auto dy_dr = [=](double r) {
        return span * p * std::pow(r, p - 1.0) * r_full / std::pow(r_full - r, p + 1.0);
    };

    std::vector<double> gl_x, gl_w;
    gauss_legendre(nodes_per_panel * 2, gl_x, gl_w);

    int m = m_pos + m_neg;
    auto phi = [=](double u, int i) {
        if (i >= m_neg) {
            int j = i - m_neg;  // uniform positive cell
            return phi_cell_power(hurst, u, j * delta, (j + 1) * delta);
        }
        // warped negative cell, ordered so that cell index increases with y:
        // cell i covers r in [(m_neg-1-i) delta, (m_neg-i) delta]
        double rlo = (m_neg - 1 - i) * delta, rhi = (m_neg - i) * delta;
        double acc = 0.0;
        for (std::size_t g = 0; g < gl_x.size(); ++g) {
            double r = 0.5 * (rlo + rhi) + 0.5 * (rhi - rlo) * gl_x[g];
            double y = y_of_r(r);
            acc += 0.5 * (rhi - rlo) * gl_w[g] * std::pow(u - y, 0.5 * hurst - 1.0) *
                   std::sqrt(dy_dr(r));
        }
        return acc;
    };

    if (mid) {
        mid->resize(m);
        for (int i = 0; i < m_neg; ++i)
            (*mid)[i] = y_of_r((m_neg - i - 0.5) * delta);
        for (int j = 0; j < m_pos; ++j) (*mid)[m_neg + j] = (j + 0.5) * delta;
    }

    std::vector<double> edges(m_pos + 1);
    for (int i = 0; i <= m_pos; ++i) edges[i] = span * static_cast<double>(i) / m_pos;
    return KernelSweep(m, delta, phi, std::move(edges), nodes_per_panel);
}

}  // namespace hermite
