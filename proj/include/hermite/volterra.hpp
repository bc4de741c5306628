#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace hermite {

/// c_H^2 = H(2H-1)/Beta(2-2H, H-1/2), the square of the Volterra kernel
/// constant. The sign-consistent H(2H-1) form is used; it is the one under
/// which the reproducing identity below holds (verified in tests).
double volterra_cH(double hurst);

/// d/dt of the fBm Volterra kernel:
/// c_H s^{1/2-H} (t-s)^{H-3/2} t^{H-1/2} for 0 < s < t.
double partial1_KH(double hurst, double t, double s);

/// K^H(t,s) = c_H s^{1/2-H} int_s^t (u-s)^{H-3/2} u^{H-1/2} du.
double volterra_KH(double hurst, double t, double s, int n = 64);

/// int_0^{min(u,v)} d1K(u,a) d1K(v,a) da; equals H(2H-1)|u-v|^{2H-2}.
double volterra_inner_product(double hurst, double u, double v, int n = 64);

/// Cell-averaged discretizations of second-chaos kernels of the form
///   f_tau(y1,y2) = int_{max(y1,y2,0)}^{tau} phi(s, y1) phi(s, y2) ds.
/// The state space is split into `cells` of equal measure `delta` in an
/// internal coordinate (which may warp an unbounded y-range onto finitely
/// many cells); phi_cell(s, i) must return the integral of phi(s, y) over
/// cell i, including any warp factor sqrt(y'(v)). For each requested tau the
/// builder returns the matrix with entries
///   (1/delta^2) * int_0^tau Phi_i(s) Phi_j(s) ds,
/// i.e. the pairwise cell averages of f_tau, which integrates the diagonal
/// divergence of the kernel exactly. Time integration uses Gauss-Legendre
/// panels split at `time_edges` (the points where some Phi_i has a kink).
class KernelSweep {
  public:
    KernelSweep(int cells, double delta, std::function<double(double, int)> phi_cell,
                std::vector<double> time_edges, int nodes_per_panel = 8);

    /// Matrices at the given times; each must be one of the time_edges.
    std::vector<Eigen::MatrixXd> run(const std::vector<double>& taus) const;

    double delta() const { return delta_; }
    int cells() const { return m_; }

  private:
    int m_;
    double delta_;
    std::function<double(double, int)> phi_cell_;
    std::vector<double> edges_;
    int nodes_;
};

/// Grid of m equal-measure cells on [0, span] for the finite-interval
/// Volterra kernel phi(s,y) = d1K^{h0}(s,y): the first cells (up to
/// y_break, default span/8) are warped toward 0 to resolve the kernel's
/// y^{1/2-h0} boundary layer, the rest are uniform. y_break is rounded to
/// a uniform cell boundary; pass 0 to disable warping.
KernelSweep volterra_kernel_sweep(double hurst0, int m, double span, double y_break = -1.0,
                                  int nodes_per_panel = 8);

/// Composite grid for the positive-part power kernel phi(u,y) = (u-y)_+^{H/2-1}
/// whose support extends to y = -infinity: m_pos uniform cells on [0, span]
/// plus m_neg cells of equal internal measure covering (-inf, 0] through the
/// warp y = -span (r/(R-r))^p with p = 1.25/(1-H). Cell midpoint labels (in y)
/// are returned through `mid` when non-null.
KernelSweep power_kernel_sweep(double hurst, int m_pos, int m_neg, double span,
                               std::vector<double>* mid = nullptr, int nodes_per_panel = 8);

/// Phi integrand helpers used by the sweeps above.
double phi_cell_volterra(double hurst0, double s, double a, double b, int n = 16);
double phi_cell_power(double hurst, double u, double a, double b);

}  // namespace hermite
