#pragma once

#include <functional>

#include "hermite/quadrature.hpp"
#include "hermite/spec.hpp"

namespace hermite {

/// Result of a truncated/refined quadrature together with its error estimate.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/// log Beta(a,b) via lgamma.
double log_beta(double a, double b);

/// Normalization constant of the order-q Hermite process with scalar H:
/// c(H,q)^2 * q! * Beta(h0 - 1/2, 2 - 2 h0)^q = H(2H-1).
double const_c_hermite(const HermiteSpec& spec);

/// 1/(H+1) * sqrt(2(2H-1)/H), the finite-interval Rosenblatt normalizer.
double const_b_rosenblatt(double hurst);

/// B_{H,q} = H(2H-1)/sqrt((h0-1/2)(4 h0-3)) * Gamma(2H + (2/q)(1-H)) /
///           (2H + (2/q)(1-H) - 1), with h0 = 1 - (1-H)/q.
/// Throws std::domain_error when 4 h0 - 3 <= 0.
double const_B_Hq(double hurst, int q);

/// sigma_H = (2H-1)/(H Gamma(2H)^2) * sqrt( int_R inner(x)^2 dx ) where
/// inner(x) = int_{R+^2} e^{-(u+v)} |u-v-x|^{2H-2} du dv. H in (1/2, 3/4).
QuadResult const_sigma_H(double hurst, const QuadratureSpec& quad = {});

/// b(H,q) = H(2H-1)/sqrt((h0-1/2)(4 h0-3)) *
///          int_{R+^2} x(u) x(v) |u-v|^{(q-1)(2 h0-2)} du dv,
/// for an integrable moving-average kernel x.
double const_b_mavg(double hurst, int q, const std::function<double(double)>& kernel,
                    const QuadratureSpec& quad = {});

/// Finite-time normalizer of the order-q Hermite sheet:
/// b = (sqrt(q!))^{d-1} prod_j sqrt(H_j (2H_j - 1)) / sqrt(q! (h0_j (2 h0_j - 1))^q).
double const_b_sheet(const HermiteSpec& spec);

/// Limit constant of the renormalized quadratic variation:
/// c1 = 2! 2^d b^4 prod_j (h0(2h0-1))^{2q} /
///      [(4h0-3)(4h0-2)((2h0-2)(q-1)+1)^2((h0-1)(q-1)+1)^2].
/// Throws std::domain_error if any factor 4 h0 - 3 <= 0.
double const_c1_sheet(const HermiteSpec& spec);

/// ||f||_H^2 = H(2H-1) int int f(u) f(v) |u-v|^{2H-2} du dv over
/// [lo,hi]^2, with the singular kernel integrated exactly cell by cell
/// against midpoint values of f. Refines until the relative change is
/// below quad.rel_tol; throws QuadratureError on non-convergence.
double weighted_norm_H_sq(const std::function<double(double)>& f, double hurst, double lo,
                          double hi, const QuadratureSpec& quad = {});

/// Same double integral with a general exponent gamma in (-1, 0]:
/// int int f(u) f(v) |u-v|^gamma du dv on [lo,hi]^2.
double singular_double_integral(const std::function<double(double)>& f, double gamma, double lo,
                                double hi, const QuadratureSpec& quad = {});

}  // namespace hermite
