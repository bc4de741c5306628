#pragma once

#include <stdexcept>
#include <vector>

namespace hermite {

/// Parameter bundle for an order-q Hermite process/field with Hurst vector H.
/// Derived exponents:
///   h0      = 1 + (H-1)/q   (fGn parameter of the lattice construction; also
///                            the exponent entering the finite-time kernels)
///   h_prime = 1 + 2(H-1)/q  (Hurst index of the second-chaos limits the
///                            quadratic statistics converge to)
struct HermiteSpec {
    int q = 1;
    std::vector<double> H;

    HermiteSpec() = default;
    HermiteSpec(int q_, double h) : q(q_), H{h} { validate(); }
    HermiteSpec(int q_, std::vector<double> h) : q(q_), H(std::move(h)) { validate(); }

    void validate() const {
        if (q < 1) throw std::domain_error("HermiteSpec: q must be >= 1");
        if (H.empty()) throw std::domain_error("HermiteSpec: H must be nonempty");
        for (double h : H)
            if (h <= 0.5 || h >= 1.0)
                throw std::domain_error("HermiteSpec: each H must lie in (0.5, 1)");
    }

    std::size_t dim() const { return H.size(); }
    double scalar_H() const {
        if (H.size() != 1) throw std::domain_error("HermiteSpec: scalar H expected");
        return H[0];
    }

    double h0(std::size_t j = 0) const { return 1.0 + (H.at(j) - 1.0) / q; }
    double h_prime(std::size_t j = 0) const { return 1.0 + 2.0 * (H.at(j) - 1.0) / q; }
};

}  // namespace hermite
