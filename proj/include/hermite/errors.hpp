#pragma once

#include <stdexcept>
#include <string>

namespace hermite {

/// Circulant embedding produced a significantly negative eigenvalue.
struct EmbeddingError : std::runtime_error {
    explicit EmbeddingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A quadrature refinement failed to converge or hit a non-finite value.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An estimator could not be evaluated (e.g. nonpositive base for a power map).
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// All Hermite coefficients below tolerance: rank undetermined.
struct RankError : std::runtime_error {
    explicit RankError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hermite
