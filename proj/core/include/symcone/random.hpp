#pragma once

#include <cstdint>
#include <random>

#include "symcone/algebra.hpp"

namespace symcone {

using Rng = std::mt19937_64;

/// Element with canonical coordinates drawn uniformly from [−scale, scale].
Element random_element(const Algebra& algebra, Rng& rng, double scale = 1.0);

/// exp of a random element, so that d_T(result, e) <= spread·(a small constant).
Element random_interior(const Algebra& algebra, Rng& rng, double spread = 1.0);

/// Haar-ish orthogonal matrix from a QR factorization of a Gaussian matrix.
Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

}  // namespace symcone
