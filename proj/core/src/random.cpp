#include "symcone/random.hpp"

#include "symcone/spectral.hpp"

namespace symcone {

Element random_element(const Algebra& algebra, Rng& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::VectorXd coords(algebra.dimension());
  for (auto& c : coords) c = dist(rng);
  return Element::from_coordinates(algebra, coords);
}

Element random_interior(const Algebra& algebra, Rng& rng, double spread) {
  return exp(random_element(algebra, rng, spread));
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> dist;
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = dist(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  // Fix column signs so the distribution does not depend on QR conventions.
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) q.col(i) *= -1.0;
  }
  return q;
}

}  // namespace symcone
