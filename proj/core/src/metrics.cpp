#include "symcone/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symcone/error.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

void require_interior(const Element& a, const char* what) {
  if (!is_interior(a)) throw InvalidInput(std::string(what) + " is not in the cone interior");
}

Ray::Ray(const Element& a) : rep_(a) {
  require_interior(a, "ray representative");
  const Algebra& alg = a.algebra();
  const double trace = trace_inner_product(a, Element::unit(alg));
  rep_ *= static_cast<double>(alg.rank()) / trace;
}

bool Ray::equals(const Ray& other, double tol) const {
  require_same_algebra(rep_, other.rep_);
  return max_abs(rep_ - other.rep_) <= tol;
}

QuotientClass::QuotientClass(const Element& a) : rep_(a) {
  const Element e = Element::unit(a.algebra());
  const double shift = trace_inner_product(a, e) / a.algebra().rank();
  rep_ -= shift * e;
}

namespace {

// Spectrum of U_{b^{-1/2}} a, descending.
std::vector<double> relative_spectrum(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return eigenvalues(quadratic_rep(power(b, -0.5), a));
}

}  // namespace

double gauge(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  require_interior(b, "gauge denominator");
  if (positivity_classify(a) == Positivity::Outside) throw InvalidInput("gauge numerator is outside the cone");
  return std::max(0.0, relative_spectrum(a, b).front());
}

double thompson_distance(const Element& a, const Element& b) {
  require_interior(a, "first argument");
  require_interior(b, "second argument");
  const auto ev = relative_spectrum(a, b);
  return std::max(std::abs(std::log(ev.front())), std::abs(std::log(ev.back())));
}

double thompson_distance_from_gauge(const Element& a, const Element& b) {
  require_interior(a, "first argument");
  return std::log(std::max(gauge(a, b), gauge(b, a)));
}

double hilbert_distance(const Element& a, const Element& b) {
  require_interior(a, "first argument");
  require_interior(b, "second argument");
  const auto ev = relative_spectrum(a, b);
  return std::log(ev.front()) - std::log(ev.back());
}

double hilbert_distance(const Ray& a, const Ray& b) {
  return hilbert_distance(a.representative(), b.representative());
}

double hilbert_distance_from_gauge(const Element& a, const Element& b) {
  require_interior(a, "first argument");
  return std::log(gauge(a, b)) + std::log(gauge(b, a));
}

double distance(Metric metric, const Element& a, const Element& b) {
  return metric == Metric::Thompson ? thompson_distance(a, b) : hilbert_distance(a, b);
}

double scaled_distance(const Element& a, const Element& b, int n, Metric metric) {
  require_same_algebra(a, b);
  if (n < 1) throw InvalidInput("scaled distance needs n >= 1");
  Element x = a, y = b;
  if (metric == Metric::Hilbert) {
    x = QuotientClass(a).representative();
    y = QuotientClass(b).representative();
  }
  const double scale = std::max(order_unit_norm(x), order_unit_norm(y)) / n;
  if (scale > 50.0) throw InvalidInput("scaled distance would overflow: ‖a‖/n exceeds 50");
  return n * distance(metric, exp(x / n), exp(y / n));
}

double scaled_distance_limit(const Element& a, const Element& b, Metric metric) {
  require_same_algebra(a, b);
  const Element diff = a - b;
  return metric == Metric::Thompson ? order_unit_norm(diff) : variation_norm(diff);
}

double gromov_product(const Ray& a, const Ray& b, const Ray& base) {
  return 0.5 * (hilbert_distance(a, base) + hilbert_distance(b, base) - hilbert_distance(a, b));
}

}  // namespace symcone
