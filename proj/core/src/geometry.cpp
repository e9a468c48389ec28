#include "symcone/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "symcone/error.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

namespace {

constexpr double kReciprocalTolerance = 1e-7;

void require_pair(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  require_interior(a, "first argument");
  require_interior(b, "second argument");
}

}  // namespace

Element geodesic_point(const Element& a, const Element& b, double t) {
  require_pair(a, b);
  const Element reduced = quadratic_rep(power(a, -0.5), b);
  return quadratic_rep(sqrt(a), power(reduced, t));
}

Element geometric_mean(const Element& a, const Element& b) { return geodesic_point(a, b, 0.5); }

Element point_symmetry(const Element& c, const Element& a) {
  require_pair(c, a);
  return quadratic_rep(c, inverse(a));
}

bool linearly_dependent(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  const Element e = Element::unit(a.algebra());
  const double ta = trace_inner_product(a, e), tb = trace_inner_product(b, e);
  if (ta == 0.0 || tb == 0.0) return false;
  return order_unit_norm(a / ta - b / tb) <= tol;
}

GeodesicClassification classify_geodesic(const Element& a, const Element& b, Metric metric) {
  require_pair(a, b);
  if (linearly_dependent(a, b)) throw InvalidInput("geodesic classification needs linearly independent points");
  const Element reduced = quadratic_rep(power(a, -0.5), b);
  GeodesicClassification out;
  out.spectrum_points = cluster_spectrum(eigenvalues(reduced));

  const auto& pts = out.spectrum_points;
  if (metric == Metric::Thompson) {
    out.unique = pts.size() == 2 && pts.front() > 1.0 &&
                 std::abs(pts.front() * pts.back() - 1.0) <= kReciprocalTolerance;
    if (!out.unique) out.witness = nonunique_midpoint_witness(a, b);
  } else {
    out.unique = pts.size() == 2;
    if (!out.unique) out.witness = hilbert_midpoint_witness(a, b);
  }
  return out;
}

Element nonunique_midpoint_witness(const Element& a, const Element& b) {
  require_pair(a, b);
  const Element root = sqrt(a);
  const Element reduced = quadratic_rep(inverse(root), b);
  const SpectralFrame frame = spectral_decomposition(reduced);

  double radius = 0.0;
  for (double l : frame.eigenvalues) radius = std::max(radius, std::abs(std::log(l)));
  const double clamp = 0.5 * radius;
  const double strict = kClusterTolerance * std::max(1.0, radius);

  bool differs = false;
  Element log_witness = Element::zero(a.algebra());
  for (std::size_t i = 0; i < frame.eigenvalues.size(); ++i) {
    const double f = std::log(frame.eigenvalues[i]);
    if (std::abs(f) < radius - strict) differs = true;
    // Near-zero coordinates go to the edge of their midpoint interval so the
    // witness stays visibly away from a # b.
    const double x = std::abs(f) < 0.5 * clamp ? std::copysign(clamp, f) : std::clamp(f, -clamp, clamp);
    log_witness += x * frame.idempotents[i];
  }
  if (!differs) throw InvalidInput("the Thompson midpoint is unique: no alternative witness exists");
  return quadratic_rep(root, exp(log_witness));
}

Element hilbert_midpoint_witness(const Element& a, const Element& b) {
  require_pair(a, b);
  const auto ev = eigenvalues(quadratic_rep(power(a, -0.5), b));
  const double scale = 1.0 / std::sqrt(ev.front() * ev.back());
  return nonunique_midpoint_witness(a, scale * b);
}

}  // namespace symcone
