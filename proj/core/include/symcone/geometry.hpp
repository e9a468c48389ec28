#pragma once

#include <optional>
#include <vector>

#include "symcone/metrics.hpp"

namespace symcone {

/// γ_a^b(t) = U_{a^{1/2}} (U_{a^{-1/2}} b)^t. A Thompson geodesic path from a
/// to b whose rays form a Hilbert geodesic path.
Element geodesic_point(const Element& a, const Element& b, double t);

/// a # b = γ_a^b(1/2), the unique interior c with U_c a^{-1} = b.
Element geometric_mean(const Element& a, const Element& b);

/// S_c(a) = U_c a^{-1}.
Element point_symmetry(const Element& c, const Element& a);

struct GeodesicClassification {
  bool unique = false;
  /// Clustered spectrum of U_{a^{-1/2}} b, descending.
  std::vector<double> spectrum_points;
  /// A second midpoint; present iff the geodesic is not unique.
  std::optional<Element> witness;
};

/// Decides whether a and b are joined by a unique geodesic.
///
/// Thompson: unique iff σ(U_{a^{-1/2}} b) = {β^{-1}, β} with β > 1.
/// Hilbert: unique iff the spectrum has exactly two points.
/// Throws InvalidInput for linearly dependent a, b.
GeodesicClassification classify_geodesic(const Element& a, const Element& b, Metric metric);

/// A Thompson midpoint of a and b different from a # b.
///
/// In the associative subalgebra generated by c = U_{a^{-1/2}} b the log
/// coordinates f = log σ(c) are clamped to [−‖f‖/2, ‖f‖/2], except that
/// coordinates with |f| < ‖f‖/4 move to ±‖f‖/2; the result is mapped back
/// through U_{a^{1/2}}. Throws InvalidInput when every spectral
/// point satisfies |log λ| = ‖f‖, i.e. when the midpoint is unique.
Element nonunique_midpoint_witness(const Element& a, const Element& b);

/// A Hilbert midpoint of the rays of a and b different from the ray of a # b.
/// b is first rescaled so that the reduced spectrum is symmetric about 1.
Element hilbert_midpoint_witness(const Element& a, const Element& b);

/// ‖a/⟨a,e⟩ − b/⟨b,e⟩‖ <= tol.
bool linearly_dependent(const Element& a, const Element& b, double tol = 1e-10);

}  // namespace symcone
