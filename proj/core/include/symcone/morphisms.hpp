#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symcone/metrics.hpp"
#include "symcone/projections.hpp"
#include "symcone/random.hpp"

namespace symcone {

/// A Jordan automorphism from the closed family used throughout the library.
///
///   Identity
///   OrthogonalConjugation  Sym(n): a ↦ u a uᵀ with u orthogonal
///   SpinOrthogonal         Spin(d): (h, t) ↦ (u h, t) with u orthogonal
///   Sum                    direct sums: component i is mapped by parts[i]
///                          into slot perm[i]; on Vector(n) a coordinate
///                          permutation (parts empty)
struct JordanIsoRep {
  enum class Kind { Identity, OrthogonalConjugation, SpinOrthogonal, Sum };

  Kind kind = Kind::Identity;
  Eigen::MatrixXd u;
  std::vector<int> perm;
  std::vector<JordanIsoRep> parts;

  static JordanIsoRep identity() { return {}; }
  static JordanIsoRep conjugation(Eigen::MatrixXd u);
  static JordanIsoRep spin_orthogonal(Eigen::MatrixXd u);
  static JordanIsoRep sum(std::vector<int> perm, std::vector<JordanIsoRep> parts = {});

  /// Throws InvalidInput when the representation does not fit the algebra.
  void validate(const Algebra& algebra) const;
};

Element apply_jordan_iso(const JordanIsoRep& iso, const Element& a);
LinearMap jordan_iso_matrix(const JordanIsoRep& iso, const Algebra& algebra);
/// The inverse automorphism.
JordanIsoRep inverse_iso(const JordanIsoRep& iso, const Algebra& algebra);

/// True iff T is invertible, Te = e and T(x∘y) = Tx∘Ty on all canonical
/// basis pairs, within tol.
bool check_jordan_isomorphism(const Algebra& algebra, const LinearMap& map, double tol = 1e-9);

/// Fits a Jordan automorphism matrix to the representable family
/// (least-squares fit of u followed by re-orthogonalization). Throws
/// NumericalFailure when the fit residual exceeds tol.
JordanIsoRep match_jordan_iso(const Algebra& algebra, const LinearMap& map, double tol = 1e-7);

struct OrderIsoFactors {
  Element b;
  JordanIsoRep iso;
};

/// T = U_b J with b = (Te)^{1/2}. Throws InvalidInput when T is not an order
/// isomorphism.
OrderIsoFactors factor_order_isomorphism(const Algebra& algebra, const LinearMap& map);

/// Canonical parameters of a metric isometry.
///   Thompson: f(a) = U_b(p∘Ja + p^⊥∘Ja^{-1}), p a central projection.
///   Hilbert:  f(ā) = ray of U_b J(a^ε), ε = ±1.
struct IsometryDescriptor {
  Metric metric = Metric::Thompson;
  Element b;
  std::optional<Element> p;
  std::optional<int> epsilon;
  JordanIsoRep iso;

  const Algebra& algebra() const { return b.algebra(); }
  void validate() const;
};

ElementMap build_thompson_isometry(const IsometryDescriptor& d);
RayMap build_hilbert_isometry(const IsometryDescriptor& d);

/// Random automorphism: orthogonal u for Sym/Spin, random coordinate
/// permutation for Vector, and for sums a shuffle of isomorphic components.
JordanIsoRep random_jordan_iso(const Algebra& algebra, Rng& rng);

/// Random central projection (0-1 combination of the simple components).
Element random_central_projection(const Algebra& algebra, Rng& rng);

/// Random valid descriptor for the given metric; Hilbert descriptors get a
/// trace-normalized b and a random ε.
IsometryDescriptor random_descriptor(const Algebra& algebra, Metric metric, Rng& rng);

/// Probe configuration shared by linearization and factorization.
struct ProbeOptions {
  std::uint64_t seed = 20140901;
  int random_probes = 20;
  double threshold = 1e-6;
};

struct LinearizedMap {
  Metric metric = Metric::Thompson;
  LinearMap matrix;
  /// Largest linearity defect over the random probes.
  double residual = 0.0;
};

/// S a = log f(exp a) for a Thompson isometry fixing e.
LinearizedMap linearize_isometry(const Algebra& algebra, const ElementMap& f, const ProbeOptions& opts = {});
/// S[a] = log f(exp[a]) for a Hilbert isometry fixing ē. The matrix kills e
/// and takes values in the trace-zero subspace.
LinearizedMap linearize_isometry(const Algebra& algebra, const RayMap& f, const ProbeOptions& opts = {});

/// U_{f(e)^{-1/2}} ∘ f.
ElementMap normalize_isometry(const Algebra& algebra, const ElementMap& f);
RayMap normalize_isometry(const Algebra& algebra, const RayMap& f);

struct Factorization {
  IsometryDescriptor descriptor;
  double linearity_residual = 0.0;
  double roundtrip_residual = 0.0;
  /// Hilbert, rank >= 3: ε read off each probed orthogonal simplex.
  std::vector<int> simplex_epsilons;
};

/// Recovers (b, p, J) from a black-box Thompson isometry.
Factorization factor_thompson_isometry(const Algebra& algebra, const ElementMap& f, const ProbeOptions& opts = {});

/// Recovers (b, ε, J) from a black-box Hilbert isometry. b is trace-normalized.
Factorization factor_hilbert_isometry(const Algebra& algebra, const RayMap& f, const ProbeOptions& opts = {});

/// Reads ε off one orthogonal simplex: +1 if Σθ(p_i) = e, −1 if Σθ(p_i)^⊥ = e.
/// Throws NumericalFailure when neither holds.
int simplex_orientation(const ProjectionMap& theta, const OrthogonalSimplex& simplex, double tol = 1e-6);

/// Extends an orthoisomorphism to a Jordan automorphism via
/// J(a) = Σ λ_i θ(p_i) over the spectral decomposition of each basis element.
JordanIsoRep extend_orthoisomorphism(const Algebra& algebra, const ProjectionMap& theta);
LinearMap extend_orthoisomorphism_matrix(const Algebra& algebra, const ProjectionMap& theta);

}  // namespace symcone
