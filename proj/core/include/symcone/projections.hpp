#pragma once

#include <array>
#include <map>
#include <vector>

#include "symcone/metrics.hpp"
#include "symcone/random.hpp"

namespace symcone {

/// A map on projections (sampled, not symbolic).
using ProjectionMap = std::function<Element(const Element&)>;

struct LatticePredicates {
  bool orthogonal = false;  // p∘q = 0
  bool below = false;       // p <= q, i.e. p∘q = p
  bool maximal_p = false;   // nothing strictly between p and e
  bool central_p = false;   // p operator-commutes with the whole algebra
};

LatticePredicates lattice_predicates(const Element& p, const Element& q, double tol = 1e-9);

bool is_central(const Element& p, double tol = 1e-8);

/// A primitive idempotent r <= p; p must be a nonzero projection.
Element primitive_below(const Element& p);
/// Range projection of a positive element (p ∨ q for p + q).
Element support_projection(const Element& a, double tol = 1e-9);

/// The projection map θ induced by a Hilbert isometry f fixing ē:
/// θ(p) is the unique projection in the class S[p] = log f(exp[p]).
/// Results are memoized per instance, so an instance must not be shared
/// across threads.
class InducedProjectionMap {
 public:
  InducedProjectionMap(Algebra algebra, RayMap f);

  /// θ(p); θ(0) = 0 and θ(e) = e. Throws NumericalFailure when the shifted
  /// and rescaled class is not a projection.
  Element operator()(const Element& p) const;

  /// Trace-zero representative of S[x] = [log f(exp x)].
  Element class_image(const Element& x) const;

  const Algebra& algebra() const { return algebra_; }

 private:
  Algebra algebra_;
  RayMap f_;
  mutable std::map<std::vector<double>, Element> cache_;
};

/// Extreme points of the unit ball of ([A], ‖·‖_v) are the classes [p] of
/// nontrivial projections. The class is rescaled to unit variation first.
/// Throws InvalidInput for the zero class.
bool extreme_point_test(const QuotientClass& c, double tol = 1e-8);

/// Three nontrivial pairwise orthogonal projections summing to e.
class OrthogonalSimplex {
 public:
  OrthogonalSimplex(Element p1, Element p2, Element p3, double tol = 1e-9);
  const std::array<Element, 3>& vertices() const { return vertices_; }

 private:
  std::array<Element, 3> vertices_;
};

/// Simplex whose first two vertices are primitive idempotents of a and whose
/// third is the rest of the unit. Needs rank >= 3 and a simple top spectrum.
OrthogonalSimplex orthogonal_simplex_from(const Element& a);

enum class SimplexMembership { Interior, BoundaryFace, Outside };

struct SimplexLocation {
  SimplexMembership membership;
  std::array<double, 3> barycentric;
  /// For boundary-face points: whether positivity_classify reports the cone
  /// boundary, as every face point of an orthogonal simplex must.
  bool on_cone_boundary = false;
};

/// Barycentric location of a in aff(p1, p2, p3). Throws InvalidInput when a is
/// not in the affine hull.
SimplexLocation simplex_membership(const OrthogonalSimplex& s, const Element& a, double tol = 1e-9);

/// p = p_1, ..., p_n = q with consecutive entries orthogonal and p_i + p_{i+1} < e.
struct ProjectionChain {
  std::vector<Element> steps;
};

/// Checks the chain invariants; returns an empty string or the first violation.
std::string chain_violation(const ProjectionChain& chain, double tol = 1e-9);

/// Builds a chain between nontrivial nonmaximal projections of an algebra of
/// rank >= 3. Chains have length at most 4: [p, q] for compatible orthogonal
/// pairs, [p, r, q] when p ∨ q < e, otherwise [p, r1, r2, q].
ProjectionChain orthogonality_chain(const Element& p, const Element& q);

struct OrthoPairCheck {
  bool orthogonality = false;  // p ⊥ q  ⟺  θp ⊥ θq
  bool complement = false;     // θ(p^⊥) = θ(p)^⊥ and θ(q^⊥) = θ(q)^⊥
  bool commutation = false;    // p, q commute  ⟺  θp, θq commute
};

struct OrthoReport {
  std::vector<OrthoPairCheck> pairs;
  bool all_passed() const;
  int failures() const;
};

OrthoReport verify_orthoisomorphism(const ProjectionMap& theta,
                                    const std::vector<std::pair<Element, Element>>& pairs,
                                    double tol = 1e-6);

/// A mix of orthogonal, nested, commuting and generic projection pairs.
std::vector<std::pair<Element, Element>> sample_projection_pairs(const Algebra& algebra, Rng& rng,
                                                                 int count);

}  // namespace symcone
