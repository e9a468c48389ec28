#pragma once

#include <vector>

#include "symcone/algebra.hpp"

namespace symcone {

/// Relative width of an eigenvalue cluster: two eigenvalues are one spectral
/// point iff |λ_i − λ_j| <= kClusterTolerance·max(1, |λ_max|).
inline constexpr double kClusterTolerance = 1e-7;
/// Relative safety band separating the cone interior from its boundary.
inline constexpr double kInteriorMargin = 1e-12;

/// Clustered spectral decomposition a = Σ λ_i q_i.
///
/// Eigenvalues are distinct after clustering and sorted in descending order;
/// the idempotents q_i form a complete orthogonal family summing to e.
/// multiplicities[i] is the Jordan rank of q_i.
struct SpectralFrame {
  std::vector<double> eigenvalues;
  std::vector<Element> idempotents;
  std::vector<int> multiplicities;

  Element reconstruct() const;
};

/// One eigenvalue per primitive idempotent (length = rank), descending.
std::vector<double> eigenvalues(const Element& a);

/// Primitive idempotents paired with their eigenvalues, descending.
/// Within a repeated eigenvalue the choice of primitive idempotents is
/// arbitrary but they still sum to the spectral projection.
struct PrimitiveFrame {
  std::vector<double> eigenvalues;
  std::vector<Element> idempotents;
};
PrimitiveFrame primitive_frame(const Element& a);

SpectralFrame spectral_decomposition(const Element& a, double cluster_tol = kClusterTolerance);

/// Groups a descending eigenvalue list into spectral points.
std::vector<double> cluster_spectrum(const std::vector<double>& sorted_desc,
                                     double cluster_tol = kClusterTolerance);

/// Tag for the functional calculus.
class ScalarFunction {
 public:
  enum class Kind { Pow, Exp, Log, Sqrt, Inv };

  static ScalarFunction pow(double alpha) { return ScalarFunction(Kind::Pow, alpha); }
  static ScalarFunction exp() { return ScalarFunction(Kind::Exp, 0.0); }
  static ScalarFunction log() { return ScalarFunction(Kind::Log, 0.0); }
  static ScalarFunction sqrt() { return ScalarFunction(Kind::Sqrt, 0.0); }
  static ScalarFunction inv() { return ScalarFunction(Kind::Inv, 0.0); }

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }

  double operator()(double x) const;
  /// Whether the function is only defined on a strictly positive spectrum.
  bool needs_positive_spectrum() const;

 private:
  ScalarFunction(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  double alpha_;
};

/// Σ f(λ_i) q_i. Throws InvalidInput when f needs a positive spectrum and
/// some eigenvalue is not strictly positive.
Element apply_scalar_function(const Element& a, ScalarFunction f);

Element power(const Element& a, double alpha);
Element exp(const Element& a);
Element log(const Element& a);
Element sqrt(const Element& a);
Element inverse(const Element& a);

/// max |σ(a)|.
double order_unit_norm(const Element& a);
/// max σ(a) − min σ(a).
double variation_norm(const Element& a);

enum class Positivity { Interior, Boundary, Outside };

Positivity positivity_classify(const Element& a, double margin = kInteriorMargin);
inline bool is_interior(const Element& a, double margin = kInteriorMargin) {
  return positivity_classify(a, margin) == Positivity::Interior;
}

/// Every eigenvalue lies within tol of {0, 1}.
bool is_projection(const Element& a, double tol = 1e-8);
/// Jordan rank of a projection: the number of eigenvalues near 1.
int projection_rank(const Element& p, double tol = kClusterTolerance);
/// Rounds the spectrum of a near-projection onto {0, 1}.
Element snap_projection(const Element& p);

/// Peirce projections for a projection p: P1 = U_p, P0 = U_{e−p},
/// P_half = I − P1 − P0.
struct PeirceProjections {
  LinearMap one;
  LinearMap half;
  LinearMap zero;
};
PeirceProjections peirce_projections(const Element& p, double tol = 1e-8);

}  // namespace symcone
