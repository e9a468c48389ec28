#pragma once

#include <functional>

#include "symcone/algebra.hpp"

namespace symcone {

enum class Metric { Thompson, Hilbert };

/// A ray of the cone interior, held by the representative with ⟨a, e⟩ = rank.
class Ray {
 public:
  /// Normalizes an interior element; throws InvalidInput otherwise.
  explicit Ray(const Element& a);

  const Element& representative() const { return rep_; }
  const Algebra& algebra() const { return rep_.algebra(); }

  /// Representatives agree within tol (max storage entry).
  bool equals(const Ray& other, double tol = 1e-9) const;

 private:
  Element rep_;
};

inline Ray normalize_ray(const Element& a) { return Ray(a); }

/// A class of A / span(e), held by its trace-zero representative.
class QuotientClass {
 public:
  explicit QuotientClass(const Element& a);
  const Element& representative() const { return rep_; }

 private:
  Element rep_;
};

using ElementMap = std::function<Element(const Element&)>;
using RayMap = std::function<Ray(const Ray&)>;

/// M(a/b) = inf{β > 0 : a <= βb} = max σ(U_{b^{-1/2}} a).
/// Requires a in the closed cone and b in its interior.
double gauge(const Element& a, const Element& b);

/// Thompson's part metric, ‖log U_{b^{-1/2}} a‖.
double thompson_distance(const Element& a, const Element& b);
/// Same metric via log max{M(a/b), M(b/a)}.
double thompson_distance_from_gauge(const Element& a, const Element& b);

/// Hilbert's projective metric, ‖log U_{b^{-1/2}} a‖_v.
double hilbert_distance(const Ray& a, const Ray& b);
double hilbert_distance(const Element& a, const Element& b);
/// Same metric via log M(a/b)·M(b/a).
double hilbert_distance_from_gauge(const Element& a, const Element& b);

double distance(Metric metric, const Element& a, const Element& b);

/// n·d(exp(a/n), exp(b/n)). For the Hilbert kind a and b are read as
/// quotient classes. Requires n >= 1 and ‖a‖/n, ‖b‖/n <= 50.
double scaled_distance(const Element& a, const Element& b, int n, Metric metric);
/// The n → ∞ limit: ‖a − b‖ (Thompson) or ‖[a] − [b]‖_v (Hilbert).
double scaled_distance_limit(const Element& a, const Element& b, Metric metric);

/// (a|b)_base = ½(d_H(a,base) + d_H(b,base) − d_H(a,b)).
double gromov_product(const Ray& a, const Ray& b, const Ray& base);

/// Throws InvalidInput unless a is in the cone interior.
void require_interior(const Element& a, const char* what = "element");

}  // namespace symcone
